#include "pathsig/cde.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace pathsig {

LinearVectorField::LinearVectorField(std::vector<Eigen::MatrixXd> matrices)
    : matrices_(std::move(matrices)) {
  if (matrices_.empty()) throw std::invalid_argument("LinearVectorField: no matrices");
  const auto e = matrices_.front().rows();
  for (const auto& m : matrices_) {
    if (m.rows() != e || m.cols() != e) {
      throw std::invalid_argument("LinearVectorField: matrices must all be square of equal size");
    }
    if (!m.allFinite()) throw std::invalid_argument("LinearVectorField: non-finite entry");
  }
}

Eigen::VectorXd linear_cde_solve_signature(const LinearVectorField& v, const PiecewisePath& driver,
                                           const Eigen::VectorXd& y0, int depth, WordOrder order) {
  if (driver.dim() != v.driver_dim()) {
    throw std::invalid_argument("linear_cde_solve_signature: driver dimension " +
                                std::to_string(driver.dim()) + " does not match " +
                                std::to_string(v.driver_dim()) + " vector fields");
  }
  return linear_cde_solve_signature(v, signature(driver, depth), y0, order);
}

Eigen::VectorXd linear_cde_solve_signature(const LinearVectorField& v, const SignatureResult& sig,
                                           const Eigen::VectorXd& y0, WordOrder order) {
  const int d = v.driver_dim();
  if (sig.dim() != d) {
    throw std::invalid_argument("linear_cde_solve_signature: signature dimension mismatch");
  }
  if (y0.size() != v.state_dim()) {
    throw std::invalid_argument("linear_cde_solve_signature: initial state dimension mismatch");
  }
  const auto ud = static_cast<std::size_t>(d);
  Eigen::VectorXd result = y0;

  if (order == WordOrder::EarliestFirst) {
    // acted[w·i] = V_i acted[w]; level-major layout means the child of the
    // word at within-level index p has index p*d + i.
    std::vector<Eigen::VectorXd> acted{y0};
    for (int k = 1; k <= sig.depth(); ++k) {
      auto coeffs = sig.series.level(k);
      std::vector<Eigen::VectorXd> next(acted.size() * ud);
      for (std::size_t p = 0; p < acted.size(); ++p) {
        for (std::size_t i = 0; i < ud; ++i) {
          next[p * ud + i] = v[static_cast<int>(i)] * acted[p];
          result += coeffs[p * ud + i] * next[p * ud + i];
        }
      }
      acted = std::move(next);
    }
    return result;
  }

  // LatestFirst: operator for w·i is V_{w1}...V_{wk} V_i, built as a matrix.
  const auto e = static_cast<Eigen::Index>(v.state_dim());
  std::vector<Eigen::MatrixXd> ops{Eigen::MatrixXd::Identity(e, e)};
  for (int k = 1; k <= sig.depth(); ++k) {
    auto coeffs = sig.series.level(k);
    std::vector<Eigen::MatrixXd> next(ops.size() * ud);
    for (std::size_t p = 0; p < ops.size(); ++p) {
      for (std::size_t i = 0; i < ud; ++i) {
        next[p * ud + i] = ops[p] * v[static_cast<int>(i)];
        result += coeffs[p * ud + i] * (next[p * ud + i] * y0);
      }
    }
    ops = std::move(next);
  }
  return result;
}

Eigen::VectorXd euler_cde_oracle(const LinearVectorField& v, const PiecewisePath& driver,
                                 const Eigen::VectorXd& y0, int steps) {
  if (driver.dim() != v.driver_dim()) {
    throw std::invalid_argument("euler_cde_oracle: driver dimension mismatch");
  }
  if (y0.size() != v.state_dim()) {
    throw std::invalid_argument("euler_cde_oracle: initial state dimension mismatch");
  }
  const auto segments = static_cast<int>(driver.num_points()) - 1;
  if (steps < segments || steps < 1) {
    throw std::invalid_argument("euler_cde_oracle: steps must be >= number of segments");
  }
  Eigen::VectorXd y = y0;
  if (segments == 0) return y;
  const double span = segments;
  std::vector<double> prev = driver.at(0.0);
  for (int j = 0; j < steps; ++j) {
    std::vector<double> next = driver.at(span * (j + 1) / steps);
    Eigen::VectorXd dy = Eigen::VectorXd::Zero(y.size());
    for (int i = 0; i < v.driver_dim(); ++i) {
      const auto ui = static_cast<std::size_t>(i);
      dy += v[i] * y * (next[ui] - prev[ui]);
    }
    y += dy;
    prev = std::move(next);
  }
  return y;
}

PicardTrace picard_exponential(int iterations, std::vector<double> grid) {
  if (iterations < 0) throw std::invalid_argument("picard_exponential: iterations must be >= 0");
  if (grid.empty() || grid.front() != 0.0) {
    throw std::invalid_argument("picard_exponential: grid must start at 0");
  }
  if (std::adjacent_find(grid.begin(), grid.end(), std::greater_equal<>()) != grid.end()) {
    throw std::invalid_argument("picard_exponential: grid must be strictly increasing");
  }
  PicardTrace trace;
  trace.grid = std::move(grid);
  const std::size_t n = trace.grid.size();
  trace.iterates.emplace_back(n, 1.0);
  for (int k = 1; k <= iterations; ++k) {
    const auto& prev = trace.iterates.back();
    std::vector<double> cur(n);
    cur[0] = 1.0;
    double integral = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
      integral += 0.5 * (prev[j] + prev[j - 1]) * (trace.grid[j] - trace.grid[j - 1]);
      cur[j] = 1.0 + integral;
    }
    trace.iterates.push_back(std::move(cur));
  }
  return trace;
}

}  // namespace pathsig
