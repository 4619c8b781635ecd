#include "pathsig/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pathsig {
namespace {

double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double soft_threshold(double v, double t) {
  if (v > t) return v - t;
  if (v < -t) return v + t;
  return 0.0;
}

double mean_logistic_loss(const Eigen::MatrixXd& x, std::span<const int> y, const Eigen::VectorXd& w,
                          double b) {
  const Eigen::VectorXd z = (x * w).array() + b;
  double loss = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    loss += softplus(z(i)) - y[static_cast<std::size_t>(i)] * z(i);
  }
  return loss / static_cast<double>(z.size());
}

// Groups of bitwise-identical columns, in order of first appearance.
std::vector<std::vector<Eigen::Index>> duplicate_groups(const Eigen::MatrixXd& x) {
  std::vector<std::vector<Eigen::Index>> groups;
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    auto same = std::find_if(groups.begin(), groups.end(),
                             [&](const auto& g) { return x.col(g.front()) == x.col(j); });
    if (same == groups.end()) {
      groups.push_back({j});
    } else {
      same->push_back(j);
    }
  }
  return groups;
}

void validate(const Eigen::MatrixXd& x, std::span<const int> y) {
  if (x.rows() == 0) throw std::invalid_argument("logistic_fit: no rows");
  if (static_cast<std::size_t>(x.rows()) != y.size()) {
    throw std::invalid_argument("logistic_fit: label count does not match row count");
  }
  if (!x.allFinite()) throw std::invalid_argument("logistic_fit: non-finite features");
  bool has0 = false;
  bool has1 = false;
  for (int label : y) {
    if (label != 0 && label != 1) throw std::invalid_argument("logistic_fit: labels must be 0 or 1");
    has0 = has0 || label == 0;
    has1 = has1 || label == 1;
  }
  if (!has0 || !has1) throw std::invalid_argument("logistic_fit: labels contain a single class");
}

}  // namespace

Eigen::VectorXd LogisticModel::predict_proba(const Eigen::MatrixXd& x) const {
  Eigen::VectorXd z = (x * weights).array() + intercept;
  return z.unaryExpr([](double v) { return sigmoid(v); });
}

std::vector<int> LogisticModel::predict(const Eigen::MatrixXd& x) const {
  const Eigen::VectorXd p = predict_proba(x);
  std::vector<int> out(static_cast<std::size_t>(p.size()));
  for (Eigen::Index i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(i)] = p(i) >= 0.5 ? 1 : 0;
  return out;
}

std::vector<int> LogisticModel::support() const {
  std::vector<int> out;
  for (Eigen::Index j = 0; j < weights.size(); ++j) {
    if (weights(j) != 0.0) out.push_back(static_cast<int>(j));
  }
  return out;
}

double logistic_objective(const Eigen::MatrixXd& x, std::span<const int> y,
                          const Eigen::VectorXd& weights, double intercept,
                          const ElasticNet& penalty) {
  return mean_logistic_loss(x, y, weights, intercept) + 0.5 * penalty.l2 * weights.squaredNorm() +
         penalty.l1 * weights.lpNorm<1>();
}

double lambda1_max(const Eigen::MatrixXd& x, std::span<const int> y) {
  validate(x, y);
  const auto n = static_cast<double>(x.rows());
  double mean = 0.0;
  for (int label : y) mean += label;
  mean /= n;
  Eigen::VectorXd r(x.rows());
  for (Eigen::Index i = 0; i < r.size(); ++i) r(i) = mean - y[static_cast<std::size_t>(i)];
  return (x.transpose() * r).cwiseAbs().maxCoeff() / n;
}

LogisticModel logistic_fit(const Eigen::MatrixXd& x, std::span<const int> y,
                           const ElasticNet& penalty, const FitOptions& options) {
  validate(x, y);
  if (penalty.l1 < 0 || penalty.l2 < 0) throw std::invalid_argument("logistic_fit: negative penalty");
  const auto n = static_cast<double>(x.rows());
  const Eigen::Index p = x.cols();

  double base = 0.0;
  for (int label : y) base += label;
  base /= n;

  LogisticModel m;
  m.penalty = penalty;

  Eigen::VectorXd yv(x.rows());
  for (Eigen::Index i = 0; i < yv.size(); ++i) yv(i) = y[static_cast<std::size_t>(i)];

  // Identical columns are fitted as one column whose weight is split equally
  // between the copies: the same objective, with the smallest-norm split.
  // The ridge weight of a group of m copies becomes l2 / m.
  const auto groups = duplicate_groups(x);
  const auto q = static_cast<Eigen::Index>(groups.size());
  Eigen::MatrixXd xa(x.rows(), q + 1);
  Eigen::VectorXd ridge(q);
  for (Eigen::Index g = 0; g < q; ++g) {
    const auto& members = groups[static_cast<std::size_t>(g)];
    xa.col(g) = x.col(members.front());
    ridge(g) = penalty.l2 / static_cast<double>(members.size());
  }
  xa.col(q) = Eigen::VectorXd::Ones(x.rows());  // intercept is the last coordinate
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(q + 1);
  theta(q) = std::log(base / (1.0 - base));

  auto l1_part = [&](const Eigen::VectorXd& t) { return penalty.l1 * t.head(q).lpNorm<1>(); };
  auto smooth = [&](const Eigen::VectorXd& t) {
    return mean_logistic_loss(xa, y, t, 0.0) + 0.5 * (ridge.array() * t.head(q).array().square()).sum();
  };

  double f = smooth(theta);
  if (options.record_objective) m.objective.push_back(f + l1_part(theta));

  for (int it = 0; it < options.max_iterations; ++it) {
    const Eigen::VectorXd prob = (xa * theta).unaryExpr([](double v) { return sigmoid(v); });
    Eigen::VectorXd grad = xa.transpose() * (prob - yv) / n;
    grad.head(q).array() += ridge.array() * theta.head(q).array();

    // Stationarity: unit-step proximal gradient mapping.
    Eigen::VectorXd mapping(q + 1);
    for (Eigen::Index j = 0; j < q; ++j) {
      mapping(j) = theta(j) - soft_threshold(theta(j) - grad(j), penalty.l1);
    }
    mapping(q) = grad(q);
    if (mapping.norm() <= options.tolerance) {
      m.converged = true;
      break;
    }

    const Eigen::VectorXd curv = prob.array() * (1.0 - prob.array());
    Eigen::MatrixXd hess = xa.transpose() * curv.asDiagonal() * xa / n;
    hess.diagonal().head(q) += ridge;
    hess.diagonal().array() += 1e-12;

    // Coordinate descent on the local model g'd + d'Hd/2 + l1*|theta+d|.
    Eigen::VectorXd u = theta;
    Eigen::VectorXd hd = Eigen::VectorXd::Zero(q + 1);
    for (int sweep = 0; sweep < 100000; ++sweep) {
      double biggest = 0.0;
      for (Eigen::Index j = 0; j <= q; ++j) {
        const double hjj = hess(j, j);
        const double slope = grad(j) + hd(j);
        const double target = hjj * u(j) - slope;
        const double uj = j < q ? soft_threshold(target, penalty.l1) / hjj : target / hjj;
        const double delta = uj - u(j);
        if (delta == 0.0) continue;
        u(j) = uj;
        hd += delta * hess.col(j);
        biggest = std::max(biggest, std::abs(delta));
      }
      if (biggest <= 1e-14 * std::max(1.0, u.cwiseAbs().maxCoeff())) break;
    }

    const Eigen::VectorXd dir = u - theta;
    const double decrease = grad.dot(dir) + l1_part(u) - l1_part(theta);
    const double total = f + l1_part(theta);
    double t = 1.0;
    Eigen::VectorXd next;
    double f_next = 0.0;
    while (true) {
      next = theta + t * dir;
      f_next = smooth(next);
      if (f_next + l1_part(next) <= total + 1e-4 * t * decrease || t < 1e-10) break;
      t *= 0.5;
    }
    m.iterations = it + 1;
    if (f_next + l1_part(next) > total) break;  // no further progress in floating point
    theta = std::move(next);
    f = f_next;
    if (options.record_objective) m.objective.push_back(f + l1_part(theta));
  }
  m.weights = Eigen::VectorXd::Zero(p);
  for (Eigen::Index g = 0; g < q; ++g) {
    const auto& members = groups[static_cast<std::size_t>(g)];
    for (Eigen::Index j : members) m.weights(j) = theta(g) / static_cast<double>(members.size());
  }
  m.intercept = theta(q);
  return m;
}

ConfusionMatrix confusion_matrix(std::span<const int> truth, std::span<const int> predicted) {
  if (truth.size() != predicted.size()) {
    throw std::invalid_argument("confusion_matrix: size mismatch");
  }
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] == 1) {
      (predicted[i] == 1 ? cm.tp : cm.fn)++;
    } else {
      (predicted[i] == 1 ? cm.fp : cm.tn)++;
    }
  }
  return cm;
}

}  // namespace pathsig
