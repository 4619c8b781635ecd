#include "pathsig/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pathsig {

PiecewisePath::PiecewisePath(int dim, std::vector<double> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (dim_ < 1) throw std::invalid_argument("PiecewisePath: dim must be >= 1");
  if (data_.empty()) throw std::invalid_argument("PiecewisePath: empty point list");
  if (data_.size() % static_cast<std::size_t>(dim_) != 0) {
    throw std::invalid_argument("PiecewisePath: data size is not a multiple of dim");
  }
  if (!std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); })) {
    throw std::invalid_argument("PiecewisePath: non-finite coordinate");
  }
}

PiecewisePath::PiecewisePath(std::initializer_list<std::initializer_list<double>> rows)
    : PiecewisePath(from_rows(std::vector<std::vector<double>>(rows.begin(), rows.end()))) {}

PiecewisePath PiecewisePath::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("PiecewisePath: empty point list");
  const std::size_t d = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * d);
  for (const auto& r : rows) {
    if (r.size() != d) throw std::invalid_argument("PiecewisePath: ragged rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return PiecewisePath(static_cast<int>(d), std::move(flat));
}

std::vector<double> PiecewisePath::at(double s) const {
  const std::size_t n = num_points();
  std::vector<double> out(static_cast<std::size_t>(dim_));
  if (n == 1 || s <= 0.0) {
    auto p = point(0);
    std::copy(p.begin(), p.end(), out.begin());
    return out;
  }
  if (s >= static_cast<double>(n - 1)) {
    auto p = point(n - 1);
    std::copy(p.begin(), p.end(), out.begin());
    return out;
  }
  const auto j = static_cast<std::size_t>(std::floor(s));
  const double frac = s - static_cast<double>(j);
  auto p = point(j);
  auto q = point(j + 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = p[k] + frac * (q[k] - p[k]);
  return out;
}

std::vector<double> PiecewisePath::increment() const {
  auto first = point(0);
  auto last = point(num_points() - 1);
  std::vector<double> out(static_cast<std::size_t>(dim_));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = last[k] - first[k];
  return out;
}

}  // namespace pathsig
