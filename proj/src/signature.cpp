#include "pathsig/signature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pathsig {

SignatureResult signature(const PiecewisePath& path, int depth) {
  if (depth < 0) throw std::invalid_argument("signature: depth must be >= 0");
  const int d = path.dim();
  TensorSeries acc = TensorSeries::unit(d, depth);
  std::vector<double> delta(static_cast<std::size_t>(d));
  for (std::size_t j = 0; j + 1 < path.num_points(); ++j) {
    auto p = path.point(j);
    auto q = path.point(j + 1);
    bool moved = false;
    for (std::size_t k = 0; k < delta.size(); ++k) {
      delta[k] = q[k] - p[k];
      moved = moved || delta[k] != 0.0;
    }
    if (!moved) continue;
    acc = tensor_mul(acc, tensor_exp(delta, depth));
  }
  return SignatureResult{std::move(acc)};
}

double signature_bruteforce(const PiecewisePath& path, const Word& w, int steps) {
  if (steps < static_cast<int>(w.size()) || steps < 1) {
    throw std::invalid_argument("signature_bruteforce: steps must be >= word length");
  }
  if (!w.valid_for(path.dim())) {
    throw std::invalid_argument("signature_bruteforce: word " + w.label() +
                                " does not fit path dimension");
  }
  const std::size_t k = w.size();
  if (k == 0) return 1.0;

  // partial[m] = sum over j1 < ... < jm < current cell of the first m factors
  std::vector<double> partial(k + 1, 0.0);
  partial[0] = 1.0;
  const double span = static_cast<double>(path.num_points() - 1);
  std::vector<double> prev = path.at(0.0);
  for (int j = 0; j < steps; ++j) {
    std::vector<double> next = path.at(span * (j + 1) / steps);
    for (std::size_t m = k; m >= 1; --m) {
      const auto letter = static_cast<std::size_t>(w[m - 1] - 1);
      partial[m] += partial[m - 1] * (next[letter] - prev[letter]);
    }
    prev = std::move(next);
  }
  return partial[k];
}

SignatureResult signature_of_sampled_function(const std::function<std::vector<double>(double)>& f,
                                              double a, double b, int samples, int depth) {
  if (samples < 2) throw std::invalid_argument("signature_of_sampled_function: need >= 2 samples");
  if (!(b > a)) throw std::invalid_argument("signature_of_sampled_function: need b > a");
  std::vector<double> flat;
  int dim = -1;
  for (int i = 0; i < samples; ++i) {
    const double t = (i == samples - 1) ? b : a + (b - a) * i / (samples - 1);
    std::vector<double> x = f(t);
    if (dim < 0) dim = static_cast<int>(x.size());
    if (static_cast<int>(x.size()) != dim || dim == 0) {
      throw std::invalid_argument("signature_of_sampled_function: inconsistent sample dimension");
    }
    for (double v : x) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("signature_of_sampled_function: non-finite sample at t=" +
                                    std::to_string(t));
      }
    }
    flat.insert(flat.end(), x.begin(), x.end());
  }
  return signature(PiecewisePath(dim, std::move(flat)), depth);
}

PiecewisePath concat(const PiecewisePath& x, const PiecewisePath& y) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("concat: dimension mismatch " + std::to_string(x.dim()) + " vs " +
                                std::to_string(y.dim()));
  }
  const auto d = static_cast<std::size_t>(x.dim());
  std::vector<double> flat(x.data().begin(), x.data().end());
  auto end = x.point(x.num_points() - 1);
  auto start = y.point(0);
  for (std::size_t i = 1; i < y.num_points(); ++i) {
    auto p = y.point(i);
    for (std::size_t k = 0; k < d; ++k) flat.push_back(end[k] + (p[k] - start[k]));
  }
  return PiecewisePath(x.dim(), std::move(flat));
}

PiecewisePath time_reverse(const PiecewisePath& x) {
  std::vector<double> flat;
  flat.reserve(x.data().size());
  for (std::size_t i = x.num_points(); i-- > 0;) {
    auto p = x.point(i);
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return PiecewisePath(x.dim(), std::move(flat));
}

double levy_area(const SignatureResult& s) {
  if (s.dim() != 2) throw std::invalid_argument("levy_area: requires a 2-dimensional signature");
  if (s.depth() < 2) throw std::invalid_argument("levy_area: requires depth >= 2");
  return 0.5 * (s[Word{1, 2}] - s[Word{2, 1}]);
}

PiecewisePath reparametrize_uniform(const PiecewisePath& x, int samples) {
  if (samples < 2) throw std::invalid_argument("reparametrize_uniform: need >= 2 samples");
  const std::size_t n = x.num_points();
  const auto d = static_cast<std::size_t>(x.dim());

  std::vector<double> cumulative(n, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    auto p = x.point(j - 1);
    auto q = x.point(j);
    double len = 0.0;
    for (std::size_t k = 0; k < d; ++k) len += (q[k] - p[k]) * (q[k] - p[k]);
    cumulative[j] = cumulative[j - 1] + std::sqrt(len);
  }
  const double total = cumulative.back();

  // Merge arc-length targets with the original vertices, in traversal order.
  std::vector<double> flat;
  auto push = [&](std::span<const double> p) { flat.insert(flat.end(), p.begin(), p.end()); };
  auto push_vec = [&](const std::vector<double>& p) { flat.insert(flat.end(), p.begin(), p.end()); };

  if (total == 0.0) {
    for (int i = 0; i < samples; ++i) push(x.point(0));
    return PiecewisePath(x.dim(), std::move(flat));
  }

  std::size_t seg = 0;
  push(x.point(0));
  for (int i = 1; i < samples; ++i) {
    const double target = (i == samples - 1) ? total : total * i / (samples - 1);
    while (seg + 1 < n && cumulative[seg + 1] < target) {
      ++seg;
      push(x.point(seg));
    }
    if (seg + 1 >= n) break;
    const double seg_len = cumulative[seg + 1] - cumulative[seg];
    if (target == cumulative[seg + 1]) {
      ++seg;
      push(x.point(seg));
      continue;
    }
    if (target == cumulative[seg]) continue;
    const double frac = (target - cumulative[seg]) / seg_len;
    auto p = x.point(seg);
    auto q = x.point(seg + 1);
    std::vector<double> pt(d);
    for (std::size_t k = 0; k < d; ++k) pt[k] = p[k] + frac * (q[k] - p[k]);
    push_vec(pt);
  }
  while (seg + 1 < n) {
    ++seg;
    push(x.point(seg));
  }
  return PiecewisePath(x.dim(), std::move(flat));
}

}  // namespace pathsig
