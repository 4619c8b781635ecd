#include "pathsig/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pathsig {
namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void require_same_shape(const TensorSeries& a, const TensorSeries& b, const char* op) {
  if (a.dim() != b.dim() || a.depth() != b.depth()) {
    throw std::invalid_argument(std::string(op) + ": mismatched dim or depth (" +
                                std::to_string(a.dim()) + "," + std::to_string(a.depth()) +
                                ") vs (" + std::to_string(b.dim()) + "," +
                                std::to_string(b.depth()) + ")");
  }
}

}  // namespace

std::size_t series_size(int dim, int depth) {
  std::size_t total = 0;
  for (int k = 0; k <= depth; ++k) total += ipow(static_cast<std::size_t>(dim), k);
  return total;
}

std::size_t word_index(const Word& w, int dim, int depth) {
  if (static_cast<int>(w.size()) > depth) {
    throw std::invalid_argument("word " + w.label() + " is longer than depth " +
                                std::to_string(depth));
  }
  if (!w.valid_for(dim)) {
    throw std::invalid_argument("word " + w.label() + " has a letter outside 1.." +
                                std::to_string(dim));
  }
  std::size_t within = 0;
  for (int letter : w) within = within * static_cast<std::size_t>(dim) + (letter - 1);
  return series_size(dim, static_cast<int>(w.size()) - 1) + within;
}

Word word_at(std::size_t index, int dim, int depth) {
  const auto d = static_cast<std::size_t>(dim);
  std::size_t start = 0;
  for (int k = 0; k <= depth; ++k) {
    const std::size_t n = ipow(d, k);
    if (index < start + n) {
      std::size_t within = index - start;
      std::vector<int> letters(static_cast<std::size_t>(k));
      for (int i = k - 1; i >= 0; --i) {
        letters[static_cast<std::size_t>(i)] = static_cast<int>(within % d) + 1;
        within /= d;
      }
      return Word(std::move(letters));
    }
    start += n;
  }
  throw std::out_of_range("index " + std::to_string(index) + " beyond series size");
}

TensorSeries::TensorSeries(int dim, int depth) : dim_(dim), depth_(depth) {
  if (dim < 1) throw std::invalid_argument("TensorSeries: dim must be >= 1");
  if (depth < 0) throw std::invalid_argument("TensorSeries: depth must be >= 0");
  offsets_.resize(static_cast<std::size_t>(depth) + 2);
  offsets_[0] = 0;
  for (int k = 0; k <= depth; ++k) {
    offsets_[static_cast<std::size_t>(k) + 1] =
        offsets_[static_cast<std::size_t>(k)] + ipow(static_cast<std::size_t>(dim), k);
  }
  coeffs_.assign(offsets_.back(), 0.0);
}

TensorSeries::TensorSeries(int dim, int depth, std::vector<double> coeffs)
    : TensorSeries(dim, depth) {
  if (coeffs.size() != coeffs_.size()) {
    throw std::invalid_argument("TensorSeries: expected " + std::to_string(coeffs_.size()) +
                                " coefficients, got " + std::to_string(coeffs.size()));
  }
  coeffs_ = std::move(coeffs);
}

TensorSeries TensorSeries::unit(int dim, int depth) {
  TensorSeries s(dim, depth);
  s.coeffs_[0] = 1.0;
  return s;
}

std::span<const double> TensorSeries::level(int k) const {
  const auto b = offsets_.at(static_cast<std::size_t>(k));
  const auto e = offsets_.at(static_cast<std::size_t>(k) + 1);
  return std::span<const double>(coeffs_).subspan(b, e - b);
}

std::span<double> TensorSeries::level(int k) {
  const auto b = offsets_.at(static_cast<std::size_t>(k));
  const auto e = offsets_.at(static_cast<std::size_t>(k) + 1);
  return std::span<double>(coeffs_).subspan(b, e - b);
}

TensorSeries& TensorSeries::operator+=(const TensorSeries& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TensorSeries& TensorSeries::operator-=(const TensorSeries& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TensorSeries& TensorSeries::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

double TensorSeries::max_abs_diff(const TensorSeries& other) const {
  require_same_shape(*this, other, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    m = std::max(m, std::abs(coeffs_[i] - other.coeffs_[i]));
  }
  return m;
}

TensorSeries tensor_mul(const TensorSeries& a, const TensorSeries& b) {
  require_same_shape(a, b, "tensor_mul");
  const int depth = a.depth();
  TensorSeries out(a.dim(), depth);
  for (int n = 0; n <= depth; ++n) {
    auto dst = out.level(n);
    for (int k = 0; k <= n; ++k) {
      auto left = a.level(k);
      auto right = b.level(n - k);
      const std::size_t stride = right.size();
      for (std::size_t iu = 0; iu < left.size(); ++iu) {
        const double lu = left[iu];
        if (lu == 0.0) continue;
        double* row = dst.data() + iu * stride;
        for (std::size_t iv = 0; iv < stride; ++iv) row[iv] += lu * right[iv];
      }
    }
  }
  return out;
}

TensorSeries tensor_exp(std::span<const double> increment, int depth) {
  const int dim = static_cast<int>(increment.size());
  TensorSeries out = TensorSeries::unit(dim, depth);
  // level k = level (k-1) ⊗ increment / k
  for (int k = 1; k <= depth; ++k) {
    auto prev = out.level(k - 1);
    auto cur = out.level(k);
    const double inv_k = 1.0 / k;
    for (std::size_t i = 0; i < prev.size(); ++i) {
      const double p = prev[i] * inv_k;
      for (int j = 0; j < dim; ++j) {
        cur[i * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)] =
            p * increment[static_cast<std::size_t>(j)];
      }
    }
  }
  return out;
}

TensorSeries tensor_log(const TensorSeries& x) {
  const double lambda0 = x.coeffs()[0];
  if (!(lambda0 > 0.0)) {
    throw std::invalid_argument("tensor_log: constant term must be positive, got " +
                                std::to_string(lambda0));
  }
  // log x = log(λ0) + Σ_{n>=1} (-1)^{n+1}/n · y^n  with  y = x/λ0 - 1
  TensorSeries y = x * (1.0 / lambda0);
  y.coeffs()[0] = 0.0;

  TensorSeries out = TensorSeries::zero(x.dim(), x.depth());
  TensorSeries power = y;
  for (int n = 1; n <= x.depth(); ++n) {
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    out += power * (sign / n);
    if (n < x.depth()) power = tensor_mul(power, y);
  }
  out.coeffs()[0] = std::log(lambda0);
  return out;
}

TensorSeries tensor_exp_series(const TensorSeries& x) {
  if (x.coeffs()[0] != 0.0) {
    throw std::invalid_argument("tensor_exp_series: constant term must be zero");
  }
  TensorSeries out = TensorSeries::unit(x.dim(), x.depth());
  TensorSeries term = TensorSeries::unit(x.dim(), x.depth());
  for (int n = 1; n <= x.depth(); ++n) {
    term = tensor_mul(term, x) * (1.0 / n);
    out += term;
  }
  return out;
}

namespace {

void shuffle_into(const std::vector<int>& i, std::size_t pi, const std::vector<int>& j,
                  std::size_t pj, std::vector<int>& prefix, WordMultiset& out) {
  if (pi == i.size() && pj == j.size()) {
    ++out[Word(prefix)];
    return;
  }
  if (pi < i.size()) {
    prefix.push_back(i[pi]);
    shuffle_into(i, pi + 1, j, pj, prefix, out);
    prefix.pop_back();
  }
  if (pj < j.size()) {
    prefix.push_back(j[pj]);
    shuffle_into(i, pi, j, pj + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

WordMultiset shuffle(const Word& i, const Word& j) {
  WordMultiset out;
  std::vector<int> prefix;
  prefix.reserve(i.size() + j.size());
  shuffle_into(i.letters(), 0, j.letters(), 0, prefix, out);
  return out;
}

}  // namespace pathsig
