#include "pathsig/lyndon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pathsig {
namespace {

Word rotate(const Word& w, std::size_t r) {
  std::vector<int> letters(w.begin(), w.end());
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(r), letters.end());
  return Word(std::move(letters));
}

Word suffix(const Word& w, std::size_t from) {
  return Word(std::vector<int>(w.begin() + static_cast<std::ptrdiff_t>(from), w.end()));
}

Word prefix(const Word& w, std::size_t len) {
  return Word(std::vector<int>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len)));
}

SparsePoly poly_product(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) out[u + v] += cu * cv;
  }
  return out;
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t r = 1; r < w.size(); ++r) {
    if (!(w < rotate(w, r))) return false;
  }
  return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) {
    throw std::invalid_argument("standard_factorization: word " + w.label() +
                                " has length < 2");
  }
  if (!is_lyndon(w)) {
    throw std::invalid_argument("standard_factorization: " + w.label() + " is not a Lyndon word");
  }
  std::size_t best = 1;
  for (std::size_t i = 2; i < w.size(); ++i) {
    if (suffix(w, i) < suffix(w, best)) best = i;
  }
  return {prefix(w, best), suffix(w, best)};
}

SparsePoly bracket_expansion(const Word& w) {
  if (w.size() == 1) return SparsePoly{{w, 1.0}};
  auto [u, v] = standard_factorization(w);
  const SparsePoly pu = bracket_expansion(u);
  const SparsePoly pv = bracket_expansion(v);
  SparsePoly out = poly_product(pu, pv);
  for (const auto& [word, c] : poly_product(pv, pu)) out[word] -= c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0.0; });
  return out;
}

LyndonBasis::LyndonBasis(int dim, int depth) : dim_(dim), depth_(depth) {
  if (dim < 1 || depth < 1) {
    throw std::invalid_argument("LyndonBasis: dim and depth must be >= 1");
  }
  for (int k = 1; k <= depth; ++k) {
    for (Word& w : words_of_length(dim, k)) {
      if (!is_lyndon(w)) continue;
      LyndonWord lw;
      if (w.size() >= 2) lw.factorization = standard_factorization(w);
      lw.expansion = bracket_expansion(w);
      lw.word = std::move(w);
      words_.push_back(std::move(lw));
    }
  }
}

long long log_sig_dimension(int dim, int depth) {
  long long total = 0;
  for (int k = 1; k <= depth; ++k) {
    long long sum = 0;
    for (int m = 1; m <= k; ++m) {
      if (k % m != 0) continue;
      long long p = 1;
      for (int i = 0; i < k / m; ++i) p *= dim;
      sum += mobius(m) * p;
    }
    total += sum / k;
  }
  return total;
}

LogSignature log_signature_coords(const SignatureResult& s,
                                  std::shared_ptr<const LyndonBasis> basis,
                                  double residual_tol) {
  if (std::abs(s.series.coeffs()[0] - 1.0) > 1e-12) {
    throw std::invalid_argument("log_signature_coords: constant term must be 1");
  }
  if (s.depth() < 1) throw std::invalid_argument("log_signature_coords: depth must be >= 1");
  if (!basis) {
    basis = std::make_shared<const LyndonBasis>(s.dim(), s.depth());
  } else if (basis->dim() != s.dim() || basis->depth() != s.depth()) {
    throw std::invalid_argument("log_signature_coords: basis does not match signature shape");
  }

  const TensorSeries log_s = tensor_log(s.series);
  TensorSeries residual = log_s;
  const int depth = s.depth();
  std::vector<double> coords(basis->size(), 0.0);

  // Words come level by level, ascending within a level. Each expansion has
  // its minimum word at the Lyndon word itself, so the system is
  // unitriangular.
  std::size_t next = 0;
  for (int k = 1; k <= depth; ++k) {
    for (; next < basis->size() && static_cast<int>((*basis)[next].word.size()) == k; ++next) {
      const std::size_t i = next;
      const LyndonWord& lw = (*basis)[i];
      const double c = residual[lw.word];
      coords[i] = c;
      if (c == 0.0) continue;
      for (const auto& [w, coef] : lw.expansion) residual[w] -= c * coef;
    }
    auto level = residual.level(k);
    double scale = 1.0;
    double worst = 0.0;
    for (double v : log_s.level(k)) scale = std::max(scale, std::abs(v));
    for (double v : level) worst = std::max(worst, std::abs(v));
    if (worst > residual_tol * scale) {
      throw std::domain_error("log_signature_coords: residual " + std::to_string(worst) +
                              " at level " + std::to_string(k) +
                              " (input is not group-like)");
    }
  }
  return LogSignature{std::move(basis), std::move(coords)};
}

double LogSignature::coord(const Word& w) const {
  for (std::size_t i = 0; i < basis->size(); ++i) {
    if ((*basis)[i].word == w) return coords[i];
  }
  throw std::out_of_range("LogSignature::coord: " + w.label("") + " is not in the basis");
}

TensorSeries lie_series(const LogSignature& ls) {
  TensorSeries out = TensorSeries::zero(ls.basis->dim(), ls.basis->depth());
  for (std::size_t i = 0; i < ls.basis->size(); ++i) {
    for (const auto& [w, coef] : (*ls.basis)[i].expansion) out[w] += ls.coords[i] * coef;
  }
  return out;
}

}  // namespace pathsig
