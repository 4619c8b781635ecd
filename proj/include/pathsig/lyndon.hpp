#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pathsig/signature.hpp"
#include "pathsig/tensor.hpp"
#include "pathsig/word.hpp"

namespace pathsig {

/// Sparse polynomial in non-commuting letters.
using SparsePoly = std::map<Word, double>;

/// True when `w` is non-empty and strictly smaller than each of its proper rotations.
bool is_lyndon(const Word& w);

/// Split w = u·v where v is the lexicographically smallest proper suffix.
/// Throws std::invalid_argument unless w is a Lyndon word of length >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);

/// Expansion of the bracketing of `w` induced by its standard factorization:
/// a letter maps to itself, w = u·v maps to P(u)P(v) - P(v)P(u).
SparsePoly bracket_expansion(const Word& w);

struct LyndonWord {
  Word word;
  std::optional<std::pair<Word, Word>> factorization;  // absent for single letters
  SparsePoly expansion;
};

/// All Lyndon words of length 1..depth over {1..dim}, ordered by length and
/// lexicographically within a length, each with its factorization and
/// bracket expansion.
class LyndonBasis {
 public:
  LyndonBasis(int dim, int depth);

  int dim() const { return dim_; }
  int depth() const { return depth_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<LyndonWord>& words() const& { return words_; }
  std::vector<LyndonWord> words() && { return std::move(words_); }
  const LyndonWord& operator[](std::size_t i) const { return words_[i]; }

 private:
  int dim_;
  int depth_;
  std::vector<LyndonWord> words_;
};

/// Shorthand for constructing the basis.
inline LyndonBasis lyndon_words(int dim, int depth) { return LyndonBasis(dim, depth); }

/// Number of Lyndon words of length 1..depth (necklace/Witt formula).
long long log_sig_dimension(int dim, int depth);

struct LogSignature {
  std::shared_ptr<const LyndonBasis> basis;
  std::vector<double> coords;  // one per basis word, basis order

  /// Coordinate of a Lyndon word; throws std::out_of_range if absent.
  double coord(const Word& w) const;
};

/// Coordinates of log(s) in the Lyndon basis. The triangular solve is
/// certified by checking the residual; a non-Lie input throws
/// std::domain_error.
LogSignature log_signature_coords(const SignatureResult& s,
                                  std::shared_ptr<const LyndonBasis> basis = nullptr,
                                  double residual_tol = 1e-9);

/// Σ c(w)·expansion(w) as a dense series with zero constant term.
TensorSeries lie_series(const LogSignature& ls);

}  // namespace pathsig
