#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "pathsig/word.hpp"

namespace pathsig {

/// Number of words of length <= depth over an alphabet of size dim.
std::size_t series_size(int dim, int depth);

/// Flat position of `w` in the level-major, lexicographic-within-level layout.
/// Throws std::invalid_argument for an out-of-range letter or a word longer
/// than `depth`.
std::size_t word_index(const Word& w, int dim, int depth);

/// Inverse of word_index.
Word word_at(std::size_t index, int dim, int depth);

/// Dense truncated formal power series over R^dim up to degree `depth`.
///
/// Coefficients are stored level-major; within a level the words are in
/// lexicographic order, so level k is a row-major d^k tensor.
class TensorSeries {
 public:
  TensorSeries(int dim, int depth);
  TensorSeries(int dim, int depth, std::vector<double> coeffs);

  /// 1 on the empty word, 0 elsewhere.
  static TensorSeries unit(int dim, int depth);
  static TensorSeries zero(int dim, int depth) { return {dim, depth}; }

  int dim() const { return dim_; }
  int depth() const { return depth_; }
  std::size_t size() const { return coeffs_.size(); }

  double operator[](const Word& w) const { return coeffs_[word_index(w, dim_, depth_)]; }
  double& operator[](const Word& w) { return coeffs_[word_index(w, dim_, depth_)]; }

  std::span<const double> coeffs() const { return coeffs_; }
  std::span<double> coeffs() { return coeffs_; }

  /// Coefficients of words of length exactly k.
  std::span<const double> level(int k) const;
  std::span<double> level(int k);

  TensorSeries& operator+=(const TensorSeries& other);
  TensorSeries& operator-=(const TensorSeries& other);
  TensorSeries& operator*=(double s);

  friend TensorSeries operator+(TensorSeries a, const TensorSeries& b) { return a += b; }
  friend TensorSeries operator-(TensorSeries a, const TensorSeries& b) { return a -= b; }
  friend TensorSeries operator*(TensorSeries a, double s) { return a *= s; }
  friend TensorSeries operator*(double s, TensorSeries a) { return a *= s; }

  /// Largest absolute coefficient difference; shapes must match.
  double max_abs_diff(const TensorSeries& other) const;

 private:
  int dim_;
  int depth_;
  std::vector<std::size_t> offsets_;  // offsets_[k] = start of level k, size depth+2
  std::vector<double> coeffs_;
};

/// Truncated product: (a ⊗ b)[w] = sum over w = u·v of a[u]·b[v].
TensorSeries tensor_mul(const TensorSeries& a, const TensorSeries& b);

/// exp of a degree-one element: coefficient of (i1..ik) is prod increment[i]/k!.
TensorSeries tensor_exp(std::span<const double> increment, int depth);

/// Truncated logarithm; requires a positive constant term.
TensorSeries tensor_log(const TensorSeries& x);

/// Truncated exponential of a series with zero constant term.
TensorSeries tensor_exp_series(const TensorSeries& x);

/// Multiset of words with positive multiplicities.
using WordMultiset = std::map<Word, long long>;

/// All interleavings of I and J that keep each word's internal order,
/// counted with multiplicity. Total multiplicity is binomial(|I|+|J|, |I|).
WordMultiset shuffle(const Word& i, const Word& j);

}  // namespace pathsig
