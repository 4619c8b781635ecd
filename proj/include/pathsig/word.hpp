#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace pathsig {

/// A multi-index (i1, ..., ik) over the alphabet {1, ..., d}. Letters are
/// 1-based; the empty word indexes the constant term of a series.
///
/// Ordering is lexicographic with a proper prefix sorting first, so that
/// (1) < (1,1) < (1,1,1) < (1,2) < (2).
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters) : letters_(letters) {}
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Concatenation u·v.
  Word operator+(const Word& other) const;

  /// True when every letter lies in [1, dim].
  bool valid_for(int dim) const;

  /// "S(1,2)"-style label; the empty word renders as "S()".
  std::string label(const std::string& prefix = "S") const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

/// All words of length exactly `length` over {1..dim}, lexicographic order.
std::vector<Word> words_of_length(int dim, int length);

}  // namespace pathsig
