#include "pathsig/word.hpp"

#include <algorithm>

namespace pathsig {

Word Word::operator+(const Word& other) const {
  std::vector<int> out;
  out.reserve(size() + other.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

bool Word::valid_for(int dim) const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [dim](int l) { return l >= 1 && l <= dim; });
}

std::string Word::label(const std::string& prefix) const {
  std::string s = prefix + "(";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(letters_[i]);
  }
  s += ')';
  return s;
}

std::vector<Word> words_of_length(int dim, int length) {
  std::vector<Word> out;
  if (length < 0 || dim < 1) return out;
  std::vector<int> cur(static_cast<std::size_t>(length), 1);
  while (true) {
    out.emplace_back(cur);
    // odometer increment, last letter fastest
    int pos = length - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == dim) {
      cur[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace pathsig
