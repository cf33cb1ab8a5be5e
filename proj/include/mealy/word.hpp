#pragma once

#include <string>
#include <vector>

#include "mealy/alphabet.hpp"

namespace mealy {

// Input word: sequence of symbol ids. The empty word is epsilon.
using Word = std::vector<int>;

// Length-then-lexicographic order on ids. This is the canonical iteration
// order for all suites, covers and counterexamples.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline std::string format_word(const Word& w, const Alphabet& alph) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += alph.name(w[i]);
  }
  return s;
}

inline Word parse_word(const std::string& text, const Alphabet& alph) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    if (j > i) w.push_back(alph.id(text.substr(i, j - i)));
    i = j;
  }
  return w;
}

}  // namespace mealy
