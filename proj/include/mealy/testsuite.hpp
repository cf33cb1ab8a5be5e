#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mealy/word.hpp"

namespace mealy {

// Deduplicated set of input words in shortlex order.
class TestSuite {
 public:
  TestSuite() = default;
  explicit TestSuite(std::vector<Word> words, std::string provenance = "")
      : words_(std::move(words)), provenance_(std::move(provenance)) {
    std::sort(words_.begin(), words_.end(), shortlex_less);
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  }

  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  bool contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w, shortlex_less);
  }
  const std::string& provenance() const { return provenance_; }

  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  friend bool operator==(const TestSuite& a, const TestSuite& b) { return a.words_ == b.words_; }

 private:
  std::vector<Word> words_;
  std::string provenance_;
};

}  // namespace mealy
