#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace mealy {

// Ordered set of distinct symbol names. Ids are dense, 0..size()-1, in
// insertion order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names) {
    for (auto& n : names) add(std::move(n));
  }

  int add(std::string name) {
    if (name.empty()) throw std::invalid_argument("empty symbol name");
    auto [it, inserted] = index_.emplace(std::move(name), static_cast<int>(names_.size()));
    if (!inserted) throw std::invalid_argument("duplicate symbol name: " + it->first);
    names_.push_back(it->first);
    return it->second;
  }

  // Returns the id, adding the symbol if it is new.
  int intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    return add(name);
  }

  int id(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::out_of_range("unknown symbol: " + name);
    return it->second;
  }

  bool contains(const std::string& name) const { return index_.count(name) != 0; }
  const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace mealy
