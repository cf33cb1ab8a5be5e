#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mealy {

// Simple directed graph: no self-loops, no parallel edges.
class DiGraph {
 public:
  DiGraph(int num_nodes, std::vector<std::pair<int, int>> edges)
      : num_nodes_(num_nodes), edges_(std::move(edges)) {
    for (auto [u, v] : edges_) {
      if (u < 0 || u >= num_nodes_ || v < 0 || v >= num_nodes_)
        throw std::invalid_argument("edge references invalid node");
      if (u == v) throw std::invalid_argument("self-loops are not allowed");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  int num_nodes() const { return num_nodes_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int num_nodes_;
  std::vector<std::pair<int, int>> edges_;
};

// Disjoint non-empty node sets covering all nodes. Communities are kept
// with ascending members and ordered by their smallest member.
using Partition = std::vector<std::vector<int>>;

}  // namespace mealy
