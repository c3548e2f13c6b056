#pragma once

#include <utility>
#include <vector>

#include "hdx/complex.hpp"

namespace hdx {

// Simple undirected graph: no loops, no multi-edges.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  int degree(Vertex v) const { return deg_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& degrees() const { return deg_; }

  std::int64_t volume(const std::vector<Vertex>& S) const {
    std::int64_t s = 0;
    for (Vertex v : S) s += deg_[static_cast<std::size_t>(v)];
    return s;
  }

  // 1-skeleton of a complex, on the same vertex ids.
  static Graph from_skeleton(const Complex& X);

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;  // u < v, sorted
  std::vector<int> deg_;
};

// The graph as a 1-dimensional complex (all n vertices plus the edges), for
// weighted-norm and expansion computations on graphs.
Complex complex_from_graph(const Graph& G);

}  // namespace hdx
