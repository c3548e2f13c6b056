#include "hdx/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hdx {

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("graph: self-loop");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_) throw std::invalid_argument("graph: vertex out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("graph: multi-edge");
  deg_.assign(static_cast<std::size_t>(n_), 0);
  for (auto [u, v] : edges_) {
    ++deg_[static_cast<std::size_t>(u)];
    ++deg_[static_cast<std::size_t>(v)];
  }
}

Graph Graph::from_skeleton(const Complex& X) {
  std::vector<std::pair<Vertex, Vertex>> es;
  if (X.dimension() >= 1) {
    es.reserve(X.size(1));
    for (std::size_t i = 0; i < X.size(1); ++i) {
      Cell e = X.cell_at(1, i);
      es.emplace_back(e.vertices()[0], e.vertices()[1]);
    }
  }
  return Graph(X.vertex_count(), std::move(es));
}

Complex complex_from_graph(const Graph& G) {
  ComplexBuilder b(G.n(), 1);
  if (G.n() > 0) b.add_complete_skeleton(0);
  for (auto [u, v] : G.edges()) b.add_cell(Cell{u, v});
  return std::move(b).finalize();
}

}  // namespace hdx
