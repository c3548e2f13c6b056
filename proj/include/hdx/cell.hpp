#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdx/combinatorics.hpp"

namespace hdx {

// A cell is a strictly increasing list of vertex ids; dim = cardinality - 1.
// The empty cell (dim -1) is valid and is a member of every complex.
class Cell {
 public:
  Cell() = default;
  Cell(std::initializer_list<Vertex> vs) : v_(vs) { canonicalize(); }
  explicit Cell(std::vector<Vertex> vs) : v_(std::move(vs)) { canonicalize(); }

  int dim() const { return static_cast<int>(v_.size()) - 1; }
  int card() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  const std::vector<Vertex>& vertices() const { return v_; }

  bool contains(Vertex x) const { return std::binary_search(v_.begin(), v_.end(), x); }
  bool contains_all(const Cell& s) const {
    return std::includes(v_.begin(), v_.end(), s.v_.begin(), s.v_.end());
  }

  CellRank rank() const { return colex_rank(v_); }

  static Cell unrank(CellRank r, int card) {
    Cell c;
    colex_unrank(r, card, c.v_);
    return c;
  }

  // Facet obtained by deleting the i-th vertex.
  Cell facet_without(int i) const {
    Cell f;
    f.v_.reserve(v_.size() - 1);
    for (int j = 0; j < card(); ++j)
      if (j != i) f.v_.push_back(v_[static_cast<std::size_t>(j)]);
    return f;
  }

  Cell difference(const Cell& s) const {
    Cell r;
    std::set_difference(v_.begin(), v_.end(), s.v_.begin(), s.v_.end(),
                        std::back_inserter(r.v_));
    return r;
  }

  int intersection_size(const Cell& s) const {
    int c = 0;
    auto it = s.v_.begin();
    for (Vertex x : v_) {
      while (it != s.v_.end() && *it < x) ++it;
      if (it != s.v_.end() && *it == x) ++c;
    }
    return c;
  }

  friend Cell cell_union(const Cell& a, const Cell& b) {
    Cell r;
    std::merge(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(), std::back_inserter(r.v_));
    if (std::adjacent_find(r.v_.begin(), r.v_.end()) != r.v_.end())
      throw std::invalid_argument("cell_union: cells are not disjoint");
    return r;
  }

  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v_[i]);
    }
    return s + "}";
  }

 private:
  void canonicalize() {
    std::sort(v_.begin(), v_.end());
    if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
      throw std::invalid_argument("cell has a repeated vertex");
  }

  std::vector<Vertex> v_;
};

inline std::vector<Cell> boundary(const Cell& tau) {
  if (tau.dim() < 0) throw std::invalid_argument("no boundary of empty cell");
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(tau.card()));
  for (int i = 0; i < tau.card(); ++i) out.push_back(tau.facet_without(i));
  return out;
}

}  // namespace hdx
