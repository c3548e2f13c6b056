#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "hdx/cell.hpp"

namespace hdx {

struct LinkResult;

// Immutable simplicial complex on vertex set [0, n), closed under inclusion.
// Cells of each dimension are kept in colexicographic rank order; the position
// of a cell in that order is its canonical index, and cochain bit positions
// refer to it. The empty cell is always present, so the j = -1 level exists
// and delta_{-1} works like every other coboundary map.
class Complex {
 public:
  int vertex_count() const { return n_; }
  int dimension() const { return d_; }

  // Largest j such that every j-cell on [0,n) is present (-1 at minimum).
  int complete_skeleton_dim() const { return skel_; }

  std::size_t size(int j) const { return cells_[level(j)].size(); }
  const std::vector<CellRank>& cells(int j) const { return cells_[level(j)]; }

  bool contains(const Cell& c) const;
  std::size_t index_of(int j, CellRank r) const;  // throws if absent
  std::size_t index_of(const Cell& c) const { return index_of(c.dim(), c.rank()); }
  Cell cell_at(int j, std::size_t idx) const {
    return Cell::unrank(cells_[level(j)][idx], j + 1);
  }

  // Number of (dim+1)-cells containing the cell; throws if the cell is absent.
  int degree(const Cell& sigma) const;
  int degree_at(int j, std::size_t idx) const { return degree_[level(j)][idx]; }
  int max_degree(int j) const;

  // X_rho = { sigma on [n] minus rho : rho union sigma in X }, relabeled densely.
  LinkResult link(const Cell& rho) const;

  bool operator==(const Complex& o) const {
    return n_ == o.n_ && d_ == o.d_ && cells_ == o.cells_;
  }

 private:
  friend class ComplexBuilder;
  std::size_t level(int j) const {
    if (j < -1 || j > d_) throw std::out_of_range("complex: dimension out of range");
    return static_cast<std::size_t>(j + 1);
  }

  int n_ = 0;
  int d_ = -1;
  int skel_ = -1;
  std::vector<std::vector<CellRank>> cells_;       // [j+1], sorted
  std::vector<std::vector<std::int32_t>> degree_;  // aligned with cells_
};

struct LinkResult {
  Complex complex;
  std::vector<Vertex> to_host;  // link vertex id -> host vertex id
};

class ComplexBuilder {
 public:
  ComplexBuilder(int n, int d);

  // Declares all cells of dimension <= j present.
  void add_complete_skeleton(int j);
  // Adds the cell together with its closure.
  void add_cell(const Cell& c);
  Complex finalize() &&;

 private:
  void validate(const Cell& c) const;

  int n_, d_;
  int complete_upto_ = -1;
  std::vector<std::unordered_set<CellRank>> sets_;
  bool finalized_ = false;
};

Complex complete_complex(int n, int d);

}  // namespace hdx
