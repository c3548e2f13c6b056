#include "hdx/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace hdx {

bool Complex::contains(const Cell& c) const {
  if (c.dim() < -1 || c.dim() > d_) return false;
  if (!c.empty() && (c.vertices().front() < 0 || c.vertices().back() >= n_)) return false;
  const auto& v = cells_[static_cast<std::size_t>(c.dim() + 1)];
  return std::binary_search(v.begin(), v.end(), c.rank());
}

std::size_t Complex::index_of(int j, CellRank r) const {
  const auto& v = cells_[level(j)];
  auto it = std::lower_bound(v.begin(), v.end(), r);
  if (it == v.end() || *it != r) throw std::invalid_argument("cell not in complex");
  return static_cast<std::size_t>(it - v.begin());
}

int Complex::degree(const Cell& sigma) const {
  if (sigma.dim() > d_ || !contains(sigma)) throw std::invalid_argument("cell not in complex");
  return degree_[level(sigma.dim())][index_of(sigma.dim(), sigma.rank())];
}

int Complex::max_degree(int j) const {
  int m = 0;
  for (int dg : degree_[level(j)]) m = std::max(m, dg);
  return m;
}

LinkResult Complex::link(const Cell& rho) const {
  if (!contains(rho)) throw std::invalid_argument("cell not in complex");
  const int c = rho.card();
  std::vector<Vertex> to_host;
  to_host.reserve(static_cast<std::size_t>(n_ - c));
  std::vector<Vertex> host_to_link(static_cast<std::size_t>(n_), -1);
  for (Vertex v = 0; v < n_; ++v) {
    if (!rho.contains(v)) {
      host_to_link[static_cast<std::size_t>(v)] = static_cast<Vertex>(to_host.size());
      to_host.push_back(v);
    }
  }

  ComplexBuilder b(n_ - c, d_ - c);
  std::vector<Vertex> relabeled;
  for (int j = rho.dim(); j <= d_; ++j) {
    for (CellRank r : cells_[level(j)]) {
      Cell xi = Cell::unrank(r, j + 1);
      if (!xi.contains_all(rho)) continue;
      Cell sigma = xi.difference(rho);
      relabeled.clear();
      for (Vertex v : sigma.vertices())
        relabeled.push_back(host_to_link[static_cast<std::size_t>(v)]);
      b.add_cell(Cell(relabeled));
    }
  }
  return LinkResult{std::move(b).finalize(), std::move(to_host)};
}

ComplexBuilder::ComplexBuilder(int n, int d) : n_(n), d_(d) {
  if (n < 0 || d < -1 || d >= 640)
    throw std::invalid_argument("complex builder: bad parameters");
  sets_.resize(static_cast<std::size_t>(d + 2));
}

void ComplexBuilder::validate(const Cell& c) const {
  if (c.dim() > d_) throw std::invalid_argument("cell dimension exceeds complex dimension");
  if (!c.empty() && (c.vertices().front() < 0 || c.vertices().back() >= n_))
    throw std::invalid_argument("cell vertex out of range");
}

void ComplexBuilder::add_complete_skeleton(int j) {
  if (j > d_) throw std::invalid_argument("skeleton dimension exceeds complex dimension");
  if (j >= n_) throw std::invalid_argument("skeleton dimension needs more vertices");
  complete_upto_ = std::max(complete_upto_, j);
}

void ComplexBuilder::add_cell(const Cell& c) {
  validate(c);
  std::vector<Cell> stack{c};
  while (!stack.empty()) {
    Cell cur = std::move(stack.back());
    stack.pop_back();
    if (cur.dim() <= complete_upto_) continue;  // implied
    auto [it, inserted] = sets_[static_cast<std::size_t>(cur.dim() + 1)].insert(cur.rank());
    if (!inserted) continue;
    if (cur.dim() >= 0) {
      for (int i = 0; i < cur.card(); ++i) {
        Cell f = cur.facet_without(i);
        if (f.dim() > complete_upto_ &&
            !sets_[static_cast<std::size_t>(f.dim() + 1)].count(f.rank()))
          stack.push_back(std::move(f));
      }
    }
  }
}

Complex ComplexBuilder::finalize() && {
  if (finalized_) throw std::logic_error("complex builder reused");
  finalized_ = true;

  Complex X;
  X.n_ = n_;
  X.d_ = d_;
  X.cells_.resize(static_cast<std::size_t>(d_ + 2));
  for (int j = -1; j <= d_; ++j) {
    auto& out = X.cells_[static_cast<std::size_t>(j + 1)];
    if (j <= complete_upto_) {
      std::uint64_t cnt = binom(n_, j + 1);
      out.resize(cnt);
      for (std::uint64_t r = 0; r < cnt; ++r) out[r] = r;
    } else {
      const auto& s = sets_[static_cast<std::size_t>(j + 1)];
      out.assign(s.begin(), s.end());
      std::sort(out.begin(), out.end());
    }
  }

  // complete-skeleton flag: greatest prefix of dimensions that are full
  X.skel_ = -1;
  for (int j = 0; j <= d_; ++j) {
    if (X.cells_[static_cast<std::size_t>(j + 1)].size() == binom(n_, j + 1))
      X.skel_ = j;
    else
      break;
  }

  // degree index: for each j-cell, the number of (j+1)-cells containing it
  X.degree_.resize(static_cast<std::size_t>(d_ + 2));
  for (int j = -1; j <= d_; ++j)
    X.degree_[static_cast<std::size_t>(j + 1)].assign(
        X.cells_[static_cast<std::size_t>(j + 1)].size(), 0);
  for (int j = 0; j <= d_; ++j) {
    for (CellRank r : X.cells_[static_cast<std::size_t>(j + 1)]) {
      Cell cur = Cell::unrank(r, j + 1);
      for (int i = 0; i < cur.card(); ++i) {
        Cell f = cur.facet_without(i);
        ++X.degree_[static_cast<std::size_t>(j)][X.index_of(j - 1, f.rank())];
      }
    }
  }
  return X;
}

Complex complete_complex(int n, int d) {
  if (d < 0 || d >= n) throw std::invalid_argument("complete_complex: need 0 <= d < n");
  ComplexBuilder b(n, d);
  b.add_complete_skeleton(d);
  return std::move(b).finalize();
}

}  // namespace hdx
