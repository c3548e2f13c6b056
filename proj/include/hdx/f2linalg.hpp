#pragma once

#include <cstdint>
#include <vector>

#include "hdx/bitvec.hpp"
#include "hdx/complex.hpp"

namespace hdx {

// Row-reduced basis of a subspace of F2^len. For B^j = im(delta_{j-1}) the
// pivot-free coordinates index one representative per cohomology coset, which
// is what transversal enumeration walks.
class CosetBasis {
 public:
  CosetBasis() = default;
  CosetBasis(int dim, std::size_t len) : dim_(dim), len_(len) { refresh_nonpivots(); }

  int dim() const { return dim_; }
  std::size_t length() const { return len_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<BitVec>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  const std::vector<std::uint32_t>& nonpivots() const { return nonpivots_; }

  // Inserts a vector, keeping reduced row echelon form; returns true if the
  // rank grew.
  bool insert(BitVec v);

  // Canonical coset representative: zero on every pivot coordinate.
  BitVec reduce(BitVec v) const;
  bool in_span(const BitVec& v) const { return reduce(std::move(v)).none(); }

 private:
  void refresh_nonpivots();

  int dim_ = 0;
  std::size_t len_ = 0;
  std::vector<BitVec> rows_;            // sorted by pivot
  std::vector<std::uint32_t> pivots_;   // increasing
  std::vector<std::uint32_t> nonpivots_;
};

CosetBasis row_reduce(int dim, std::size_t len, const std::vector<BitVec>& generators);

// B^j(X) = im(delta_{j-1}); for j = -1 the image of the (nonexistent)
// delta_{-2} is the zero space.
CosetBasis coboundary_basis(const Complex& X, int j);

}  // namespace hdx
