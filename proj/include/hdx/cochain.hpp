#pragma once

#include <cstdint>
#include <vector>

#include "hdx/bitvec.hpp"
#include "hdx/complex.hpp"

namespace hdx {

// F2-valued function on X^j, i.e. a subset of the j-cells, as a bit vector
// indexed by canonical cell rank order.
struct Cochain {
  int dim = 0;
  BitVec bits;
};

inline Cochain make_cochain(const Complex& X, int j) {
  return Cochain{j, BitVec(X.size(j))};
}

Cochain make_cochain(const Complex& X, int j, const std::vector<Cell>& cells);

// Coboundary map delta_j of a fixed complex, with both incidence directions
// precomputed: facets of each (j+1)-cell and up-cells of each j-cell.
class CoboundaryOp {
 public:
  CoboundaryOp(const Complex& X, int j);

  int input_dim() const { return j_; }
  std::size_t domain_size() const { return nlo_; }
  std::size_t codomain_size() const { return nhi_; }

  // delta A = { tau in X^{j+1} : |boundary(tau) intersect A| odd }
  Cochain apply(const Cochain& A) const;

  // indices of the (j+1)-cells containing j-cell b
  std::pair<const std::uint32_t*, const std::uint32_t*> up(std::size_t b) const {
    return {up_flat_.data() + up_off_[b], up_flat_.data() + up_off_[b + 1]};
  }

 private:
  int j_;
  std::size_t nlo_, nhi_;
  std::vector<std::uint32_t> facets_;  // (j+2) entries per (j+1)-cell
  std::vector<std::uint32_t> up_flat_;
  std::vector<std::size_t> up_off_;
};

Cochain coboundary(const Complex& X, const Cochain& A);
bool cocycle_test(const Complex& X, const Cochain& A);

}  // namespace hdx
