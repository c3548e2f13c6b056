#include "hdx/cochain.hpp"

#include <stdexcept>

namespace hdx {

Cochain make_cochain(const Complex& X, int j, const std::vector<Cell>& cells) {
  Cochain A = make_cochain(X, j);
  for (const Cell& c : cells) {
    if (c.dim() != j) throw std::invalid_argument("cochain: cell of wrong dimension");
    A.bits.set(X.index_of(j, c.rank()));
  }
  return A;
}

CoboundaryOp::CoboundaryOp(const Complex& X, int j) : j_(j) {
  if (j < -1 || j >= X.dimension())
    throw std::invalid_argument("top dimension has no coboundary");
  nlo_ = X.size(j);
  nhi_ = X.size(j + 1);

  facets_.resize(nhi_ * static_cast<std::size_t>(j + 2));
  std::vector<std::size_t> updeg(nlo_, 0);
  for (std::size_t t = 0; t < nhi_; ++t) {
    Cell tau = X.cell_at(j + 1, t);
    for (int i = 0; i < tau.card(); ++i) {
      std::size_t b = X.index_of(j, tau.facet_without(i).rank());
      facets_[t * static_cast<std::size_t>(j + 2) + static_cast<std::size_t>(i)] =
          static_cast<std::uint32_t>(b);
      ++updeg[b];
    }
  }

  up_off_.resize(nlo_ + 1, 0);
  for (std::size_t b = 0; b < nlo_; ++b) up_off_[b + 1] = up_off_[b] + updeg[b];
  up_flat_.resize(up_off_[nlo_]);
  std::vector<std::size_t> cursor(up_off_.begin(), up_off_.end() - 1);
  for (std::size_t t = 0; t < nhi_; ++t) {
    for (int i = 0; i < j + 2; ++i) {
      std::uint32_t b = facets_[t * static_cast<std::size_t>(j + 2) + static_cast<std::size_t>(i)];
      up_flat_[cursor[b]++] = static_cast<std::uint32_t>(t);
    }
  }
}

Cochain CoboundaryOp::apply(const Cochain& A) const {
  if (A.dim != j_ || A.bits.size() != nlo_)
    throw std::invalid_argument("coboundary: cochain does not match operator");
  Cochain B;
  B.dim = j_ + 1;
  B.bits = BitVec(nhi_);
  const std::size_t stride = static_cast<std::size_t>(j_ + 2);
  for (std::size_t t = 0; t < nhi_; ++t) {
    unsigned parity = 0;
    for (std::size_t i = 0; i < stride; ++i)
      parity ^= static_cast<unsigned>(A.bits.test(facets_[t * stride + i]));
    if (parity) B.bits.set(t);
  }
  return B;
}

Cochain coboundary(const Complex& X, const Cochain& A) {
  return CoboundaryOp(X, A.dim).apply(A);
}

bool cocycle_test(const Complex& X, const Cochain& A) {
  if (A.dim == X.dimension()) return true;  // delta_d maps into the zero space
  return coboundary(X, A).bits.none();
}

}  // namespace hdx
