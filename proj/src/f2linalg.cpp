#include "hdx/f2linalg.hpp"

#include <algorithm>

#include "hdx/cochain.hpp"

namespace hdx {

namespace {
std::size_t lowest_set(const BitVec& v) {
  std::size_t out = v.size();
  v.for_each_set([&](std::size_t b) {
    if (b < out) out = b;
  });
  return out;
}
}  // namespace

bool CosetBasis::insert(BitVec v) {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.test(pivots_[i])) v ^= rows_[i];
  std::size_t p = lowest_set(v);
  if (p == v.size()) return false;

  // back-eliminate the new pivot from the existing rows
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].test(p)) rows_[i] ^= v;

  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), static_cast<std::uint32_t>(p));
  std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
  pivots_.insert(it, static_cast<std::uint32_t>(p));
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  refresh_nonpivots();
  return true;
}

BitVec CosetBasis::reduce(BitVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.test(pivots_[i])) v ^= rows_[i];
  return v;
}

void CosetBasis::refresh_nonpivots() {
  nonpivots_.clear();
  nonpivots_.reserve(len_ - pivots_.size());
  std::size_t k = 0;
  for (std::size_t c = 0; c < len_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c)
      ++k;
    else
      nonpivots_.push_back(static_cast<std::uint32_t>(c));
  }
}

CosetBasis row_reduce(int dim, std::size_t len, const std::vector<BitVec>& generators) {
  CosetBasis B(dim, len);
  for (const BitVec& g : generators) B.insert(g);
  return B;
}

CosetBasis coboundary_basis(const Complex& X, int j) {
  if (j < -1 || j > X.dimension())
    throw std::invalid_argument("coboundary_basis: dimension out of range");
  CosetBasis B(j, X.size(j));
  if (j == -1) return B;  // im(delta_{-2}) = 0
  CoboundaryOp delta(X, j - 1);
  Cochain e = make_cochain(X, j - 1);
  for (std::size_t b = 0; b < X.size(j - 1); ++b) {
    e.bits.set(b);
    B.insert(delta.apply(e).bits);
    e.bits.reset(b);
  }
  return B;
}

}  // namespace hdx
