#pragma once

#include <cstdint>
#include <vector>

#include "hdx/cochain.hpp"
#include "hdx/rational.hpp"

namespace hdx {

// Weighted norm of cochains:
//   w(sigma) = |{tau in X^d : sigma subset tau}| / (C(d+1, |sigma|) * |X^d|)
// The weights of a fixed dimension share the denominator C(d+1, j+1) * |X^d|,
// so norms are kept as integer numerators over that denominator and all
// certifying comparisons stay exact.
class WeightTable {
 public:
  static WeightTable build(const Complex& X);  // throws if |X^d| == 0

  const std::vector<std::int64_t>& counts(int j) const {
    return counts_[static_cast<std::size_t>(j + 1)];
  }
  std::int64_t denom(int j) const { return denom_[static_cast<std::size_t>(j + 1)]; }

  Rat weight(int j, std::size_t idx) const { return Rat(counts(j)[idx], denom(j)); }
  double weight_d(int j, std::size_t idx) const {
    return static_cast<double>(counts(j)[idx]) / static_cast<double>(denom(j));
  }

  // True when some cell of dimension j lies in no top cell; the norm on that
  // dimension is then only a pseudo-norm and reports carry the flag.
  bool has_zero_weight(int j) const { return has_zero_[static_cast<std::size_t>(j + 1)]; }

  std::int64_t norm_numerator(const Cochain& A) const;
  Rat norm(const Cochain& A) const { return Rat(norm_numerator(A), denom(A.dim)); }
  double norm_d(const Cochain& A) const {
    return static_cast<double>(norm_numerator(A)) / static_cast<double>(denom(A.dim));
  }

 private:
  std::vector<std::vector<std::int64_t>> counts_;
  std::vector<std::int64_t> denom_;
  std::vector<bool> has_zero_;
};

inline std::int64_t counting_norm(const Cochain& A) {
  return static_cast<std::int64_t>(A.bits.popcount());
}

// Single-cell weight by direct scan over the top cells.
Rat cell_weight(const Complex& X, const Cell& sigma);

}  // namespace hdx
