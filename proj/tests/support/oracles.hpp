#pragma once

// Reference implementations used only by tests. These deliberately avoid the
// library's incidence tables, row reduction and transversal walks: deltas are
// computed from boundary sets, weights by scanning top cells, class norms by
// enumerating every coboundary, and expansion constants by enumerating every
// cochain. Slow, but an independent path.

#include <cstdint>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/weights.hpp"

namespace oracle {

inline std::vector<hdx::Cell> cells_of(const hdx::Complex& X, int j) {
  std::vector<hdx::Cell> out;
  for (std::size_t i = 0; i < X.size(j); ++i) out.push_back(X.cell_at(j, i));
  return out;
}

// delta_j of the cochain encoded by amask over cells_of(X, j)
inline std::uint32_t naive_delta_mask(const hdx::Complex& X, int j, std::uint32_t amask) {
  auto lo = cells_of(X, j);
  auto hi = cells_of(X, j + 1);
  std::uint32_t out = 0;
  for (std::size_t t = 0; t < hi.size(); ++t) {
    int parity = 0;
    if (hi[t].dim() >= 0) {
      for (const hdx::Cell& f : hdx::boundary(hi[t])) {
        for (std::size_t b = 0; b < lo.size(); ++b)
          if ((amask >> b) & 1u && lo[b] == f) parity ^= 1;
      }
    }
    if (parity) out |= 1u << t;
  }
  return out;
}

// number of top cells containing c, by scanning
inline long long naive_top_count(const hdx::Complex& X, const hdx::Cell& c) {
  long long cnt = 0;
  for (std::size_t t = 0; t < X.size(X.dimension()); ++t)
    if (X.cell_at(X.dimension(), t).contains_all(c)) ++cnt;
  return cnt;
}

// weighted-norm numerator of a mask over the shared denominator
// C(d+1, j+1) * |X^d|
inline long long naive_norm_num(const hdx::Complex& X, int j, std::uint32_t amask) {
  auto cs = cells_of(X, j);
  long long s = 0;
  for (std::size_t b = 0; b < cs.size(); ++b)
    if ((amask >> b) & 1u) s += naive_top_count(X, cs[b]);
  return s;
}

// min weighted numerator over the full coset of amask, enumerating every
// coboundary delta(bmask) for bmask over C^{j-1}
inline long long naive_class_norm_num(const hdx::Complex& X, int j, std::uint32_t amask) {
  std::size_t mlow = X.size(j - 1);
  long long best = -1;
  for (std::uint32_t bmask = 0; bmask < (1u << mlow); ++bmask) {
    std::uint32_t member = amask ^ naive_delta_mask(X, j - 1, bmask);
    long long num = naive_norm_num(X, j, member);
    if (best < 0 || num < best) best = num;
  }
  return best;
}

// exact h_j(X) as a fraction pair (delta numerator, class numerator) over the
// usual denominators; false if no class has positive norm
inline bool naive_expansion_constant(const hdx::Complex& X, int j, long long& dn,
                                     long long& cn) {
  std::size_t m = X.size(j);
  bool found = false;
  for (std::uint32_t amask = 0; amask < (1u << m); ++amask) {
    long long cls = naive_class_norm_num(X, j, amask);
    if (cls == 0) continue;
    long long dnum = naive_norm_num(X, j + 1, naive_delta_mask(X, j, amask));
    if (!found || static_cast<__int128>(dnum) * cn < static_cast<__int128>(dn) * cls) {
      found = true;
      dn = dnum;
      cn = cls;
    }
  }
  return found;
}

// min over all cochains with class norm > c of ||delta A|| / ||[A]||, as a
// fraction pair; mirrors the large-cochain measurement
inline bool naive_large_cochain_min(const hdx::Complex& X, int j, double c, long long& dn,
                                    long long& cn) {
  std::size_t m = X.size(j);
  hdx::WeightTable W = hdx::WeightTable::build(X);
  double den = static_cast<double>(W.denom(j));
  bool found = false;
  for (std::uint32_t amask = 0; amask < (1u << m); ++amask) {
    long long cls = naive_class_norm_num(X, j, amask);
    if (!(static_cast<double>(cls) / den > c)) continue;
    long long dnum = naive_norm_num(X, j + 1, naive_delta_mask(X, j, amask));
    if (!found || static_cast<__int128>(dnum) * cn < static_cast<__int128>(dn) * cls) {
      found = true;
      dn = dnum;
      cn = cls;
    }
  }
  return found;
}

}  // namespace oracle
