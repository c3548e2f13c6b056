#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace hdx {

using Vertex = std::int32_t;
using CellRank = std::uint64_t;

namespace detail {

inline constexpr int kBinomMaxN = 640;
inline constexpr int kBinomMaxK = 12;
inline constexpr std::uint64_t kBinomSaturated = ~std::uint64_t{0};

// Pascal table with saturating addition; values beyond 2^64-2 collapse to the sentinel.
inline const std::array<std::uint64_t, kBinomMaxK + 1>& binom_row(int n) {
  static const std::vector<std::array<std::uint64_t, kBinomMaxK + 1>> table = [] {
    std::vector<std::array<std::uint64_t, kBinomMaxK + 1>> t(kBinomMaxN);
    for (int m = 0; m < kBinomMaxN; ++m) {
      t[m].fill(0);
      t[m][0] = 1;
      for (int k = 1; k <= kBinomMaxK && m > 0; ++k) {
        std::uint64_t a = t[m - 1][k - 1];
        std::uint64_t b = t[m - 1][k];
        t[m][k] = (a == kBinomSaturated || b == kBinomSaturated || a > kBinomSaturated - b)
                      ? kBinomSaturated
                      : a + b;
      }
    }
    return t;
  }();
  return table[n];
}

inline std::uint64_t binom_raw(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  if (n >= kBinomMaxN || k > kBinomMaxK) return kBinomSaturated;
  return binom_row(n)[k];
}

}  // namespace detail

inline std::uint64_t binom(int n, int k) {
  std::uint64_t v = detail::binom_raw(n, k);
  if (v == detail::kBinomSaturated) throw std::overflow_error("binom: value out of range");
  return v;
}

// Colexicographic rank of a strictly increasing vertex set:
//   rank{v_0 < ... < v_j} = sum_i C(v_i, i+1).
// Ranks of all (j+1)-subsets of [0,n) are exactly [0, C(n, j+1)).
inline CellRank colex_rank(std::span<const Vertex> v) {
  CellRank r = 0;
  for (std::size_t i = 0; i < v.size(); ++i) r += binom(v[i], static_cast<int>(i) + 1);
  return r;
}

inline void colex_unrank(CellRank r, int card, std::vector<Vertex>& out) {
  out.resize(static_cast<std::size_t>(card));
  for (int i = card; i >= 1; --i) {
    // largest v with C(v, i) <= r
    int lo = i - 1, hi = detail::kBinomMaxN - 1;
    while (lo < hi) {
      int mid = lo + (hi - lo + 1) / 2;
      std::uint64_t c = detail::binom_raw(mid, i);
      if (c != detail::kBinomSaturated && c <= r)
        lo = mid;
      else
        hi = mid - 1;
    }
    out[static_cast<std::size_t>(i - 1)] = static_cast<Vertex>(lo);
    r -= binom(lo, i);
  }
}

// Lexicographically first k-combination of [0,n); returns false if none.
inline bool first_combination(int n, int k, std::vector<int>& idx) {
  if (k < 0 || k > n) return false;
  idx.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  return true;
}

inline bool next_combination(int n, std::vector<int>& idx) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < n - k + i) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace hdx
