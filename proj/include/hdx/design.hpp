#pragma once

#include <cstdint>
#include <vector>

#include "hdx/cell.hpp"

namespace hdx {

// (n, q, r, lambda)-design: q-element blocks covering every r-subset of [0,n)
// exactly lambda times. An (n,d)-Steiner system is the (n, d+1, d, 1) case.
struct Design {
  int n = 0;
  int q = 0;
  int r = 0;
  std::int64_t lambda = 1;
  std::vector<Cell> blocks;
};

struct DesignCheck {
  bool ok = false;
  Cell witness;               // a violating r-subset when !ok
  std::int64_t actual = 0;    // its coverage count
};

DesignCheck is_design(const Design& D);

// Requires D.q == d+1, D.r == d, D.lambda == 1 and D.n == n; throws otherwise.
DesignCheck is_steiner(const Design& D, int n, int d);

}  // namespace hdx
