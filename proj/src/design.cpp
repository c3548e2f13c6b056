#include "hdx/design.hpp"

#include <stdexcept>

namespace hdx {

DesignCheck is_design(const Design& D) {
  if (D.r < 0 || D.r > D.q || D.q > D.n || D.lambda < 1)
    throw std::invalid_argument("is_design: malformed parameters");
  for (const Cell& b : D.blocks) {
    if (b.card() != D.q) throw std::invalid_argument("is_design: block of wrong size");
    if (!b.empty() && (b.vertices().front() < 0 || b.vertices().back() >= D.n))
      throw std::invalid_argument("is_design: block vertex out of range");
  }

  std::vector<std::int64_t> cover(binom(D.n, D.r), 0);
  std::vector<int> idx;
  std::vector<Vertex> sub(static_cast<std::size_t>(D.r));
  for (const Cell& b : D.blocks) {
    if (!first_combination(D.q, D.r, idx)) continue;
    do {
      for (int i = 0; i < D.r; ++i)
        sub[static_cast<std::size_t>(i)] =
            b.vertices()[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      ++cover[colex_rank(sub)];
    } while (next_combination(D.q, idx));
  }

  for (CellRank r = 0; r < cover.size(); ++r) {
    if (cover[r] != D.lambda)
      return DesignCheck{false, Cell::unrank(r, D.r), cover[r]};
  }
  return DesignCheck{true, Cell{}, D.lambda};
}

DesignCheck is_steiner(const Design& D, int n, int d) {
  if (D.q != d + 1 || D.r != d || D.lambda != 1 || D.n != n)
    throw std::invalid_argument("is_steiner: parameter mismatch");
  return is_design(D);
}

}  // namespace hdx
