#pragma once

#include <cstdint>
#include <vector>

#include "hdx/packing.hpp"

namespace hdx {

// Necessary divisibility conditions for an (n,d)-Steiner system:
//   C(n-i, d-i) = 0 mod (d+1-i) for 0 <= i <= d.
// For d <= 3 these are also sufficient at every n this tool handles
// (matchings, triple systems, quadruple systems).
bool steiner_divisibility(int n, int d);

// Budgets are counted in deterministic units (search nodes, restarts), never
// wall time, so identical seeds rebuild identical systems.
struct CompletionBudget {
  std::uint64_t max_nodes_per_attempt = 200000;
  std::uint64_t max_restarts = 256;
};

struct CompletionResult {
  bool complete = false;
  std::vector<CellRank> blocks;  // in construction order
  bool prefix_kept = false;      // blocks start with the input trajectory
  std::uint64_t restarts = 0;
  std::uint64_t nodes = 0;
};

// Randomized backtracking completion of a packing to a full (n,d)-Steiner
// system. The first attempt extends the input packing in place; if that
// search dead-ends the construction restarts from scratch with fresh random
// branching. On budget exhaustion the best packing seen is returned.
CompletionResult complete_to_steiner(const PackingState& start, std::uint64_t seed,
                                     const CompletionBudget& budget = {});

}  // namespace hdx
