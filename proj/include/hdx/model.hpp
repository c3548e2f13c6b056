#pragma once

#include <cstdint>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/steiner.hpp"

namespace hdx {

// One random d-cell family: the greedy trajectory plus (optionally) the cells
// added by the completion stage. The first greedy_len entries of `order` are
// the uniform greedy prefix; a completion that had to restart from scratch
// has greedy_len = 0.
struct SystemRun {
  std::uint64_t seed = 0;
  std::vector<CellRank> order;
  std::size_t greedy_len = 0;
  bool complete = false;
};

// X = complete (d-1)-skeleton on [0,n) union the blocks of k independent
// systems, each seeded from the master seed by index.
struct ModelSample {
  int n = 0, d = 0, k = 0;
  std::uint64_t master_seed = 0;
  std::vector<SystemRun> systems;
  Complex complex;
};

struct ModelOptions {
  StopRule stop = StopRule::maximal();
  bool completion = false;
  bool require_complete = false;
  CompletionBudget completion_budget{};
  GreedyOptions greedy{};
};

ModelSample sample_model(int n, int d, int k, std::uint64_t seed,
                         const ModelOptions& opt = {});

// Degree of a (d-1)-cell counted with multiplicity across the k systems; this
// equals k for every cell exactly when every system is complete.
int facet_multidegree(const ModelSample& s, const Cell& sigma);

}  // namespace hdx
