#pragma once

#include <cstdint>
#include <vector>

#include "hdx/cell.hpp"

namespace hdx {

// Stopping rule for the greedy packing stage.
struct StopRule {
  enum class Kind { maximal, uncovered_threshold, step_count };
  Kind kind = Kind::maximal;
  std::uint64_t value = 0;

  static StopRule maximal() { return {Kind::maximal, 0}; }
  static StopRule uncovered_threshold(std::uint64_t m) { return {Kind::uncovered_threshold, m}; }
  static StopRule step_count(std::uint64_t t) { return {Kind::step_count, t}; }
};

struct GreedyOptions {
  // Keep the legal set explicit while the number of d-cells fits; beyond that
  // fall back to rejection sampling, and to a full scan once acceptance drops.
  std::uint64_t max_enumerated_cells = std::uint64_t{1} << 24;
  std::uint64_t rejection_cutoff = 100;  // consecutive rejections ~ acceptance < 1%
};

// Trajectory of one greedy random packing run. Chosen d-cells are pairwise
// boundary-disjoint, so covered = union of their boundaries has size (d+1)*t.
struct PackingState {
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  std::vector<CellRank> chosen;        // in choice order
  std::vector<std::uint8_t> covered;   // bitset over (d-1)-cell ranks
  std::uint64_t uncovered = 0;         // count of uncovered (d-1)-cells
  bool maximal_reached = false;        // no legal cell was left

  bool covered_test(CellRank r) const { return (covered[r >> 3] >> (r & 7)) & 1u; }
};

// A d-cell is legal when its boundary avoids every covered (d-1)-cell.
bool is_legal(const Cell& tau, const PackingState& st);

// Uniformly random legal d-cell at every step, until the stop rule fires.
PackingState greedy_packing(int n, int d, std::uint64_t seed, StopRule stop = StopRule::maximal(),
                            const GreedyOptions& opt = {});

// Per-step instrumentation relative to a designated cell rho (|rho| <= d-2):
//   Forbidden(t) = cells tau of K_rho with boundary(tau union rho) meeting the
//                  boundary of some cell chosen before step t  (exact count)
//   N_j(t)       = chosen cells whose intersection with rho has size j
// and the deterministic bound
//   |Forbidden(t)| <= (d+1) n N_{|rho|}(t-1) + (d+1) N_{|rho|-1}(t-1).
struct InstrumentRow {
  std::uint64_t t = 0;
  std::uint64_t forbidden = 0;
  std::vector<std::uint64_t> counters;  // N_j(t-1) for j = 0..|rho|
  std::uint64_t bound = 0;
  bool bound_ok = false;
};
std::vector<InstrumentRow> instrument(const PackingState& st, const Cell& rho);

// Frequency with which the two linear-in-t counter bounds hold over the
// window alpha/2 * n^d <= t <= alpha * n^d, across seeded runs. rho is the
// set {0, .., rho_card-1}; by vertex exchangeability the choice is immaterial.
struct Claim33Row {
  int n = 0, d = 0, rho_card = 0, runs = 0;
  double alpha = 0.0;
  std::uint64_t window_lo = 0, window_hi = 0;
  double freq_first = 0.0;   // N_{|rho|} bound
  double freq_second = 0.0;  // N_{|rho|-1} bound
  double freq_both = 0.0;
};
Claim33Row claim33_stats(int runs, int n, int d, int rho_card, double alpha,
                         std::uint64_t seed);

}  // namespace hdx
