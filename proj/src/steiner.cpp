#include "hdx/steiner.hpp"

#include <algorithm>
#include <stdexcept>

#include "hdx/rng.hpp"

namespace hdx {

bool steiner_divisibility(int n, int d) {
  if (d < 1 || n <= d) return false;
  for (int i = 0; i <= d; ++i) {
    if (binom(n - i, d - i) % static_cast<std::uint64_t>(d + 1 - i) != 0) return false;
  }
  return true;
}

namespace {

// Backtracking state over the (d-1)-cells ("faces") of [0,n).
struct Search {
  int n, d;
  std::uint64_t nfaces;
  std::vector<std::uint8_t> covered;
  std::uint64_t uncovered;
  std::vector<CellRank> placed;  // construction order, including the prefix
  Rng& rng;
  std::uint64_t nodes = 0;
  std::uint64_t node_cap;
  bool aborted = false;

  std::vector<CellRank> best_blocks;

  Search(int n_, int d_, Rng& rng_, std::uint64_t cap)
      : n(n_), d(d_), nfaces(binom(n_, d_)), rng(rng_), node_cap(cap) {
    covered.assign((nfaces + 7) / 8, 0);
    uncovered = nfaces;
  }

  bool covered_test(CellRank r) const { return (covered[r >> 3] >> (r & 7)) & 1u; }
  void cover(CellRank r, bool on) {
    if (on)
      covered[r >> 3] |= static_cast<std::uint8_t>(1u << (r & 7));
    else
      covered[r >> 3] &= static_cast<std::uint8_t>(~(1u << (r & 7)));
  }

  // Facet ranks of the (d+1)-set sigma + {x}.
  void block_facets(const std::vector<Vertex>& sigma, Vertex x,
                    std::vector<CellRank>& out) const {
    std::vector<Vertex> merged(sigma);
    merged.insert(std::upper_bound(merged.begin(), merged.end(), x), x);
    out.clear();
    std::vector<Vertex> buf;
    for (std::size_t i = 0; i < merged.size(); ++i) {
      buf.clear();
      for (std::size_t j = 0; j < merged.size(); ++j)
        if (j != i) buf.push_back(merged[j]);
      out.push_back(colex_rank(buf));
    }
  }

  bool place(const std::vector<Vertex>& sigma, Vertex x, std::vector<CellRank>& facets) {
    block_facets(sigma, x, facets);
    for (CellRank f : facets)
      if (covered_test(f)) return false;
    for (CellRank f : facets) cover(f, true);
    uncovered -= facets.size();
    std::vector<Vertex> merged(sigma);
    merged.insert(std::upper_bound(merged.begin(), merged.end(), x), x);
    placed.push_back(colex_rank(merged));
    return true;
  }

  void unplace(const std::vector<CellRank>& facets) {
    for (CellRank f : facets) cover(f, false);
    uncovered += facets.size();
    placed.pop_back();
  }

  // Uncovered face with the fewest legal completions (fail-first).
  bool pick_face(std::vector<Vertex>& sigma_out, std::vector<Vertex>& cands_out) {
    std::size_t best = SIZE_MAX;
    std::vector<Vertex> sigma, cands;
    std::vector<CellRank> facets;
    for (CellRank r = 0; r < nfaces; ++r) {
      if (covered_test(r)) continue;
      colex_unrank(r, d, sigma);
      cands.clear();
      for (Vertex x = 0; x < n; ++x) {
        if (std::binary_search(sigma.begin(), sigma.end(), x)) continue;
        block_facets(sigma, x, facets);
        bool free = true;
        for (CellRank f : facets) {
          if (f != r && covered_test(f)) {
            free = false;
            break;
          }
        }
        if (free) cands.push_back(x);
      }
      if (cands.size() < best) {
        best = cands.size();
        sigma_out = sigma;
        cands_out = cands;
        if (best == 0) return true;  // immediate dead end
      }
    }
    return best != SIZE_MAX;
  }

  bool dfs() {
    if (uncovered == 0) return true;
    std::vector<Vertex> sigma, cands;
    if (!pick_face(sigma, cands)) return uncovered == 0;
    if (cands.empty()) {
      note_best();
      return false;
    }
    rng.shuffle(cands);
    std::vector<CellRank> facets;
    for (Vertex x : cands) {
      if (++nodes > node_cap) {
        note_best();
        aborted = true;
        return false;
      }
      place(sigma, x, facets);
      if (dfs()) return true;
      if (aborted) {
        unplace(facets);
        return false;
      }
      unplace(facets);
    }
    note_best();
    return false;
  }

  void note_best() {
    if (placed.size() > best_blocks.size()) best_blocks = placed;
  }
};

}  // namespace

CompletionResult complete_to_steiner(const PackingState& start, std::uint64_t seed,
                                     const CompletionBudget& budget) {
  const int n = start.n, d = start.d;
  Rng rng(seed);

  CompletionResult res;
  res.blocks = start.chosen;
  res.prefix_kept = true;
  bool best_from_prefix = true;

  std::vector<Vertex> tv;
  for (std::uint64_t attempt = 0; attempt <= budget.max_restarts; ++attempt) {
    const bool use_prefix = attempt == 0;
    Search s(n, d, rng, budget.max_nodes_per_attempt);
    if (use_prefix) {
      for (CellRank r : start.chosen) {
        colex_unrank(r, d + 1, tv);
        s.placed.push_back(r);
        std::vector<Vertex> buf;
        for (std::size_t i = 0; i < tv.size(); ++i) {
          buf.clear();
          for (std::size_t j = 0; j < tv.size(); ++j)
            if (j != i) buf.push_back(tv[j]);
          s.cover(colex_rank(buf), true);
          --s.uncovered;
        }
      }
    }
    bool done = s.dfs();
    res.nodes += s.nodes;
    if (done) {
      res.complete = true;
      res.blocks = std::move(s.placed);
      res.prefix_kept = use_prefix;
      return res;
    }
    if (s.best_blocks.size() > res.blocks.size()) {
      res.blocks = s.best_blocks;
      best_from_prefix = use_prefix;
    }
    ++res.restarts;
  }
  res.prefix_kept = best_from_prefix;
  return res;
}

}  // namespace hdx
