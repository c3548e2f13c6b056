#include "hdx/model.hpp"

#include <stdexcept>

#include "hdx/errors.hpp"
#include "hdx/rng.hpp"

namespace hdx {

ModelSample sample_model(int n, int d, int k, std::uint64_t seed, const ModelOptions& opt) {
  if (k < 1) throw std::invalid_argument("sample_model: need k >= 1");
  if (!(n > d && d >= 1)) throw std::invalid_argument("sample_model: need n > d >= 1");
  if (opt.require_complete && !steiner_divisibility(n, d))
    throw std::invalid_argument("sample_model: no (n,d)-Steiner system, divisibility fails");

  ModelSample out;
  out.n = n;
  out.d = d;
  out.k = k;
  out.master_seed = seed;
  out.systems.reserve(static_cast<std::size_t>(k));

  for (int i = 0; i < k; ++i) {
    std::uint64_t sseed = derive_seed(seed, static_cast<std::uint64_t>(i));
    PackingState st = greedy_packing(n, d, sseed, opt.stop, opt.greedy);
    SystemRun run;
    run.seed = sseed;
    run.order = st.chosen;
    run.greedy_len = st.chosen.size();
    run.complete = st.uncovered == 0;

    if (opt.completion && !run.complete) {
      CompletionResult cr =
          complete_to_steiner(st, derive_seed(sseed, 0x535445u), opt.completion_budget);
      run.order = cr.blocks;
      run.greedy_len = cr.prefix_kept ? st.chosen.size() : 0;
      run.complete = cr.complete;
      if (opt.require_complete && !cr.complete)
        throw BudgetError("sample_model: completion budget exhausted");
    }
    out.systems.push_back(std::move(run));
  }

  ComplexBuilder b(n, d);
  b.add_complete_skeleton(d - 1);
  for (const SystemRun& run : out.systems)
    for (CellRank r : run.order) b.add_cell(Cell::unrank(r, d + 1));
  out.complex = std::move(b).finalize();
  return out;
}

int facet_multidegree(const ModelSample& s, const Cell& sigma) {
  if (sigma.dim() != s.d - 1)
    throw std::invalid_argument("facet_multidegree: not a (d-1)-cell");
  int count = 0;
  for (const SystemRun& run : s.systems) {
    for (CellRank r : run.order) {
      if (Cell::unrank(r, s.d + 1).contains_all(sigma)) {
        ++count;
        break;  // within one packing a face lies in at most one block
      }
    }
  }
  return count;
}

}  // namespace hdx
