#include "hdx/packing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hdx/rng.hpp"

namespace hdx {

namespace {

void covered_set(PackingState& st, CellRank r) {
  st.covered[r >> 3] |= static_cast<std::uint8_t>(1u << (r & 7));
}

// colex rank of sigma with x inserted (x not in sigma)
CellRank rank_with(const std::vector<Vertex>& sigma, Vertex x) {
  CellRank r = 0;
  int i = 0;
  for (; i < static_cast<int>(sigma.size()) && sigma[static_cast<std::size_t>(i)] < x; ++i)
    r += binom(sigma[static_cast<std::size_t>(i)], i + 1);
  r += binom(x, i + 1);
  for (; i < static_cast<int>(sigma.size()); ++i)
    r += binom(sigma[static_cast<std::size_t>(i)], i + 2);
  return r;
}

struct FacetScratch {
  std::vector<Vertex> buf;
  // facet ranks of the (d+1)-set `tv`, one per deleted vertex
  void facet_ranks(const std::vector<Vertex>& tv, std::vector<CellRank>& out) {
    out.clear();
    for (std::size_t i = 0; i < tv.size(); ++i) {
      buf.clear();
      for (std::size_t j = 0; j < tv.size(); ++j)
        if (j != i) buf.push_back(tv[j]);
      out.push_back(colex_rank(buf));
    }
  }
};

bool legal_by_ranks(const PackingState& st, const std::vector<CellRank>& facets) {
  for (CellRank f : facets)
    if (st.covered_test(f)) return false;
  return true;
}

}  // namespace

bool is_legal(const Cell& tau, const PackingState& st) {
  if (tau.dim() != st.d) throw std::invalid_argument("is_legal: not a d-cell");
  if (tau.vertices().front() < 0 || tau.vertices().back() >= st.n)
    throw std::invalid_argument("is_legal: vertex out of range");
  for (int i = 0; i < tau.card(); ++i)
    if (st.covered_test(tau.facet_without(i).rank())) return false;
  return true;
}

PackingState greedy_packing(int n, int d, std::uint64_t seed, StopRule stop,
                            const GreedyOptions& opt) {
  if (!(n > d && d >= 1)) throw std::invalid_argument("greedy_packing: need n > d >= 1");
  const std::uint64_t ncells = binom(n, d + 1);
  const std::uint64_t nfaces = binom(n, d);

  PackingState st;
  st.n = n;
  st.d = d;
  st.seed = seed;
  st.covered.assign((nfaces + 7) / 8, 0);
  st.uncovered = nfaces;

  Rng rng(seed);
  FacetScratch scratch;
  std::vector<CellRank> facets;
  std::vector<Vertex> tv;

  const bool explicit_mode = ncells <= opt.max_enumerated_cells;
  std::vector<std::uint32_t> legal, pos;
  if (explicit_mode) {
    legal.resize(ncells);
    pos.resize(ncells);
    for (std::uint64_t r = 0; r < ncells; ++r) {
      legal[r] = static_cast<std::uint32_t>(r);
      pos[r] = static_cast<std::uint32_t>(r);
    }
  }
  constexpr std::uint32_t kGone = ~std::uint32_t{0};
  bool scan_mode = false;

  auto stop_now = [&]() {
    switch (stop.kind) {
      case StopRule::Kind::step_count:
        return st.chosen.size() >= stop.value;
      case StopRule::Kind::uncovered_threshold:
        return st.uncovered <= stop.value;
      case StopRule::Kind::maximal:
        return false;
    }
    return false;
  };

  while (!stop_now()) {
    CellRank tau = 0;
    bool have = false;

    if (explicit_mode) {
      if (!legal.empty()) {
        tau = legal[rng.below(legal.size())];
        have = true;
      }
    } else if (!scan_mode) {
      std::uint64_t rejections = 0;
      while (rejections <= opt.rejection_cutoff) {
        CellRank cand = rng.below(ncells);
        colex_unrank(cand, d + 1, tv);
        scratch.facet_ranks(tv, facets);
        if (legal_by_ranks(st, facets)) {
          tau = cand;
          have = true;
          break;
        }
        ++rejections;
      }
      if (!have) scan_mode = true;
    }
    if (!have && (scan_mode || !explicit_mode)) {
      // exhaustive pass: count, then draw uniformly
      std::uint64_t count = 0;
      for (CellRank r = 0; r < ncells; ++r) {
        colex_unrank(r, d + 1, tv);
        scratch.facet_ranks(tv, facets);
        if (legal_by_ranks(st, facets)) ++count;
      }
      if (count > 0) {
        std::uint64_t pick = rng.below(count);
        for (CellRank r = 0; r < ncells; ++r) {
          colex_unrank(r, d + 1, tv);
          scratch.facet_ranks(tv, facets);
          if (legal_by_ranks(st, facets) && pick-- == 0) {
            tau = r;
            have = true;
            break;
          }
        }
      }
    }
    if (!have) {
      st.maximal_reached = true;
      break;
    }

    // commit
    st.chosen.push_back(tau);
    colex_unrank(tau, d + 1, tv);
    scratch.facet_ranks(tv, facets);
    std::vector<Vertex> sigma;
    for (std::size_t i = 0; i < tv.size(); ++i) {
      covered_set(st, facets[i]);
      --st.uncovered;
      if (explicit_mode) {
        // every d-cell through this facet is now illegal
        sigma.clear();
        for (std::size_t j = 0; j < tv.size(); ++j)
          if (j != i) sigma.push_back(tv[j]);
        for (Vertex x = 0; x < n; ++x) {
          if (std::binary_search(sigma.begin(), sigma.end(), x)) continue;
          CellRank r = rank_with(sigma, x);
          std::uint32_t p = pos[r];
          if (p == kGone) continue;
          std::uint32_t back = legal.back();
          legal[p] = back;
          pos[back] = p;
          legal.pop_back();
          pos[r] = kGone;
        }
      }
    }
  }
  return st;
}

std::vector<InstrumentRow> instrument(const PackingState& st, const Cell& rho) {
  const int n = st.n, d = st.d;
  const int rc = rho.card();
  if (rc > d - 2) throw std::invalid_argument("instrument: rho too large for dimension");
  if (!rho.empty() && (rho.vertices().front() < 0 || rho.vertices().back() >= n))
    throw std::invalid_argument("instrument: rho vertex out of range");

  std::vector<Vertex> remaining;
  for (Vertex v = 0; v < n; ++v)
    if (!rho.contains(v)) remaining.push_back(v);
  const int card = d - rc + 1;  // cells of K_rho at the top of the link

  PackingState replay;
  replay.n = n;
  replay.d = d;
  replay.covered.assign(st.covered.size(), 0);
  replay.uncovered = binom(n, d);

  std::vector<std::uint64_t> counters(static_cast<std::size_t>(rc) + 1, 0);
  std::vector<InstrumentRow> rows;
  rows.reserve(st.chosen.size());

  std::vector<int> idx;
  std::vector<Vertex> tau_link, xi;
  FacetScratch scratch;
  std::vector<CellRank> facets;

  for (std::uint64_t t = 1; t <= st.chosen.size(); ++t) {
    // Forbidden(t) against the first t-1 chosen cells
    std::uint64_t forb = 0;
    if (first_combination(static_cast<int>(remaining.size()), card, idx)) {
      do {
        tau_link.clear();
        for (int i : idx) tau_link.push_back(remaining[static_cast<std::size_t>(i)]);
        xi.resize(0);
        std::merge(tau_link.begin(), tau_link.end(), rho.vertices().begin(),
                   rho.vertices().end(), std::back_inserter(xi));
        scratch.facet_ranks(xi, facets);
        if (!legal_by_ranks(replay, facets)) ++forb;
      } while (next_combination(static_cast<int>(remaining.size()), idx));
    }

    InstrumentRow row;
    row.t = t;
    row.forbidden = forb;
    row.counters = counters;
    std::uint64_t n_eq = counters[static_cast<std::size_t>(rc)];
    std::uint64_t n_m1 = rc >= 1 ? counters[static_cast<std::size_t>(rc - 1)] : 0;
    row.bound = static_cast<std::uint64_t>(d + 1) * static_cast<std::uint64_t>(n) * n_eq +
                static_cast<std::uint64_t>(d + 1) * n_m1;
    row.bound_ok = forb <= row.bound;
    rows.push_back(std::move(row));

    // commit step t into the replay
    Cell tau = Cell::unrank(st.chosen[t - 1], d + 1);
    ++counters[static_cast<std::size_t>(tau.intersection_size(rho))];
    scratch.facet_ranks(tau.vertices(), facets);
    for (CellRank f : facets) covered_set(replay, f);
  }
  return rows;
}

Claim33Row claim33_stats(int runs, int n, int d, int rho_card, double alpha,
                         std::uint64_t seed) {
  if (runs < 1 || n <= d || d < 1 || rho_card < 0 || rho_card > d)
    throw std::invalid_argument("claim33_stats: bad parameters");
  double alpha_max = 1.0 / (2.0 * std::pow(static_cast<double>(d + 1), d + 2));
  if (!(alpha > 0.0 && alpha < alpha_max))
    throw std::invalid_argument("claim33_stats: alpha out of range");

  const double nd = std::pow(static_cast<double>(n), d);
  std::uint64_t t_hi = static_cast<std::uint64_t>(std::floor(alpha * nd));
  std::uint64_t t_lo = static_cast<std::uint64_t>(std::ceil(alpha * nd / 2.0));
  if (t_lo < 1) t_lo = 1;

  std::vector<Vertex> rv(static_cast<std::size_t>(rho_card));
  for (int i = 0; i < rho_card; ++i) rv[static_cast<std::size_t>(i)] = i;
  Cell rho(rv);

  // integer form of the two bounds:
  //   N_{|rho|}(t)   * n^{|rho|}   <= 4 (d+1)^{d+1} t
  //   N_{|rho|-1}(t) * n^{|rho|-1} <= 4 (d+1)^{d+2} t
  std::int64_t pw = 1;
  for (int i = 0; i < d + 1; ++i) pw *= (d + 1);
  const std::int64_t c1 = 4 * pw, c2 = 4 * pw * (d + 1);
  std::int64_t n_rc = 1, n_rc1 = 1;
  for (int i = 0; i < rho_card; ++i) n_rc *= n;
  for (int i = 0; i + 1 < rho_card; ++i) n_rc1 *= n;

  int ok1 = 0, ok2 = 0, okb = 0;
  for (int run = 0; run < runs; ++run) {
    PackingState st =
        greedy_packing(n, d, derive_seed(seed, static_cast<std::uint64_t>(run)),
                       StopRule::step_count(t_hi));
    std::uint64_t n_eq = 0, n_m1 = 0;
    bool b1 = true, b2 = true;
    for (std::uint64_t t = 1; t <= st.chosen.size(); ++t) {
      Cell tau = Cell::unrank(st.chosen[t - 1], d + 1);
      int is = tau.intersection_size(rho);
      if (is == rho_card) ++n_eq;
      if (is == rho_card - 1) ++n_m1;
      if (t < t_lo || t > t_hi) continue;
      if (static_cast<std::int64_t>(n_eq) * n_rc > c1 * static_cast<std::int64_t>(t))
        b1 = false;
      if (rho_card >= 1 &&
          static_cast<std::int64_t>(n_m1) * n_rc1 > c2 * static_cast<std::int64_t>(t))
        b2 = false;
    }
    ok1 += b1;
    ok2 += b2;
    okb += (b1 && b2);
  }

  Claim33Row row;
  row.n = n;
  row.d = d;
  row.rho_card = rho_card;
  row.runs = runs;
  row.alpha = alpha;
  row.window_lo = t_lo;
  row.window_hi = t_hi;
  row.freq_first = static_cast<double>(ok1) / runs;
  row.freq_second = static_cast<double>(ok2) / runs;
  row.freq_both = static_cast<double>(okb) / runs;
  return row;
}

}  // namespace hdx
