#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "hdx/packing.hpp"
#include "hdx/rng.hpp"

using namespace hdx;

namespace {

std::set<CellRank> boundary_ranks(const Cell& tau) {
  std::set<CellRank> out;
  for (const Cell& f : boundary(tau)) out.insert(f.rank());
  return out;
}

void check_packing_invariants(const PackingState& st) {
  std::set<CellRank> covered;
  for (CellRank r : st.chosen) {
    Cell tau = Cell::unrank(r, st.d + 1);
    for (CellRank f : boundary_ranks(tau)) {
      CHECK(covered.count(f) == 0);  // pairwise boundary-disjoint
      covered.insert(f);
    }
  }
  CHECK(covered.size() == st.chosen.size() * static_cast<std::size_t>(st.d + 1));
  CHECK(st.uncovered == binom(st.n, st.d) - covered.size());
  for (CellRank f = 0; f < binom(st.n, st.d); ++f)
    CHECK(st.covered_test(f) == (covered.count(f) > 0));
}

}  // namespace

TEST_CASE("is_legal") {
  PackingState st = greedy_packing(8, 2, 1, StopRule::step_count(0));
  // manually cover the boundary of {1,2,3}
  st.chosen.push_back(Cell{1, 2, 3}.rank());
  for (CellRank f : boundary_ranks(Cell{1, 2, 3}))
    st.covered[f >> 3] |= static_cast<std::uint8_t>(1u << (f & 7));

  CHECK_FALSE(is_legal(Cell{1, 2, 4}, st));  // shares facet {1,2}
  CHECK(is_legal(Cell{4, 5, 6}, st));
  CHECK(is_legal(Cell{1, 4, 5}, st));  // shares only a vertex
  CHECK_THROWS_AS(is_legal(Cell{1, 2}, st), std::invalid_argument);
}

TEST_CASE("greedy_packing basics") {
  SUBCASE("triples on 7 points") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      PackingState st = greedy_packing(7, 2, seed);
      CHECK(st.chosen.size() >= 1);
      CHECK(st.chosen.size() <= 7);
      CHECK(st.maximal_reached);
      check_packing_invariants(st);
    }
  }
  SUBCASE("d = 1 gives a maximal matching") {
    PackingState st = greedy_packing(9, 1, 5);
    check_packing_invariants(st);
    // maximal: at most one uncovered vertex
    CHECK(st.uncovered <= 1);
  }
  SUBCASE("step_count(0) is empty") {
    PackingState st = greedy_packing(9, 2, 5, StopRule::step_count(0));
    CHECK(st.chosen.empty());
    CHECK(st.uncovered == binom(9, 2));
  }
  SUBCASE("uncovered_threshold stops early") {
    std::uint64_t m = binom(12, 2) / 2;
    PackingState st = greedy_packing(12, 2, 7, StopRule::uncovered_threshold(m));
    CHECK(st.uncovered <= m);
    check_packing_invariants(st);
  }
  SUBCASE("determinism") {
    PackingState a = greedy_packing(12, 2, 99);
    PackingState b = greedy_packing(12, 2, 99);
    CHECK(a.chosen == b.chosen);
    PackingState c = greedy_packing(12, 2, 100);
    CHECK(a.chosen != c.chosen);
  }
}

TEST_CASE("rejection sampling mode matches the invariants") {
  GreedyOptions opt;
  opt.max_enumerated_cells = 1;  // force the rejection path
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PackingState st = greedy_packing(10, 2, seed, StopRule::maximal(), opt);
    check_packing_invariants(st);
    CHECK(st.maximal_reached);
    // maximal: no legal cell remains
    for (CellRank r = 0; r < binom(10, 3); ++r)
      CHECK_FALSE(is_legal(Cell::unrank(r, 3), st));
  }
}

TEST_CASE("first-step uniformity smoke test") {
  // d=1, n=4: six edges, each should come up ~ 1/6 of the time
  std::map<CellRank, int> freq;
  const int runs = 10000;
  for (int i = 0; i < runs; ++i) {
    PackingState st = greedy_packing(4, 1, derive_seed(424242, static_cast<std::uint64_t>(i)),
                                     StopRule::step_count(1));
    REQUIRE(st.chosen.size() == 1);
    ++freq[st.chosen[0]];
  }
  CHECK(freq.size() == 6);
  for (const auto& [rank, count] : freq)
    CHECK(std::abs(count / static_cast<double>(runs) - 1.0 / 6.0) <= 0.02);
}

TEST_CASE("rejection mode is uniform too") {
  GreedyOptions opt;
  opt.max_enumerated_cells = 1;
  std::map<CellRank, int> freq;
  const int runs = 6000;
  for (int i = 0; i < runs; ++i) {
    PackingState st = greedy_packing(4, 1, derive_seed(89, static_cast<std::uint64_t>(i)),
                                     StopRule::step_count(1), opt);
    ++freq[st.chosen[0]];
  }
  for (const auto& [rank, count] : freq)
    CHECK(std::abs(count / static_cast<double>(runs) - 1.0 / 6.0) <= 0.025);
}

TEST_CASE("instrument") {
  SUBCASE("rho too large") {
    PackingState st = greedy_packing(8, 2, 3);
    CHECK_THROWS_AS(instrument(st, Cell{0}), std::invalid_argument);
  }
  SUBCASE("first step has an empty forbidden set") {
    PackingState st = greedy_packing(10, 3, 3, StopRule::step_count(3));
    auto rows = instrument(st, Cell{0});
    REQUIRE(!rows.empty());
    CHECK(rows[0].forbidden == 0);
    CHECK(rows[0].bound == 0);
    CHECK(rows[0].bound_ok);
  }
  SUBCASE("claim bound holds at every step, forbidden counted exactly") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      PackingState st = greedy_packing(9, 3, seed, StopRule::maximal());
      for (const Cell& rho : {Cell{}, Cell{2}}) {
        auto rows = instrument(st, rho);
        CHECK(rows.size() == st.chosen.size());
        for (const auto& row : rows) CHECK(row.bound_ok);
      }
    }
  }
  SUBCASE("forbidden matches non-legality of tau union rho") {
    PackingState st = greedy_packing(9, 3, 11, StopRule::maximal());
    Cell rho{1};
    auto rows = instrument(st, rho);
    // replay to each prefix and compare against is_legal
    for (std::size_t t = 1; t <= st.chosen.size(); ++t) {
      PackingState prefix = greedy_packing(9, 3, 11, StopRule::step_count(t - 1));
      std::uint64_t forb = 0;
      std::vector<Vertex> rest;
      for (Vertex v = 0; v < 9; ++v)
        if (!rho.contains(v)) rest.push_back(v);
      std::vector<int> idx;
      first_combination(static_cast<int>(rest.size()), 3, idx);
      do {
        std::vector<Vertex> vs;
        for (int i : idx) vs.push_back(rest[static_cast<std::size_t>(i)]);
        Cell tau(vs);
        if (!is_legal(cell_union(tau, rho), prefix)) ++forb;
      } while (next_combination(static_cast<int>(rest.size()), idx));
      CHECK(rows[t - 1].forbidden == forb);
    }
  }
  SUBCASE("a chosen cell containing rho forbids at most (d+1) n cells") {
    // run until some chosen cell contains rho, then check the increment
    Cell rho{0};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      PackingState st = greedy_packing(10, 3, seed, StopRule::maximal());
      auto rows = instrument(st, rho);
      for (std::size_t t = 1; t < rows.size(); ++t) {
        std::uint64_t gained = rows[t].forbidden - rows[t - 1].forbidden;
        Cell tau = Cell::unrank(st.chosen[t - 1], 4);
        int is = tau.intersection_size(rho);
        if (is == 1) CHECK(gained <= 4u * 10u);
        if (is == 0) {
          // only cells meeting rho in |rho|-1 = 0 vertices can contribute,
          // at most d+1 of them
          CHECK(gained <= 4u + 4u * 10u);
        }
      }
    }
  }
}

TEST_CASE("claim33_stats") {
  CHECK_THROWS_AS(claim33_stats(5, 20, 2, 0, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(claim33_stats(5, 20, 2, 0, 0.0, 1), std::invalid_argument);

  SUBCASE("d=2, rho empty: the first bound is trivially satisfied") {
    Claim33Row row = claim33_stats(20, 20, 2, 0, 0.005, 7);
    CHECK(row.freq_first == 1.0);
    CHECK(row.freq_second == 1.0);
    CHECK(row.freq_both == 1.0);
    CHECK(row.window_lo >= 1);
  }
  SUBCASE("frequencies live in [0,1]") {
    Claim33Row row = claim33_stats(10, 16, 3, 1, 0.0004, 3);
    CHECK(row.freq_first >= 0.0);
    CHECK(row.freq_first <= 1.0);
    CHECK(row.freq_second >= 0.0);
    CHECK(row.freq_second <= 1.0);
    CHECK(row.freq_both <= std::min(row.freq_first, row.freq_second));
  }
}
