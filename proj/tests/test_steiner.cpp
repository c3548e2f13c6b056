#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hdx/io.hpp"
#include "hdx/model.hpp"
#include "hdx/rng.hpp"
#include "support/fixtures.hpp"

using namespace hdx;

namespace {
Design design_from_blocks(int n, int d, const std::vector<CellRank>& blocks) {
  Design D;
  D.n = n;
  D.q = d + 1;
  D.r = d;
  D.lambda = 1;
  for (CellRank r : blocks) D.blocks.push_back(Cell::unrank(r, d + 1));
  return D;
}
}  // namespace

TEST_CASE("steiner divisibility") {
  // triples: n = 1, 3 mod 6
  for (int n : {7, 9, 13, 15, 19, 21}) CHECK(steiner_divisibility(n, 2));
  for (int n : {8, 10, 11, 12, 14}) CHECK_FALSE(steiner_divisibility(n, 2));
  // matchings: even n
  CHECK(steiner_divisibility(8, 1));
  CHECK_FALSE(steiner_divisibility(9, 1));
  // quadruples: n = 2, 4 mod 6
  for (int n : {8, 10, 14, 16}) CHECK(steiner_divisibility(n, 3));
  for (int n : {9, 11, 12, 13}) CHECK_FALSE(steiner_divisibility(n, 3));
}

TEST_CASE("complete_to_steiner") {
  SUBCASE("n = 7 and n = 9 triples") {
    for (int n : {7, 9}) {
      for (std::uint64_t seed = 0; seed < 8; ++seed) {
        PackingState st = greedy_packing(n, 2, seed);
        CompletionResult cr = complete_to_steiner(st, derive_seed(seed, 1));
        REQUIRE(cr.complete);
        CHECK(is_steiner(design_from_blocks(n, 2, cr.blocks), n, 2).ok);
      }
    }
  }
  SUBCASE("extension keeps the prefix when it succeeds directly") {
    PackingState st = greedy_packing(7, 2, 0, StopRule::step_count(1));
    CompletionResult cr = complete_to_steiner(st, 5);
    REQUIRE(cr.complete);
    if (cr.prefix_kept) {
      REQUIRE(cr.blocks.size() >= st.chosen.size());
      for (std::size_t i = 0; i < st.chosen.size(); ++i)
        CHECK(cr.blocks[i] == st.chosen[i]);
    }
  }
  SUBCASE("budget exhaustion returns a legal partial packing") {
    PackingState st = greedy_packing(13, 2, 3);
    CompletionBudget tiny;
    tiny.max_nodes_per_attempt = 2;
    tiny.max_restarts = 1;
    CompletionResult cr = complete_to_steiner(st, 7, tiny);
    CHECK_FALSE(cr.complete);
    // still pairwise boundary-disjoint (degree <= 1)
    std::set<CellRank> covered;
    for (CellRank r : cr.blocks) {
      for (const Cell& f : boundary(Cell::unrank(r, 3))) {
        CHECK(covered.count(f.rank()) == 0);
        covered.insert(f.rank());
      }
    }
  }
  SUBCASE("quadruple system at n = 8") {
    PackingState st = greedy_packing(8, 3, 2);
    CompletionResult cr = complete_to_steiner(st, 11);
    REQUIRE(cr.complete);
    CHECK(cr.blocks.size() == 14);  // C(8,3)/4
    CHECK(is_steiner(design_from_blocks(8, 3, cr.blocks), 8, 3).ok);
  }
}

TEST_CASE("sample_model") {
  SUBCASE("single complete system on 7 points") {
    ModelOptions opt;
    opt.completion = true;
    opt.require_complete = true;
    ModelSample s = sample_model(7, 2, 1, 42, opt);
    REQUIRE(s.systems.size() == 1);
    CHECK(s.systems[0].complete);
    CHECK(s.complex.size(2) == 7);
    for (std::size_t i = 0; i < s.complex.size(1); ++i)
      CHECK(s.complex.degree(s.complex.cell_at(1, i)) == 1);
  }
  SUBCASE("inadmissible n with require_complete throws") {
    ModelOptions opt;
    opt.completion = true;
    opt.require_complete = true;
    CHECK_THROWS_AS(sample_model(8, 2, 1, 1, opt), std::invalid_argument);
  }
  SUBCASE("degree bounded by k; multidegree exactly k when complete") {
    ModelOptions opt;
    opt.completion = true;
    ModelSample s = sample_model(9, 2, 3, 5, opt);
    bool all_complete = true;
    for (const SystemRun& run : s.systems) all_complete &= run.complete;
    REQUIRE(all_complete);
    for (std::size_t i = 0; i < s.complex.size(1); ++i) {
      Cell e = s.complex.cell_at(1, i);
      CHECK(s.complex.degree(e) <= 3);
      CHECK(facet_multidegree(s, e) == 3);
    }
  }
  SUBCASE("per-system links of codimension-2 cells are perfect matchings") {
    ModelOptions opt;
    opt.completion = true;
    ModelSample s = sample_model(9, 2, 2, 8, opt);
    for (const SystemRun& run : s.systems) {
      REQUIRE(run.complete);
      // build the single-system complex and inspect a few vertex links
      ComplexBuilder b(9, 2);
      b.add_complete_skeleton(1);
      for (CellRank r : run.order) b.add_cell(Cell::unrank(r, 3));
      Complex X1 = std::move(b).finalize();
      for (Vertex v = 0; v < 3; ++v) {
        LinkResult lr = X1.link(Cell{v});
        CHECK(lr.complex.size(1) == 4);  // perfect matching on 8 vertices
        for (Vertex u = 0; u < 8; ++u) CHECK(lr.complex.degree(Cell{u}) == 1);
      }
    }
  }
  SUBCASE("partial systems without completion") {
    ModelSample s = sample_model(10, 2, 2, 3);
    for (const SystemRun& run : s.systems) {
      CHECK_FALSE(run.complete);  // n = 10 admits no Steiner triple system
      CHECK(run.greedy_len == run.order.size());
    }
    for (std::size_t i = 0; i < s.complex.size(1); ++i)
      CHECK(s.complex.degree(s.complex.cell_at(1, i)) <= 2);
  }
  SUBCASE("systems differ across indices and seeds") {
    ModelSample s = sample_model(13, 2, 2, 77);
    CHECK(s.systems[0].order != s.systems[1].order);
    ModelSample t = sample_model(13, 2, 2, 78);
    CHECK(s.systems[0].order != t.systems[0].order);
  }
  SUBCASE("bit-for-bit determinism") {
    ModelOptions opt;
    opt.completion = true;
    ModelSample a = sample_model(9, 2, 2, 123, opt);
    ModelSample b = sample_model(9, 2, 2, 123, opt);
    CHECK(complex_to_string(a.complex) == complex_to_string(b.complex));
    REQUIRE(a.systems.size() == b.systems.size());
    for (std::size_t i = 0; i < a.systems.size(); ++i) {
      CHECK(a.systems[i].order == b.systems[i].order);
      CHECK(a.systems[i].seed == b.systems[i].seed);
    }
  }
}
