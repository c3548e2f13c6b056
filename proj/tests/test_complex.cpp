#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hdx/complex.hpp"
#include "hdx/design.hpp"
#include "hdx/rng.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace hdx;

TEST_CASE("boundary of small cells") {
  Cell t{1, 2, 3};
  auto bd = boundary(t);
  REQUIRE(bd.size() == 3);
  std::set<Cell> got(bd.begin(), bd.end());
  CHECK(got == std::set<Cell>{Cell{1, 2}, Cell{1, 3}, Cell{2, 3}});

  auto bd0 = boundary(Cell{5});
  REQUIRE(bd0.size() == 1);
  CHECK(bd0[0].dim() == -1);

  auto bd3 = boundary(Cell{0, 1, 2, 3});
  CHECK(bd3.size() == 4);
  CHECK(std::set<Cell>(bd3.begin(), bd3.end()).size() == 4);

  CHECK_THROWS_WITH_AS(boundary(Cell{}), "no boundary of empty cell", std::invalid_argument);
}

TEST_CASE("cells reject duplicates and sort") {
  CHECK_THROWS_AS(Cell({3, 3}), std::invalid_argument);
  Cell c({4, 1, 2});
  CHECK(c.vertices() == std::vector<Vertex>{1, 2, 4});
}

TEST_CASE("colex rank round-trip and order") {
  for (int card = 1; card <= 4; ++card) {
    std::uint64_t total = binom(9, card);
    for (CellRank r = 0; r < total; ++r) {
      Cell c = Cell::unrank(r, card);
      CHECK(c.rank() == r);
    }
  }
}

TEST_CASE("complete complex counts") {
  Complex k4 = complete_complex(4, 1);
  CHECK(k4.size(1) == 6);
  Complex k5 = complete_complex(5, 2);
  CHECK(k5.size(2) == 10);
  CHECK(k5.size(1) == 10);
  CHECK(k5.size(0) == 5);
  CHECK(k5.size(-1) == 1);
  CHECK(complete_complex(7, 2).size(2) == 35);
  CHECK(k5.complete_skeleton_dim() == 2);
  CHECK_THROWS_AS(complete_complex(3, 3), std::invalid_argument);
}

TEST_CASE("degree") {
  Complex k4 = complete_complex(4, 1);
  CHECK(k4.degree(Cell{0}) == 3);

  Complex fano = fixtures::fano_complex();
  for (std::size_t i = 0; i < fano.size(1); ++i)
    CHECK(fano.degree(fano.cell_at(1, i)) == 1);

  // skeleton alone: (d-1)-cells have degree 0
  ComplexBuilder b(6, 2);
  b.add_complete_skeleton(1);
  Complex skel = std::move(b).finalize();
  CHECK(skel.degree(Cell{0, 1}) == 0);

  CHECK_THROWS_WITH_AS(skel.degree(Cell{0, 1, 2}), "cell not in complex",
                       std::invalid_argument);
}

TEST_CASE("degree by scan agrees with the incidence index") {
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    auto [n, d, X] = corpus::random_complex_any(rng, 9);
    for (int j = -1; j < d; ++j) {
      for (std::size_t i = 0; i < X.size(j); ++i) {
        Cell sigma = X.cell_at(j, i);
        int scan = 0;
        for (std::size_t t = 0; t < X.size(j + 1); ++t)
          if (X.cell_at(j + 1, t).contains_all(sigma)) ++scan;
        CHECK(X.degree(sigma) == scan);
      }
    }
  }
}

TEST_CASE("closure holds by construction") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto [n, d, X] = corpus::random_complex_any(rng, 10);
    for (int j = 0; j <= d; ++j) {
      for (std::size_t i = 0; i < X.size(j); ++i) {
        for (const Cell& f : boundary(X.cell_at(j, i))) CHECK(X.contains(f));
      }
    }
    CHECK(X.contains(Cell{}));
  }
}

TEST_CASE("links") {
  SUBCASE("complete complex links stay complete") {
    Complex X = complete_complex(7, 3);
    LinkResult lr = X.link(Cell{1, 4});
    CHECK(lr.complex.vertex_count() == 5);
    CHECK(lr.complex.dimension() == 1);
    CHECK(lr.complex.complete_skeleton_dim() == 1);
    CHECK(lr.to_host == std::vector<Vertex>{0, 2, 3, 5, 6});
  }
  SUBCASE("fano vertex links are perfect matchings") {
    Complex X = fixtures::fano_complex();
    for (Vertex v = 0; v < 7; ++v) {
      LinkResult lr = X.link(Cell{v});
      CHECK(lr.complex.vertex_count() == 6);
      CHECK(lr.complex.size(1) == 3);  // 3 disjoint edges
      for (Vertex u = 0; u < 6; ++u) CHECK(lr.complex.degree(Cell{u}) == 1);
    }
  }
  SUBCASE("empty rho gives the complex itself") {
    Complex X = fixtures::fano_complex();
    LinkResult lr = X.link(Cell{});
    CHECK(lr.complex == X);
  }
  SUBCASE("missing cell throws") {
    Complex X = complete_complex(4, 1);
    CHECK_THROWS_AS(X.link(Cell{0, 1, 2}), std::invalid_argument);
  }
}

TEST_CASE("link of link equals link of union") {
  Rng rng(99);
  int done = 0;
  for (int trial = 0; trial < 60 && done < 25; ++trial) {
    auto [n, d, X] = corpus::random_complex_any(rng, 9);
    if (d < 2) continue;
    // pick a 1-cell, then a vertex of its link
    if (X.size(1) == 0) continue;
    Cell e = X.cell_at(1, rng.below(X.size(1)));
    LinkResult l1 = X.link(Cell{e.vertices()[0]});
    Vertex w_host = e.vertices()[1];
    Vertex w_link = -1;
    for (std::size_t i = 0; i < l1.to_host.size(); ++i)
      if (l1.to_host[i] == w_host) w_link = static_cast<Vertex>(i);
    REQUIRE(w_link >= 0);
    LinkResult l2 = l1.complex.link(Cell{w_link});
    LinkResult both = X.link(e);
    CHECK(l2.complex == both.complex);
    // relabeling maps compose
    for (std::size_t i = 0; i < l2.to_host.size(); ++i)
      CHECK(l1.to_host[static_cast<std::size_t>(l2.to_host[i])] == both.to_host[i]);
    ++done;
  }
  CHECK(done >= 10);
}

TEST_CASE("is_design") {
  CHECK(is_design(fixtures::fano_design()).ok);

  // a 6-regular circulant graph is an (n,2,1,6)-design
  Design circ;
  circ.n = 10;
  circ.q = 2;
  circ.r = 1;
  circ.lambda = 6;
  for (int v = 0; v < 10; ++v)
    for (int s = 1; s <= 3; ++s)
      circ.blocks.push_back(Cell{v, (v + s) % 10});
  // blocks appear once per unordered pair
  std::sort(circ.blocks.begin(), circ.blocks.end(),
            [](const Cell& a, const Cell& b) { return a.rank() < b.rank(); });
  circ.blocks.erase(std::unique(circ.blocks.begin(), circ.blocks.end()), circ.blocks.end());
  CHECK(is_design(circ).ok);

  Design broken = fixtures::fano_design();
  broken.blocks.pop_back();
  DesignCheck chk = is_design(broken);
  CHECK_FALSE(chk.ok);
  CHECK(chk.actual == 0);
  CHECK(Cell{2, 4}.contains_all(chk.witness) == (chk.witness == Cell{2, 4}));
}

TEST_CASE("is_steiner") {
  CHECK(is_steiner(fixtures::fano_design(), 7, 2).ok);

  Design sts9{9, 3, 2, 1, fixtures::sts9_blocks()};
  CHECK(is_steiner(sts9, 9, 2).ok);

  Design partial{7, 3, 2, 1, {Cell{0, 1, 2}}};
  CHECK_FALSE(is_steiner(partial, 7, 2).ok);

  Design mismatch{7, 3, 2, 2, fixtures::fano_blocks()};
  CHECK_THROWS_AS(is_steiner(mismatch, 7, 2), std::invalid_argument);
}

TEST_CASE("vertex relabeling preserves cell sets") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto [n, d, X] = corpus::random_complex_any(rng, 8);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    rng.shuffle(perm);
    ComplexBuilder b(n, d);
    for (int j = 0; j <= d; ++j) {
      for (std::size_t i = 0; i < X.size(j); ++i) {
        Cell cur = X.cell_at(j, i);
        std::vector<Vertex> vs;
        for (Vertex v : cur.vertices()) vs.push_back(perm[static_cast<std::size_t>(v)]);
        b.add_cell(Cell(vs));
      }
    }
    Complex Y = std::move(b).finalize();
    for (int j = -1; j <= d; ++j) CHECK(X.size(j) == Y.size(j));
  }
}
