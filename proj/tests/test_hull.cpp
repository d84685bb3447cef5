#include <algorithm>
#include <random>

#include "doctest.h"
#include "hyperhull/hull.hpp"
#include "hyperhull/oracle.hpp"

using namespace hyperhull;
using V = std::vector<LatticePoint>;

TEST_CASE("hull_params") {
  auto p = hull_params(1000);
  CHECK(p.n1 == 10);
  CHECK(p.n2 == 100);
  p = hull_params(100);
  CHECK(p.n1 == 4);
  CHECK(p.n2 == 25);
  p = hull_params(10);
  CHECK(p.n1 == 2);
  CHECK(p.n2 == 5);
}

TEST_CASE("candidate_points") {
  CHECK(candidate_points(4) == V{{1, 4}, {2, 2}, {4, 1}});
  CHECK(candidate_points(2) == V{{1, 2}, {2, 1}});
  const auto c = candidate_points(10);
  CHECK(std::find(c.begin(), c.end(), LatticePoint{3, 4}) != c.end());
  CHECK(std::find(c.begin(), c.end(), LatticePoint{4, 3}) != c.end());
}

TEST_CASE("chain_vertices examples") {
  CHECK(chain_vertices(1).vertices == V{{1, 1}});
  CHECK(chain_vertices(2).vertices == V{{1, 2}, {2, 1}});
  CHECK(chain_vertices(4).vertices == V{{1, 4}, {2, 2}, {4, 1}});
  CHECK(chain_vertices(10).vertices == V{{1, 10}, {2, 5}, {5, 2}, {10, 1}});
  CHECK(f0_h(1) == 1);
  CHECK(f0_h(4) == 3);
  CHECK(f0_h(10) == 4);
}

TEST_CASE("chain is symmetric and strictly convex") {
  for (Int n : {36LL, 1000LL, 99'991LL, 1'000'000LL, 123'456'789LL}) {
    const auto v = chain_vertices(n).vertices;
    REQUIRE(v.size() >= 2);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& m = v[v.size() - 1 - i];
      CHECK(v[i].x == m.y);
      CHECK(v[i].y == m.x);
    }
    for (std::size_t i = 0; i + 2 < v.size(); ++i) CHECK(orient(v[i], v[i + 1], v[i + 2]) > 0);
  }
}

TEST_CASE("chain agrees with brute force") {
  for (Int n = 1; n <= 600; ++n) REQUIRE(chain_vertices(n).vertices == oracle::brute_chain(n).vertices);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> dist(601, 300'000);
  for (int i = 0; i < 20; ++i) {
    const Int n = dist(rng);
    REQUIRE(chain_vertices(n).vertices == oracle::brute_chain(n).vertices);
  }
}

TEST_CASE("q_polygon examples") {
  // Counterclockwise from the lowest point of the left edge.
  CHECK(q_polygon(10).vertices == V{{2, 5}, {5, 2}, {5, 5}});
  CHECK(q_polygon(8).vertices == V{{2, 4}, {4, 2}, {4, 4}});
  CHECK(f0_q(10) == 3);
  CHECK(f0_q(8) == 3);
  const auto q = q_polygon(1000).vertices;
  for (LatticePoint p : {LatticePoint{10, 100}, LatticePoint{100, 100}, LatticePoint{100, 10}})
    CHECK(std::find(q.begin(), q.end(), p) != q.end());
  CHECK(f0_q(1000) == static_cast<Int>(oracle::brute_convex_hull(oracle::brute_q_lattice_points(1000)).size()));
  CHECK_THROWS_AS(q_polygon(7), DomainError);
}

TEST_CASE("q_polygon agrees with brute force") {
  for (Int n = 8; n <= 400; ++n)
    REQUIRE(q_polygon(n).vertices == oracle::brute_convex_hull(oracle::brute_q_lattice_points(n)));
}

TEST_CASE("lower_chain runs along the hyperbola") {
  for (Int n : {8LL, 10LL, 1000LL, 12345LL}) {
    const auto poly = q_polygon(n);
    const auto lc = lower_chain(poly);
    const auto hp = hull_params(n);
    REQUIRE(lc.size() >= 2);
    CHECK(lc.front().x == ceil_div(n, hp.n2));
    CHECK(lc.back().x == hp.n2);
    for (const auto& p : lc) CHECK(p.x * p.y >= n);
  }
}

TEST_CASE("validate_strip") {
  auto r = validate_strip(chain_vertices(10));
  CHECK(r.pass);
  CHECK(r.bound == doctest::Approx(4.30887).epsilon(1e-5));
  for (const auto& e : r.entries) CHECK(e.excess == 0);
  r = validate_strip(chain_vertices(4));
  CHECK(r.pass);
  CHECK(r.entries.size() == 3);
  HullChain bad{10, {{1, 10}, {2, 8}, {10, 1}}};
  r = validate_strip(bad);
  CHECK_FALSE(r.pass);
  CHECK(r.entries[1].excess == 6);
  CHECK_FALSE(r.entries[1].ok);
}

TEST_CASE("validate_strip is exact at the cube boundary") {
  // N = 1000: bound 2 N^{1/3} = 20 exactly.
  HullChain edge{1000, {{1, 1020}}};
  CHECK(validate_strip(edge).pass);
  HullChain over{1000, {{1, 1021}}};
  CHECK_FALSE(validate_strip(over).pass);
}

TEST_CASE("prefix_vertices") {
  auto p = prefix_vertices(1000);
  REQUIRE(p.size() == 10);
  CHECK(p.front().point == LatticePoint{1, 1000});
  CHECK(p[1].point == LatticePoint{2, 500});
  CHECK(p.back().point == LatticePoint{10, 100});
  p = prefix_vertices(10);
  REQUIRE(p.size() == 2);
  CHECK(p[1].point == LatticePoint{2, 5});
  p = prefix_vertices(4);
  REQUIRE(p.size() == 1);
  CHECK(p[0].point == LatticePoint{1, 4});
}

TEST_CASE("prefix points are chain vertices") {
  for (Int n : {1000LL, 54321LL, 1'000'000LL, 999'999'937LL}) {
    const auto v = chain_vertices(n).vertices;
    for (const auto& e : prefix_vertices(n)) CHECK(std::binary_search(v.begin(), v.end(), e.point));
  }
}
