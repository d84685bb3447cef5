#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "hyperhull/lattice.hpp"

using namespace hyperhull;

TEST_CASE("gcd") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(0, 5) == 5);
  CHECK(gcd(7, 11) == 1);
  CHECK_THROWS_AS(gcd(0, 0), DomainError);
  CHECK_THROWS_AS(gcd(-3, 6), DomainError);
}

TEST_CASE("ceil_div") {
  CHECK(ceil_div(10, 3) == 4);
  CHECK(ceil_div(10, 2) == 5);
  CHECK(ceil_div(1, 7) == 1);
  static_assert(ceil_div(kMaxN, 3) == 333'333'333'334);
}

TEST_CASE("isqrt and icbrt are exact near perfect powers") {
  for (Int r : {1LL, 2LL, 999'999LL, 1'000'000LL, 1'414'213LL}) {
    CHECK(isqrt(r * r) == r);
    CHECK(isqrt(r * r - 1) == r - 1);
    CHECK(isqrt(r * r + 2 * r) == r);
  }
  for (Int r : {1LL, 2LL, 10LL, 4641LL, 10'000LL}) {
    CHECK(icbrt(r * r * r) == r);
    CHECK(icbrt(r * r * r - 1) == r - 1);
  }
  CHECK(icbrt(0) == 0);
  CHECK(icbrt(7) == 1);
  CHECK(icbrt(8) == 2);
  CHECK(icbrt_wide(static_cast<Wide>(1'000'000) * 1'000'000 * 1'000'000) == 1'000'000);
}

TEST_CASE("check_n enforces the exactness bound") {
  CHECK_NOTHROW(check_n(1));
  CHECK_NOTHROW(check_n(kMaxN));
  CHECK_THROWS_AS(check_n(0), DomainError);
  CHECK_THROWS_AS(check_n(kMaxN + 1), BoundError);
  CHECK_THROWS_AS(check_point({kMaxCoordinate + 1, 1}), BoundError);
}

TEST_CASE("orient examples") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient({2, 5}, {3, 4}, {4, 3}) == 0);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orient agrees with arbitrary precision near the coordinate bound") {
  using boost::multiprecision::cpp_int;
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<Int> far(kMaxCoordinate - 1'000'000, kMaxCoordinate);
  std::uniform_int_distribution<Int> any(0, kMaxCoordinate);
  std::uniform_int_distribution<int> pick(0, 3);
  int mismatches = 0;
  for (int i = 0; i < 1'000'000; ++i) {
    LatticePoint pts[3];
    for (auto& p : pts) {
      const int mode = pick(rng);
      p.x = mode & 1 ? far(rng) : any(rng);
      p.y = mode & 2 ? far(rng) : any(rng);
    }
    if (i % 4 == 0) {
      // Force exact collinearity through a lattice step.
      const Int dx = (pts[1].x - pts[0].x) / 2;
      const Int dy = (pts[1].y - pts[0].y) / 2;
      pts[2] = {pts[0].x + dx, pts[0].y + dy};
    }
    const cpp_int c = (cpp_int(pts[1].x) - pts[0].x) * (cpp_int(pts[2].y) - pts[0].y) -
                      (cpp_int(pts[1].y) - pts[0].y) * (cpp_int(pts[2].x) - pts[0].x);
    const int expected = c > 0 ? 1 : (c < 0 ? -1 : 0);
    if (orient(pts[0], pts[1], pts[2]) != expected) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("is_primitive and PrimitiveVector") {
  CHECK(is_primitive(1, 1));
  CHECK_FALSE(is_primitive(2, 4));
  CHECK(is_primitive(3, 5));
  CHECK_THROWS_AS(PrimitiveVector(2, 4), DomainError);
  CHECK_THROWS_AS(PrimitiveVector(0, 1), DomainError);
  CHECK(PrimitiveVector(3, 4).norm() == doctest::Approx(5.0));
}

TEST_CASE("to_string for wide integers") {
  CHECK(to_string(0) == "0");
  CHECK(to_string(-42) == "-42");
  CHECK(to_string(static_cast<Wide>(kMaxCoordinate) * kMaxCoordinate) == "4000000000000000000000000");
}
