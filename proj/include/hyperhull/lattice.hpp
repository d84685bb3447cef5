// Exact integer primitives for lattice geometry in the positive quadrant.
//
// Every coordinate handled by the library is bounded by kMaxCoordinate so that
// a cross product of two coordinate differences fits a signed 128-bit integer
// with room to spare (|dx * dy| <= 4e24 < 2^127).
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperhull {

using Int = std::int64_t;
using Wide = __int128;

inline constexpr Int kMaxN = 1'000'000'000'000;           // 1e12
inline constexpr Int kMaxCoordinate = 2'000'000'000'000;  // 2e12

/// Input exceeds the exactness bound (CLI exit code 3).
class BoundError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An oracle or enumeration budget would be exceeded (CLI exit code 3).
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (CLI exit code 2).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent evaluation routes disagree (CLI exit code 4).
class SelfCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct LatticePoint {
  Int x = 0;
  Int y = 0;

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct RealPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Direction (a, -b) of a lattice edge stored as (a, b) with a, b > 0 and gcd(a, b) = 1.
class PrimitiveVector {
 public:
  PrimitiveVector(Int a, Int b);

  Int a() const { return a_; }
  Int b() const { return b_; }
  double norm() const;

  friend bool operator==(const PrimitiveVector&, const PrimitiveVector&) = default;

 private:
  Int a_;
  Int b_;
};

Int gcd(Int a, Int b);

/// ceil(n / d) for n >= 0, d >= 1, without floating point.
constexpr Int ceil_div(Int n, Int d) { return n / d + (n % d != 0 ? 1 : 0); }

/// floor(sqrt(n)) for n >= 0.
Int isqrt(Int n);

/// floor(cbrt(n)) for n >= 0, by binary search on exact cubes.
Int icbrt(Int n);

/// Largest m >= 0 with m^3 <= n, for a 128-bit argument.
Int icbrt_wide(Wide n);

void check_n(Int n);
void check_point(const LatticePoint& p);

/// Exact sign of (p - o) x (q - o); +1 is a counterclockwise turn.
int orient(const LatticePoint& o, const LatticePoint& p, const LatticePoint& q);

/// (p - o) x (q - o) without bound checks; callers guarantee kMaxCoordinate.
inline Wide cross(const LatticePoint& o, const LatticePoint& p, const LatticePoint& q) {
  return static_cast<Wide>(p.x - o.x) * (q.y - o.y) -
         static_cast<Wide>(p.y - o.y) * (q.x - o.x);
}

bool is_primitive(Int a, Int b);

std::string to_string(Wide v);

}  // namespace hyperhull
