#include "hyperhull/lattice.hpp"

#include <cmath>
#include <numeric>

namespace hyperhull {

PrimitiveVector::PrimitiveVector(Int a, Int b) : a_(a), b_(b) {
  if (a <= 0 || b <= 0) throw DomainError("primitive vector needs a, b > 0");
  if (gcd(a, b) != 1) throw DomainError("vector (a, b) is not primitive");
}

double PrimitiveVector::norm() const { return std::hypot(static_cast<double>(a_), static_cast<double>(b_)); }

Int gcd(Int a, Int b) {
  if (a < 0 || b < 0) throw DomainError("gcd expects nonnegative arguments");
  if (a == 0 && b == 0) throw DomainError("gcd(0, 0) is undefined");
  return std::gcd(a, b);
}

Int isqrt(Int n) {
  if (n < 0) throw DomainError("isqrt of a negative number");
  auto r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
  while (static_cast<Wide>(r) * r > n) --r;
  while (static_cast<Wide>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

Int icbrt_wide(Wide n) {
  if (n < 0) throw DomainError("icbrt of a negative number");
  // 2^42 cubed is 2^126, which bounds every argument we accept.
  Int lo = 0;
  Int hi = Int{1} << 42;
  while (lo < hi) {
    const Int mid = lo + (hi - lo + 1) / 2;
    const Wide m = mid;
    if (m * m * m <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

Int icbrt(Int n) { return icbrt_wide(n); }

void check_n(Int n) {
  if (n < 1) throw DomainError("N must be a positive integer");
  if (n > kMaxN) throw BoundError("N = " + std::to_string(n) + " exceeds the exactness bound 10^12");
}

void check_point(const LatticePoint& p) {
  if (p.x < 0 || p.y < 0 || p.x > kMaxCoordinate || p.y > kMaxCoordinate)
    throw BoundError("coordinate outside [0, 2*10^12]");
}

int orient(const LatticePoint& o, const LatticePoint& p, const LatticePoint& q) {
  check_point(o);
  check_point(p);
  check_point(q);
  const Wide c = cross(o, p, q);
  return (c > 0) - (c < 0);
}

bool is_primitive(Int a, Int b) {
  if (a < 1 || b < 1) throw DomainError("is_primitive expects a, b >= 1");
  return std::gcd(a, b) == 1;
}

std::string to_string(Wide v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  // Magnitudes here never reach the minimum value.
  if (neg) v = -v;
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  if (neg) out.push_back('-');
  return {out.rbegin(), out.rend()};
}

}  // namespace hyperhull
