#include "hyperhull/area.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace hyperhull {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Each closed-form step is charged 2 units of relative rounding per operation.
constexpr double kEdgeOps = 16.0;

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Wide wabs(Wide v) { return v < 0 ? -v : v; }

// g(t) = 2t/(1 - t^2) - 2 atanh(t) with t = (x2 - x1)/(x2 + x1), i.e. the
// trapezoid-minus-integral of 1/x over [x1, x2] scaled by x.  The series
// 2 sum_k (2k/(2k+1)) t^{2k+1} has only positive terms.
double trapezoid_excess(double t) {
  if (t <= 0.5) {
    const double t2 = t * t;
    double term = t * t2;  // t^3
    double sum = 0.0;
    for (int k = 1; k < 200; ++k) {
      const double add = term * (2.0 * k) / (2.0 * k + 1.0);
      sum += add;
      if (add < sum * 1e-18) break;
      term *= t2;
    }
    return 2.0 * sum;
  }
  const double u = 2.0 * t / (1.0 - t);  // x2/x1 - 1
  return u * (2.0 + u) / (2.0 * (1.0 + u)) - std::log1p(u);
}

// v - log(1 + v) for v >= 0.
double excess_over_log1p(double v) {
  if (v < 0.25) {
    double term = v * v;
    double sum = 0.0;
    for (int k = 2; k < 200; ++k) {
      const double add = term / k;
      sum += (k % 2 == 0) ? add : -add;
      if (add < std::abs(sum) * 1e-18) break;
      term *= v;
    }
    return sum;
  }
  return v - std::log1p(v);
}

// Area over [s, e] between a curve y = (N + R(x))/x lying above the hyperbola and
// the hyperbola itself, when R is given at the two ends and the upper curve is a
// straight chord: N g(t) + (e - s)(R(s)/s + R(e)/e)/2.
AreaResult chord_area(double n, double s, double e, double r_s, double r_e) {
  const double t = (e - s) / (e + s);
  const double main = n * trapezoid_excess(t);
  const double side = 0.5 * (e - s) * (r_s / s + r_e / e);
  AreaResult out;
  out.value = main + side;
  out.abs_error_bound = 2.0 * kEdgeOps * kEps * (std::abs(main) + std::abs(side));
  return out;
}

void accumulate(AreaResult& total, const AreaResult& part) {
  total.value += part.value;
  total.abs_error_bound += part.abs_error_bound + 2.0 * kEps * std::abs(total.value);
}

}  // namespace

Wide shoelace_area2(std::span<const LatticePoint> polygon) {
  if (polygon.size() < 3) throw DomainError("polygon needs at least 3 vertices");
  Wide sum = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto& p = polygon[i];
    const auto& q = polygon[(i + 1) % polygon.size()];
    check_point(p);
    sum += static_cast<Wide>(p.x) * q.y - static_cast<Wide>(q.x) * p.y;
  }
  return wabs(sum);
}

Wide boundary_count(std::span<const LatticePoint> polygon) {
  Wide b = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto& p = polygon[i];
    const auto& q = polygon[(i + 1) % polygon.size()];
    b += std::gcd(std::abs(q.x - p.x), std::abs(q.y - p.y));
  }
  return b;
}

PickCounts pick_counts(std::span<const LatticePoint> polygon, Int max_cells) {
  if (polygon.size() < 3) throw DomainError("polygon needs at least 3 vertices");
  std::vector<LatticePoint> ccw(polygon.begin(), polygon.end());
  Wide signed2 = 0;
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const auto& p = ccw[i];
    const auto& q = ccw[(i + 1) % ccw.size()];
    check_point(p);
    signed2 += static_cast<Wide>(p.x) * q.y - static_cast<Wide>(q.x) * p.y;
  }
  if (signed2 == 0) throw DomainError("degenerate polygon");
  if (signed2 < 0) std::reverse(ccw.begin(), ccw.end());
  const std::size_t m = ccw.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (cross(ccw[i], ccw[(i + 1) % m], ccw[(i + 2) % m]) < 0)
      throw DomainError("pick_counts requires a convex polygon");
  }

  Int x_lo = ccw[0].x, x_hi = ccw[0].x, y_lo = ccw[0].y, y_hi = ccw[0].y;
  for (const auto& p : ccw) {
    x_lo = std::min(x_lo, p.x);
    x_hi = std::max(x_hi, p.x);
    y_lo = std::min(y_lo, p.y);
    y_hi = std::max(y_hi, p.y);
  }
  if (static_cast<Wide>(x_hi - x_lo + 1) * (y_hi - y_lo + 1) > max_cells)
    throw BudgetError("polygon bounding box exceeds the enumeration cap");

  PickCounts out;
  out.boundary = boundary_count(ccw);
  for (Int x = x_lo + 1; x < x_hi; ++x) {
    Wide lo = y_lo;   // smallest admissible y
    Wide hi = y_hi;   // largest admissible y
    bool empty = false;
    for (std::size_t i = 0; i < m && !empty; ++i) {
      const auto& a = ccw[i];
      const auto& b = ccw[(i + 1) % m];
      const Wide dx = b.x - a.x;
      const Wide dy = b.y - a.y;
      const Wide num = dy * (x - a.x);
      // Strictly left of a->b:  dx (y - a.y) > dy (x - a.x).
      if (dx > 0) {
        lo = std::max(lo, a.y + floor_div(num, dx) + 1);
      } else if (dx < 0) {
        hi = std::min(hi, a.y - floor_div(num, -dx) - 1);
      } else if (!(-dy * (x - a.x) > 0)) {
        empty = true;
      }
    }
    if (!empty && hi >= lo) out.interior += hi - lo + 1;
  }
  return out;
}

AreaResult edge_cap_area(const LatticePoint& p1, const LatticePoint& p2, Int n) {
  check_n(n);
  check_point(p1);
  check_point(p2);
  if (p1.x < 1 || p1.x >= p2.x) throw DomainError("edge_cap_area needs 1 <= p1.x < p2.x");
  const double r1 = static_cast<double>(static_cast<Wide>(p1.x) * p1.y - n);
  const double r2 = static_cast<double>(static_cast<Wide>(p2.x) * p2.y - n);
  const auto out = chord_area(static_cast<double>(n), static_cast<double>(p1.x),
                              static_cast<double>(p2.x), r1, r2);
  if (out.value < -out.abs_error_bound) throw DomainError("chord lies below the hyperbola");
  return out;
}

AreaResult partial_cap_area(const LatticePoint& p1, const LatticePoint& p2, Int n, double s, double e) {
  check_n(n);
  if (p1.x >= p2.x) throw DomainError("partial_cap_area needs p1.x < p2.x");
  if (!(s >= static_cast<double>(p1.x) && e <= static_cast<double>(p2.x) && s <= e))
    throw DomainError("sub-interval outside the chord");
  if (s == e) return {};
  const double nd = static_cast<double>(n);
  const Wide a = p2.x - p1.x;
  const Wide b = p1.y - p2.y;
  const Wide r1 = static_cast<Wide>(p1.x) * p1.y - n;
  // R(x) = x * chord(x) - N.
  auto residual = [&](double x) -> double {
    if (b == 0) return x * static_cast<double>(p1.y) - nd;
    // The chord meets the hyperbola at z1 <= z2 and R(x) = (b/a)(x - z1)(z2 - x).
    const Wide lin = b * p1.x - a * p1.y;
    const double disc = static_cast<double>(lin) * static_cast<double>(lin) +
                        4.0 * static_cast<double>(a) * static_cast<double>(b) * static_cast<double>(r1);
    const double k = static_cast<double>(b * p1.x + a * p1.y);
    const double root = k + std::sqrt(std::max(disc, 0.0));
    const double z2 = root / (2.0 * static_cast<double>(b));
    const double z1 = 2.0 * static_cast<double>(a) * nd / root;
    return static_cast<double>(b) / static_cast<double>(a) * (x - z1) * (z2 - x);
  };
  const double rs = (s == static_cast<double>(p1.x)) ? static_cast<double>(r1) : residual(s);
  const double re = (e == static_cast<double>(p2.x))
                        ? static_cast<double>(static_cast<Wide>(p2.x) * p2.y - n)
                        : residual(e);
  return chord_area(nd, s, e, rs, re);
}

AreaResult area_q(Int n) {
  const auto params = hull_params(n);
  if (n < 8) throw DomainError("Q_N needs N >= 8");
  const Wide n2sq = static_cast<Wide>(params.n2) * params.n2;
  const double nd = static_cast<double>(n);
  const double rect = static_cast<double>(n2sq - n);
  const double logpart = nd * std::log(static_cast<double>(n2sq) / nd);
  AreaResult out;
  out.value = rect - logpart;
  out.abs_error_bound = 2.0 * 6.0 * kEps * (std::abs(rect) + std::abs(logpart));
  return out;
}

AreaResult missed_area_q_per_edge(Int n) {
  const auto params = hull_params(n);
  const auto poly = q_polygon(n);
  const auto chain = lower_chain(poly);
  AreaResult total;
  // Left sliver: integral over [N/N2, x_min] of (N2 - N/x) = r - N log(1 + r/N),
  // with r = x_min N2 - N.
  const Int x_min = ceil_div(n, params.n2);
  const Int r = x_min * params.n2 - n;
  if (r > 0) {
    const double nd = static_cast<double>(n);
    const double v = static_cast<double>(r) / nd;
    AreaResult sliver{nd * excess_over_log1p(v), 0.0};
    sliver.abs_error_bound = 2.0 * kEdgeOps * kEps * sliver.value;
    accumulate(total, sliver);
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) accumulate(total, edge_cap_area(chain[i], chain[i + 1], n));
  return total;
}

AreaResult missed_area_q_difference(Int n) {
  const auto q = area_q(n);
  const auto poly = q_polygon(n);
  const double poly_area = static_cast<double>(shoelace_area2(poly.vertices)) / 2.0;
  AreaResult out;
  out.value = q.value - poly_area;
  out.abs_error_bound = q.abs_error_bound + 2.0 * kEps * (std::abs(q.value) + poly_area);
  return out;
}

AreaResult missed_area_q(Int n) {
  const auto per_edge = missed_area_q_per_edge(n);
  if (n <= kDualPathMaxN) {
    const auto diff = missed_area_q_difference(n);
    const double tol = kDualPathRelTol * std::max(1.0, per_edge.value);
    if (std::abs(per_edge.value - diff.value) > tol)
      throw SelfCheckError("per-edge and difference evaluations of A_N disagree");
  }
  return per_edge;
}

AreaResult missed_area_range(Int n, double x_lo, double x_hi) {
  check_n(n);
  const double nd = static_cast<double>(n);
  if (!(x_lo >= 1.0 && x_hi <= nd && x_lo <= x_hi)) throw DomainError("range must satisfy 1 <= x_lo <= x_hi <= N");
  AreaResult total;
  if (x_lo == x_hi) return total;
  const auto chain = chain_vertices(n);
  const auto& v = chain.vertices;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double a = static_cast<double>(v[i].x);
    const double b = static_cast<double>(v[i + 1].x);
    const double s = std::max(a, x_lo);
    const double e = std::min(b, x_hi);
    if (s >= e) continue;
    if (s == a && e == b) {
      accumulate(total, edge_cap_area(v[i], v[i + 1], n));
    } else {
      accumulate(total, partial_cap_area(v[i], v[i + 1], n, s, e));
    }
  }
  return total;
}

}  // namespace hyperhull
