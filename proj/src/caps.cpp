#include "hyperhull/caps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace hyperhull {

namespace {

Wide isqrt_wide(Wide n) {
  Wide r = static_cast<Wide>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void check_primitive(Int a, Int b) { (void)PrimitiveVector(a, b); }

double dot(Int u, Int v, const RealPoint& z) { return static_cast<double>(u) * z.x + static_cast<double>(v) * z.y; }

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

HyperbolaCrossing line_hyperbola_x(Int a, Int b, double k, double level) {
  check_primitive(a, b);
  if (!(level > 0.0)) throw DomainError("hyperbola level must be positive");
  const double ad = static_cast<double>(a);
  const double bd = static_cast<double>(b);
  const double s = std::sqrt(4.0 * ad * bd * level);
  double disc = (k - s) * (k + s);
  if (k < s) {
    if (s - k > 1e-12 * s) throw DomainError("line misses the hyperbola");
    disc = 0.0;
  }
  const double root = k + std::sqrt(disc);
  return {2.0 * ad * level / root, root / (2.0 * bd)};
}

double tangent_x(Int a, Int b, double level) {
  check_primitive(a, b);
  return std::sqrt(level * static_cast<double>(a) / static_cast<double>(b));
}

StripChord strip_chord(Int a, Int b, Int n, double delta) {
  check_n(n);
  if (!(delta > 0.0)) throw DomainError("strip width must be positive");
  const double nd = static_cast<double>(n);
  StripChord out;
  out.length = 2.0 * std::sqrt(delta * static_cast<double>(a) / static_cast<double>(b));
  const double k = std::sqrt(4.0 * static_cast<double>(a) * static_cast<double>(b) * (nd + delta));
  const auto x = line_hyperbola_x(a, b, k, nd);
  out.x1 = x.x1;
  out.x2 = x.x2;
  out.ratio = x.x2 / x.x1;
  out.ratio_bound = 1.0 + 2.0 / std::cbrt(nd);
  out.ratio_ok = out.ratio < out.ratio_bound;
  return out;
}

Curvature curvature_radius(double x, Int n) {
  if (!(x > 0.0)) throw DomainError("curvature needs x > 0");
  const double nd = static_cast<double>(n);
  const double t = nd / (x * x);
  const double x3 = x * x * x;
  Curvature c;
  c.radius = x3 * std::pow(1.0 + t * t, 1.5) / (2.0 * nd);
  c.band_lo = x3 / (2.0 * nd);
  c.band_hi = std::sqrt(2.0) * x3 / nd;
  const double slack = 1e-12 * c.radius;
  c.in_band = c.radius >= c.band_lo - slack && c.radius <= c.band_hi + slack;
  return c;
}

double CapGeometry::half_chord_ratio() const { return std::hypot(z2.x - z0.x, z2.y - z0.y) / rho; }

CapGeometry cap_from_edge(const LatticePoint& p1, const LatticePoint& p2, Int n) {
  check_n(n);
  check_point(p1);
  check_point(p2);
  if (!(p1.x < p2.x && p1.y > p2.y)) throw DomainError("edge must run right and down");
  const Int dx = p2.x - p1.x;
  const Int dy = p1.y - p2.y;
  const Int g = std::gcd(dx, dy);
  const Int a = dx / g;
  const Int b = dy / g;
  const Wide r1 = static_cast<Wide>(p1.x) * p1.y - n;
  const Wide r2 = static_cast<Wide>(p2.x) * p2.y - n;
  if (r1 < 0 || r2 < 0) throw DomainError("edge endpoint lies below the hyperbola");

  CapGeometry cap;
  cap.n = n;
  cap.e1 = p1;
  cap.e2 = p2;
  cap.p = PrimitiveVector(a, b);
  cap.k_edge = static_cast<Wide>(b) * p1.x + static_cast<Wide>(a) * p1.y;

  const double nd = static_cast<double>(n);
  const double ad = static_cast<double>(a);
  const double bd = static_cast<double>(b);
  const double k = static_cast<double>(cap.k_edge);
  // k^2 - 4abN = (b x1 - a y1)^2 + 4ab (x1 y1 - N): a sum of nonnegative terms.
  const double lin = static_cast<double>(static_cast<Wide>(b) * p1.x - static_cast<Wide>(a) * p1.y);
  const double disc = lin * lin + 4.0 * ad * bd * static_cast<double>(r1);
  const double sq = std::sqrt(disc);
  cap.k_tan = std::sqrt(4.0 * ad * bd * nd);
  const double pnorm = cap.p.norm();
  cap.h = disc / ((k + cap.k_tan) * pnorm);
  if (cap.h < 0.0) throw SelfCheckError("edge line lies below its parallel tangent");
  cap.x_p = std::sqrt(ad * nd / bd);
  cap.r = curvature_radius(cap.x_p, n).radius;
  cap.rho = std::sqrt(cap.h * (2.0 * cap.r - cap.h));

  const double root = k + sq;
  const double x2 = root / (2.0 * bd);
  const double x1 = 2.0 * ad * nd / root;
  cap.z1 = {x1, nd / x1};
  cap.z2 = {x2, nd / x2};
  cap.z0 = {0.5 * (x1 + x2), 0.5 * (cap.z1.y + cap.z2.y)};

  const Wide ab = static_cast<Wide>(a) * b;
  const Wide lambda_sq = 4 * ab * n + ab * ab;
  cap.lambda = std::sqrt(static_cast<double>(lambda_sq));
  const Wide s = isqrt_wide(lambda_sq);
  cap.ceil_lambda = (s * s == lambda_sq) ? s : s + 1;
  cap.level_is_ceil_lambda = cap.ceil_lambda == cap.k_edge;
  cap.chord_at_least_p = std::hypot(x2 - x1, cap.z2.y - cap.z1.y) >= pnorm * (1.0 - 1e-12);
  return cap;
}

double width_along(std::span<const RealPoint> points, Int u, Int v) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& z : points) {
    const double d = dot(u, v, z);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return hi - lo;
}

namespace {

struct IVec {
  Int u = 0;
  Int v = 0;
};

// Gauss-Lagrange reduction of Z^2 under an arbitrary norm; returns a shortest
// nonzero vector and its norm.
template <class Norm>
WidthResult shortest_vector(Norm norm) {
  IVec b1{1, 0};
  IVec b2{0, 1};
  double n1 = norm(b1.u, b1.v);
  double n2 = norm(b2.u, b2.v);
  if (n2 < n1) {
    std::swap(b1, b2);
    std::swap(n1, n2);
  }
  for (int iter = 0; iter < 200 && n1 > 0.0; ++iter) {
    // norm(b2 - mu b1) is convex in mu and at least |mu| n1 - n2.
    auto phi = [&](Int mu) { return norm(b2.u - mu * b1.u, b2.v - mu * b1.v); };
    const double reach = std::min(2.0 * n2 / n1 + 2.0, 1e15);
    Int lo = -static_cast<Int>(reach);
    Int hi = static_cast<Int>(reach);
    while (lo < hi) {
      const Int mid = lo + (hi - lo) / 2;
      if (phi(mid + 1) >= phi(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    Int mu = lo;
    double best = phi(mu);
    for (Int d : {-1, 1}) {
      const double val = phi(lo + d);
      if (val < best) {
        best = val;
        mu = lo + d;
      }
    }
    const IVec reduced{b2.u - mu * b1.u, b2.v - mu * b1.v};
    if (best < n1 * (1.0 - 1e-14)) {
      b2 = b1;
      n2 = n1;
      b1 = reduced;
      n1 = best;
    } else {
      break;
    }
  }
  if (b1.u < 0 || (b1.u == 0 && b1.v < 0)) b1 = {-b1.u, -b1.v};
  return {n1, b1.u, b1.v};
}

}  // namespace

WidthResult lattice_width(std::span<const RealPoint> points) {
  if (points.size() < 2) throw DomainError("lattice width needs at least two points");
  return shortest_vector([&](Int u, Int v) { return width_along(points, u, v); });
}

double cap_width_along(const CapGeometry& cap, Int u, Int v) {
  const double nd = static_cast<double>(cap.n);
  const double ud = static_cast<double>(u);
  const double vd = static_cast<double>(v);
  double lo = std::min(dot(u, v, cap.z1), dot(u, v, cap.z2));
  double hi = std::max(dot(u, v, cap.z1), dot(u, v, cap.z2));
  // u x + v N/x has an interior extremum only when u and v share a sign.
  if ((u > 0 && v > 0) || (u < 0 && v < 0)) {
    const double xs = std::sqrt(vd * nd / ud);
    if (xs > cap.z1.x && xs < cap.z2.x) {
      const double val = ud * xs + vd * nd / xs;
      lo = std::min(lo, val);
      hi = std::max(hi, val);
    }
  }
  return hi - lo;
}

WidthResult cap_lattice_width(const CapGeometry& cap) {
  return shortest_vector([&](Int u, Int v) { return cap_width_along(cap, u, v); });
}

std::vector<RealPoint> cap_samples(const CapGeometry& cap, int arc_points) {
  const double nd = static_cast<double>(cap.n);
  std::vector<RealPoint> out;
  out.reserve(static_cast<std::size_t>(arc_points) + 2);
  out.push_back(cap.z1);
  for (int i = 1; i <= arc_points; ++i) {
    const double x = cap.z1.x + (cap.z2.x - cap.z1.x) * i / (arc_points + 1);
    out.push_back({x, nd / x});
  }
  out.push_back(cap.z2);
  return out;
}

bool cap_is_empty(const CapGeometry& cap) {
  const Int a = cap.p.a();
  const Int b = cap.p.b();
  const Int x_first = std::max<Int>(1, static_cast<Int>(std::floor(cap.z1.x)) - 1);
  const Int x_last = static_cast<Int>(std::ceil(cap.z2.x)) + 1;
  if (x_last - x_first > kCapColumnCap) throw BudgetError("cap spans more than 10^7 columns");
  for (Int x = x_first; x <= x_last; ++x) {
    // y > N/x  and  a y < k - b x.
    const Wide y_lo = cap.n / x + 1;
    const Wide room = cap.k_edge - static_cast<Wide>(b) * x - 1;
    if (room < 0) continue;
    const Wide y_hi = room / a;
    if (y_lo <= y_hi) return false;
  }
  return true;
}

TangentOffset tangent_offset(Int a, Int b, Int n) {
  check_primitive(a, b);
  check_n(n);
  const Wide ab = static_cast<Wide>(a) * b;
  TangentOffset t;
  t.kappa = std::sqrt(static_cast<double>(4 * ab * n));
  t.lambda = std::sqrt(static_cast<double>(4 * ab * n + ab * ab));
  const double abd = static_cast<double>(ab);
  t.diff = abd * abd / (t.lambda + t.kappa);
  return t;
}

double minkowski_body_area(const LatticePoint& v, Int n) {
  check_n(n);
  check_point(v);
  const Wide excess = static_cast<Wide>(v.x) * v.y - n;
  if (excess < 0) throw DomainError("lens centre must satisfy x y >= N");
  if (excess == 0) return 0.0;
  const double vx = static_cast<double>(v.x);
  const double vy = static_cast<double>(v.y);
  const double c = 2.0 * vx;
  // Column u carries w in [N/u, 2 v.y - N/(c - u)]; its length vanishes at
  // u = v.x -+ s with s^2 = v.x (v.x v.y - N) / v.y.
  const double s = std::sqrt(vx * static_cast<double>(excess) / vy);
  const double u1 = vx - s;
  const double u2 = vx + s;
  auto column = [&](double u) {
    const double len = 2.0 * vy * (u - u1) * (u2 - u) / (u * (c - u));
    return std::max(len, 0.0);
  };
  const double fa = column(u1);
  const double fm = column(vx);
  const double fb = column(u2);
  const double whole = (u2 - u1) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(column, u1, u2, fa, fm, fb, whole, 1e-8, 48);
}

}  // namespace hyperhull
