#include "hyperhull/hull.hpp"

#include <algorithm>
#include <cmath>

namespace hyperhull {

HullParams hull_params(Int n) {
  check_n(n);
  HullParams p;
  p.n = n;
  p.n1 = icbrt(n);
  p.n2 = ceil_div(n, p.n1);
  p.delta = 0.5 * std::cbrt(static_cast<double>(n));
  return p;
}

std::vector<LatticePoint> candidate_points(Int n) {
  check_n(n);
  const Int s = isqrt(n);
  std::vector<LatticePoint> left;
  std::vector<LatticePoint> right;
  left.reserve(static_cast<std::size_t>(s));
  right.reserve(static_cast<std::size_t>(s));
  for (Int x = 1; x <= s; ++x) left.push_back({x, ceil_div(n, x)});
  for (Int y = s; y >= 1; --y) right.push_back({ceil_div(n, y), y});

  std::vector<LatticePoint> out;
  out.reserve(left.size() + right.size());
  std::merge(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(out));
  // Equal x keeps the lowest point: the higher one cannot be a vertex.
  std::vector<LatticePoint> dedup;
  dedup.reserve(out.size());
  for (const auto& p : out) {
    if (!dedup.empty() && dedup.back().x == p.x) {
      if (p.y < dedup.back().y) dedup.back() = p;
      continue;
    }
    dedup.push_back(p);
  }
  return dedup;
}

std::vector<LatticePoint> monotone_chain(std::span<const LatticePoint> sorted) {
  std::vector<LatticePoint> hull;
  hull.reserve(64);
  for (const auto& p : sorted) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

HullChain chain_vertices(Int n) {
  const auto candidates = candidate_points(n);
  return {n, monotone_chain(candidates)};
}

Int f0_h(Int n) { return static_cast<Int>(chain_vertices(n).vertices.size()); }

namespace {

// Andrew's monotone chain over lexicographically sorted points; counterclockwise,
// starting at the lexicographically smallest point, collinear points dropped.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

QHullPolygon q_polygon(Int n) {
  check_n(n);
  if (n < 8) throw DomainError("Q_N needs N >= 8 so that N1 >= 2");
  const auto params = hull_params(n);
  const Int n2 = params.n2;
  const Int x_min = ceil_div(n, n2);

  std::vector<LatticePoint> pts;
  for (const auto& p : candidate_points(n))
    if (p.x <= n2 && p.y <= n2) pts.push_back(p);
  pts.push_back({x_min, n2});
  pts.push_back({n2, x_min});
  pts.push_back({n2, n2});
  return {n, convex_hull(std::move(pts))};
}

Int f0_q(Int n) { return static_cast<Int>(q_polygon(n).vertices.size()); }

std::vector<LatticePoint> lower_chain(const QHullPolygon& poly) {
  const Int n2 = hull_params(poly.n).n2;
  std::vector<LatticePoint> out;
  for (const auto& v : poly.vertices) {
    out.push_back(v);
    if (v.x == n2) break;
  }
  return out;
}

StripReport validate_strip(const HullChain& chain) {
  StripReport report;
  report.n = chain.n;
  report.bound = 2.0 * std::cbrt(static_cast<double>(chain.n));
  report.pass = true;
  const Wide eight_n = Wide{8} * chain.n;
  for (const auto& v : chain.vertices) {
    const Wide excess = static_cast<Wide>(v.x) * v.y - chain.n;
    StripEntry e;
    e.vertex = v;
    e.excess = static_cast<Int>(excess);
    e.ok = excess >= 0 && excess < (Wide{1} << 40) && excess * excess * excess <= eight_n;
    report.pass = report.pass && e.ok;
    report.entries.push_back(e);
  }
  return report;
}

std::vector<PrefixEntry> prefix_vertices(Int n) {
  check_n(n);
  const Int n1 = icbrt(n);
  std::vector<PrefixEntry> out;
  out.reserve(static_cast<std::size_t>(n1));
  for (Int k = 1; k <= n1; ++k) {
    PrefixEntry e;
    e.k = k;
    e.point = {k, ceil_div(n, k)};
    if (k == 1) {
      e.inequality_holds = true;
    } else {
      const Wide rhs = Wide{2} * ceil_div(n, k) - ceil_div(n, k - 1);
      e.inequality_holds = Wide{k + 1} * rhs < n;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace hyperhull
