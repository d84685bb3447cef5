#include "hyperhull/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hyperhull::oracle {

namespace {

// Orientation by comparing the two products rather than subtracting them.
bool left_turn(const LatticePoint& o, const LatticePoint& p, const LatticePoint& q) {
  const Wide lhs = static_cast<Wide>(p.x - o.x) * static_cast<Wide>(q.y - o.y);
  const Wide rhs = static_cast<Wide>(p.y - o.y) * static_cast<Wide>(q.x - o.x);
  return lhs > rhs;
}

Int up_div(Int n, Int d) { return (n + d - 1) / d; }

}  // namespace

HullChain brute_chain(Int n, const OracleBudget& budget) {
  if (n < 1) throw DomainError("N must be positive");
  if (n > budget.max_n) throw BudgetError("brute_chain: N exceeds the oracle budget");
  HullChain chain;
  chain.n = n;
  auto& h = chain.vertices;
  for (Int x = 1; x <= n; ++x) {
    const LatticePoint p{x, up_div(n, x)};
    while (h.size() >= 2 && !left_turn(h[h.size() - 2], h.back(), p)) h.pop_back();
    h.push_back(p);
  }
  return chain;
}

Int brute_strip_count(Int n, Int n_hi, const OracleBudget& budget) {
  if (n < 1) throw DomainError("N must be positive");
  if (n_hi > budget.max_n * 10) throw BudgetError("brute_strip_count: window exceeds the oracle budget");
  Int count = 0;
  for (Int x = 1; x <= n_hi; ++x) {
    const Int y_lo = up_div(n, x);
    const Int y_hi = n_hi / x;
    if (y_hi >= y_lo) count += y_hi - y_lo + 1;
  }
  return count;
}

WidthResult brute_lattice_width(std::span<const RealPoint> points, const OracleBudget& budget) {
  if (points.size() < 2) throw DomainError("need at least two points");
  if (points.size() > budget.max_points) throw BudgetError("brute_lattice_width: too many points");
  WidthResult best{std::numeric_limits<double>::infinity(), 0, 0};
  const Int m = budget.max_norm;
  for (Int u = 0; u <= m; ++u) {
    for (Int v = (u == 0 ? 1 : -m); v <= m; ++v) {
      if (std::gcd(u, std::abs(v)) != 1) continue;
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (const auto& z : points) {
        const double d = static_cast<double>(u) * z.x + static_cast<double>(v) * z.y;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
      if (hi - lo < best.width) best = {hi - lo, u, v};
    }
  }
  return best;
}

std::vector<LatticePoint> brute_q_lattice_points(Int n, const OracleBudget& budget) {
  if (n < 1) throw DomainError("N must be positive");
  if (n > kMaxN) throw BoundError("N exceeds the exactness bound");
  Int n1 = 1;
  while ((n1 + 1) * (n1 + 1) * (n1 + 1) <= n) ++n1;
  const Int n2 = up_div(n, n1);
  if (static_cast<Wide>(n2) * n2 > budget.max_cells) throw BudgetError("brute_q_lattice_points: square exceeds the cell budget");
  std::vector<LatticePoint> pts;
  for (Int x = 1; x <= n2; ++x)
    for (Int y = 1; y <= n2; ++y)
      if (x * y >= n) pts.push_back({x, y});
  return pts;
}

std::vector<LatticePoint> brute_convex_hull(std::vector<LatticePoint> pts) {
  const auto lex = [](const LatticePoint& l, const LatticePoint& r) {
    return l.x != r.x ? l.x < r.x : l.y < r.y;
  };
  if (!std::is_sorted(pts.begin(), pts.end(), lex)) std::sort(pts.begin(), pts.end(), lex);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<LatticePoint> lower;
  std::vector<LatticePoint> upper;
  for (const auto& p : pts) {
    while (lower.size() >= 2 && !left_turn(lower[lower.size() - 2], lower.back(), p)) lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 && !left_turn(upper[upper.size() - 2], upper.back(), *it)) upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

}  // namespace hyperhull::oracle
