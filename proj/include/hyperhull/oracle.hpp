// Brute-force reference implementations. Nothing here calls into the hull,
// area or cap modules; orientation and hull routines are written separately.
#pragma once

#include <span>
#include <vector>

#include "hyperhull/caps.hpp"
#include "hyperhull/hull.hpp"
#include "hyperhull/lattice.hpp"

namespace hyperhull::oracle {

struct OracleBudget {
  Int max_n = 1'000'000;
  Int max_cells = 100'000'000;
  Int max_norm = 1000;  // direction scan radius for brute_lattice_width
  std::size_t max_points = 1000;
};

/// Hull chain from all of {(x, ceil(N/x)) : 1 <= x <= N}.
HullChain brute_chain(Int n, const OracleBudget& budget = {});

/// #{(x, y) : N <= x y <= n_hi}, one column at a time.
Int brute_strip_count(Int n, Int n_hi, const OracleBudget& budget = {});

/// Exhaustive scan over primitive directions with max(|u|, |v|) <= budget.max_norm.
WidthResult brute_lattice_width(std::span<const RealPoint> points, const OracleBudget& budget = {});

/// Every lattice point of Q_N, scanning [1, N2]^2 column by column.
std::vector<LatticePoint> brute_q_lattice_points(Int n, const OracleBudget& budget = {});

/// Counterclockwise convex hull with collinear points removed, starting at the
/// lexicographically smallest vertex.
std::vector<LatticePoint> brute_convex_hull(std::vector<LatticePoint> pts);

}  // namespace hyperhull::oracle
