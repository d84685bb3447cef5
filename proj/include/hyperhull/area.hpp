// Exact lattice-polygon areas and cancellation-free areas between lattice
// chords and the hyperbola xy = N.
#pragma once

#include <span>

#include "hyperhull/hull.hpp"
#include "hyperhull/lattice.hpp"

namespace hyperhull {

struct AreaResult {
  double value = 0.0;
  double abs_error_bound = 0.0;
};

inline constexpr Int kPickCellCap = 100'000'000;      // 1e8
inline constexpr Int kDualPathMaxN = 1'000'000'000;   // 1e9
inline constexpr double kDualPathRelTol = 1e-6;

/// Twice the (unsigned) area of a simple polygon; exact.
Wide shoelace_area2(std::span<const LatticePoint> polygon);

struct PickCounts {
  Wide interior = 0;
  Wide boundary = 0;
};

/// Lattice points on the boundary: sum of gcd(|dx|, |dy|) over the edges.
Wide boundary_count(std::span<const LatticePoint> polygon);

/// Interior and boundary lattice counts of a convex lattice polygon (either
/// orientation). The interior is counted column by column with exact integer
/// half-plane bounds; it throws BudgetError if the bounding box exceeds max_cells.
PickCounts pick_counts(std::span<const LatticePoint> polygon, Int max_cells = kPickCellCap);

/// Area between the chord [p1, p2] and the arc of xy = N over [p1.x, p2.x].
AreaResult edge_cap_area(const LatticePoint& p1, const LatticePoint& p2, Int n);

/// Area of Q_N = H_N ∩ [1, N2]^2: N2^2 - N - N ln(N2^2 / N).
AreaResult area_q(Int n);

/// A_N = Area(Q_N \ I(Q_N)) as the sum of edge caps along the lower chain of
/// q_polygon(n) plus the left sliver between x = N/N2 and x = ceil(N/N2).
AreaResult missed_area_q_per_edge(Int n);

/// A_N = area_q(n) - shoelace_area2(q_polygon(n)) / 2. Loses about
/// log10(N^{4/3} / A_N) digits; only meaningful up to kDualPathMaxN.
AreaResult missed_area_q_difference(Int n);

/// The per-edge value. For n <= kDualPathMaxN it is checked against the
/// difference route and a disagreement above kDualPathRelTol * max(1, A_N)
/// throws SelfCheckError.
AreaResult missed_area_q(Int n);

/// Area between the chain of I(H_N) and the hyperbola for x in [x_lo, x_hi].
/// Edges crossing x_lo or x_hi are split along the chord.
AreaResult missed_area_range(Int n, double x_lo, double x_hi);

/// Signed area of the region between a chord and the hyperbola over a
/// sub-interval [s, e] of the chord's x-range.
AreaResult partial_cap_area(const LatticePoint& p1, const LatticePoint& p2, Int n, double s, double e);

}  // namespace hyperhull
