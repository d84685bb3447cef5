// Integer hull of H_N = {(x, y) : x, y > 0, xy >= N} and of its trimmed
// square Q_N = H_N ∩ [1, N2]^2.
#pragma once

#include <span>
#include <vector>

#include "hyperhull/lattice.hpp"

namespace hyperhull {

struct HullParams {
  Int n = 0;
  Int n1 = 0;  // floor(N^{1/3})
  Int n2 = 0;  // ceil(N / n1)
  double delta = 0.0;  // N^{1/3} / 2
};

HullParams hull_params(Int n);

/// Boundary chain of I(H_N) from (1, N) to (N, 1): x strictly increasing,
/// y strictly decreasing, no three consecutive vertices collinear.
struct HullChain {
  Int n = 0;
  std::vector<LatticePoint> vertices;
};

/// conv(Z^2 ∩ Q_N), counterclockwise. vertices[0] is the lowest point of the
/// left edge x = ceil(N / N2); the lower chain runs from there to (N2, ceil(N / N2)),
/// followed by the corner (N2, N2) and, if distinct, (ceil(N / N2), N2).
struct QHullPolygon {
  Int n = 0;
  std::vector<LatticePoint> vertices;
};

/// {(x, ceil(N/x)) : x <= isqrt(N)} ∪ {(ceil(N/y), y) : y <= isqrt(N)},
/// sorted by x ascending, deduplicated.
std::vector<LatticePoint> candidate_points(Int n);

/// Lower-left convex chain of points sorted by x ascending and y descending.
/// Collinear interior points are dropped.
std::vector<LatticePoint> monotone_chain(std::span<const LatticePoint> sorted);

HullChain chain_vertices(Int n);
Int f0_h(Int n);

QHullPolygon q_polygon(Int n);
Int f0_q(Int n);

/// The part of q_polygon(n) bordering the hyperbola, from x = ceil(N/N2) to x = N2.
std::vector<LatticePoint> lower_chain(const QHullPolygon& poly);

struct StripEntry {
  LatticePoint vertex;
  Int excess = 0;  // x*y - N
  bool ok = false;
};

struct StripReport {
  Int n = 0;
  double bound = 0.0;  // 2 N^{1/3}
  std::vector<StripEntry> entries;
  bool pass = false;
};

/// Checks N <= xy <= N + 2 N^{1/3} for every vertex. The comparison is exact:
/// an integer excess e passes iff e^3 <= 8N.
StripReport validate_strip(const HullChain& chain);

struct PrefixEntry {
  Int k = 0;
  LatticePoint point;
  /// N/(k+1) > 2 ceil(N/k) - ceil(N/(k-1)); vacuously true for k = 1.
  bool inequality_holds = false;
};

/// (k, ceil(N/k)) for 1 <= k <= floor(N^{1/3}).
std::vector<PrefixEntry> prefix_vertices(Int n);

}  // namespace hyperhull
