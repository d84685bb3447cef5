// Geometry of the caps cut from H_N by the lines of hull edges: line/hyperbola
// intersections, curvature, cap height and half-chord, lattice width, lattice
// emptiness, tangent offsets and the symmetric lens around a vertex.
//
// A line with inner normal (b, a) is written b x + a y = k; its direction is
// (a, -b). All routines expect a, b >= 1 with gcd(a, b) = 1.
#pragma once

#include <span>
#include <vector>

#include "hyperhull/lattice.hpp"

namespace hyperhull {

inline constexpr double kHurkensBound = 4.4641016151377545870;  // 1 + 2 sqrt(3)
inline constexpr Int kCapColumnCap = 10'000'000;                // 1e7

struct HyperbolaCrossing {
  double x1 = 0.0;  // x1 <= x2
  double x2 = 0.0;
};

/// Abscissae of (b x + a y = k) ∩ (x y = level). Throws DomainError when the
/// line passes below the hyperbola.
HyperbolaCrossing line_hyperbola_x(Int a, Int b, double k, double level);

/// Tangency abscissa sqrt(level a / b) of the line with slope -b/a.
double tangent_x(Int a, Int b, double level);

struct StripChord {
  double length = 0.0;  // 2 sqrt(delta a / b)
  double x1 = 0.0;
  double x2 = 0.0;
  double ratio = 0.0;        // x2 / x1 for the line tangent to xy = N + delta, cut by xy = N
  double ratio_bound = 0.0;  // 1 + 2 N^{-1/3}
  bool ratio_ok = false;
};

StripChord strip_chord(Int a, Int b, Int n, double delta);

struct Curvature {
  double radius = 0.0;
  double band_lo = 0.0;  // x^3 / (2N)
  double band_hi = 0.0;  // sqrt(2) x^3 / N
  bool in_band = false;  // guaranteed for x >= sqrt(N)
};

/// Radius of curvature of y = N/x at abscissa x: (x^4 + N^2)^{3/2} / (2 N x^3).
Curvature curvature_radius(double x, Int n);

struct CapGeometry {
  Int n = 0;
  LatticePoint e1;  // edge endpoints, e1.x < e2.x
  LatticePoint e2;
  PrimitiveVector p{1, 1};
  Wide k_edge = 0;      // b x + a y on the edge line
  double k_tan = 0.0;   // sqrt(4abN), level of the parallel tangent
  double h = 0.0;       // distance between edge line and tangent
  double x_p = 0.0;     // tangency abscissa
  double r = 0.0;       // curvature radius at x_p
  double rho = 0.0;     // sqrt(h (2r - h))
  RealPoint z1;         // edge line ∩ hyperbola
  RealPoint z2;
  RealPoint z0;         // midpoint of [z1, z2]
  double lambda = 0.0;  // sqrt(k_tan^2 + (ab)^2)
  Wide ceil_lambda = 0;
  bool level_is_ceil_lambda = false;
  bool chord_at_least_p = false;  // |z2 - z1| >= |p|

  /// |z2 - z0| / rho.
  double half_chord_ratio() const;
};

CapGeometry cap_from_edge(const LatticePoint& p1, const LatticePoint& p2, Int n);

struct WidthResult {
  double width = 0.0;
  Int u = 0;  // minimizing direction (u, v), normalized so that u > 0, or u = 0 and v > 0
  Int v = 0;
};

/// Spread max q.z - min q.z of the points along q = (u, v).
double width_along(std::span<const RealPoint> points, Int u, Int v);

/// Lattice width of conv(points): min over nonzero integer q of width_along.
/// Found by Gauss-Lagrange reduction of the lattice basis under the width norm,
/// which returns a shortest vector in the plane for any norm.
WidthResult lattice_width(std::span<const RealPoint> points);

/// Width of the true cap (chord plus arc) along q, in closed form.
double cap_width_along(const CapGeometry& cap, Int u, Int v);

/// Lattice width of the true cap.
WidthResult cap_lattice_width(const CapGeometry& cap);

/// z1, z2 and arc_points equally spaced points of the arc strictly between them.
std::vector<RealPoint> cap_samples(const CapGeometry& cap, int arc_points = 65);

/// True iff no lattice point has x y > N and lies strictly below the edge line.
bool cap_is_empty(const CapGeometry& cap);

struct TangentOffset {
  double kappa = 0.0;   // sqrt(4abN)
  double lambda = 0.0;  // sqrt(kappa^2 + (ab)^2)
  double diff = 0.0;    // (ab)^2 / (lambda + kappa)
};

TangentOffset tangent_offset(Int a, Int b, Int n);

/// Area of the lens {uw >= N} ∩ {(2 v.x - u)(2 v.y - w) >= N}, the intersection
/// of H_N with its reflection through v. Integrated column by column to an
/// absolute tolerance of 1e-8.
double minkowski_body_area(const LatticePoint& v, Int n);

}  // namespace hyperhull
