// Divisor-function machinery: d(n), the summatory function D(M) by the
// hyperbola method, lattice-point counts in hyperbolic strips, and the
// coprime-pair counter F(w) = sum_{n <= w} 2^omega(n).
#pragma once

#include <cstdint>
#include <vector>

#include "hyperhull/lattice.hpp"

namespace hyperhull {

inline constexpr double kEulerGamma = 0.577215664901532860606;
inline constexpr double kZeta2 = 1.64493406684822643647;  // pi^2 / 6

inline constexpr Int kTrialDivisionLimit = 10'000'000'000;  // 1e10
inline constexpr Int kSieveCap = 100'000'000;               // 1e8

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Prime factors with multiplicity, ascending.
std::vector<std::uint64_t> factorize(std::uint64_t n);

Int divisor_count(Int n);

/// D(M) = sum_{n <= M} d(n) = 2 sum_{k <= sqrt M} floor(M/k) - floor(sqrt M)^2.
Int divisor_summatory(Int m);

enum class StripWidth {
  narrow,  // Delta = N^{1/3} / 2
  lemma,   // Delta = 2 N^{1/3}
};

/// Lattice points with N <= xy <= n_hi, where n_hi = floor(N + Delta).
struct StripSpec {
  Int n = 0;
  double delta = 0.0;
  Int n_hi = 0;
};

/// Exact window: floor(c N^{1/3}) is found with integer cube roots.
StripSpec strip_spec(Int n, StripWidth width);
StripSpec strip_spec(Int n, double delta);

Int strip_count(const StripSpec& spec);

/// omega(n) (number of distinct prime divisors) for 0 <= n <= w, built with a
/// linear sieve. omega(0) and omega(1) are 0.
class OmegaTable {
 public:
  explicit OmegaTable(Int w);

  Int limit() const { return static_cast<Int>(omega_.size()) - 1; }
  int operator[](Int n) const { return omega_.at(static_cast<std::size_t>(n)); }

 private:
  std::vector<std::uint8_t> omega_;
};

OmegaTable omega_sieve(Int w);

/// F(w) = #{(a, b) : a, b >= 1, gcd(a, b) = 1, ab <= w}.
Int primitive_pair_count(Int w);
Int primitive_pair_count(const OmegaTable& table, Int w);

/// Main terms of the two asymptotic laws.
double dirichlet_main_term(double m);         // M ln M + (2 gamma - 1) M
double primitive_pair_main_term(double w);    // w ln w / zeta(2)

}  // namespace hyperhull
