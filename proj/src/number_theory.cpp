#include "hyperhull/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hyperhull {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n.
u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    const u64 m = 128;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

Int divisor_count_trial(Int n) {
  Int count = 1;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are deterministic below 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> factorize(std::uint64_t n) {
  std::vector<u64> out;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

Int divisor_count(Int n) {
  if (n < 1) throw DomainError("divisor_count needs n >= 1");
  if (n > kMaxCoordinate) throw BoundError("divisor_count argument exceeds the exactness bound");
  if (n <= kTrialDivisionLimit) return divisor_count_trial(n);

  const auto primes = factorize(static_cast<u64>(n));
  Int count = 1;
  std::size_t i = 0;
  while (i < primes.size()) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    count *= static_cast<Int>(j - i) + 1;
    i = j;
  }
  Int check = 1;
  for (u64 p : primes) check *= static_cast<Int>(p);
  if (check != n) throw SelfCheckError("factorization does not multiply back to n");
  return count;
}

Int divisor_summatory(Int m) {
  if (m < 0) throw DomainError("divisor_summatory needs M >= 0");
  if (m > kMaxCoordinate) throw BoundError("divisor_summatory argument exceeds the exactness bound");
  if (m == 0) return 0;
  const Int s = isqrt(m);
  Int sum = 0;
  for (Int k = 1; k <= s; ++k) sum += m / k;
  return 2 * sum - s * s;
}

StripSpec strip_spec(Int n, StripWidth width) {
  check_n(n);
  StripSpec spec;
  spec.n = n;
  const double c = std::cbrt(static_cast<double>(n));
  // floor(N^{1/3}/2) = max m with 8 m^3 <= N;  floor(2 N^{1/3}) = max m with m^3 <= 8N.
  Int floor_delta = 0;
  if (width == StripWidth::narrow) {
    spec.delta = 0.5 * c;
    floor_delta = icbrt(n / 8);
  } else {
    spec.delta = 2.0 * c;
    floor_delta = icbrt_wide(Wide{8} * n);
  }
  spec.n_hi = n + floor_delta;
  return spec;
}

StripSpec strip_spec(Int n, double delta) {
  check_n(n);
  if (!(delta >= 0.0)) throw DomainError("strip width must be nonnegative");
  StripSpec spec;
  spec.n = n;
  spec.delta = delta;
  spec.n_hi = n + static_cast<Int>(std::floor(delta));
  if (spec.n_hi > kMaxCoordinate) throw BoundError("strip window exceeds the exactness bound");
  return spec;
}

Int strip_count(const StripSpec& spec) {
  if (spec.n < 1 || spec.n_hi < spec.n - 1) throw DomainError("invalid strip window");
  return divisor_summatory(spec.n_hi) - divisor_summatory(spec.n - 1);
}

OmegaTable::OmegaTable(Int w) {
  if (w < 1) throw DomainError("omega sieve needs w >= 1");
  if (w > kSieveCap) throw BudgetError("omega sieve limit exceeds the 10^8 memory cap");
  omega_.assign(static_cast<std::size_t>(w) + 1, 0);
  std::vector<std::uint32_t> primes;
  for (Int i = 2; i <= w; ++i) {
    // Composites are reached from a smaller cofactor first, so a zero here means prime.
    if (omega_[static_cast<std::size_t>(i)] == 0) {
      omega_[static_cast<std::size_t>(i)] = 1;
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    const auto wi = omega_[static_cast<std::size_t>(i)];
    for (const auto p : primes) {
      const Int ip = i * p;
      if (ip > w) break;
      if (i % p == 0) {
        omega_[static_cast<std::size_t>(ip)] = wi;
        break;
      }
      omega_[static_cast<std::size_t>(ip)] = static_cast<std::uint8_t>(wi + 1);
    }
  }
}

OmegaTable omega_sieve(Int w) { return OmegaTable(w); }

Int primitive_pair_count(const OmegaTable& table, Int w) {
  if (w < 1) throw DomainError("F(w) needs w >= 1");
  if (w > table.limit()) throw BudgetError("F(w) argument exceeds the sieve limit");
  Int total = 0;
  for (Int n = 1; n <= w; ++n) total += Int{1} << table[n];
  return total;
}

Int primitive_pair_count(Int w) { return primitive_pair_count(OmegaTable(w), w); }

double dirichlet_main_term(double m) { return m * std::log(m) + (2.0 * kEulerGamma - 1.0) * m; }

double primitive_pair_main_term(double w) { return w * std::log(w) / kZeta2; }

}  // namespace hyperhull
