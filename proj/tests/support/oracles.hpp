#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "charbounds/dirichlet.hpp"

namespace oracle {

using cplx = std::complex<double>;
using charbounds::DirichletCharacter;
using charbounds::i64;
using charbounds::u64;

inline constexpr double kPi = 3.14159265358979323846;

inline cplx e(double x) { return std::polar(1.0, 2.0 * kPi * (x - std::floor(x))); }

inline std::vector<u64> naive_primes(u64 n) {
  std::vector<u64> out;
  for (u64 k = 2; k <= n; ++k) {
    bool prime = true;
    for (u64 d = 2; d * d <= k; ++d)
      if (k % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(k);
  }
  return out;
}

/// Legendre symbol by counting squares.
inline int legendre(i64 n, u64 p) {
  const u64 r = static_cast<u64>(((n % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p));
  if (r == 0) return 0;
  for (u64 x = 1; x < p; ++x)
    if (x * x % p == r) return 1;
  return -1;
}

inline u64 mult_order(u64 a, u64 q) {
  u64 x = a % q, k = 1;
  while (x != 1 % q) {
    x = x * a % q;
    ++k;
  }
  return k;
}

/// Smallest d | q such that chi(n) = 1 for every unit n = 1 (mod d).
inline u64 conductor(const DirichletCharacter& chi) {
  const u64 q = chi.modulus();
  for (u64 d = 1; d <= q; ++d) {
    if (q % d != 0) continue;
    bool ok = true;
    for (u64 n = 1; n <= q && ok; n += d)
      if (std::gcd(n, q) == 1 && std::abs(chi(static_cast<i64>(n)) - cplx(1.0, 0.0)) > 1e-9) ok = false;
    if (ok) return d;
  }
  return q;
}

/// max_t |prefix(t)| from a fully materialized prefix array.
inline double max_partial_sum(const DirichletCharacter& chi) {
  const u64 q = chi.modulus();
  std::vector<cplx> prefix(q + 1, cplx(0.0, 0.0));
  for (u64 t = 1; t <= q; ++t) prefix[t] = prefix[t - 1] + chi(static_cast<i64>(t));
  double best = 0.0;
  for (u64 t = 1; t <= q; ++t) best = std::max(best, std::abs(prefix[t]));
  return best;
}

inline cplx gauss_sum(const DirichletCharacter& chi) {
  const u64 q = chi.modulus();
  cplx s(0.0, 0.0);
  for (u64 n = 1; n <= q; ++n) s += chi(static_cast<i64>(n)) * e(static_cast<double>(n) / q);
  return s;
}

/// Riemann zeta at s > 1 by direct summation with an Euler-Maclaurin tail.
inline double zeta(double s, u64 terms = 100000) {
  double acc = 0.0;
  for (u64 n = terms; n >= 1; --n) acc += std::pow(static_cast<double>(n), -s);
  const double N = static_cast<double>(terms);
  return acc + std::pow(N, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(N, -s) +
         s / 12.0 * std::pow(N, -s - 1.0);
}

/// Byte sieve, independent of the library's prime generator.
inline std::vector<u64> sieve(u64 n) {
  std::vector<char> comp(n + 1, 0);
  std::vector<u64> out;
  for (u64 i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += i) comp[j] = 1;
  }
  return out;
}

/// S(x) - log log x / phi(m) for primes p = a (m), at two cutoffs, extrapolated
/// assuming an x^{-1/2} decay of the error. Returns the estimate of -C_m(a).
inline double mertens_oracle(const std::vector<u64>& primes, u64 m, u64 a, double x1, double x2) {
  double s1 = 0.0, s2 = 0.0;
  for (const u64 p : primes) {
    if (p % m != a % m) continue;
    const double t = -std::log1p(-1.0 / static_cast<double>(p));
    if (p <= x1) s1 += t;
    if (p <= x2) s2 += t;
  }
  double phi = 0.0;
  for (u64 r = 1; r <= m; ++r) phi += std::gcd(r, m) == 1 ? 1.0 : 0.0;
  const double e1 = s1 - std::log(std::log(x1)) / phi;
  const double e2 = s2 - std::log(std::log(x2)) / phi;
  const double r1 = std::sqrt(x1), r2 = std::sqrt(x2);
  return (e2 * r2 - e1 * r1) / (r2 - r1);
}

}  // namespace oracle
