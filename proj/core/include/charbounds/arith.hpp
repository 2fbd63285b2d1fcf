#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace charbounds {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<u64, int>> factorize(u64 n);

u64 euler_phi(u64 n);
std::vector<u64> divisors(u64 n);
bool is_prime(u64 n);

/// Non-negative residue of n modulo m.
inline u64 mod_floor(i64 n, u64 m) {
  const i64 r = n % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

/// All primes p <= n in increasing order.
std::vector<std::uint32_t> primes_up_to(u64 n);

/// Smallest-prime-factor table on [0, n]; spf[0] = spf[1] = 0.
class SpfSieve {
 public:
  explicit SpfSieve(u64 n);

  u64 limit() const { return limit_; }
  std::uint32_t spf(u64 n) const { return spf_[n]; }
  /// Largest prime factor of n (1 for n = 1).
  u64 largest_prime_factor(u64 n) const;

 private:
  u64 limit_;
  std::vector<std::uint32_t> spf_;
};

/// mask[n] = 1 iff n in [1, n_max] has every prime factor <= y.
std::vector<std::uint8_t> friable_mask(u64 n_max, double y);

/// Solution of x = r_i (mod m_i) for pairwise coprime moduli.
u64 crt(const std::vector<u64>& residues, const std::vector<u64>& moduli);

}  // namespace charbounds
