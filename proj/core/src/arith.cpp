#include "charbounds/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "charbounds/errors.hpp"

namespace charbounds {

__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> out;
  if (n <= 1) return out;
  auto strip = [&](u64 p) {
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    if (a > 0) out.emplace_back(p, a);
  };
  strip(2);
  strip(3);
  for (u64 p = 5; p * p <= n; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 euler_phi(u64 n) {
  u64 phi = n;
  for (auto [p, a] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> divs{1};
  for (auto [p, a] : factorize(n)) {
    const std::size_t base = divs.size();
    u64 pk = 1;
    for (int k = 1; k <= a; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

std::vector<std::uint32_t> primes_up_to(u64 n) {
  std::vector<std::uint32_t> primes;
  if (n < 2) return primes;
  if (n > 0xFFFFFFFFull) throw CapacityError("primes_up_to: limit exceeds 32-bit prime table");
  // odd-only sieve: index i represents 2i + 1
  const u64 half = (n - 1) / 2 + 1;
  std::vector<std::uint8_t> composite(half, 0);
  primes.reserve(static_cast<std::size_t>(1.3 * n / std::max(1.0, std::log(static_cast<double>(n)))) + 8);
  primes.push_back(2);
  for (u64 i = 1; i < half; ++i) {
    if (composite[i]) continue;
    const u64 p = 2 * i + 1;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (u64 j = p * p / 2; j < half; j += p) composite[j] = 1;
  }
  return primes;
}

SpfSieve::SpfSieve(u64 n) : limit_(n), spf_(n + 1, 0) {
  if (n > 0xFFFFFFFFull) throw CapacityError("SpfSieve: limit exceeds 32-bit table");
  for (u64 i = 2; i <= n; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    if (i * i > n) continue;
    for (u64 j = i * i; j <= n; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
  }
}

u64 SpfSieve::largest_prime_factor(u64 n) const {
  u64 largest = 1;
  while (n > 1) {
    largest = spf_[n];
    n /= largest;
  }
  return largest;
}

std::vector<std::uint8_t> friable_mask(u64 n_max, double y) {
  std::vector<std::uint8_t> mask(n_max + 1, 1);
  mask[0] = 0;
  const auto primes = primes_up_to(n_max);
  for (auto p : primes) {
    if (static_cast<double>(p) <= y) continue;
    for (u64 j = p; j <= n_max; j += p) mask[j] = 0;
  }
  return mask;
}

u64 crt(const std::vector<u64>& residues, const std::vector<u64>& moduli) {
  u64 x = 0;
  u64 m = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const u64 mi = moduli[i];
    const u64 ri = residues[i] % mi;
    // x + m*t = ri (mod mi)  =>  t = (ri - x) * m^{-1} (mod mi)
    const u64 mi_inv = [&] {
      // extended Euclid on (m mod mi, mi)
      i64 old_r = static_cast<i64>(m % mi), r = static_cast<i64>(mi);
      i64 old_s = 1, s = 0;
      while (r != 0) {
        const i64 qt = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - qt * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - qt * s);
      }
      if (old_r != 1 && mi != 1) throw DomainError("crt: moduli not coprime");
      return mod_floor(old_s, mi);
    }();
    const u64 diff = (ri + mi - x % mi) % mi;
    const u64 t = mulmod(diff, mi_inv, mi);
    x += m * t;
    m *= mi;
  }
  return m == 0 ? x : x % m;
}

}  // namespace charbounds
