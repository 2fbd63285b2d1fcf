#pragma once

#include <cmath>
#include <random>

#include "charbounds/pretentious.hpp"

namespace fixtures {

inline double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// f(p) = e(u_p) with u_p uniform in [0, 1).
inline charbounds::CMFunction random_unimodular(charbounds::u64 bound, std::mt19937_64& rng) {
  return charbounds::CMFunction::from_primes(bound, [&rng](charbounds::u64) {
    return std::polar(1.0, 2.0 * 3.14159265358979323846 * unit_double(rng));
  });
}

}  // namespace fixtures
