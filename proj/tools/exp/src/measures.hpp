#pragma once

#include <cstdint>

#include "charbounds/arith.hpp"

// Scans shared by the pilot and the batteries.
namespace charbounds::exp::detail {

struct Extremum {
  double value = 0.0;
  u64 q = 0;
  u64 index = 0;
};

/// max |sum_{n<=N} chi(n)/n - exp(log Euler product to X)| over non-principal
/// chi mod q, q_lo <= q <= q_hi.
Extremum pvapp_max(u64 q_lo, u64 q_hi, u64 N, double X);

/// max p |k_chi(p)| over chi mod q <= q_max and primes p <= p_max.
Extremum k_chi_sup(u64 q_max, u64 p_max);

/// max over m of sum_a |C_m(a)| / log log m.
Extremum mertens_growth(u64 m_lo, u64 m_hi, double X);

/// min ratio of charsum_L1_functional over odd primitive quadratic chi,
/// q <= q_max, psi trivial.
Extremum charsum_L1_min(u64 q_max, double X);

/// max over primitive chi, q_lo <= q <= q_hi, and t of |partial sum -
/// Polya expansion| with N = q^2.
Extremum polya_max_defect(u64 q_lo, u64 q_hi);

}  // namespace charbounds::exp::detail
