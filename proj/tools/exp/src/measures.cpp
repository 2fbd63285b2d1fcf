#include "measures.hpp"

#include <cmath>
#include <numeric>

#include "charbounds/charsum.hpp"
#include "charbounds/dirichlet.hpp"
#include "charbounds/euler.hpp"

namespace charbounds::exp::detail {

Extremum pvapp_max(u64 q_lo, u64 q_hi, u64 N, double X) {
  Extremum e;
  for (u64 q = std::max<u64>(q_lo, 3); q <= q_hi; ++q) {
    const LValueKernel kernel(q, N, X);
    for (const auto& chi : enumerate_characters(build_group(q))) {
      if (chi.is_principal()) continue;
      const double d = std::abs(kernel.partial_sum(chi) - std::exp(kernel.log_euler_product(chi)));
      if (d > e.value) e = {d, q, chi.index()};
    }
  }
  return e;
}

Extremum k_chi_sup(u64 q_max, u64 p_max) {
  Extremum e;
  const auto primes = primes_up_to(p_max);
  for (u64 q = 1; q <= q_max; ++q)
    for (const auto& chi : enumerate_characters(build_group(q)))
      for (const auto p : primes) {
        const double v = static_cast<double>(p) * std::abs(k_chi(chi, p));
        if (v > e.value) e = {v, q, chi.index()};
      }
  return e;
}

Extremum mertens_growth(u64 m_lo, u64 m_hi, double X) {
  Extremum e;
  for (u64 m = std::max<u64>(m_lo, 3); m <= m_hi; ++m) {
    const auto all = mertens_constants_all(m, X);
    double total = 0.0;
    for (u64 a = 1; a < m; ++a)
      if (std::gcd(a, m) == 1) total += std::abs(all[a].value);
    const double r = total / std::log(std::log(static_cast<double>(m)));
    if (r > e.value) e = {r, m, 0};
  }
  return e;
}

Extremum charsum_L1_min(u64 q_max, double X) {
  Extremum e{INFINITY, 0, 0};
  const auto one = principal_character(build_group(1));
  CharacterFilter f;
  f.order_equals = 2;
  f.parity = -1;
  f.primitive_only = true;
  for (u64 q = 3; q <= q_max; ++q) {
    if (!may_have_characters(q, f)) continue;
    for (const auto& chi : enumerate_characters(build_group(q), f)) {
      const double r = charsum_L1_functional(chi, one, X).ratio;
      if (r < e.value) e = {r, q, chi.index()};
    }
  }
  return e;
}

Extremum polya_max_defect(u64 q_lo, u64 q_hi) {
  Extremum e;
  CharacterFilter f;
  f.primitive_only = true;
  for (u64 q = q_lo; q <= q_hi; ++q) {
    if (!may_have_characters(q, f)) continue;
    const PolyaKernel kernel(q, q * q);
    for (const auto& chi : enumerate_characters(build_group(q), f)) {
      if (chi.is_principal()) continue;
      const auto expansion = kernel.expand_all(chi);
      const CharacterTable table(chi);
      std::complex<double> s(0.0, 0.0);
      for (u64 t = 1; t <= q; ++t) {
        s += table(static_cast<i64>(t));
        const double d = std::abs(s - expansion[t - 1]);
        if (d > e.value) e = {d, q, chi.index()};
      }
    }
  }
  return e;
}

}  // namespace charbounds::exp::detail
