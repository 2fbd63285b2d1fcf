#include "charbounds/euler.hpp"

#include <cmath>
#include <numeric>

#include "charbounds/charsum.hpp"
#include "charbounds/errors.hpp"

namespace charbounds {

namespace {

using cplx = std::complex<double>;

u64 floor_cut(double X) { return X < 0.0 ? 0 : static_cast<u64>(std::floor(X)); }

void require_nonprincipal(const DirichletCharacter& chi, const char* what) {
  if (chi.is_principal()) throw DomainError(std::string(what) + ": principal character");
}

}  // namespace

std::complex<double> truncated_log_L1(const DirichletCharacter& chi, double X) {
  require_nonprincipal(chi, "truncated_L1");
  if (!(X >= 2.0)) throw DomainError("truncated_L1: X must be >= 2");
  const CharacterTable table(chi);
  cplx s(0.0, 0.0);
  for (const auto p : primes_up_to(floor_cut(X))) {
    const cplx z = table(static_cast<i64>(p));
    if (z == cplx(0.0, 0.0)) continue;
    s -= std::log(1.0 - z / static_cast<double>(p));
  }
  return s;
}

std::complex<double> truncated_L1(const DirichletCharacter& chi, double X) {
  return std::exp(truncated_log_L1(chi, X));
}

std::complex<double> partial_sum_L1(const DirichletCharacter& chi, u64 N) {
  const CharacterTable table(chi);
  cplx s(0.0, 0.0);
  for (u64 n = 1; n <= N; ++n) {
    const auto j = table.index(static_cast<i64>(n));
    if (j == CharacterTable::kZero) continue;
    s += table.roots()[j] / static_cast<double>(n);
  }
  return s;
}

std::complex<double> k_chi_value(std::complex<double> z, u64 p) {
  if (z == cplx(0.0, 0.0) || z == cplx(1.0, 0.0)) return {0.0, 0.0};
  const double pd = static_cast<double>(p);
  const cplx power = std::exp(-z * std::log1p(-1.0 / pd));
  return pd * (1.0 - (1.0 - z / pd) * power);
}

std::complex<double> k_chi(const DirichletCharacter& chi, u64 p) {
  const CharValue v = chi.value(static_cast<i64>(p));
  if (v.is_zero()) return {0.0, 0.0};
  if (v.root().numerator() == 0) return {0.0, 0.0};
  return k_chi_value(v.to_complex(), p);
}

std::complex<double> truncated_log_K1(const DirichletCharacter& chi, double X) {
  const CharacterTable table(chi);
  cplx s(0.0, 0.0);
  for (const auto p : primes_up_to(floor_cut(X))) {
    const auto j = table.index(static_cast<i64>(p));
    if (j == CharacterTable::kZero || j == 0) continue;
    s -= std::log(1.0 - k_chi_value(table.roots()[j], p) / static_cast<double>(p));
  }
  return s;
}

std::vector<MertensConstantResult> mertens_constants_all(u64 m, double X) {
  if (m < 2) throw DomainError("mertens_constant: m must be >= 2");
  if (!(X >= 2.0)) throw DomainError("mertens_constant: X must be >= 2");
  const auto group = build_group(m);
  const auto primes = primes_up_to(floor_cut(X));
  const double phi = static_cast<double>(group->phi());

  std::vector<cplx> acc(m, cplx(0.0, 0.0));
  for (const auto& chi : enumerate_characters(group)) {
    if (chi.is_principal()) continue;
    const CharacterTable table(chi);
    cplx logK(0.0, 0.0), logL(0.0, 0.0);
    for (const auto p : primes) {
      const auto j = table.index(static_cast<i64>(p));
      if (j == CharacterTable::kZero) continue;
      const cplx z = table.roots()[j];
      const double pd = static_cast<double>(p);
      logL -= std::log(1.0 - z / pd);
      if (j != 0) logK -= std::log(1.0 - k_chi_value(z, p) / pd);
    }
    const cplx diff = logK - logL;
    for (u64 a = 1; a < m; ++a) acc[a] += std::conj(table(static_cast<i64>(a))) * diff;
  }
  const double principal = (kEulerGamma + std::log(phi / static_cast<double>(m))) / phi;
  std::vector<MertensConstantResult> out(m, {std::nan(""), 0.0});
  for (u64 a = 0; a < m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    const cplx c = acc[a] / phi - principal;
    out[a] = {c.real(), c.imag()};
  }
  return out;
}

MertensConstantResult mertens_constant_full(u64 m, u64 a, double X) {
  if (m < 2) throw DomainError("mertens_constant: m must be >= 2");
  if (std::gcd(a % m, m) != 1) throw DomainError("mertens_constant: gcd(a, m) > 1");
  return mertens_constants_all(m, X)[a % m];
}

double mertens_constant(u64 m, u64 a, double X) {
  const auto r = mertens_constant_full(m, a, X);
  if (std::fabs(r.imag_residual) >= 1e-6)
    throw DomainError("mertens_constant: imaginary residual above 1e-6");
  return r.value;
}

LValueKernel::LValueKernel(u64 q, u64 N, double X)
    : q_(q), harmonic_by_residue_(q, 0.0), log_by_residue_(q, 0.0) {
  if (q == 0) throw DomainError("LValueKernel: q must be positive");
  for (u64 n = N; n >= 1; --n) harmonic_by_residue_[n % q] += 1.0 / static_cast<double>(n);
  const auto primes = primes_up_to(floor_cut(X));
  for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
    const u64 p = *it;
    const double inv = 1.0 / static_cast<double>(p);
    log_by_residue_[p % q] += inv;
    double pk = inv;
    u64 rk = p % q;
    for (u64 j = 2;; ++j) {
      pk *= inv;
      if (pk < 1e-18) break;
      rk = mulmod(rk, p % q, q);
      log_by_residue_[rk] += pk / static_cast<double>(j);
    }
  }
}

std::complex<double> LValueKernel::partial_sum(const DirichletCharacter& chi) const {
  if (chi.modulus() != q_) throw DomainError("LValueKernel: modulus mismatch");
  const CharacterTable table(chi);
  cplx s(0.0, 0.0);
  for (u64 r = 0; r < q_; ++r) {
    const auto j = table.index(static_cast<i64>(r));
    if (j != CharacterTable::kZero) s += table.roots()[j] * harmonic_by_residue_[r];
  }
  return s;
}

std::complex<double> LValueKernel::log_euler_product(const DirichletCharacter& chi) const {
  if (chi.modulus() != q_) throw DomainError("LValueKernel: modulus mismatch");
  const CharacterTable table(chi);
  cplx s(0.0, 0.0);
  for (u64 r = 0; r < q_; ++r) {
    const auto j = table.index(static_cast<i64>(r));
    if (j != CharacterTable::kZero) s += table.roots()[j] * log_by_residue_[r];
  }
  return s;
}

std::vector<MertensAPResult> mertens_ap_all(double x, u64 m) {
  if (m == 0) throw DomainError("mertens_ap: m must be positive");
  if (!(x >= 2.0)) throw DomainError("mertens_ap: x must be >= 2");
  std::vector<MertensAPResult> out(m);
  std::vector<double> sums(m, 0.0);
  for (const auto p : primes_up_to(floor_cut(x)))
    sums[p % m] -= std::log1p(-1.0 / static_cast<double>(p));
  const double main = std::log(std::log(x)) / static_cast<double>(euler_phi(m));
  for (u64 a = 0; a < m; ++a) {
    auto& r = out[a];
    r.m = m;
    r.a = a;
    r.x = x;
    r.value = sums[a];
    r.main_term = main;
    r.constant_estimate = r.value - r.main_term;
    r.in_regime = static_cast<double>(m) <= std::log(x);
  }
  return out;
}

MertensAPResult mertens_ap(double x, u64 m, u64 a) {
  if (m == 0) throw DomainError("mertens_ap: m must be positive");
  auto all = mertens_ap_all(x, m);
  return all[a % m];
}

BoundReport charsum_L1_functional(const DirichletCharacter& chi, const DirichletCharacter& psi,
                                  double X) {
  if (!chi.is_primitive() || !psi.is_primitive())
    throw DomainError("charsum_L1_functional: characters must be primitive");
  if (chi.parity() == psi.parity())
    throw DomainError("charsum_L1_functional: chi and psi must have opposite parity");
  const u64 q = chi.modulus();
  const u64 m = psi.modulus();
  const auto prod = multiply(chi, psi.conj());
  const double qd = static_cast<double>(q);
  const double md = static_cast<double>(m);
  const double L = std::abs(truncated_L1(prod, X));
  const double Mchi = max_char_sum(chi).value;

  BoundReport rep;
  rep.name = "charsum_L1";
  rep.lhs = Mchi + std::sqrt(qd);
  rep.rhs_main = std::sqrt(qd * md) / static_cast<double>(euler_phi(m)) * L;
  rep.ratio = rep.lhs / rep.rhs_main;
  rep.defect = rep.lhs - rep.rhs_main;
  const double lq = std::log(qd);
  const bool regime = q > 1 && md <= qd / (lq * lq);
  rep.params = {{"q", qd}, {"m", md}, {"X", X}, {"M_chi", Mchi}, {"L_abs", L},
                {"regime", regime ? 1.0 : 0.0}};
  return rep;
}

}  // namespace charbounds
