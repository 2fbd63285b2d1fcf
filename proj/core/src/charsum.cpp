#include "charbounds/charsum.hpp"

#include <cmath>
#include <numeric>

#include "charbounds/errors.hpp"

namespace charbounds {

namespace {

using cplx = std::complex<double>;

cplx e_frac(u64 num, u64 den) { return RootOfUnity(num % den, den).to_complex(); }

std::vector<cplx> e_table(u64 q) {
  std::vector<cplx> out(q);
  for (u64 k = 0; k < q; ++k) out[k] = e_frac(k, q);
  return out;
}

cplx e_real(double x) {
  const double frac = x - std::floor(x);
  return {std::cos(kTwoPi * frac), std::sin(kTwoPi * frac)};
}

}  // namespace

MaxSumResult max_char_sum(const CharacterTable& table, bool keep_trace) {
  if (table.order() == 1) throw DomainError("max_char_sum: principal character");
  const u64 q = table.modulus();
  MaxSumResult out;
  if (keep_trace) out.partial_trace.reserve(q);
  cplx s(0.0, 0.0);
  double best = -1.0;
  for (u64 t = 1; t <= q; ++t) {
    s += table(static_cast<i64>(t));
    if (keep_trace) out.partial_trace.push_back(s);
    const double n2 = std::norm(s);
    if (n2 > best) {
      best = n2;
      out.argmax_t = t;
    }
  }
  out.value = std::sqrt(best);
  return out;
}

MaxSumResult max_char_sum(const DirichletCharacter& chi, bool keep_trace) {
  if (chi.is_principal()) throw DomainError("max_char_sum: principal character");
  return max_char_sum(CharacterTable(chi), keep_trace);
}

std::complex<double> gauss_sum(const DirichletCharacter& chi) {
  const u64 q = chi.modulus();
  const CharacterTable table(chi);
  cplx s(0.0, 0.0);
  for (u64 n = 1; n <= q; ++n) {
    const auto j = table.index(static_cast<i64>(n));
    if (j == CharacterTable::kZero) continue;
    s += table.roots()[j] * e_frac(n, q);
  }
  return s;
}

std::complex<double> polya_expansion(const DirichletCharacter& chi, i64 t, u64 N) {
  if (!chi.is_primitive()) throw DomainError("polya_expansion: character not primitive");
  const u64 q = chi.modulus();
  if (t < 1 || static_cast<u64>(t) > q) throw DomainError("polya_expansion: t outside [1, q]");
  if (N == 0) throw DomainError("polya_expansion: N must be positive");
  const CharacterTable table(chi);
  const auto et = e_table(q);
  const double sign = static_cast<double>(chi.parity());
  cplx s(0.0, 0.0);
  for (u64 n = 1; n <= N; ++n) {
    const cplx cb = std::conj(table(static_cast<i64>(n)));
    if (cb == cplx(0.0, 0.0)) continue;
    const u64 k = mulmod(n % q, static_cast<u64>(t), q);
    const cplx plus = cb / static_cast<double>(n) * (1.0 - et[(q - k) % q]);
    const cplx minus = sign * cb / -static_cast<double>(n) * (1.0 - et[k]);
    s += plus + minus;
  }
  return gauss_sum(chi) / cplx(0.0, kTwoPi) * s;
}

PolyaKernel::PolyaKernel(u64 q, u64 N) : q_(q), N_(N), residue_sums_(q, 0.0), e_table_(e_table(q)) {
  if (q == 0 || N == 0) throw DomainError("PolyaKernel: q and N must be positive");
  for (u64 n = N; n >= 1; --n) residue_sums_[n % q] += 1.0 / static_cast<double>(n);
}

std::vector<std::complex<double>> PolyaKernel::expand_all(const DirichletCharacter& chi) const {
  if (chi.modulus() != q_) throw DomainError("PolyaKernel: modulus mismatch");
  if (!chi.is_primitive()) throw DomainError("polya_expansion: character not primitive");
  const CharacterTable table(chi);
  const double sign = static_cast<double>(chi.parity());
  std::vector<cplx> weights(q_);
  cplx c0(0.0, 0.0);
  for (u64 r = 0; r < q_; ++r) {
    weights[r] = std::conj(table(static_cast<i64>(r))) * residue_sums_[r];
    c0 += weights[r];
  }
  c0 *= (1.0 - sign);
  const cplx pref = gauss_sum(chi) / cplx(0.0, kTwoPi);
  std::vector<cplx> out(q_);
  for (u64 t = 1; t <= q_; ++t) {
    cplx b(0.0, 0.0);
    u64 k = 0;
    for (u64 r = 0; r < q_; ++r, k = (k + t) % q_) {
      if (weights[r] == cplx(0.0, 0.0)) continue;
      b += weights[r] * (e_table_[(q_ - k) % q_] - sign * e_table_[k]);
    }
    out[t - 1] = pref * (c0 - b);
  }
  return out;
}

std::vector<std::complex<double>> polya_expansion_all(const DirichletCharacter& chi, u64 N) {
  return PolyaKernel(chi.modulus(), N).expand_all(chi);
}

std::complex<double> twisted_log_sum(const DirichletCharacter& chi, double theta, double x,
                                     std::optional<double> friable_bound) {
  if (!(x >= 1.0)) throw DomainError("twisted_log_sum: x must be >= 1");
  const u64 X = static_cast<u64>(std::floor(x));
  std::vector<std::uint8_t> mask;
  if (friable_bound) mask = friable_mask(X, *friable_bound);
  const CharacterTable table(chi);
  const double sign = static_cast<double>(chi.parity());
  const bool zero_phase = theta == 0.0;
  cplx s(0.0, 0.0);
  for (u64 n = 1; n <= X; ++n) {
    if (friable_bound && !mask[n]) continue;
    const cplx v = table(static_cast<i64>(n));
    if (v == cplx(0.0, 0.0)) continue;
    const double inv = 1.0 / static_cast<double>(n);
    if (zero_phase) {
      s += v * inv * (1.0 - sign);
    } else {
      const cplx ep = e_real(static_cast<double>(n) * theta);
      s += v * inv * (ep - sign * std::conj(ep));
    }
  }
  return s;
}

ArcApprox dirichlet_arc(double alpha, u64 R, u64 M, u64 q) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("dirichlet_arc: alpha outside [0, 1]");
  if (R == 0 || M == 0 || q == 0) throw DomainError("dirichlet_arc: R, M, q must be positive");
  if (M > R) throw DomainError("dirichlet_arc: M > R");

  // Denominator of the last convergent with q_k <= R.
  u64 bound = 1;
  {
    double x = alpha;
    u64 q_prev = 0, q_cur = 1;
    for (int it = 0; it < 64; ++it) {
      const double a = std::floor(x);
      const double frac = x - a;
      if (it > 0) {
        const double next = a * static_cast<double>(q_cur) + static_cast<double>(q_prev);
        if (next > static_cast<double>(R)) break;
        q_prev = q_cur;
        q_cur = static_cast<u64>(next);
      }
      bound = q_cur;
      if (frac < 1e-15) break;
      x = 1.0 / frac;
    }
  }

  const double tol = 1.0 / static_cast<double>(R);
  ArcApprox out;
  out.alpha = alpha;
  out.R = R;
  out.M = M;
  for (u64 r = 1; r <= bound; ++r) {
    const double ra = static_cast<double>(r) * alpha;
    const double b = std::round(ra);
    const double dist = std::fabs(ra - b);
    if (dist <= tol * (1.0 + 1e-12) || r == bound) {
      out.r = r;
      out.b = static_cast<i64>(b);
      out.N = dist < 1e-12 ? static_cast<double>(q) : std::min(static_cast<double>(q), 1.0 / dist);
      break;
    }
  }
  out.arc_class = out.r <= M ? ArcClass::major : ArcClass::minor;
  return out;
}

BoundReport grso_identity_check(const DirichletCharacter& chi, i64 b, u64 r, u64 N, double y) {
  if (b == 0) throw DomainError("grso_identity_check: b must be nonzero");
  if (r == 0 || N == 0) throw DomainError("grso_identity_check: r and N must be positive");
  const u64 q = chi.modulus();
  const u64 babs = static_cast<u64>(b < 0 ? -b : b);
  if (std::gcd(babs, r) != 1) throw DomainError("grso_identity_check: gcd(b, r) != 1");
  if (std::gcd(r, q) != 1) throw DomainError("grso_identity_check: gcd(r, q) != 1");

  const auto mask = friable_mask(N, y);
  const CharacterTable table(chi);
  const double sign = static_cast<double>(chi.parity());
  const u64 bres = mod_floor(b, r);

  const auto er = e_table(r);
  cplx lhs(0.0, 0.0);
  for (u64 n = 1; n <= N; ++n) {
    if (!mask[n]) continue;
    const cplx v = table(static_cast<i64>(n));
    if (v == cplx(0.0, 0.0)) continue;
    const u64 k = mulmod(n % r, bres, r);
    lhs += v / static_cast<double>(n) * (er[k] - sign * er[(r - k) % r]);
  }

  const SpfSieve sieve(r);
  cplx rhs(0.0, 0.0);
  for (const u64 d : divisors(r)) {
    if (static_cast<double>(sieve.largest_prime_factor(d)) > y) continue;
    const u64 rp = r / d;
    const auto group = build_group(rp);
    const auto erp = e_table(rp);
    const u64 M = N / d;
    const cplx chid = table(static_cast<i64>(d)) / static_cast<double>(d);
    cplx acc(0.0, 0.0);
    for (const auto& psi : enumerate_characters(group)) {
      const double factor = 1.0 - sign * static_cast<double>(psi.parity());
      if (factor == 0.0) continue;
      const CharacterTable pt(psi);
      cplx tau(0.0, 0.0);
      for (u64 c = 1; c <= rp; ++c) tau += pt(static_cast<i64>(c)) * erp[c % rp];
      cplx inner(0.0, 0.0);
      for (u64 n = 1; n <= M; ++n) {
        if (!mask[n]) continue;
        inner += table(static_cast<i64>(n)) * std::conj(pt(static_cast<i64>(n))) / static_cast<double>(n);
      }
      acc += tau * std::conj(pt(b)) * factor * inner;
    }
    rhs += chid * acc / static_cast<double>(euler_phi(rp));
  }

  BoundReport rep;
  rep.name = "grso_identity";
  rep.lhs = std::abs(lhs);
  rep.rhs_main = std::abs(rhs);
  rep.defect = std::abs(lhs - rhs);
  rep.ratio = rep.rhs_main > 0.0 ? rep.lhs / rep.rhs_main : (rep.lhs == 0.0 ? 1.0 : INFINITY);
  rep.params = {{"q", static_cast<double>(q)}, {"b", static_cast<double>(b)},
                {"r", static_cast<double>(r)}, {"N", static_cast<double>(N)},
                {"y", y},
                {"lhs_re", lhs.real()}, {"lhs_im", lhs.imag()},
                {"rhs_re", rhs.real()}, {"rhs_im", rhs.imag()}};
  return rep;
}

}  // namespace charbounds
