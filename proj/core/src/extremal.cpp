#include "charbounds/extremal.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numeric>

#include "charbounds/errors.hpp"
#include "charbounds/pretentious.hpp"

namespace charbounds {

namespace {

void require_odd_g(int g, const char* what) {
  if (g < 3 || g % 2 == 0) throw DomainError(std::string(what) + ": g must be odd and >= 3");
}

/// l with psi(p) = e(l/k), or -1 when psi(p) = 0.
long class_of(const CharValue& v, u64 k) {
  if (v.is_zero()) return -1;
  return static_cast<long>(v.root().numerator() * (k / v.root().denominator()));
}

}  // namespace

RootChoice root_maximizer(int g, double theta) {
  require_odd_g(g, "root_maximizer");
  RootChoice best;
  best.value = -2.0;
  for (int j = 0; j < g; ++j) {
    const double v = std::cos(kTwoPi * (static_cast<double>(j) / g + theta));
    if (v > best.value + 1e-12) {
      best.value = v;
      best.z = CharValue::unit(RootOfUnity(static_cast<u64>(j), static_cast<u64>(g)));
    }
  }
  if (0.0 > best.value + 1e-12) best = RootChoice{};
  return best;
}

LemmaMaxAverage lemma_max_average(int g, int k, double theta) {
  require_odd_g(g, "lemma_max_average");
  if (k < 2 || k % 2 != 0) throw DomainError("lemma_max_average: k must be even and >= 2");
  LemmaMaxAverage out;
  for (int l = 0; l < k; ++l)
    out.brute += root_maximizer(g, theta - static_cast<double>(l) / k).value;
  out.brute /= k;
  const int ks = k / std::gcd(k, g);
  const int n = g * ks;
  out.closed = std::sin(kPi / g) / (ks * std::tan(kPi / n)) * F_n(n, -n * theta);
  return out;
}

double F_n(int n, double u) {
  if (n < 3) throw DomainError("F_n: n must be >= 3");
  const double frac = u - std::floor(u);
  const double a = kTwoPi * frac / n;
  return std::cos(a) + std::tan(kPi / n) * std::sin(a);
}

FnIntegral fn_log_integral(int n, double A, double B) {
  if (n < 3) throw DomainError("fn_log_integral: n must be >= 3");
  if (!(A > 0.0)) throw DomainError("fn_log_integral: A must be positive");
  if (B < A) throw DomainError("fn_log_integral: need B >= A");
  FnIntegral out;
  const double c = n / kPi * std::tan(kPi / n);
  if (A >= 1.0)
    out.main_term = c * std::log(B / A);
  else if (B <= 1.0)
    out.main_term = std::log(B / A);
  else
    out.main_term = c * std::log(B) - std::log(A);

  using boost::math::quadrature::gauss_kronrod;
  double lo = A;
  while (lo < B) {
    const double base = std::floor(lo);
    const double hi = std::min(B, base + 1.0);
    // Within one panel {u} = u - base, so the integrand is smooth up to hi.
    const auto f = [n, base](double u) {
      const double a = kTwoPi * (u - base) / n;
      return (std::cos(a) + std::tan(kPi / n) * std::sin(a)) / u;
    };
    double err = 0.0;
    out.integral += gauss_kronrod<double, 31>::integrate(f, lo, hi, 15, 1e-13, &err);
    out.quad_error += err;
    lo = hi;
  }
  out.defect = out.integral - out.main_term;
  return out;
}

BoundReport weighted_prime_sum(const DirichletCharacter& psi, int g, double y) {
  require_odd_g(g, "weighted_prime_sum");
  if (psi.parity() != -1) throw DomainError("weighted_prime_sum: psi must be odd");
  if (!(y > std::exp(1.0))) throw DomainError("weighted_prime_sum: need log log y > 0");
  const u64 k = psi.order();
  std::vector<double> class_sums(k, 0.0);
  for (const auto p : primes_up_to(static_cast<u64>(std::floor(y)))) {
    const long l = class_of(psi.value(p), k);
    if (l >= 0) class_sums[static_cast<std::size_t>(l)] += 1.0 / static_cast<double>(p);
  }
  double lhs = 0.0;
  for (u64 l = 0; l < k; ++l)
    lhs += root_maximizer(g, -static_cast<double>(l) / static_cast<double>(k)).value * class_sums[l];

  const int ks = static_cast<int>(k) / std::gcd(static_cast<int>(k), g);
  const double u = kPi / (g * ks);
  const double dg = delta_g(g);
  const double log2y = std::log(std::log(y));
  BoundReport rep;
  rep.name = "weighted_prime_sum";
  rep.lhs = lhs;
  rep.rhs_main = (1.0 - dg) * u / std::tan(u) * log2y;
  rep.ratio = rep.lhs / rep.rhs_main;
  rep.defect = rep.lhs - rep.rhs_main;
  const double md = static_cast<double>(psi.modulus());
  rep.params = {{"m", md}, {"k", static_cast<double>(k)}, {"k_star", static_cast<double>(ks)},
                {"g", static_cast<double>(g)}, {"y", y},
                {"regime", md <= std::pow(std::log(y), 4.0 / 7.0) ? 1.0 : 0.0}};
  return rep;
}

void PrescribedTargets::validate() const {
  require_odd_g(g, "PrescribedTargets");
  for (const auto& [p, z] : targets) {
    if (!is_prime(p)) throw DomainError("PrescribedTargets: key is not prime");
    if (static_cast<double>(p) > y) throw DomainError("PrescribedTargets: prime exceeds y");
    if (!z.is_zero() && static_cast<u64>(g) % z.root().denominator() != 0)
      throw DomainError("PrescribedTargets: target is not a g-th root of unity");
  }
}

PrescribedSearch search_prescribed(const PrescribedTargets& targets, u64 Qmax) {
  targets.validate();
  if (Qmax > DirichletGroup::kSweepLimit) throw CapacityError("search_prescribed: Qmax beyond sweep limit");
  if (primes_up_to(static_cast<u64>(std::max(0.0, std::floor(targets.y)))).size() > 8)
    throw CapacityError("search_prescribed: pi(y) > 8");

  std::vector<std::pair<u64, CharValue>> active;
  for (const auto& [p, z] : targets.targets)
    if (p % static_cast<u64>(targets.g) != 0) active.emplace_back(p, z);

  CharacterFilter filter;
  filter.order_equals = static_cast<u64>(targets.g);
  filter.primitive_only = true;

  PrescribedSearch out;
  for (u64 q = 2; q <= Qmax; ++q) {
    if (!may_have_characters(q, filter)) continue;
    ++out.moduli_examined;
    const auto group = build_group(q);
    for (auto& chi : enumerate_characters(group, filter)) {
      bool ok = true;
      for (const auto& [p, z] : active) {
        if (!(chi.value(static_cast<i64>(p)) == z)) {
          ok = false;
          break;
        }
      }
      if (ok) out.matches.push_back(std::move(chi));
    }
  }
  const double N = static_cast<double>(Qmax);
  const double piy = static_cast<double>(primes_up_to(static_cast<u64>(std::max(0.0, targets.y))).size());
  const double lN = std::log(N);
  out.vec_shape = N > 1.0 ? std::pow(N, 0.75) / (std::pow(targets.g, 2.0 * piy + 2.0) * lN * lN) : 0.0;
  return out;
}

ExtremalProfile extremal_profile(const DirichletCharacter& psi, int g, double y,
                                 double small_prime_bound, u64 Qmax) {
  require_odd_g(g, "extremal_profile");
  if (psi.parity() != -1) throw DomainError("extremal_profile: psi must be odd");
  if (!psi.is_primitive()) throw DomainError("extremal_profile: psi must be primitive");
  const u64 k = psi.order();
  ExtremalProfile out;
  out.g = g;
  out.k = static_cast<int>(k);
  for (u64 l = 0; l < k; ++l)
    out.class_choices.push_back(root_maximizer(g, -static_cast<double>(l) / static_cast<double>(k)));
  const int ks = static_cast<int>(k) / std::gcd(static_cast<int>(k), g);
  const double u = kPi / (g * ks);
  out.opt_coefficient = 1.0 - (1.0 - delta_g(g)) * u / std::tan(u);
  out.opt_main = out.opt_coefficient * std::log(std::log(y));
  out.small_prime_bound = small_prime_bound;

  PrescribedTargets targets;
  targets.g = g;
  targets.y = small_prime_bound;
  for (const auto p : primes_up_to(static_cast<u64>(std::floor(small_prime_bound)))) {
    const long l = class_of(psi.value(p), k);
    if (l < 0 || p % static_cast<u64>(g) == 0) continue;
    targets.targets.emplace(p, out.class_choices[static_cast<std::size_t>(l)].z);
  }
  auto found = search_prescribed(targets, Qmax);
  out.matches = found.matches.size();

  const u64 ybound = static_cast<u64>(std::floor(y));
  const auto fpsi = CMFunction::from_character(psi, ybound);
  double best = INFINITY;
  for (auto& chi : found.matches) {
    const double d = distance_sq(CMFunction::from_character(chi, ybound), fpsi, y).value;
    if (d < best) {
      best = d;
      out.chi = chi;
    }
  }
  if (out.chi) {
    out.achieved = best;
    out.defect = best - out.opt_main;
  }
  return out;
}

}  // namespace charbounds
