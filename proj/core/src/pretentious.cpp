#include "charbounds/pretentious.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "charbounds/errors.hpp"

namespace charbounds {

namespace {

using cplx = std::complex<double>;

std::size_t prime_count_upto(const std::vector<std::uint32_t>& primes, double y) {
  if (y < 2.0) return 0;
  const auto cut = static_cast<u64>(std::floor(y));
  return static_cast<std::size_t>(
      std::upper_bound(primes.begin(), primes.end(), cut,
                       [](u64 v, std::uint32_t p) { return v < p; }) -
      primes.begin());
}

void require_cover(const CMFunction& f, double y, const char* what) {
  if (y > static_cast<double>(f.bound()) + 1e-9)
    throw DomainError(std::string(what) + ": y exceeds the function's prime bound");
}

}  // namespace

CMFunction::CMFunction(u64 bound, std::vector<std::complex<double>> prime_values)
    : bound_(bound), primes_(primes_up_to(bound)), values_(std::move(prime_values)) {
  if (values_.size() != primes_.size())
    throw DomainError("CMFunction: need one value per prime <= bound");
  for (const auto& v : values_)
    if (std::abs(v) > 1.0 + 1e-12) throw DomainError("CMFunction: |f(p)| > 1");
}

CMFunction CMFunction::from_primes(u64 bound, const std::function<std::complex<double>(u64)>& fp) {
  const auto ps = primes_up_to(bound);
  std::vector<cplx> vals;
  vals.reserve(ps.size());
  for (const auto p : ps) vals.push_back(fp(p));
  return CMFunction(bound, std::move(vals));
}

CMFunction CMFunction::constant(u64 bound, std::complex<double> value) {
  return from_primes(bound, [value](u64) { return value; });
}

CMFunction CMFunction::from_character(const DirichletCharacter& chi, u64 bound) {
  return from_primes(bound, [&chi](u64 p) { return chi(static_cast<i64>(p)); });
}

std::complex<double> CMFunction::at_prime(u64 p) const {
  if (p > bound_) throw DomainError("CMFunction: prime beyond bound");
  const auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) throw DomainError("CMFunction: argument is not prime");
  return values_[static_cast<std::size_t>(it - primes_.begin())];
}

std::complex<double> CMFunction::value(u64 n) const {
  if (n == 0) throw DomainError("CMFunction: n must be positive");
  cplx out(1.0, 0.0);
  for (const auto& [p, a] : factorize(n)) {
    const cplx v = at_prime(p);
    for (int i = 0; i < a; ++i) out *= v;
  }
  return out;
}

DistanceResult distance_sq(const CMFunction& f, const CMFunction& g, double y, bool keep_breakdown) {
  require_cover(f, y, "distance_sq");
  require_cover(g, y, "distance_sq");
  DistanceResult out;
  out.y = y;
  const std::size_t count = prime_count_upto(f.primes(), y);
  const auto& fv = f.prime_values();
  const auto& gv = g.prime_values();
  for (std::size_t i = 0; i < count; ++i) {
    const double p = static_cast<double>(f.primes()[i]);
    const double term = (1.0 - (fv[i] * std::conj(gv[i])).real()) / p;
    out.value += term;
    if (keep_breakdown) out.per_prime.push_back({f.primes()[i], term});
  }
  return out;
}

CMFunction twist(const CMFunction& f, double t) {
  std::vector<cplx> vals(f.prime_values());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double phase = -t * std::log(static_cast<double>(f.primes()[i]));
    vals[i] *= cplx(std::cos(phase), std::sin(phase));
  }
  return CMFunction(f.bound(), std::move(vals));
}

double twisted_distance_sq(const CMFunction& f, double y, double t) {
  require_cover(f, y, "twisted_distance_sq");
  const std::size_t count = prime_count_upto(f.primes(), y);
  double s = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double p = static_cast<double>(f.primes()[i]);
    const double phase = -t * std::log(p);
    const double re = (f.prime_values()[i] * cplx(std::cos(phase), std::sin(phase))).real();
    s += (1.0 - re) / p;
  }
  return s;
}

TwistedMinimum min_twisted_distance(const CMFunction& f, double y, double T, double resolution) {
  if (!(T > 0.0)) throw DomainError("min_twisted_distance: T must be positive");
  if (!(resolution > 0.0)) throw DomainError("min_twisted_distance: resolution must be positive");
  require_cover(f, y, "min_twisted_distance");

  const std::size_t count = prime_count_upto(f.primes(), y);
  std::vector<double> logp(count), invp(count);
  std::vector<cplx> vals(f.prime_values().begin(), f.prime_values().begin() + static_cast<long>(count));
  TwistedMinimum out;
  for (std::size_t i = 0; i < count; ++i) {
    const double p = static_cast<double>(f.primes()[i]);
    logp[i] = std::log(p);
    invp[i] = 1.0 / p;
    out.lipschitz += logp[i] * invp[i];
  }
  const auto eval = [&](double t) {
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double phase = -t * logp[i];
      s += (1.0 - (vals[i] * cplx(std::cos(phase), std::sin(phase))).real()) * invp[i];
    }
    return s;
  };

  const double logy = std::log(std::max(y, 3.0));
  const double h = resolution / logy;
  out.grid_spacing = h;
  out.grid_error_bound = out.lipschitz * h / 2.0;

  std::vector<double> ts;
  const auto kmax = static_cast<long>(std::floor(T / h));
  if (static_cast<double>(kmax) * h < T) ts.push_back(-T);
  for (long k = -kmax; k <= kmax; ++k) ts.push_back(static_cast<double>(k) * h);
  if (static_cast<double>(kmax) * h < T) ts.push_back(T);

  std::vector<double> vs(ts.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    vs[i] = eval(ts[i]);
    if (vs[i] < vs[best]) best = i;
  }
  out.grid_value = vs[best];
  out.value = vs[best];
  out.argmin_t = ts[best];

  constexpr double kInvPhi = 0.6180339887498948482;
  const double threshold = vs[best] + out.lipschitz * h;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (vs[i] > threshold) continue;
    if (i > 0 && vs[i - 1] < vs[i]) continue;
    if (i + 1 < ts.size() && vs[i + 1] < vs[i]) continue;
    double a = i > 0 ? ts[i - 1] : ts[i];
    double b = i + 1 < ts.size() ? ts[i + 1] : ts[i];
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = eval(c), fd = eval(d);
    while (b - a > 1e-6) {
      if (fc <= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        fc = eval(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        fd = eval(d);
      }
    }
    const double tm = 0.5 * (a + b);
    const double vm = eval(tm);
    if (vm < out.value || (vm == out.value && tm < out.argmin_t)) {
      out.value = vm;
      out.argmin_t = tm;
    }
  }
  return out;
}

double delta_g(int g) {
  if (g < 3 || g % 2 == 0) throw DomainError("delta_g: g must be odd and >= 3");
  const double gd = static_cast<double>(g);
  return 1.0 - gd / kPi * std::sin(kPi / gd);
}

BoundParams BoundParams::make(int g, int k, double y, double alpha, u64 m, int beta, double epsilon) {
  BoundParams p;
  p.g = g;
  p.k = k;
  p.k_star = k / std::gcd(k, g);
  p.y = y;
  p.alpha = alpha;
  p.T = std::pow(std::log(y), -alpha);
  p.m = m;
  p.beta = beta;
  p.epsilon = epsilon;
  p.validate();
  return p;
}

void BoundParams::validate() const {
  if (g < 3 || g % 2 == 0) throw DomainError("BoundParams: g must be odd and >= 3");
  if (k < 1 || k_star < 1 || k_star * std::gcd(k, g) != k)
    throw DomainError("BoundParams: k_star must equal k / gcd(k, g)");
  if (beta != 0 && beta != 1) throw DomainError("BoundParams: beta must be 0 or 1");
  if (!(T > 0.0)) throw DomainError("BoundParams: T must be positive");
  if (m == 0) throw DomainError("BoundParams: m must be positive");
}

double mindist_rhs(const BoundParams& params) {
  params.validate();
  if (!(params.y > 1.0) || !(std::log(std::log(params.y)) > 0.0))
    throw DomainError("mindist_rhs: need log log y > 0");
  const double dg = delta_g(params.g);
  const double gk = static_cast<double>(params.g) * params.k_star;
  const double coeff = dg + params.alpha * kPi * kPi * (1.0 - dg) / (4.0 * gk * gk);
  return coeff * std::log(std::log(params.y)) -
         params.beta * params.epsilon * std::log(static_cast<double>(params.m));
}

Upper2Terms upper2_rhs(int g, int k, double y) {
  if (g < 3 || g % 2 == 0) throw DomainError("upper2_rhs: g must be odd and >= 3");
  if (k < 2 || k % 2 != 0) throw DomainError("upper2_rhs: k must be even and >= 2");
  const int k_star = k / std::gcd(k, g);
  const double gk = static_cast<double>(g) * k_star;
  if (gk < 6.0) throw DomainError("upper2_rhs: need g k* >= 6");
  if (!(y > 1.0) || !(std::log(std::log(y)) > 0.0)) throw DomainError("upper2_rhs: need log log y > 0");
  const double dg = delta_g(g);
  const double u = kPi / gk;
  Upper2Terms out;
  out.coefficient = 1.0 - (1.0 - dg) * u / std::tan(u);
  out.strengthened_coefficient = dg + kPi * kPi * (1.0 - dg) / (4.0 * gk * gk);
  out.log2_y = std::log(std::log(y));
  out.main = out.coefficient * out.log2_y;
  out.strengthened = out.strengthened_coefficient * out.log2_y;
  return out;
}

}  // namespace charbounds
