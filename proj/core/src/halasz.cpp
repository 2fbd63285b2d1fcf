#include "charbounds/halasz.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "charbounds/errors.hpp"

namespace charbounds {

namespace {

using cplx = std::complex<double>;

std::size_t primes_upto_count(const CMFunction& f, double P) {
  const auto& ps = f.primes();
  if (P < 2.0) return 0;
  const auto cut = static_cast<std::uint32_t>(std::min<double>(std::floor(P), 4.0e9));
  return static_cast<std::size_t>(std::upper_bound(ps.begin(), ps.end(), cut) - ps.begin());
}

struct EulerLog {
  std::vector<double> logp;
  std::vector<cplx> coef;

  EulerLog(const CMFunction& f, double P) {
    const std::size_t n = primes_upto_count(f, P);
    logp.resize(n);
    coef.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double p = static_cast<double>(f.primes()[i]);
      logp[i] = std::log(p);
      coef[i] = f.prime_values()[i] / p;
    }
  }

  cplx log_value(cplx s) const {
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < logp.size(); ++i) {
      if (coef[i] == cplx(0.0, 0.0)) continue;
      acc -= std::log(1.0 - coef[i] * std::exp(-s * logp[i]));
    }
    return acc;
  }

  double objective(double sigma, double t) const {
    const cplx s(sigma, t);
    return std::exp(2.0 * log_value(s).real()) / std::norm(s);
  }
};

}  // namespace

std::complex<double> friable_log_mean(const CMFunction& f, double x, double y) {
  if (!(x >= 1.0)) return {0.0, 0.0};
  const u64 X = static_cast<u64>(std::floor(x));
  const double cover = std::min(static_cast<double>(X), y);
  if (cover >= 2.0 && static_cast<double>(f.bound()) < std::floor(cover))
    throw DomainError("friable_log_mean: f undefined at some prime <= min(x, y)");
  const SpfSieve sieve(X);
  const u64 fcut = static_cast<u64>(std::max(0.0, std::floor(cover)));
  std::vector<cplx> at(fcut + 1, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < f.primes().size() && f.primes()[i] <= fcut; ++i)
    at[f.primes()[i]] = f.prime_values()[i];

  std::vector<cplx> val(X + 1, cplx(0.0, 0.0));
  val[1] = 1.0;
  cplx sum(1.0, 0.0);
  for (u64 n = 2; n <= X; ++n) {
    const u64 p = sieve.spf(n);
    if (static_cast<double>(p) > y) continue;
    val[n] = at[p] * val[n / p];
    sum += val[n] / static_cast<double>(n);
  }
  return sum;
}

std::complex<double> euler_F(const CMFunction& f, std::complex<double> s, double P) {
  if (!(s.real() > 0.0)) throw DomainError("euler_F: need Re(s) > 0");
  if (P > static_cast<double>(f.bound()) + 1e-9) throw DomainError("euler_F: P beyond f's bound");
  return std::exp(EulerLog(f, P).log_value(s));
}

HTResult H_T(const CMFunction& f, double alpha, double T, const HTOptions& options) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("H_T: alpha outside (0, 1]");
  if (!(T > 0.0 && T <= 1.0)) throw DomainError("H_T: T outside (0, 1]");
  if (!(options.sigma_step > 0.0) || options.t_points < 2) throw DomainError("H_T: bad grid");
  const EulerLog F(f, static_cast<double>(f.bound()));
  HTResult out;
  out.K = options.K > 0 ? options.K : static_cast<int>(std::ceil(10.0 / T));

  std::vector<double> sigmas;
  for (int j = 0;; ++j) {
    const double s = 1.0 - j * options.sigma_step;
    if (s < alpha - 1e-12) break;
    sigmas.push_back(std::max(s, alpha));
  }
  if (sigmas.back() > alpha + 1e-12) sigmas.push_back(alpha);

  const auto objective = [&F](double sigma, double t) { return F.objective(sigma, t); };
  for (int k = -out.K; k <= out.K; ++k) {
    const double t_lo = k * T - T / 2.0;
    const double t_hi = k * T + T / 2.0;
    double best = -1.0, bs = 1.0, bt = 0.0;
    for (int i = 0; i < options.t_points; ++i) {
      const double t = t_lo + (t_hi - t_lo) * i / (options.t_points - 1);
      for (const double sg : sigmas) {
        const double v = objective(sg, t);
        if (v > best) {
          best = v;
          bs = sg;
          bt = t;
        }
      }
    }
    if (options.refine) {
      double ds = options.sigma_step / 2.0;
      double dt = (t_hi - t_lo) / (options.t_points - 1) / 2.0;
      for (int it = 0; it < 40 && (ds > 1e-7 || dt > 1e-7); ++it) {
        bool moved = false;
        const double cand[4][2] = {{bs + ds, bt}, {bs - ds, bt}, {bs, bt + dt}, {bs, bt - dt}};
        for (const auto& c : cand) {
          const double sg = std::clamp(c[0], alpha, 1.0);
          const double t = std::clamp(c[1], t_lo, t_hi);
          const double v = objective(sg, t);
          if (v > best) {
            best = v;
            bs = sg;
            bt = t;
            moved = true;
          }
        }
        if (!moved) {
          ds /= 2.0;
          dt /= 2.0;
        }
      }
    }
    out.H_sq += best;
  }
  out.H = std::sqrt(out.H_sq);
  const double zb = 1.0 + 1.0 / alpha;
  out.tail_bound = 2.0 * zb * zb / (T * T) / (out.K - 0.5);
  return out;
}

double mv_integral(const CMFunction& f, double x, double T, int points, const HTOptions& options) {
  if (!(x > std::exp(1.0))) throw DomainError("mv_integral: need log x > 1");
  if (points < 2) throw DomainError("mv_integral: need at least two points");
  const double v0 = -std::log(std::log(x));
  double acc = 0.0;
  for (int i = 0; i < points; ++i) {
    const double v = v0 * (1.0 - static_cast<double>(i) / (points - 1));
    const double h = H_T(f, std::exp(v), T, options).H;
    acc += (i == 0 || i == points - 1) ? h / 2.0 : h;
  }
  return acc * (-v0) / (points - 1);
}

HalaszReport halasz_bound_check(const CMFunction& f, double x, double y, double T, double resolution) {
  if (!(T > 0.0 && T <= 1.0)) throw DomainError("halasz_bound_check: T outside (0, 1]");
  HalaszReport rep;
  rep.x = x;
  rep.y = y;
  rep.T = T;
  rep.resolution = resolution;
  rep.lhs = std::abs(friable_log_mean(f, x, y));
  const auto m = min_twisted_distance(f, y, T, resolution);
  rep.min_distance = m.value;
  rep.argmin_t = m.argmin_t;
  rep.rhs_main = std::log(y) * std::exp(-m.value);
  rep.rhs_tail = 1.0 / T;
  rep.ratio = rep.lhs / (rep.rhs_main + rep.rhs_tail);
  return rep;
}

BoundReport max_F_distance_check(const CMFunction& f, double y, double alpha, double T,
                                 bool counterexample_mode, double resolution) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("max_F_distance_check: alpha outside (0, 1]");
  if (!(T > 0.0)) throw DomainError("max_F_distance_check: T must be positive");
  if (T < alpha && !counterexample_mode) throw DomainError("max_F_distance_check: T < alpha");
  if (y > static_cast<double>(f.bound()) + 1e-9) throw DomainError("max_F_distance_check: y beyond f's bound");
  const EulerLog F(f, y);
  const double h = resolution / std::log(std::max(y, 3.0));
  const auto kmax = static_cast<long>(std::floor(T / h));
  double lhs = 0.0, arg = 0.0;
  const auto visit = [&](double t) {
    const double v = std::exp(F.log_value(cplx(alpha, t)).real());
    if (v > lhs) {
      lhs = v;
      arg = t;
    }
  };
  visit(-T);
  for (long k = -kmax; k <= kmax; ++k) visit(static_cast<double>(k) * h);
  visit(T);

  const auto m = min_twisted_distance(f, y, T, resolution);
  BoundReport rep;
  rep.name = "max_F_distance";
  rep.lhs = lhs;
  rep.rhs_main = std::log(y) * std::exp(-m.value);
  rep.ratio = rep.lhs / rep.rhs_main;
  rep.defect = rep.lhs - rep.rhs_main;
  rep.params = {{"y", y}, {"alpha", alpha}, {"T", T}, {"argmax_t", arg},
                {"M", m.value}, {"counterexample_mode", counterexample_mode ? 1.0 : 0.0}};
  return rep;
}

}  // namespace charbounds
