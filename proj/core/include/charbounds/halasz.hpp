#pragma once

#include <complex>

#include "charbounds/pretentious.hpp"
#include "charbounds/report.hpp"

namespace charbounds {

/// sum_{n <= x, n y-friable} f(n)/n in increasing n.
std::complex<double> friable_log_mean(const CMFunction& f, double x, double y);

/// prod_{p <= P} (1 - f(p)/p^{1+s})^{-1}, accumulated in log space.
std::complex<double> euler_F(const CMFunction& f, std::complex<double> s, double P);

struct HTOptions {
  /// Bands |k| <= K; 0 selects ceil(10/T).
  int K = 0;
  /// Step of the sigma grid, which is anchored at sigma = 1.
  double sigma_step = 1.0 / 32.0;
  /// Points per band in t (endpoints included).
  int t_points = 17;
  /// Coordinate refinement around each band's grid maximum.
  bool refine = true;
};

struct HTResult {
  /// sum over |k| <= K of the band maxima of |F(1+s)/s|^2.
  double H_sq = 0.0;
  double H = 0.0;
  int K = 0;
  /// 2 (1 + 1/alpha)^2 / (T^2 (K - 1/2)), bounding the bands |k| > K.
  double tail_bound = 0.0;
};

/// Band maxima of |F(1+s)/s|^2 over alpha <= sigma <= 1, |t - kT| <= T/2,
/// with F the Euler product of f over all its primes.
HTResult H_T(const CMFunction& f, double alpha, double T, const HTOptions& options = {});

/// int_{1/log x}^{1} H_T(alpha)/alpha d alpha on a log-spaced trapezoid grid.
double mv_integral(const CMFunction& f, double x, double T, int points = 16,
                   const HTOptions& options = {});

struct HalaszReport {
  double lhs = 0.0;
  double rhs_main = 0.0;
  double rhs_tail = 0.0;
  double ratio = 0.0;
  double x = 0.0;
  double y = 0.0;
  double T = 0.0;
  double resolution = 0.0;
  double min_distance = 0.0;
  double argmin_t = 0.0;
};

/// |friable_log_mean(f, x, y)| against (log y) exp(-M(f; y, T)) + 1/T.
HalaszReport halasz_bound_check(const CMFunction& f, double x, double y, double T,
                                double resolution = 0.01);

/// LHS = max_{|t| <= T} |F(1 + alpha + it)| over the primes p <= y,
/// RHS = (log y) exp(-M(f; y, T)). T < alpha is rejected unless
/// counterexample_mode is set.
BoundReport max_F_distance_check(const CMFunction& f, double y, double alpha, double T,
                                 bool counterexample_mode = false, double resolution = 0.01);

}  // namespace charbounds
