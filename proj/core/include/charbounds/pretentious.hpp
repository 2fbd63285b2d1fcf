#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "charbounds/dirichlet.hpp"

namespace charbounds {

/// Completely multiplicative f with |f| <= 1, stored by its values at the
/// primes p <= bound.
class CMFunction {
 public:
  CMFunction(u64 bound, std::vector<std::complex<double>> prime_values);

  static CMFunction from_primes(u64 bound, const std::function<std::complex<double>(u64)>& fp);
  static CMFunction constant(u64 bound, std::complex<double> value);
  static CMFunction from_character(const DirichletCharacter& chi, u64 bound);

  u64 bound() const { return bound_; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  const std::vector<std::complex<double>>& prime_values() const { return values_; }

  std::complex<double> at_prime(u64 p) const;
  /// Product of prime values over the factorization of n >= 1.
  std::complex<double> value(u64 n) const;

 private:
  u64 bound_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::complex<double>> values_;
};

struct PrimeTerm {
  u64 p;
  double term;
};

/// Squared distance D(f, g; y)^2 with an optional per-prime breakdown.
struct DistanceResult {
  double value = 0.0;
  double y = 0.0;
  std::vector<PrimeTerm> per_prime;
};

DistanceResult distance_sq(const CMFunction& f, const CMFunction& g, double y,
                           bool keep_breakdown = false);

/// p -> f(p) p^{-it}.
CMFunction twist(const CMFunction& f, double t);

struct TwistedMinimum {
  double value = 0.0;
  double argmin_t = 0.0;
  double grid_value = 0.0;
  double grid_spacing = 0.0;
  /// sum_{p <= y} log p / p, a bound on |d/dt D(f, n^{it}; y)^2|.
  double lipschitz = 0.0;
  /// lipschitz * grid_spacing / 2.
  double grid_error_bound = 0.0;
};

/// min over |t| <= T of D(f, n^{it}; y)^2: grid k * resolution / log y
/// anchored at 0 (plus the endpoints), then golden-section refinement to
/// 1e-6 in t around each competitive grid minimum. Ties keep the smaller t.
TwistedMinimum min_twisted_distance(const CMFunction& f, double y, double T,
                                    double resolution = 0.01);

/// D(f, n^{it}; y)^2 from the prime values directly.
double twisted_distance_sq(const CMFunction& f, double y, double t);

/// 1 - (g/pi) sin(pi/g) for odd g >= 3.
double delta_g(int g);

struct BoundParams {
  double y = 0.0;
  double T = 1.0;
  double alpha = 0.0;
  int g = 3;
  int k = 2;
  int k_star = 2;
  u64 m = 1;
  int beta = 0;
  double epsilon = 0.0;

  /// Fills k_star = k / gcd(k, g) and T = (log y)^{-alpha}.
  static BoundParams make(int g, int k, double y, double alpha, u64 m = 1, int beta = 0,
                          double epsilon = 0.0);
  void validate() const;
};

/// (delta_g + alpha pi^2 (1 - delta_g) / (4 (g k*)^2)) log log y - beta eps log m.
double mindist_rhs(const BoundParams& params);

struct Upper2Terms {
  /// 1 - (1 - delta_g) u / tan u with u = pi / (g k*).
  double coefficient = 0.0;
  /// delta_g + pi^2 (1 - delta_g) / (4 (g k*)^2).
  double strengthened_coefficient = 0.0;
  double log2_y = 0.0;
  double main = 0.0;
  double strengthened = 0.0;
};

Upper2Terms upper2_rhs(int g, int k, double y);

}  // namespace charbounds
