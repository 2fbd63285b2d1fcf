#pragma once

#include <map>
#include <optional>
#include <vector>

#include "charbounds/dirichlet.hpp"
#include "charbounds/report.hpp"

namespace charbounds {

/// Element of mu_g u {0} maximizing Re(z e(theta)).
struct RootChoice {
  CharValue z = CharValue::zero();
  double value = 0.0;
};

/// Exhaustive over the g + 1 candidates; ties go to the smallest angle of z,
/// then to z = 0.
RootChoice root_maximizer(int g, double theta);

struct LemmaMaxAverage {
  double brute = 0.0;
  double closed = 0.0;
};

/// brute  = (1/k) sum_{l mod k} max_{z in mu_g u {0}} Re(z e(theta - l/k)),
/// closed = sin(pi/g) / (k* tan(pi/(g k*))) F_{g k*}(-g k* theta).
LemmaMaxAverage lemma_max_average(int g, int k, double theta);

/// cos(2 pi {u}/n) + tan(pi/n) sin(2 pi {u}/n).
double F_n(int n, double u);

struct FnIntegral {
  double integral = 0.0;
  double main_term = 0.0;
  double defect = 0.0;
  double quad_error = 0.0;
};

/// int_A^B F_n(u)/u du, integrated panel by panel between integers.
FnIntegral fn_log_integral(int n, double A, double B);

/// LHS = sum_l value_l * sum_{p <= y, psi(p) = e(l/k)} 1/p with
/// value_l = max Re(z e(-l/k)); RHS = (1 - delta_g)(u / tan u) log log y,
/// u = pi/(g k*). Parameter "regime" is 1 when m <= (log y)^{4/7}.
BoundReport weighted_prime_sum(const DirichletCharacter& psi, int g, double y);

/// Prescribed values chi(p) = z_p in mu_g u {0} for primes p <= y.
struct PrescribedTargets {
  int g = 3;
  double y = 0.0;
  std::map<u64, CharValue> targets;

  void validate() const;
};

struct PrescribedSearch {
  std::vector<DirichletCharacter> matches;
  u64 moduli_examined = 0;
  /// N^{3/4} / (g^{2 pi(y) + 2} log^2 N) at N = Qmax.
  double vec_shape = 0.0;
};

/// All primitive characters of exact order g with conductor <= Qmax that take
/// every prescribed value at primes p not dividing g, by conductor then index.
PrescribedSearch search_prescribed(const PrescribedTargets& targets, u64 Qmax);

struct ExtremalProfile {
  int g = 3;
  int k = 2;
  /// z_l for the class psi(p) = e(l/k).
  std::vector<RootChoice> class_choices;
  double opt_coefficient = 0.0;
  double opt_main = 0.0;
  double small_prime_bound = 0.0;
  u64 matches = 0;
  std::optional<DirichletCharacter> chi;
  double achieved = 0.0;
  double defect = 0.0;
};

/// Per-class maximizers, then a search over primitive order-g characters of
/// conductor <= Qmax matching them at primes <= small_prime_bound; the match
/// with the smallest D(chi, psi; y)^2 is exhibited.
ExtremalProfile extremal_profile(const DirichletCharacter& psi, int g, double y,
                                 double small_prime_bound = 19.0, u64 Qmax = 100'000);

}  // namespace charbounds
