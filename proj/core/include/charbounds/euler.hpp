#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "charbounds/dirichlet.hpp"
#include "charbounds/report.hpp"

namespace charbounds {

/// prod_{p <= X} (1 - chi(p)/p)^{-1}, accumulated as a sum of logarithms.
std::complex<double> truncated_L1(const DirichletCharacter& chi, double X);

/// sum_{p <= X} -log(1 - chi(p)/p) on the principal branch.
std::complex<double> truncated_log_L1(const DirichletCharacter& chi, double X);

/// sum_{n <= N} chi(n)/n.
std::complex<double> partial_sum_L1(const DirichletCharacter& chi, u64 N);

/// p (1 - (1 - z/p)(1 - 1/p)^{-z}) evaluated at z = chi(p); zero when p | q.
std::complex<double> k_chi(const DirichletCharacter& chi, u64 p);
std::complex<double> k_chi_value(std::complex<double> z, u64 p);

/// sum_{p <= X} -log(1 - k_chi(p)/p).
std::complex<double> truncated_log_K1(const DirichletCharacter& chi, double X);

struct MertensConstantResult {
  double value = 0.0;
  /// Imaginary part before it was discarded.
  double imag_residual = 0.0;
};

/// C_m(a) with K(1, chi) and L(1, chi) truncated at primes <= X.
/// Throws DomainError when gcd(a, m) > 1 or m < 2.
MertensConstantResult mertens_constant_full(u64 m, u64 a, double X);
double mertens_constant(u64 m, u64 a, double X);

/// C_m(a) for every a mod m from one pass over the characters; entries with
/// gcd(a, m) > 1 are NaN.
std::vector<MertensConstantResult> mertens_constants_all(u64 m, double X);

struct MertensAPResult {
  u64 m = 1;
  u64 a = 0;
  double x = 0.0;
  double value = 0.0;
  double main_term = 0.0;
  double constant_estimate = 0.0;
  /// m <= log x.
  bool in_regime = true;
};

/// Partial sums sum_{n <= N} chi(n)/n and Euler products over p <= X for every
/// character mod q, sharing residue-class aggregates: 1/n summed by n mod q,
/// and sum p^{-j}/j by p^j mod q for the powers j that matter in double
/// precision.
class LValueKernel {
 public:
  LValueKernel(u64 q, u64 N, double X);

  u64 modulus() const { return q_; }
  std::complex<double> partial_sum(const DirichletCharacter& chi) const;
  std::complex<double> log_euler_product(const DirichletCharacter& chi) const;

 private:
  u64 q_;
  std::vector<double> harmonic_by_residue_;
  std::vector<double> log_by_residue_;
};

/// sum_{p <= x, p = a (m)} -log(1 - 1/p) by exact prime enumeration.
MertensAPResult mertens_ap(double x, u64 m, u64 a);

/// Same sums for every residue a mod m from one sieve pass; entry a.
std::vector<MertensAPResult> mertens_ap_all(double x, u64 m);

/// LHS = M(chi) + sqrt(q), RHS = sqrt(q m)/phi(m) |L_X(1, chi conj(psi))|.
/// Requires primitive chi, psi of opposite parity. The parameter
/// "regime" is 1 when m <= q/(log q)^2 and 0 otherwise.
BoundReport charsum_L1_functional(const DirichletCharacter& chi, const DirichletCharacter& psi,
                                  double X);

}  // namespace charbounds
