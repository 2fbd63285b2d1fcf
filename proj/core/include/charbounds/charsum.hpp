#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "charbounds/dirichlet.hpp"
#include "charbounds/report.hpp"

namespace charbounds {

/// M(chi) = max_{1 <= t <= q} |sum_{n <= t} chi(n)|.
struct MaxSumResult {
  double value = 0.0;
  u64 argmax_t = 0;
  std::vector<std::complex<double>> partial_trace;
};

/// Single streaming pass over t in [1, q]; ties keep the smallest t.
/// Throws DomainError for the principal character.
MaxSumResult max_char_sum(const DirichletCharacter& chi, bool keep_trace = false);
MaxSumResult max_char_sum(const CharacterTable& table, bool keep_trace = false);

/// tau(chi) = sum_{n=1}^{q} chi(n) e(n/q), direct summation.
std::complex<double> gauss_sum(const DirichletCharacter& chi);

/// Truncated Fourier expansion of sum_{n <= t} chi(n) for primitive chi:
///   tau(chi)/(2 pi i) * sum_{1 <= |n| <= N} conj(chi)(n)/n * (1 - e(-n t / q)).
std::complex<double> polya_expansion(const DirichletCharacter& chi, i64 t, u64 N);

/// Same expansion for every t = 1..q at once (entry t-1), grouping n by its
/// residue mod q so the cost is O(N + q^2) instead of O(qN).
std::vector<std::complex<double>> polya_expansion_all(const DirichletCharacter& chi, u64 N);

/// Residue-class sums S_r = sum_{n <= N, n = r (q)} 1/n shared by every
/// character mod q.
class PolyaKernel {
 public:
  PolyaKernel(u64 q, u64 N);

  u64 modulus() const { return q_; }
  u64 truncation() const { return N_; }
  std::vector<std::complex<double>> expand_all(const DirichletCharacter& chi) const;

 private:
  u64 q_;
  u64 N_;
  std::vector<double> residue_sums_;
  std::vector<std::complex<double>> e_table_;
};

/// sum over 1 <= |n| <= x (optionally y-friable |n|) of chi(n) e(n theta) / n,
/// summed by increasing |n| with +n and -n paired.
std::complex<double> twisted_log_sum(const DirichletCharacter& chi, double theta, double x,
                                     std::optional<double> friable_bound = std::nullopt);

enum class ArcClass { major, minor };

/// Rational approximation |alpha - b/r| <= 1/(rR), 1 <= r <= R, gcd(b, r) = 1.
struct ArcApprox {
  double alpha = 0.0;
  i64 b = 0;
  u64 r = 1;
  u64 R = 1;
  u64 M = 1;
  double N = 0.0;
  ArcClass arc_class = ArcClass::major;
};

/// Smallest admissible denominator r; the last continued-fraction convergent
/// with denominator <= R bounds the search.
ArcApprox dirichlet_arc(double alpha, u64 R, u64 M, u64 q);

/// Evaluates both sides of the divisor/character expansion of
///   sum_{1 <= |n| <= N, n y-friable} chi(n)/n e(nb/r)
/// and reports lhs = |direct|, rhs_main = |expansion|, defect = |direct - expansion|.
BoundReport grso_identity_check(const DirichletCharacter& chi, i64 b, u64 r, u64 N, double y);

}  // namespace charbounds
