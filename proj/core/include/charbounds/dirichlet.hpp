#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "charbounds/arith.hpp"

namespace charbounds {

/// Exact root of unity e(num/den) = exp(2 pi i num/den), kept as a reduced
/// fraction of a full turn with 0 <= num < den.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(u64 num, u64 den);

  u64 numerator() const { return num_; }
  u64 denominator() const { return den_; }
  double turns() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  RootOfUnity operator*(const RootOfUnity& other) const;
  RootOfUnity pow(i64 k) const;
  RootOfUnity conj() const;
  std::complex<double> to_complex() const;

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  u64 num_ = 0;
  u64 den_ = 1;
};

/// Value of a Dirichlet character: zero or an exact root of unity.
class CharValue {
 public:
  static CharValue zero() { return CharValue(); }
  static CharValue unit(RootOfUnity r) { return CharValue(r); }

  bool is_zero() const { return zero_; }
  const RootOfUnity& root() const { return root_; }
  std::complex<double> to_complex() const {
    return zero_ ? std::complex<double>(0.0, 0.0) : root_.to_complex();
  }

  friend bool operator==(const CharValue&, const CharValue&) = default;

 private:
  CharValue() : zero_(true) {}
  explicit CharValue(RootOfUnity r) : zero_(false), root_(r) {}

  bool zero_;
  RootOfUnity root_;
};

/// One cyclic factor of (Z/qZ)^*. The factor at 2^a, a >= 3, is split into
/// <-1> (order 2) and <5> (order 2^(a-2)); both entries carry modulus 2^a.
struct GroupComponent {
  u64 prime;
  int prime_exponent;
  u64 modulus;
  u64 generator;
  u64 order;
};

/// The unit group modulo q as a product of cyclic components with
/// discrete-log tables. Immutable after construction.
class DirichletGroup {
 public:
  /// Largest modulus accepted by build_group.
  static constexpr u64 kSweepLimit = 10'000'000;

  u64 modulus() const { return q_; }
  u64 phi() const { return phi_; }
  /// lcm of the component orders (the exponent of the group).
  u64 exponent() const { return exponent_; }
  const std::vector<GroupComponent>& components() const { return components_; }

  bool is_unit(i64 n) const;
  /// Discrete log of the unit n on component j (n is reduced internally).
  u64 dlog(std::size_t j, i64 n) const;
  /// The unit mod q whose j-th coordinate is 1 and all others 0.
  u64 basis_element(std::size_t j) const { return basis_[j]; }

 private:
  friend std::shared_ptr<const DirichletGroup> build_group(u64 q);
  DirichletGroup() = default;

  u64 q_ = 1;
  u64 phi_ = 1;
  u64 exponent_ = 1;
  std::vector<GroupComponent> components_;
  std::vector<std::vector<std::uint32_t>> dlog_tables_;
  std::vector<u64> basis_;
};

using GroupPtr = std::shared_ptr<const DirichletGroup>;

/// Builds (Z/qZ)^* with the smallest primitive root on each odd prime-power
/// component. Throws DomainError for q = 0 and CapacityError above kSweepLimit.
GroupPtr build_group(u64 q);

/// A character given by one exponent per group component:
/// chi(g_j) = e(exponent_j / order_j).
class DirichletCharacter {
 public:
  DirichletCharacter(GroupPtr group, std::vector<u64> exponents);

  const DirichletGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  u64 modulus() const { return group_->modulus(); }
  const std::vector<u64>& exponents() const { return exponents_; }

  u64 conductor() const { return conductor_; }
  u64 order() const { return order_; }
  /// chi(-1) in {+1, -1}.
  int parity() const { return parity_; }
  bool is_primitive() const { return conductor_ == group_->modulus(); }
  bool is_principal() const { return order_ == 1; }

  CharValue value(i64 n) const;
  std::complex<double> operator()(i64 n) const { return value(n).to_complex(); }

  /// Position in the lexicographic enumeration of all characters mod q.
  u64 index() const;
  DirichletCharacter conj() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
  }

 private:
  GroupPtr group_;
  std::vector<u64> exponents_;
  u64 conductor_ = 1;
  u64 order_ = 1;
  int parity_ = 1;
};

std::complex<double> eval(const DirichletCharacter& chi, i64 n);

struct CharacterInvariants {
  u64 conductor;
  u64 order;
  int parity;
  bool primitive;
};

CharacterInvariants character_invariants(const DirichletCharacter& chi);

/// Reference conductor: smallest d | q such that chi is constant on the units
/// of each class mod d. Quadratic in q; used to cross-check the fast path.
u64 conductor_by_constancy(const DirichletCharacter& chi);

struct CharacterFilter {
  std::optional<u64> order_divides;
  std::optional<u64> order_equals;
  std::optional<int> parity;
  bool primitive_only = false;
};

/// Characters mod q in lexicographic exponent-vector order, filtered exactly.
std::vector<DirichletCharacter> enumerate_characters(const GroupPtr& group,
                                                     const CharacterFilter& filter = {});

/// Cheap structural test (no tables): could any character mod q pass `filter`'s
/// order-divides and primitive-only constraints?
bool may_have_characters(u64 q, const CharacterFilter& filter);

DirichletCharacter character_from_index(const GroupPtr& group, u64 index);
DirichletCharacter principal_character(const GroupPtr& group);

/// The character mod target->modulus() agreeing with chi on units mod the target.
/// Requires chi.modulus() | target modulus.
DirichletCharacter lift(const DirichletCharacter& chi, const GroupPtr& target);

/// Induces chi (mod f) to modulus q; throws DomainError unless f | q.
DirichletCharacter induce(const DirichletCharacter& chi, u64 q);

/// The primitive character mod conductor(chi) that induces chi.
DirichletCharacter primitive_inducer(const DirichletCharacter& chi);

/// Product character modulo lcm of the two moduli.
DirichletCharacter multiply(const DirichletCharacter& a, const DirichletCharacter& b);

struct InducedSolutions {
  u64 count = 0;
  std::optional<DirichletCharacter> witness;
};

/// Counts primitive chi of conductor l with lcm(l, m) = q such that chi * psi
/// is induced by xi (xi primitive mod q, psi primitive mod m).
InducedSolutions count_induced_solutions(const DirichletCharacter& xi,
                                         const DirichletCharacter& psi);

/// Dense value table: index(n) = j means chi(n) = e(j / order), kZero means 0.
class CharacterTable {
 public:
  static constexpr std::uint32_t kZero = 0xFFFFFFFFu;

  explicit CharacterTable(const DirichletCharacter& chi);

  u64 modulus() const { return q_; }
  u64 order() const { return order_; }
  std::uint32_t index(i64 n) const { return idx_[mod_floor(n, q_)]; }
  std::complex<double> operator()(i64 n) const {
    const auto j = index(n);
    return j == kZero ? std::complex<double>(0.0, 0.0) : roots_[j];
  }
  const std::vector<std::complex<double>>& roots() const { return roots_; }
  const std::vector<std::uint32_t>& indices() const { return idx_; }

 private:
  u64 q_;
  u64 order_;
  std::vector<std::uint32_t> idx_;
  std::vector<std::complex<double>> roots_;
};

}  // namespace charbounds
