#include "charbounds/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "charbounds/errors.hpp"

namespace charbounds {

namespace {

constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

u64 ipow(u64 base, int exp) {
  u64 r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_generator(u64 g, u64 modulus, u64 order, const std::vector<u64>& order_primes) {
  if (std::gcd(g, modulus) != 1) return false;
  for (u64 r : order_primes)
    if (powmod(g, order / r, modulus) == 1) return false;
  return true;
}

// Order structure of (Z/p^a)^* without generators or tables.
struct ComponentShape {
  u64 prime;
  int prime_exponent;
  u64 modulus;
  u64 order;
};

std::vector<ComponentShape> component_shapes(u64 q) {
  std::vector<ComponentShape> out;
  for (auto [p, a] : factorize(q)) {
    const u64 m = ipow(p, a);
    if (p == 2) {
      if (a == 2) out.push_back({2, 2, m, 2});
      if (a >= 3) {
        out.push_back({2, a, m, 2});
        out.push_back({2, a, m, m / 4});
      }
    } else {
      out.push_back({p, a, m, m / p * (p - 1)});
    }
  }
  return out;
}

// Conductor contributed by one prime block (all components sharing a prime).
// `exps[i]` pairs with `shapes[i]`; the block is [begin, end).
u64 block_conductor(const std::vector<ComponentShape>& shapes, const std::vector<u64>& exps,
                    std::size_t begin, std::size_t end) {
  const ComponentShape& head = shapes[begin];
  const u64 p = head.prime;
  if (p != 2) {
    const u64 e = exps[begin];
    if (e == 0) return 1;
    // units = 1 (mod p^c) form the subgroup generated by g^phi(p^c)
    u64 pc = 1;
    for (int c = 1; c <= head.prime_exponent; ++c) {
      pc *= p;
      const u64 phi_pc = pc / p * (p - 1);
      if (mulmod(e, phi_pc, head.order) == 0) return pc;
    }
    return head.modulus;
  }
  if (end - begin == 1) return exps[begin] == 0 ? 1 : 4;  // modulus 4
  const u64 e_sign = exps[begin];
  const u64 e_five = exps[begin + 1];
  const u64 ord_five = shapes[begin + 1].order;
  if (e_five == 0) return e_sign == 0 ? 1 : 4;
  // units = 1 (mod 2^c), c >= 2, are generated by 5^(2^(c-2))
  for (int c = 3; c <= head.prime_exponent; ++c) {
    const u64 step = u64{1} << (c - 2);
    if (mulmod(e_five, step, ord_five) == 0) return u64{1} << c;
  }
  return head.modulus;
}

std::vector<std::pair<std::size_t, std::size_t>> prime_blocks(const std::vector<ComponentShape>& shapes) {
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::size_t i = 0;
  while (i < shapes.size()) {
    std::size_t j = i + 1;
    while (j < shapes.size() && shapes[j].prime == shapes[i].prime) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  return blocks;
}

std::vector<ComponentShape> shapes_of(const DirichletGroup& g) {
  std::vector<ComponentShape> out;
  for (const auto& c : g.components()) out.push_back({c.prime, c.prime_exponent, c.modulus, c.order});
  return out;
}


// Exponent tuples for one prime block passing the per-block filters, in
// lexicographic order.
std::vector<std::vector<u64>> block_candidates(const std::vector<ComponentShape>& shapes,
                                               std::size_t begin, std::size_t end,
                                               std::optional<u64> order_divides,
                                               bool primitive_only) {
  std::vector<std::vector<u64>> per_comp(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    const u64 o = shapes[i].order;
    if (order_divides) {
      const u64 step = o / std::gcd(o, *order_divides);
      for (u64 e = 0; e < o; e += step) per_comp[i - begin].push_back(e);
    } else {
      per_comp[i - begin].resize(o);
      std::iota(per_comp[i - begin].begin(), per_comp[i - begin].end(), u64{0});
    }
  }
  std::vector<std::vector<u64>> out;
  std::vector<std::size_t> pos(end - begin, 0);
  std::vector<u64> full(shapes.size(), 0);
  while (true) {
    std::vector<u64> tuple(end - begin);
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      tuple[i] = per_comp[i][pos[i]];
      full[begin + i] = tuple[i];
    }
    if (!primitive_only || block_conductor(shapes, full, begin, end) == shapes[begin].modulus)
      out.push_back(std::move(tuple));
    std::size_t k = pos.size();
    while (k > 0) {
      --k;
      if (++pos[k] < per_comp[k].size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
    if (pos.empty()) return out;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// RootOfUnity

RootOfUnity::RootOfUnity(u64 num, u64 den) {
  if (den == 0) throw DomainError("RootOfUnity: zero denominator");
  num %= den;
  const u64 g = std::gcd(num, den);
  num_ = num == 0 ? 0 : num / g;
  den_ = num == 0 ? 1 : den / g;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
  const u64 l = std::lcm(den_, other.den_);
  const u64 n = (mulmod(num_, l / den_, l) + mulmod(other.num_, l / other.den_, l)) % l;
  return RootOfUnity(n, l);
}

RootOfUnity RootOfUnity::pow(i64 k) const {
  const u64 kk = mod_floor(k, den_);
  return RootOfUnity(mulmod(num_, kk, den_), den_);
}

RootOfUnity RootOfUnity::conj() const { return RootOfUnity(num_ == 0 ? 0 : den_ - num_, den_); }

std::complex<double> RootOfUnity::to_complex() const {
  if (num_ == 0) return {1.0, 0.0};
  if (den_ == 2) return {-1.0, 0.0};
  if (den_ == 4) return num_ == 1 ? std::complex<double>(0.0, 1.0) : std::complex<double>(0.0, -1.0);
  // reduce to (-1/2, 1/2] before scaling for accuracy
  const double f = 2 * num_ > den_ ? -static_cast<double>(den_ - num_) / static_cast<double>(den_)
                                   : turns();
  const double theta = kTwoPi * f;
  return {std::cos(theta), std::sin(theta)};
}

// ---------------------------------------------------------------------------
// DirichletGroup

GroupPtr build_group(u64 q) {
  if (q == 0) throw DomainError("build_group: modulus must be positive");
  if (q > DirichletGroup::kSweepLimit)
    throw CapacityError("build_group: modulus " + std::to_string(q) + " exceeds sweep limit " +
                        std::to_string(DirichletGroup::kSweepLimit));

  std::shared_ptr<DirichletGroup> g(new DirichletGroup());
  g->q_ = q;
  const auto factors = factorize(q);
  std::vector<u64> prime_powers;
  for (auto [p, a] : factors) prime_powers.push_back(ipow(p, a));

  for (auto [p, a] : factors) {
    const u64 m = ipow(p, a);
    if (p == 2) {
      if (a == 1) continue;
      std::vector<std::uint32_t> sign(m, kNoLog);
      for (u64 r = 1; r < m; r += 2) sign[r] = (r % 4 == 3) ? 1 : 0;
      g->components_.push_back({2, a, m, m - 1, 2});
      g->dlog_tables_.push_back(std::move(sign));
      if (a >= 3) {
        const u64 ord = m / 4;
        std::vector<std::uint32_t> five(m, kNoLog);
        u64 x = 1;
        for (u64 i = 0; i < ord; ++i) {
          five[x] = static_cast<std::uint32_t>(i);
          five[m - x] = static_cast<std::uint32_t>(i);
          x = x * 5 % m;
        }
        g->components_.push_back({2, a, m, 5, ord});
        g->dlog_tables_.push_back(std::move(five));
      }
      continue;
    }
    const u64 ord = m / p * (p - 1);
    std::vector<u64> order_primes;
    for (auto [r, b] : factorize(p - 1)) order_primes.push_back(r);
    if (a >= 2) order_primes.push_back(p);
    u64 gen = 2;
    while (!is_generator(gen, m, ord, order_primes)) ++gen;
    std::vector<std::uint32_t> table(m, kNoLog);
    u64 x = 1;
    for (u64 i = 0; i < ord; ++i) {
      table[x] = static_cast<std::uint32_t>(i);
      x = x * gen % m;
    }
    g->components_.push_back({p, a, m, gen, ord});
    g->dlog_tables_.push_back(std::move(table));
  }

  for (const auto& c : g->components_) {
    g->phi_ *= c.order;
    g->exponent_ = std::lcm(g->exponent_, c.order);
  }
  for (const auto& c : g->components_) {
    std::vector<u64> residues;
    for (u64 pp : prime_powers) residues.push_back(pp == c.modulus ? c.generator : 1);
    g->basis_.push_back(crt(residues, prime_powers));
  }
  return g;
}

bool DirichletGroup::is_unit(i64 n) const { return std::gcd(mod_floor(n, q_), q_) == 1; }

u64 DirichletGroup::dlog(std::size_t j, i64 n) const {
  const auto v = dlog_tables_[j][mod_floor(n, components_[j].modulus)];
  if (v == kNoLog) throw DomainError("dlog: argument is not a unit");
  return v;
}

// ---------------------------------------------------------------------------
// DirichletCharacter

DirichletCharacter::DirichletCharacter(GroupPtr group, std::vector<u64> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  const auto& comps = group_->components();
  if (exponents_.size() != comps.size())
    throw DomainError("DirichletCharacter: expected " + std::to_string(comps.size()) + " exponents");
  for (std::size_t j = 0; j < comps.size(); ++j) {
    exponents_[j] %= comps[j].order;
    order_ = std::lcm(order_, comps[j].order / std::gcd(comps[j].order, exponents_[j]));
  }
  const auto shapes = shapes_of(*group_);
  for (auto [b, e] : prime_blocks(shapes)) conductor_ *= block_conductor(shapes, exponents_, b, e);
  parity_ = value(-1).to_complex().real() > 0 ? 1 : -1;
}

CharValue DirichletCharacter::value(i64 n) const {
  if (!group_->is_unit(n)) return CharValue::zero();
  const auto& comps = group_->components();
  const u64 lambda = group_->exponent();
  u64 num = 0;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (exponents_[j] == 0) continue;
    const u64 local = mulmod(exponents_[j], group_->dlog(j, n), comps[j].order);
    num = (num + local * (lambda / comps[j].order)) % lambda;
  }
  return CharValue::unit(RootOfUnity(num, lambda));
}

u64 DirichletCharacter::index() const {
  u64 idx = 0;
  const auto& comps = group_->components();
  for (std::size_t j = 0; j < comps.size(); ++j) idx = idx * comps[j].order + exponents_[j];
  return idx;
}

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<u64> e(exponents_.size());
  const auto& comps = group_->components();
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = (comps[j].order - exponents_[j]) % comps[j].order;
  return DirichletCharacter(group_, std::move(e));
}

std::complex<double> eval(const DirichletCharacter& chi, i64 n) { return chi(n); }

CharacterInvariants character_invariants(const DirichletCharacter& chi) {
  return {chi.conductor(), chi.order(), chi.parity(), chi.is_primitive()};
}

u64 conductor_by_constancy(const DirichletCharacter& chi) {
  const u64 q = chi.modulus();
  for (u64 d : divisors(q)) {
    std::vector<std::optional<CharValue>> seen(d);
    bool constant = true;
    for (u64 n = 1; n <= q && constant; ++n) {
      if (std::gcd(n, q) != 1) continue;
      const CharValue v = chi.value(static_cast<i64>(n));
      auto& slot = seen[n % d];
      if (!slot) slot = v;
      else if (!(*slot == v)) constant = false;
    }
    if (constant) return d;
  }
  return q;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<DirichletCharacter> enumerate_characters(const GroupPtr& group, const CharacterFilter& filter) {
  const auto shapes = shapes_of(*group);
  const auto blocks = prime_blocks(shapes);
  std::optional<u64> divides = filter.order_divides;
  if (filter.order_equals) {
    if (divides && *divides % *filter.order_equals != 0) return {};
    divides = filter.order_equals;
  }
  std::vector<std::vector<std::vector<u64>>> cands;
  for (auto [b, e] : blocks) {
    cands.push_back(block_candidates(shapes, b, e, divides, filter.primitive_only));
    if (cands.back().empty()) return {};
  }
  if (filter.primitive_only && group->modulus() % 4 == 2) return {};

  std::vector<DirichletCharacter> out;
  std::vector<std::size_t> pos(cands.size(), 0);
  while (true) {
    std::vector<u64> exps;
    exps.reserve(shapes.size());
    for (std::size_t i = 0; i < cands.size(); ++i)
      exps.insert(exps.end(), cands[i][pos[i]].begin(), cands[i][pos[i]].end());
    DirichletCharacter chi(group, std::move(exps));
    const bool keep = (!filter.order_equals || chi.order() == *filter.order_equals) &&
                      (!filter.order_divides || *filter.order_divides % chi.order() == 0) &&
                      (!filter.parity || chi.parity() == *filter.parity) &&
                      (!filter.primitive_only || chi.is_primitive());
    if (keep) out.push_back(std::move(chi));
    std::size_t k = pos.size();
    if (k == 0) return out;
    while (true) {
      --k;
      if (++pos[k] < cands[k].size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
  }
}

bool may_have_characters(u64 q, const CharacterFilter& filter) {
  if (q == 0) return false;
  if (filter.primitive_only && q % 4 == 2) return false;
  std::optional<u64> divides = filter.order_divides;
  if (filter.order_equals) divides = filter.order_equals;
  if (!divides) return true;
  const auto shapes = component_shapes(q);
  for (auto [b, e] : prime_blocks(shapes))
    if (block_candidates(shapes, b, e, divides, filter.primitive_only).empty()) return false;
  return true;
}

DirichletCharacter character_from_index(const GroupPtr& group, u64 index) {
  const auto& comps = group->components();
  if (index >= group->phi()) throw DomainError("character_from_index: index out of range");
  std::vector<u64> e(comps.size());
  for (std::size_t j = comps.size(); j-- > 0;) {
    e[j] = index % comps[j].order;
    index /= comps[j].order;
  }
  return DirichletCharacter(group, std::move(e));
}

DirichletCharacter principal_character(const GroupPtr& group) {
  return DirichletCharacter(group, std::vector<u64>(group->components().size(), 0));
}

// ---------------------------------------------------------------------------
// Induction and products

DirichletCharacter lift(const DirichletCharacter& chi, const GroupPtr& target) {
  if (target->modulus() % chi.modulus() != 0)
    throw DomainError("lift: modulus " + std::to_string(chi.modulus()) + " does not divide " +
                      std::to_string(target->modulus()));
  const auto& comps = target->components();
  std::vector<u64> e(comps.size());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const CharValue v = chi.value(static_cast<i64>(target->basis_element(j)));
    const u64 scaled = v.root().numerator() * comps[j].order;
    if (scaled % v.root().denominator() != 0) throw DomainError("lift: inconsistent character value");
    e[j] = scaled / v.root().denominator();
  }
  return DirichletCharacter(target, std::move(e));
}

DirichletCharacter induce(const DirichletCharacter& chi, u64 q) {
  if (q == 0 || q % chi.modulus() != 0)
    throw DomainError("induce: modulus " + std::to_string(chi.modulus()) + " does not divide " +
                      std::to_string(q));
  if (q == chi.modulus()) return chi;
  return lift(chi, build_group(q));
}

DirichletCharacter primitive_inducer(const DirichletCharacter& chi) {
  const u64 f = chi.conductor();
  const u64 q = chi.modulus();
  if (f == q) return chi;
  const GroupPtr gf = build_group(f);
  const auto& comps = gf->components();
  std::vector<u64> e(comps.size());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    u64 u = gf->basis_element(j);
    while (std::gcd(u, q) != 1) u += f;
    const CharValue v = chi.value(static_cast<i64>(u));
    e[j] = v.root().numerator() * comps[j].order / v.root().denominator();
  }
  return DirichletCharacter(gf, std::move(e));
}

DirichletCharacter multiply(const DirichletCharacter& a, const DirichletCharacter& b) {
  const u64 l = std::lcm(a.modulus(), b.modulus());
  const GroupPtr g = (l == a.modulus()) ? a.group_ptr() : (l == b.modulus() ? b.group_ptr() : build_group(l));
  const DirichletCharacter la = lift(a, g);
  const DirichletCharacter lb = lift(b, g);
  std::vector<u64> e(la.exponents().size());
  for (std::size_t j = 0; j < e.size(); ++j)
    e[j] = (la.exponents()[j] + lb.exponents()[j]) % g->components()[j].order;
  return DirichletCharacter(g, std::move(e));
}

InducedSolutions count_induced_solutions(const DirichletCharacter& xi, const DirichletCharacter& psi) {
  if (!xi.is_primitive() || !psi.is_primitive())
    throw DomainError("count_induced_solutions: xi and psi must be primitive");
  const u64 q = xi.modulus();
  const u64 m = psi.modulus();
  InducedSolutions out;
  if (q % m != 0) return out;  // no l satisfies lcm(l, m) = q

  u64 space = 0;
  for (u64 l : divisors(q))
    if (std::lcm(l, m) == q) space += euler_phi(l);
  constexpr u64 kSearchLimit = 5'000'000;
  if (space > kSearchLimit)
    throw CapacityError("count_induced_solutions: search space " + std::to_string(space) + " too large");

  // chi * psi = xi on units mod q  <=>  lift(chi) = xi * conj(lift(psi))
  const DirichletCharacter target = multiply(xi, psi.conj());
  for (u64 l : divisors(q)) {
    if (std::lcm(l, m) != q) continue;
    const GroupPtr gl = build_group(l);
    CharacterFilter primitive;
    primitive.primitive_only = true;
    for (const auto& chi : enumerate_characters(gl, primitive)) {
      if (lift(chi, xi.group_ptr()) == target) {
        ++out.count;
        if (!out.witness) out.witness = chi;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// CharacterTable

CharacterTable::CharacterTable(const DirichletCharacter& chi) : q_(chi.modulus()), order_(chi.order()) {
  const DirichletGroup& g = chi.group();
  const auto& comps = g.components();
  const u64 lambda = g.exponent();
  const u64 scale = lambda / order_;

  // contribution of each component as a multiple of 1/lambda
  std::vector<std::vector<u64>> contrib(comps.size());
  constexpr u64 kNonUnit = ~u64{0};
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const u64 mj = comps[j].modulus;
    contrib[j].assign(mj, kNonUnit);
    const u64 ej = chi.exponents()[j];
    for (u64 r = 0; r < mj; ++r) {
      if (r % comps[j].prime == 0) continue;
      contrib[j][r] = mulmod(ej, g.dlog(j, static_cast<i64>(r)), comps[j].order) * (lambda / comps[j].order);
    }
  }

  idx_.assign(q_, kZero);
  // q = 2 (mod 4): the factor 2 has no component, so parity is checked directly.
  const bool bare_two = q_ % 4 == 2;
  std::vector<u64> res(comps.size(), 0);
  for (u64 n = 0; n < q_; ++n) {
    u64 sum = 0;
    bool unit = !(bare_two && n % 2 == 0);
    for (std::size_t j = 0; j < comps.size(); ++j) {
      const u64 c = contrib[j][res[j]];
      if (c == kNonUnit) {
        unit = false;
        break;
      }
      sum += c;
    }
    if (unit) idx_[n] = static_cast<std::uint32_t>((sum % lambda) / scale);
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (++res[j] == comps[j].modulus) res[j] = 0;
  }

  roots_.resize(order_);
  for (u64 j = 0; j < order_; ++j) roots_[j] = RootOfUnity(j, order_).to_complex();
}

}  // namespace charbounds
