#pragma once

#include <functional>
#include <stdexcept>

#include "charbounds/dirichlet.hpp"

namespace fixtures {

using namespace charbounds;

inline DirichletCharacter find_character(u64 q, const std::function<bool(const DirichletCharacter&)>& pred,
                                         const CharacterFilter& filter = {}) {
  for (const auto& chi : enumerate_characters(build_group(q), filter))
    if (pred(chi)) return chi;
  throw std::runtime_error("no matching character");
}

inline DirichletCharacter quadratic(u64 q) {
  CharacterFilter f;
  f.order_equals = 2;
  f.primitive_only = true;
  return find_character(q, [](const DirichletCharacter&) { return true; }, f);
}

/// Cubic character mod 7 with chi(3) = e(1/3).
inline DirichletCharacter cubic7() {
  CharacterFilter f;
  f.order_equals = 3;
  return find_character(
      7, [](const DirichletCharacter& c) { return c.value(3) == CharValue::unit(RootOfUnity(1, 3)); }, f);
}

}  // namespace fixtures
