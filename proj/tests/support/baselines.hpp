#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace fixtures {

inline const nlohmann::json& baselines() {
  static const nlohmann::json data = [] {
    std::ifstream in(CHARBOUNDS_BASELINES);
    if (!in) throw std::runtime_error(std::string("cannot open ") + CHARBOUNDS_BASELINES);
    return nlohmann::json::parse(in);
  }();
  return data;
}

}  // namespace fixtures
