#pragma once

#include <string>
#include <vector>

#include "bltk/norms.hpp"
#include "bltk/unit_value.hpp"
#include "oracles.hpp"

namespace testing_support {

inline bltk::UnitValue uv(const std::string& text) { return bltk::UnitValue::parse(text); }
inline bltk::UnitValue uv(const oracle::Q& q) { return bltk::UnitValue(q); }

inline bltk::NormKind kind_of(oracle::Fam f) {
  switch (f) {
    case oracle::Fam::Lukasiewicz: return bltk::NormKind::Lukasiewicz;
    case oracle::Fam::Goedel: return bltk::NormKind::Goedel;
    case oracle::Fam::Product: return bltk::NormKind::Product;
    case oracle::Fam::Drastic: return bltk::NormKind::Drastic;
  }
  return bltk::NormKind::Lukasiewicz;
}

}  // namespace testing_support
