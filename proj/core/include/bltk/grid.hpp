#pragma once

#include <vector>

#include "bltk/unit_value.hpp"

namespace bltk {

/// Uniform sampling {k / denominator : 0 <= k <= denominator} of the unit interval.
struct GridSpec {
  static constexpr long kDefaultDenominator = 64;

  long denominator = kDefaultDenominator;

  /// Throws ErrorCode::InvalidGrid unless denominator >= 2.
  void validate() const;
  std::vector<UnitValue> points() const;
};

inline GridSpec grid(long denominator) { return GridSpec{denominator}; }

}  // namespace bltk
