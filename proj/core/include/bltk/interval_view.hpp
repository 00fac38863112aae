#pragma once

#include <span>
#include <string>
#include <vector>

#include "bltk/grid.hpp"
#include "bltk/norms.hpp"

namespace bltk {

/// A residuated norm family restricted to the points of a grid, exposed as a
/// ResiduatedView so the generic law suites can sweep it. The order is the
/// usual one on [0, 1], so inf/sup are min/max.
class UnitIntervalView {
 public:
  using element_type = UnitValue;

  UnitIntervalView(NormFamily family, const GridSpec& g);

  const NormFamily& family() const { return family_; }
  std::span<const UnitValue> elements() const { return points_; }

  UnitValue mul(const UnitValue& a, const UnitValue& b) const { return apply_norm(family_, a, b); }
  UnitValue imp(const UnitValue& a, const UnitValue& b) const { return residuum(family_, a, b); }
  UnitValue inf(const UnitValue& a, const UnitValue& b) const { return min(a, b); }
  UnitValue sup(const UnitValue& a, const UnitValue& b) const { return max(a, b); }
  bool leq(const UnitValue& a, const UnitValue& b) const { return a <= b; }
  UnitValue zero() const { return UnitValue::zero(); }
  UnitValue one() const { return UnitValue::one(); }
  std::string label(const UnitValue& a) const { return a.str(); }

 private:
  NormFamily family_;
  std::vector<UnitValue> points_;
};

}  // namespace bltk
