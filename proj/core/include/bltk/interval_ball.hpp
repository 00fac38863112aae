#pragma once

#include <string>
#include <vector>

#include "bltk/grid.hpp"
#include "bltk/metric.hpp"
#include "bltk/report.hpp"

namespace bltk {

/// A subinterval of [0, 1]; a single point is [x, x].
struct Interval {
  UnitValue lo;
  UnitValue hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const UnitValue& x) const;
  std::string str() const;  // "[0, 1/2)", "{3/5}"
};

/// N_r(a) = {b in [0,1] : d(a, b) < r} with both its membership predicate and
/// a closed-form description as a union of intervals.
class IntervalBall {
 public:
  /// Throws InvalidRadius unless 0 < radius <= 1.
  IntervalBall(const SAlgebra& alg, const UnitValue& center, const UnitValue& radius);

  const UnitValue& center() const { return center_; }
  const UnitValue& radius() const { return radius_; }
  NormKind kind() const { return alg_.kind(); }

  /// The defining predicate, d(center, b) < radius.
  bool contains(const UnitValue& b) const;
  const std::vector<Interval>& closed_form() const { return pieces_; }
  bool closed_form_contains(const UnitValue& b) const;
  std::string describe() const;

 private:
  SAlgebra alg_;
  UnitValue center_;
  UnitValue radius_;
  std::vector<Interval> pieces_;
};

inline IntervalBall interval_ball(const SAlgebra& alg, const UnitValue& center,
                                  const UnitValue& radius) {
  return IntervalBall(alg, center, radius);
}

/// Law "ball-closed-form": the closed form agrees with the predicate at every
/// grid point and at every interval endpoint.
LawResult interval_ball_check(const IntervalBall& ball, const GridSpec& g);

}  // namespace bltk
