#include "bltk/interval_ball.hpp"

#include <sstream>

#include "bltk/errors.hpp"

namespace bltk {

bool Interval::contains(const UnitValue& x) const {
  const bool above = lo_closed ? lo <= x : lo < x;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

std::string Interval::str() const {
  if (lo == hi && lo_closed && hi_closed) return "{" + lo.str() + "}";
  std::ostringstream os;
  os << (lo_closed ? '[' : '(') << lo.str() << ", " << hi.str() << (hi_closed ? ']' : ')');
  return os.str();
}

IntervalBall::IntervalBall(const SAlgebra& alg, const UnitValue& center, const UnitValue& radius)
    : alg_(alg), center_(center), radius_(radius) {
  if (radius.is_zero())
    throw Error(ErrorCode::InvalidRadius, "ball radius must lie in (0, 1], got 0");

  const UnitValue& a = center_;
  const UnitValue& r = radius_;
  switch (alg_.kind()) {
    case NormKind::Lukasiewicz: {
      // |a - b| < r intersected with [0, 1]
      const mpq_class lo = a.rational() - r.rational();
      const mpq_class hi = a.rational() + r.rational();
      Interval iv;
      iv.lo_closed = sgn(lo) < 0;
      iv.lo = iv.lo_closed ? UnitValue::zero() : UnitValue(lo);
      iv.hi_closed = hi > 1;
      iv.hi = iv.hi_closed ? UnitValue::one() : UnitValue(hi);
      pieces_.push_back(iv);
      break;
    }
    case NormKind::Goedel:
      // b != a is within distance max{a, b}, so nothing but a survives once r <= a.
      if (r <= a) pieces_.push_back({a, a, true, true});
      else pieces_.push_back({UnitValue::zero(), r, true, false});
      break;
    case NormKind::Product: {
      if (a.is_one()) {
        // d(1, b) = (1 - b) / (1 - b) = 1 for every b < 1
        pieces_.push_back({a, a, true, true});
        break;
      }
      // above a: (b - a) / (1 - a) < r   <=>  b < a + r (1 - a)
      // below a: (a - b) / (1 - b) < r   <=>  b (1 - r) > a - r
      Interval iv;
      iv.hi = a.add_clamped(r.times(a.complement()));
      iv.hi_closed = false;
      if (r.is_one()) {
        iv.lo = UnitValue::zero();
        iv.lo_closed = true;
      } else {
        const mpq_class lo = (a.rational() - r.rational()) / (1 - r.rational());
        iv.lo_closed = sgn(lo) < 0;
        iv.lo = iv.lo_closed ? UnitValue::zero() : UnitValue(lo);
      }
      pieces_.push_back(iv);
      break;
    }
    case NormKind::Drastic:
      break;
  }
}

bool IntervalBall::contains(const UnitValue& b) const { return d_star(alg_, center_, b) < radius_; }

bool IntervalBall::closed_form_contains(const UnitValue& b) const {
  for (const auto& iv : pieces_)
    if (iv.contains(b)) return true;
  return false;
}

std::string IntervalBall::describe() const {
  std::string s;
  for (const auto& iv : pieces_) {
    if (!s.empty()) s += " u ";
    s += iv.str();
  }
  return s.empty() ? "{}" : s;
}

LawResult interval_ball_check(const IntervalBall& ball, const GridSpec& g) {
  std::vector<UnitValue> probes = g.points();
  probes.push_back(ball.center());
  for (const auto& iv : ball.closed_form()) {
    probes.push_back(iv.lo);
    probes.push_back(iv.hi);
  }
  LawResult r;
  r.law = "ball-closed-form";
  for (const auto& b : probes) {
    ++r.checked;
    const bool pred = ball.contains(b);
    const bool closed = ball.closed_form_contains(b);
    if (pred == closed) continue;
    ++r.violation_count;
    r.status = LawStatus::Fail;
    if (r.witnesses.size() < kMaxWitnesses)
      r.witnesses.push_back({r.law, "d(a,b) < r iff b in " + ball.describe(),
                             {ball.center().str(), ball.radius().str(), b.str()},
                             pred ? "true" : "false", "<=>", closed ? "true" : "false"});
  }
  return r;
}

}  // namespace bltk
