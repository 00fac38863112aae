#include <gtest/gtest.h>

#include "bltk/errors.hpp"
#include "bltk/grid.hpp"
#include "bltk/unit_value.hpp"

using bltk::ErrorCode;
using bltk::UnitValue;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const bltk::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(UnitValue, ParsesFractionsIntegersAndDecimalsExactly) {
  EXPECT_EQ(UnitValue::parse("3/10").str(), "3/10");
  EXPECT_EQ(UnitValue::parse("0.3").str(), "3/10");
  EXPECT_EQ(UnitValue::parse(".25").str(), "1/4");
  EXPECT_EQ(UnitValue::parse("2/4").str(), "1/2");
  EXPECT_EQ(UnitValue::parse(" 1 ").str(), "1");
  EXPECT_EQ(UnitValue::parse("0").str(), "0");
  EXPECT_EQ(UnitValue::parse("1.000"), UnitValue::one());
}

TEST(UnitValue, RejectsValuesOutsideTheUnitInterval) {
  EXPECT_EQ(code_of([] { UnitValue::parse("3/2"); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { UnitValue::parse("1.5"); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { UnitValue(-1, 3); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { UnitValue(1, 0); }), ErrorCode::OutOfRange);
}

TEST(UnitValue, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1/", "/2", "1/0", "-0.5", "0.5.1", "1e-3", "1 /2"})
    EXPECT_EQ(code_of([&] { UnitValue::parse(bad); }), ErrorCode::ParseError) << bad;
}

TEST(UnitValue, ArithmeticStaysExact) {
  const UnitValue a(3, 10), b(4, 5);
  EXPECT_EQ(a.complement().str(), "7/10");
  EXPECT_EQ(a.add_clamped(b), UnitValue::one());
  EXPECT_EQ(b.sub_clamped(a).str(), "1/2");
  EXPECT_EQ(a.sub_clamped(b), UnitValue::zero());
  EXPECT_EQ(a.times(b).str(), "6/25");
  EXPECT_EQ(a.divided_by(b).str(), "3/8");
  EXPECT_EQ(code_of([&] { b.divided_by(a); }), ErrorCode::OutOfRange);
}

TEST(UnitValue, OrderIsTheRationalOrder) {
  EXPECT_LT(UnitValue(1, 3), UnitValue(1, 2));
  EXPECT_EQ(UnitValue(2, 6), UnitValue(1, 3));
  EXPECT_EQ(bltk::min(UnitValue(1, 3), UnitValue(1, 2)), UnitValue(1, 3));
  EXPECT_EQ(bltk::max(UnitValue(1, 3), UnitValue(1, 2)), UnitValue(1, 2));
  EXPECT_DOUBLE_EQ(UnitValue(1, 4).approx(), 0.25);
}

TEST(Grid, PointsAreKOverDenominator) {
  const auto pts = bltk::grid(4).points();
  ASSERT_EQ(pts.size(), 5u);
  EXPECT_EQ(pts[1].str(), "1/4");
  EXPECT_EQ(pts[2].str(), "1/2");
  EXPECT_EQ(pts.back(), UnitValue::one());
  EXPECT_EQ(bltk::GridSpec{}.denominator, 64);
}

TEST(Grid, DenominatorBelowTwoIsRejected) {
  EXPECT_EQ(code_of([] { bltk::grid(1).validate(); }), ErrorCode::InvalidGrid);
  EXPECT_EQ(code_of([] { bltk::grid(0).points(); }), ErrorCode::InvalidGrid);
  EXPECT_NO_THROW(bltk::grid(2).validate());
}
