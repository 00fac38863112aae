#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bltk {

/// An exact rational number in the closed unit interval.
///
/// Construction rejects anything outside [0, 1] with ErrorCode::OutOfRange.
/// All arithmetic is exact; the clamped operations saturate at the interval
/// ends instead of leaving it.
class UnitValue {
 public:
  UnitValue() = default;
  explicit UnitValue(const mpq_class& q);
  UnitValue(long numerator, unsigned long denominator);

  static UnitValue zero() { return UnitValue(); }
  static UnitValue one();

  /// Accepts "p/q", an integer, or a finite decimal such as "0.3" (read exactly as 3/10).
  static UnitValue parse(std::string_view text);

  const mpq_class& rational() const noexcept { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }

  /// Canonical "p/q" text, or "0" / "1" style integers when the denominator is 1.
  std::string str() const { return q_.get_str(); }
  double approx() const { return q_.get_d(); }

  UnitValue complement() const;                      // 1 - x
  UnitValue add_clamped(const UnitValue& y) const;   // min(1, x + y)
  UnitValue sub_clamped(const UnitValue& y) const;   // max(0, x - y)
  UnitValue times(const UnitValue& y) const;         // x * y
  UnitValue divided_by(const UnitValue& y) const;    // x / y; y != 0 and the quotient must stay <= 1

  friend bool operator==(const UnitValue& a, const UnitValue& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const UnitValue& a, const UnitValue& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  struct Unchecked {};
  UnitValue(mpq_class q, Unchecked) : q_(std::move(q)) {}

  mpq_class q_{0};
};

inline const UnitValue& min(const UnitValue& a, const UnitValue& b) { return b < a ? b : a; }
inline const UnitValue& max(const UnitValue& a, const UnitValue& b) { return a < b ? b : a; }

/// Parses a non-negative rational "p/q", integer, or decimal without the [0, 1] check.
mpq_class parse_rational(std::string_view text);

}  // namespace bltk
