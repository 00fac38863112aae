#include "bltk/unit_value.hpp"

#include <cctype>

#include "bltk/errors.hpp"

namespace bltk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    const mpz_class d{std::string(den)};
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    mpq_class q{mpz_class{std::string(num)}, d};
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) bad_number(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpq_class q{mpz_class{std::string(whole.empty() ? "0" : whole)} * scale + mpz_class{std::string(frac)},
                scale};
    q.canonicalize();
    return q;
  }
  if (!all_digits(s)) bad_number(text);
  return mpq_class{mpz_class{std::string(s)}};
}

UnitValue::UnitValue(const mpq_class& q) : q_(q) {
  q_.canonicalize();
  if (sgn(q_) < 0 || q_ > 1)
    throw Error(ErrorCode::OutOfRange, q_.get_str() + " is outside [0, 1]");
}

UnitValue::UnitValue(long numerator, unsigned long denominator) {
  if (denominator == 0) throw Error(ErrorCode::OutOfRange, "zero denominator");
  *this = UnitValue(mpq_class(numerator, denominator));
}

UnitValue UnitValue::one() { return UnitValue(mpq_class(1), Unchecked{}); }

UnitValue UnitValue::parse(std::string_view text) { return UnitValue(parse_rational(text)); }

UnitValue UnitValue::complement() const { return UnitValue(mpq_class(1 - q_), Unchecked{}); }

UnitValue UnitValue::add_clamped(const UnitValue& y) const {
  mpq_class s = q_ + y.q_;
  if (s > 1) s = 1;
  return UnitValue(std::move(s), Unchecked{});
}

UnitValue UnitValue::sub_clamped(const UnitValue& y) const {
  mpq_class d = q_ - y.q_;
  if (sgn(d) < 0) d = 0;
  return UnitValue(std::move(d), Unchecked{});
}

UnitValue UnitValue::times(const UnitValue& y) const {
  return UnitValue(mpq_class(q_ * y.q_), Unchecked{});
}

UnitValue UnitValue::divided_by(const UnitValue& y) const {
  if (y.is_zero()) throw Error(ErrorCode::OutOfRange, "division by zero");
  return UnitValue(mpq_class(q_ / y.q_));
}

}  // namespace bltk
