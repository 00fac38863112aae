#include "bltk/norms.hpp"

#include <algorithm>
#include <cctype>

#include "bltk/errors.hpp"
#include "bltk/laws.hpp"

namespace bltk {

namespace {

std::string label(const UnitValue& x) { return x.str(); }

void require_residuated(const NormFamily& f) {
  if (!f.residuated())
    throw Error(ErrorCode::DrasticNotResiduated,
                to_string(f) + " is not continuous and has no residuum");
}

UnitValue grid_point(const mpz_class& k, const mpz_class& d) {
  return UnitValue(mpq_class(k, d));
}

}  // namespace

std::string_view to_string(NormKind kind) {
  switch (kind) {
    case NormKind::Lukasiewicz: return "lukasiewicz";
    case NormKind::Goedel: return "goedel";
    case NormKind::Product: return "product";
    case NormKind::Drastic: return "drastic";
  }
  return "?";
}

std::string_view to_string(NormSide side) { return side == NormSide::TNorm ? "t-norm" : "s-norm"; }

std::string to_string(const NormFamily& f) {
  std::string s = f.side == NormSide::TNorm ? "T_" : "S_";
  switch (f.kind) {
    case NormKind::Lukasiewicz: return s + "L";
    case NormKind::Goedel: return s + "G";
    case NormKind::Product: return s + "pi";
    case NormKind::Drastic: return s + "d";
  }
  return s;
}

std::optional<NormKind> parse_norm_kind(std::string_view name) {
  std::string n(name);
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
  if (n == "lukasiewicz" || n == "l") return NormKind::Lukasiewicz;
  if (n == "goedel" || n == "godel" || n == "g") return NormKind::Goedel;
  if (n == "product" || n == "pi") return NormKind::Product;
  if (n == "drastic" || n == "d") return NormKind::Drastic;
  return std::nullopt;
}

UnitValue apply_norm(const NormFamily& f, const UnitValue& x, const UnitValue& y) {
  const bool t = f.side == NormSide::TNorm;
  switch (f.kind) {
    case NormKind::Lukasiewicz:
      // max{0, x + y - 1} and min{1, x + y}
      return t ? x.sub_clamped(y.complement()) : x.add_clamped(y);
    case NormKind::Goedel:
      return t ? min(x, y) : max(x, y);
    case NormKind::Product:
      // x y and x + y - x y = 1 - (1 - x)(1 - y)
      return t ? x.times(y) : x.complement().times(y.complement()).complement();
    case NormKind::Drastic:
      if (t) return max(x, y).is_one() ? min(x, y) : UnitValue::zero();
      return min(x, y).is_zero() ? max(x, y) : UnitValue::one();
  }
  return UnitValue::zero();
}

NormFamily dualize(const NormFamily& f) {
  return {f.kind, f.side == NormSide::TNorm ? NormSide::SNorm : NormSide::TNorm};
}

bool dual_check(const NormFamily& f, const UnitValue& x, const UnitValue& y) {
  const NormFamily t = t_norm(f.kind);
  const NormFamily s = s_norm(f.kind);
  return apply_norm(s, x, y) == apply_norm(t, x.complement(), y.complement()).complement();
}

UnitValue residuum(const NormFamily& f, const UnitValue& x, const UnitValue& y) {
  require_residuated(f);
  if (f.side == NormSide::SNorm) {
    if (x >= y) return UnitValue::zero();
    switch (f.kind) {
      case NormKind::Lukasiewicz: return y.sub_clamped(x);
      case NormKind::Goedel: return y;
      case NormKind::Product: return y.sub_clamped(x).divided_by(x.complement());
      case NormKind::Drastic: break;
    }
  } else {
    if (x <= y) return UnitValue::one();
    switch (f.kind) {
      case NormKind::Lukasiewicz: return x.complement().add_clamped(y);
      case NormKind::Goedel: return y;
      case NormKind::Product: return y.divided_by(x);
      case NormKind::Drastic: break;
    }
  }
  return UnitValue::zero();
}

mpz_class oracle_denominator(const UnitValue& x, const UnitValue& y, const GridSpec& g) {
  g.validate();
  const mpq_class& qx = x.rational();
  const mpq_class& qy = y.rational();
  mpz_class d = g.denominator;
  auto fold = [&d](const mpz_class& m) {
    if (m != 0) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
  };
  fold(qx.get_den());
  fold(qy.get_den());
  // Quotients of grid-representable differences: (y - x) / (1 - x) and y / x.
  const mpq_class diff = abs(qy - qx);
  const mpq_class cx = 1 - qx;
  fold(diff.get_den() * cx.get_num());
  fold(qy.get_den() * qx.get_num());
  return d;
}

UnitValue residuum_oracle(const NormFamily& f, const UnitValue& x, const UnitValue& y,
                          const GridSpec& g) {
  require_residuated(f);
  const mpz_class d = oracle_denominator(x, y, g);
  // The defining predicate is monotone in c, so bisection finds the same
  // extremal grid point as an ascending (or descending) scan.
  mpz_class lo = 0;
  mpz_class hi = d;
  if (f.side == NormSide::SNorm) {
    // least k with S(k/d, x) >= y; k = d always qualifies since S(1, x) = 1.
    while (lo < hi) {
      mpz_class mid = (lo + hi) / 2;
      if (apply_norm(f, grid_point(mid, d), x) >= y) hi = mid;
      else lo = mid + 1;
    }
  } else {
    // greatest k with T(k/d, x) <= y; k = 0 always qualifies since T(0, x) = 0.
    while (lo < hi) {
      mpz_class mid = (lo + hi + 1) / 2;
      if (apply_norm(f, grid_point(mid, d), x) <= y) lo = mid;
      else hi = mid - 1;
    }
  }
  return grid_point(lo, d);
}

Report norm_axioms_check(const NormFamily& f, const GridSpec& g) {
  const auto pts = g.points();
  const std::span<const UnitValue> dom(pts);
  auto n = [&f](const UnitValue& a, const UnitValue& b) { return apply_norm(f, a, b); };
  auto fail = [](const char* clause, const UnitValue& l, const char* rel, const UnitValue& r) {
    return Outcome(Failure{clause, l.str(), rel, r.str()});
  };
  Report r;
  r.push_back(sweep<2, UnitValue>("commutative", dom, [&](const UnitValue& a, const UnitValue& b) -> Outcome {
    auto l = n(a, b), rr = n(b, a);
    return l == rr ? Outcome{} : fail("N(a,b) = N(b,a)", l, "=", rr);
  }, label));
  r.push_back(sweep<3, UnitValue>("associative", dom, [&](const UnitValue& a, const UnitValue& b, const UnitValue& c) -> Outcome {
    auto l = n(n(a, b), c), rr = n(a, n(b, c));
    return l == rr ? Outcome{} : fail("N(N(a,b),c) = N(a,N(b,c))", l, "=", rr);
  }, label));
  r.push_back(sweep<3, UnitValue>("monotone", dom, [&](const UnitValue& a, const UnitValue& b, const UnitValue& c) -> Outcome {
    if (!(a <= b)) return std::nullopt;
    auto l = n(a, c), rr = n(b, c);
    return l <= rr ? Outcome{} : fail("a <= b implies N(a,c) <= N(b,c)", l, "<=", rr);
  }, label));
  const UnitValue unit = f.side == NormSide::TNorm ? UnitValue::one() : UnitValue::zero();
  r.push_back(sweep<1, UnitValue>("boundary", dom, [&](const UnitValue& a) -> Outcome {
    auto l = n(unit, a);
    return l == a ? Outcome{} : fail(f.side == NormSide::TNorm ? "T(1,a) = a" : "S(0,a) = a", l, "=", a);
  }, label));
  return r;
}

LawResult duality_check(const NormFamily& f, const GridSpec& g) {
  const auto pts = g.points();
  const NormFamily t = t_norm(f.kind);
  const NormFamily s = s_norm(f.kind);
  return sweep<2, UnitValue>("duality", std::span<const UnitValue>(pts), [&](const UnitValue& x, const UnitValue& y) -> Outcome {
    if (dual_check(f, x, y)) return std::nullopt;
    return Failure{"S(x,y) = 1 - T(1-x,1-y)", apply_norm(s, x, y).str(), "=",
                   apply_norm(t, x.complement(), y.complement()).complement().str()};
  }, label);
}

LawResult adjointness_check(const NormFamily& f, const GridSpec& g) {
  require_residuated(f);
  const auto pts = g.points();
  const std::span<const UnitValue> dom(pts);
  if (f.side == NormSide::SNorm) {
    return sweep<3, UnitValue>("adjointness", dom, [&](const UnitValue& a, const UnitValue& b, const UnitValue& c) -> Outcome {
      const bool l = a >= residuum(f, b, c);
      const bool r = apply_norm(f, a, b) >= c;
      if (l == r) return std::nullopt;
      return Failure{"a >= R(b,c) iff S(a,b) >= c", l ? "true" : "false", "<=>", r ? "true" : "false"};
    }, label);
  }
  return sweep<3, UnitValue>("adjointness", dom, [&](const UnitValue& a, const UnitValue& b, const UnitValue& c) -> Outcome {
    const bool l = c <= residuum(f, a, b);
    const bool r = apply_norm(f, c, a) <= b;
    if (l == r) return std::nullopt;
    return Failure{"c <= R(a,b) iff T(c,a) <= b", l ? "true" : "false", "<=>", r ? "true" : "false"};
  }, label);
}

LawResult residuum_oracle_check(const NormFamily& f, const GridSpec& g) {
  require_residuated(f);
  const auto pts = g.points();
  return sweep<2, UnitValue>("residuum-oracle", std::span<const UnitValue>(pts), [&](const UnitValue& x, const UnitValue& y) -> Outcome {
    const UnitValue closed = residuum(f, x, y);
    const UnitValue searched = residuum_oracle(f, x, y, g);
    if (closed == searched) return std::nullopt;
    return Failure{"closed form = search", closed.str(), "=", searched.str()};
  }, label);
}

Report ordering_check(const GridSpec& g) {
  const auto pts = g.points();
  const std::span<const UnitValue> dom(pts);
  auto chain = [&](std::string id, NormSide side, std::array<NormKind, 4> order) {
    return sweep<2, UnitValue>(std::move(id), dom, [&, side, order](const UnitValue& x, const UnitValue& y) -> Outcome {
      for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const NormFamily lo{order[i], side};
        const NormFamily hi{order[i + 1], side};
        const UnitValue l = apply_norm(lo, x, y);
        const UnitValue r = apply_norm(hi, x, y);
        if (!(l <= r)) return Failure{to_string(lo) + " <= " + to_string(hi), l.str(), "<=", r.str()};
      }
      return std::nullopt;
    }, label);
  };
  Report r;
  r.push_back(chain("t-ordering", NormSide::TNorm,
                    {NormKind::Drastic, NormKind::Lukasiewicz, NormKind::Product, NormKind::Goedel}));
  r.push_back(chain("s-ordering", NormSide::SNorm,
                    {NormKind::Goedel, NormKind::Product, NormKind::Lukasiewicz, NormKind::Drastic}));
  return r;
}

bool weaker_than(const NormFamily& f, const NormFamily& g, std::span<const UnitValue> points) {
  for (const auto& x : points)
    for (const auto& y : points)
      if (!(apply_norm(f, x, y) <= apply_norm(g, x, y))) return false;
  return true;
}

}  // namespace bltk
