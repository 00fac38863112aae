#include "bltk/metric.hpp"

#include "bltk/errors.hpp"
#include "bltk/interval_view.hpp"
#include "bltk/laws.hpp"

namespace bltk {

namespace {

std::string label(const UnitValue& x) { return x.str(); }
std::string label_pair(const PairValue& p) { return "(" + p.first.str() + "," + p.second.str() + ")"; }

Outcome fail(const char* clause, const UnitValue& l, const char* rel, const UnitValue& r) {
  return Failure{clause, l.str(), rel, r.str()};
}

template <class E, class Dist, class Star, class Label>
Report metric_laws(std::span<const E> dom, Dist&& d, Star&& star, bool numeric, Label&& lbl) {
  Report r;
  r.push_back(sweep<2, E>("identity", dom, [&](const E& a, const E& b) -> Outcome {
    const bool zero = d(a, b).is_zero();
    if (zero == (a == b)) return std::nullopt;
    return Failure{"d(a,b) = 0 iff a = b", zero ? "true" : "false", "<=>", a == b ? "true" : "false"};
  }, lbl));
  r.push_back(sweep<2, E>("symmetry", dom, [&](const E& a, const E& b) -> Outcome {
    auto l = d(a, b), rr = d(b, a);
    return l == rr ? Outcome{} : fail("d(a,b) = d(b,a)", l, "=", rr);
  }, lbl));
  r.push_back(sweep<3, E>("star-triangle", dom, [&](const E& a, const E& b, const E& c) -> Outcome {
    auto l = d(a, b), rr = star(d(a, c), d(c, b));
    return l <= rr ? Outcome{} : fail("d(a,b) <= d(a,c) * d(c,b)", l, "<=", rr);
  }, lbl));
  if (numeric) {
    r.push_back(sweep<3, E>("numeric-triangle", dom, [&](const E& a, const E& b, const E& c) -> Outcome {
      const mpq_class l = d(a, b).rational();
      const mpq_class rr = d(a, c).rational() + d(c, b).rational();
      if (l <= rr) return std::nullopt;
      return Failure{"d(a,b) <= d(a,c) + d(c,b)", l.get_str(), "<=", rr.get_str()};
    }, lbl));
  } else {
    LawResult skipped;
    skipped.law = "numeric-triangle";
    skipped.status = LawStatus::Skipped;
    skipped.note = "s-norm is not weaker than S_L on this grid";
    r.push_back(skipped);
  }
  return r;
}

}  // namespace

UnitIntervalView::UnitIntervalView(NormFamily family, const GridSpec& g)
    : family_(family), points_(g.points()) {
  if (!family_.residuated())
    throw Error(ErrorCode::DrasticNotResiduated, to_string(family_) + " has no residuum");
}

SAlgebra::SAlgebra(NormKind kind) : kind_(kind) {
  if (kind == NormKind::Drastic)
    throw Error(ErrorCode::DrasticNotResiduated, "the drastic s-norm is not continuous");
}

UnitValue d_star(const SAlgebra& alg, const UnitValue& a, const UnitValue& b) {
  return alg.star(alg.arrow(a, b), alg.arrow(b, a));
}

UnitValue d_star_closed_form(NormKind kind, const UnitValue& a, const UnitValue& b) {
  if (a == b) return UnitValue::zero();
  const UnitValue diff = max(a, b).sub_clamped(min(a, b));
  switch (kind) {
    case NormKind::Lukasiewicz: return diff;
    case NormKind::Goedel: return max(a, b);
    case NormKind::Product: return diff.divided_by(min(a, b).complement());
    case NormKind::Drastic: break;
  }
  throw Error(ErrorCode::DrasticNotResiduated, "no induced metric for the drastic s-norm");
}

UnitValue d_bigstar(const SAlgebra& alg, const PairValue& a, const PairValue& b) {
  return alg.star(d_star(alg, a.first, b.first), d_star(alg, a.second, b.second));
}

LawResult d_star_closed_form_check(const SAlgebra& alg, const GridSpec& g) {
  const auto pts = g.points();
  return sweep<2, UnitValue>("closed-form", std::span<const UnitValue>(pts), [&](const UnitValue& a, const UnitValue& b) -> Outcome {
    auto l = d_star(alg, a, b), r = d_star_closed_form(alg.kind(), a, b);
    return l == r ? Outcome{} : fail("(a->b)*(b->a) = tabulated d", l, "=", r);
  }, label);
}

Report metric_axioms_check(const SAlgebra& alg, const GridSpec& g) {
  const auto pts = g.points();
  const bool numeric = weaker_than(alg.family(), s_norm(NormKind::Lukasiewicz), pts);
  return metric_laws<UnitValue>(
      std::span<const UnitValue>(pts), [&](const UnitValue& a, const UnitValue& b) { return d_star(alg, a, b); },
      [&](const UnitValue& a, const UnitValue& b) { return alg.star(a, b); }, numeric, label);
}

Report pair_metric_axioms_check(const SAlgebra& alg, const GridSpec& g) {
  const auto pts = g.points();
  std::vector<PairValue> pairs;
  pairs.reserve(pts.size() * pts.size());
  for (const auto& x : pts)
    for (const auto& y : pts) pairs.push_back({x, y});
  const bool numeric = weaker_than(alg.family(), s_norm(NormKind::Lukasiewicz), pts);
  return metric_laws<PairValue>(
      std::span<const PairValue>(pairs),
      [&](const PairValue& a, const PairValue& b) { return d_bigstar(alg, a, b); },
      [&](const UnitValue& a, const UnitValue& b) { return alg.star(a, b); }, numeric, label_pair);
}

Report continuity_inequalities_check(const SAlgebra& alg, const GridSpec& g) {
  const auto pts = g.points();
  const std::span<const UnitValue> dom(pts);
  // One sweep evaluates every inequality per tuple; the per-law results are
  // split afterwards so each keeps its own witnesses.
  static constexpr const char* kLaws[] = {"star-lipschitz", "arrow-lipschitz", "z1", "z2", "z3"};
  Report r;
  for (const char* id : kLaws) {
    LawResult lr;
    lr.law = id;
    r.push_back(lr);
  }
  auto s = [&](const UnitValue& x, const UnitValue& y) { return alg.star(x, y); };
  auto a = [&](const UnitValue& x, const UnitValue& y) { return alg.arrow(x, y); };
  auto d = [&](const UnitValue& x, const UnitValue& y) { return d_star(alg, x, y); };
  auto record = [&](std::size_t law, bool ok, const UnitValue& l, const char* rel, const UnitValue& rr,
                    std::initializer_list<const UnitValue*> tuple) {
    LawResult& lr = r[law];
    ++lr.checked;
    if (ok) return;
    ++lr.violation_count;
    lr.status = LawStatus::Fail;
    if (lr.witnesses.size() < kMaxWitnesses) {
      Violation v{lr.law, "", {}, l.str(), rel, rr.str()};
      for (const auto* t : tuple) v.tuple.push_back(t->str());
      lr.witnesses.push_back(std::move(v));
    }
  };
  for (const auto& a1 : dom)
    for (const auto& a2 : dom)
      for (const auto& b1 : dom)
        for (const auto& b2 : dom) {
          const auto tuple = {&a1, &a2, &b1, &b2};
          const UnitValue a1b1 = a(a1, b1), b1a1 = a(b1, a1);
          const UnitValue a2b2 = a(a2, b2), b2a2 = a(b2, a2);
          const UnitValue big = s(s(a1b1, b1a1), s(a2b2, b2a2));  // d(a1,b1) * d(a2,b2)

          const UnitValue star_lhs = d(s(a1, a2), s(b1, b2));
          record(0, star_lhs <= big, star_lhs, "<=", big, tuple);

          const UnitValue a12 = a(a1, a2), b12 = a(b1, b2);
          const UnitValue arrow_lhs = d(a12, b12);
          record(1, arrow_lhs <= big, arrow_lhs, "<=", big, tuple);

          const UnitValue z1_lhs = s(a1b1, a(b1, b2));
          const UnitValue z1_rhs = a(a1, b2);
          record(2, z1_lhs >= z1_rhs, z1_lhs, ">=", z1_rhs, tuple);

          const UnitValue z2_lhs = a(b12, a12);
          const UnitValue z2_rhs = s(a1b1, b2a2);
          record(3, z2_lhs <= z2_rhs, z2_lhs, "<=", z2_rhs, tuple);

          const UnitValue z3_lhs = a(a12, b12);
          const UnitValue z3_rhs = s(b1a1, a2b2);
          record(4, z3_lhs <= z3_rhs, z3_lhs, "<=", z3_rhs, tuple);
        }
  return r;
}

Report dbl_axioms_check(const SAlgebra& alg, const GridSpec& g) {
  return dbl_axioms(UnitIntervalView(alg.family(), g));
}

Report dbl_laws_check(const SAlgebra& alg, const GridSpec& g) {
  return dbl_derived_laws(UnitIntervalView(alg.family(), g));
}

}  // namespace bltk
