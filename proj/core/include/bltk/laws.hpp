#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "bltk/report.hpp"

namespace bltk {

/// Read-only access to a residuated structure over an explicit finite domain.
///
/// `mul`/`imp` are the monoid operation and its residuum, `leq` is the
/// lattice order, `inf`/`sup` its greatest lower and least upper bounds and
/// `zero`/`one` the least and greatest elements. The same interface serves
/// both signatures; which constant is the monoid unit is decided by the law
/// suite being run.
template <class V>
concept ResiduatedView = requires(const V& v, const typename V::element_type& x) {
  typename V::element_type;
  { v.elements() } -> std::convertible_to<std::span<const typename V::element_type>>;
  { v.mul(x, x) } -> std::convertible_to<typename V::element_type>;
  { v.imp(x, x) } -> std::convertible_to<typename V::element_type>;
  { v.inf(x, x) } -> std::convertible_to<typename V::element_type>;
  { v.sup(x, x) } -> std::convertible_to<typename V::element_type>;
  { v.leq(x, x) } -> std::convertible_to<bool>;
  { v.zero() } -> std::convertible_to<typename V::element_type>;
  { v.one() } -> std::convertible_to<typename V::element_type>;
  { v.label(x) } -> std::convertible_to<std::string>;
};

struct Failure {
  std::string clause;
  std::string lhs;
  std::string relation;
  std::string rhs;
};

using Outcome = std::optional<Failure>;

/// Runs `fn` on every K-tuple over `domain` in lexicographic order (first
/// position slowest) and collects the tuples where it reports a failure.
template <std::size_t K, class E, class Fn, class Label>
LawResult sweep(std::string law, std::span<const E> domain, Fn&& fn, Label&& label) {
  LawResult result;
  result.law = std::move(law);
  if (domain.empty()) return result;

  std::array<std::size_t, K> idx{};
  for (;;) {
    Outcome outcome = [&]<std::size_t... I>(std::index_sequence<I...>) {
      return fn(domain[idx[I]]...);
    }(std::make_index_sequence<K>{});
    ++result.checked;
    if (outcome) {
      ++result.violation_count;
      result.status = LawStatus::Fail;
      if (result.witnesses.size() < kMaxWitnesses) {
        Violation v{result.law, std::move(outcome->clause), {}, std::move(outcome->lhs),
                    std::move(outcome->relation), std::move(outcome->rhs)};
        v.tuple.reserve(K);
        for (std::size_t i : idx) v.tuple.push_back(label(domain[i]));
        result.witnesses.push_back(std::move(v));
      }
    }
    std::size_t pos = K;
    for (;;) {
      if (pos == 0) return result;
      --pos;
      if (++idx[pos] < domain.size()) break;
      idx[pos] = 0;
    }
  }
}

/// Comparison helpers that render both sides only when a check fails.
template <ResiduatedView V>
class Judge {
 public:
  using E = typename V::element_type;

  explicit Judge(const V& v) : v_(v) {}

  Outcome eq(std::string_view clause, const E& l, const E& r) const {
    if (l == r) return std::nullopt;
    return fail(clause, l, "=", r);
  }
  Outcome leq(std::string_view clause, const E& l, const E& r) const {
    if (v_.leq(l, r)) return std::nullopt;
    return fail(clause, l, "<=", r);
  }
  Outcome geq(std::string_view clause, const E& l, const E& r) const {
    if (v_.leq(r, l)) return std::nullopt;
    return fail(clause, l, ">=", r);
  }
  Outcome iff(std::string_view clause, bool l, bool r) const {
    if (l == r) return std::nullopt;
    return Failure{std::string(clause), l ? "true" : "false", "<=>", r ? "true" : "false"};
  }

 private:
  Outcome fail(std::string_view clause, const E& l, const char* rel, const E& r) const {
    return Failure{std::string(clause), v_.label(l), rel, v_.label(r)};
  }

  const V& v_;
};

/// First failing outcome among several clause checks, evaluated lazily.
template <class... Fs>
Outcome first_failure(Fs&&... checks) {
  Outcome out;
  ((out = checks(), out.has_value()) || ...);
  return out;
}

namespace laws {

/// Bounded-lattice part shared by BL1 and DBL1.
template <ResiduatedView V>
LawResult bounded_lattice(const V& v, std::string id) {
  using E = typename V::element_type;
  const Judge<V> j(v);
  auto label = [&](const E& x) { return std::string(v.label(x)); };
  return sweep<3, E>(std::move(id), v.elements(), [&](const E& a, const E& b, const E& c) {
    return first_failure(
        [&] { return j.leq("0 <= a", v.zero(), a); },
        [&] { return j.leq("a <= 1", a, v.one()); },
        [&] { return j.leq("reflexive", a, a); },
        [&]() -> Outcome {
          if (v.leq(a, b) && v.leq(b, a) && !(a == b))
            return Failure{"antisymmetric", label(a), "!=", label(b)};
          return std::nullopt;
        },
        [&]() -> Outcome {
          if (v.leq(a, b) && v.leq(b, c)) return j.leq("transitive", a, c);
          return std::nullopt;
        },
        [&] { return j.leq("inf(a,b) <= a", v.inf(a, b), a); },
        [&] { return j.leq("inf(a,b) <= b", v.inf(a, b), b); },
        [&]() -> Outcome {
          if (v.leq(c, a) && v.leq(c, b)) return j.leq("c <= inf(a,b)", c, v.inf(a, b));
          return std::nullopt;
        },
        [&] { return j.geq("sup(a,b) >= a", v.sup(a, b), a); },
        [&] { return j.geq("sup(a,b) >= b", v.sup(a, b), b); },
        [&]() -> Outcome {
          if (v.leq(a, c) && v.leq(b, c)) return j.leq("sup(a,b) <= c", v.sup(a, b), c);
          return std::nullopt;
        });
  }, label);
}

template <ResiduatedView V>
LawResult abelian_monoid(const V& v, std::string id, const typename V::element_type& unit) {
  using E = typename V::element_type;
  const Judge<V> j(v);
  auto label = [&](const E& x) { return std::string(v.label(x)); };
  return sweep<3, E>(std::move(id), v.elements(), [&](const E& a, const E& b, const E& c) {
    return first_failure(
        [&] { return j.eq("commutative", v.mul(a, b), v.mul(b, a)); },
        [&] { return j.eq("associative", v.mul(v.mul(a, b), c), v.mul(a, v.mul(b, c))); },
        [&] { return j.eq("unit", v.mul(a, unit), a); });
  }, label);
}

}  // namespace laws

/// BL1-BL5: bounded lattice, monoid with unit 1, residuation
/// (c <= a->b iff c*a <= b), divisibility and prelinearity.
template <ResiduatedView V>
Report bl_axioms(const V& v) {
  using E = typename V::element_type;
  const Judge<V> j(v);
  auto label = [&](const E& x) { return std::string(v.label(x)); };
  const auto dom = v.elements();
  Report r;
  r.push_back(laws::bounded_lattice(v, "BL1"));
  r.push_back(laws::abelian_monoid(v, "BL2", v.one()));
  r.push_back(sweep<3, E>("BL3", dom, [&](const E& a, const E& b, const E& c) {
    return j.iff("c <= a->b iff c*a <= b", v.leq(c, v.imp(a, b)), v.leq(v.mul(c, a), b));
  }, label));
  r.push_back(sweep<2, E>("BL4", dom, [&](const E& a, const E& b) {
    return j.eq("", v.inf(a, b), v.mul(a, v.imp(a, b)));
  }, label));
  r.push_back(sweep<2, E>("BL5", dom, [&](const E& a, const E& b) {
    return j.eq("", v.sup(v.imp(a, b), v.imp(b, a)), v.one());
  }, label));
  return r;
}

/// The fifteen derived laws that hold in every BL-algebra.
template <ResiduatedView V>
Report bl_derived_laws(const V& v) {
  using E = typename V::element_type;
  const Judge<V> j(v);
  auto label = [&](const E& x) { return std::string(v.label(x)); };
  const auto dom = v.elements();
  auto mul = [&](const E& x, const E& y) { return v.mul(x, y); };
  auto imp = [&](const E& x, const E& y) { return v.imp(x, y); };
  const E one = v.one();
  const E zero = v.zero();
  Report r;
  r.push_back(sweep<3, E>("B1", dom, [&](const E& a, const E& b, const E& c) {
    return first_failure([&] { return j.eq("a*b = b*a", mul(a, b), mul(b, a)); },
                         [&] { return j.eq("(a*b)*c = a*(b*c)", mul(mul(a, b), c), mul(a, mul(b, c))); });
  }, label));
  r.push_back(sweep<1, E>("B2", dom, [&](const E& a) { return j.eq("a*0 = 0", mul(a, zero), zero); }, label));
  r.push_back(sweep<2, E>("B3", dom, [&](const E& a, const E& b) {
    return first_failure([&] { return j.leq("a*(a->b) <= b", mul(a, imp(a, b)), b); },
                         [&] { return j.leq("a <= b->(a*b)", a, imp(b, mul(a, b))); });
  }, label));
  r.push_back(sweep<2, E>("B4", dom, [&](const E& a, const E& b) {
    return j.iff("a <= b iff a->b = 1", v.leq(a, b), imp(a, b) == one);
  }, label));
  r.push_back(sweep<3, E>("B5", dom, [&](const E& a, const E& b, const E& c) -> Outcome {
    if (!v.leq(a, b)) return std::nullopt;
    return first_failure([&] { return j.leq("a*c <= b*c", mul(a, c), mul(b, c)); },
                         [&] { return j.leq("c->a <= c->b", imp(c, a), imp(c, b)); },
                         [&] { return j.geq("a->c >= b->c", imp(a, c), imp(b, c)); });
  }, label));
  r.push_back(sweep<3, E>("B6", dom, [&](const E& a, const E& b, const E& c) {
    return j.eq("", mul(v.sup(a, b), c), v.sup(mul(a, c), mul(b, c)));
  }, label));
  r.push_back(sweep<2, E>("B7", dom, [&](const E& a, const E& b) {
    return first_failure([&] { return j.leq("a*b <= a", mul(a, b), a); },
                         [&] { return j.leq("a <= b->a", a, imp(b, a)); });
  }, label));
  r.push_back(sweep<2, E>("B8", dom, [&](const E& a, const E& b) {
    return j.eq("", v.sup(a, b), v.inf(imp(imp(a, b), b), imp(imp(b, a), a)));
  }, label));
  r.push_back(sweep<3, E>("B9", dom, [&](const E& a, const E& b, const E& c) {
    return j.leq("", imp(a, b), imp(imp(b, c), imp(a, c)));
  }, label));
  r.push_back(sweep<3, E>("B10", dom, [&](const E& a, const E& b, const E& c) {
    return j.leq("", mul(imp(a, b), imp(b, c)), imp(a, c));
  }, label));
  r.push_back(sweep<3, E>("B11", dom, [&](const E& a, const E& b, const E& c) {
    return j.eq("", imp(a, imp(b, c)), imp(mul(a, b), c));
  }, label));
  r.push_back(sweep<3, E>("B12", dom, [&](const E& a, const E& b, const E& c) {
    return j.eq("", imp(a, imp(b, c)), imp(b, imp(a, c)));
  }, label));
  r.push_back(sweep<1, E>("B13", dom, [&](const E& a) { return j.eq("", imp(a, a), one); }, label));
  r.push_back(sweep<3, E>("B14", dom, [&](const E& a, const E& b, const E& c) {
    return j.leq("", imp(a, b), imp(mul(a, c), mul(b, c)));
  }, label));
  r.push_back(sweep<4, E>("B15", dom, [&](const E& a, const E& b, const E& c, const E& d) {
    return j.leq("", mul(imp(a, b), imp(c, d)), imp(mul(a, c), mul(b, d)));
  }, label));
  return r;
}

/// DBL1-DBL5, the order-dual signature: monoid unit 0, residuation
/// a >= b->c iff a*b >= c, sup(a,b) = a*(a->b) and inf(a->b, b->a) = 0.
template <ResiduatedView V>
Report dbl_axioms(const V& v) {
  using E = typename V::element_type;
  const Judge<V> j(v);
  auto label = [&](const E& x) { return std::string(v.label(x)); };
  const auto dom = v.elements();
  Report r;
  r.push_back(laws::bounded_lattice(v, "DBL1"));
  r.push_back(laws::abelian_monoid(v, "DBL2", v.zero()));
  r.push_back(sweep<3, E>("DBL3", dom, [&](const E& a, const E& b, const E& c) {
    return j.iff("a >= b->c iff a*b >= c", v.leq(v.imp(b, c), a), v.leq(c, v.mul(a, b)));
  }, label));
  r.push_back(sweep<2, E>("DBL4", dom, [&](const E& a, const E& b) {
    return j.eq("", v.sup(a, b), v.mul(a, v.imp(a, b)));
  }, label));
  r.push_back(sweep<2, E>("DBL5", dom, [&](const E& a, const E& b) {
    return j.eq("", v.inf(v.imp(a, b), v.imp(b, a)), v.zero());
  }, label));
  return r;
}

/// D1-D15, the derived laws of a DBL-algebra.
template <ResiduatedView V>
Report dbl_derived_laws(const V& v) {
  using E = typename V::element_type;
  const Judge<V> j(v);
  auto label = [&](const E& x) { return std::string(v.label(x)); };
  const auto dom = v.elements();
  auto mul = [&](const E& x, const E& y) { return v.mul(x, y); };
  auto imp = [&](const E& x, const E& y) { return v.imp(x, y); };
  const E one = v.one();
  const E zero = v.zero();
  Report r;
  r.push_back(sweep<3, E>("D1", dom, [&](const E& a, const E& b, const E& c) {
    return first_failure([&] { return j.eq("a*b = b*a", mul(a, b), mul(b, a)); },
                         [&] { return j.eq("(a*b)*c = a*(b*c)", mul(mul(a, b), c), mul(a, mul(b, c))); });
  }, label));
  r.push_back(sweep<1, E>("D2", dom, [&](const E& a) { return j.eq("a*1 = 1", mul(a, one), one); }, label));
  r.push_back(sweep<2, E>("D3", dom, [&](const E& a, const E& b) {
    return first_failure([&] { return j.geq("a*(a->b) >= b", mul(a, imp(a, b)), b); },
                         [&] { return j.geq("a >= b->(a*b)", a, imp(b, mul(a, b))); });
  }, label));
  r.push_back(sweep<2, E>("D4", dom, [&](const E& a, const E& b) {
    return j.iff("a >= b iff a->b = 0", v.leq(b, a), imp(a, b) == zero);
  }, label));
  r.push_back(sweep<3, E>("D5", dom, [&](const E& a, const E& b, const E& c) -> Outcome {
    if (!v.leq(b, a)) return std::nullopt;
    return first_failure([&] { return j.geq("a*c >= b*c", mul(a, c), mul(b, c)); },
                         [&] { return j.geq("c->a >= c->b", imp(c, a), imp(c, b)); },
                         [&] { return j.leq("a->c <= b->c", imp(a, c), imp(b, c)); });
  }, label));
  r.push_back(sweep<3, E>("D6", dom, [&](const E& a, const E& b, const E& c) {
    return j.eq("", mul(v.inf(a, b), c), v.inf(mul(a, c), mul(b, c)));
  }, label));
  r.push_back(sweep<2, E>("D7", dom, [&](const E& a, const E& b) {
    return first_failure([&] { return j.geq("a*b >= a", mul(a, b), a); },
                         [&] { return j.geq("a >= b->a", a, imp(b, a)); });
  }, label));
  r.push_back(sweep<2, E>("D8", dom, [&](const E& a, const E& b) {
    return j.eq("", v.inf(a, b), v.sup(imp(imp(a, b), b), imp(imp(b, a), a)));
  }, label));
  r.push_back(sweep<3, E>("D9", dom, [&](const E& a, const E& b, const E& c) {
    return j.geq("", imp(a, b), imp(imp(b, c), imp(a, c)));
  }, label));
  r.push_back(sweep<3, E>("D10", dom, [&](const E& a, const E& b, const E& c) {
    return j.geq("", mul(imp(a, b), imp(b, c)), imp(a, c));
  }, label));
  r.push_back(sweep<3, E>("D11", dom, [&](const E& a, const E& b, const E& c) {
    return j.eq("", imp(a, imp(b, c)), imp(mul(a, b), c));
  }, label));
  r.push_back(sweep<3, E>("D12", dom, [&](const E& a, const E& b, const E& c) {
    return j.eq("", imp(a, imp(b, c)), imp(b, imp(a, c)));
  }, label));
  r.push_back(sweep<1, E>("D13", dom, [&](const E& a) { return j.eq("", imp(a, a), zero); }, label));
  r.push_back(sweep<3, E>("D14", dom, [&](const E& a, const E& b, const E& c) {
    return j.geq("", imp(a, b), imp(mul(a, c), mul(b, c)));
  }, label));
  r.push_back(sweep<4, E>("D15", dom, [&](const E& a, const E& b, const E& c, const E& d) {
    return j.geq("", mul(imp(a, b), imp(c, d)), imp(mul(a, c), mul(b, d)));
  }, label));
  return r;
}

}  // namespace bltk
