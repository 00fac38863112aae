#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bltk/errors.hpp"
#include "bltk/finite_algebra.hpp"
#include "bltk/formula.hpp"
#include "bltk/norms.hpp"
#include "bltk/report.hpp"
#include "bltk/unit_value.hpp"

namespace bltk {

/// The t-algebra ([0,1], min, max, T, R_T, 0, 1) of a continuous t-norm.
class TAlgebraBackend {
 public:
  using element_type = UnitValue;

  /// Throws DrasticNotResiduated.
  explicit TAlgebraBackend(NormKind kind);

  NormKind kind() const { return family_.kind; }
  UnitValue bottom() const { return UnitValue::zero(); }
  UnitValue top() const { return UnitValue::one(); }
  UnitValue mul(const UnitValue& a, const UnitValue& b) const { return apply_norm(family_, a, b); }
  UnitValue imp(const UnitValue& a, const UnitValue& b) const { return residuum(family_, a, b); }
  UnitValue meet(const UnitValue& a, const UnitValue& b) const { return min(a, b); }
  UnitValue join(const UnitValue& a, const UnitValue& b) const { return max(a, b); }
  std::string label(const UnitValue& a) const { return a.str(); }
  UnitValue parse_value(std::string_view text) const { return UnitValue::parse(text); }

 private:
  NormFamily family_;
};

/// A finite BL-algebra evaluated through its tables.
class FiniteBackend {
 public:
  using element_type = FiniteAlgebra::Index;

  /// Throws SignatureMismatch for DBL algebras.
  explicit FiniteBackend(const FiniteAlgebra& alg);

  const FiniteAlgebra& algebra() const { return *alg_; }
  element_type bottom() const { return alg_->bottom(); }
  element_type top() const { return alg_->top(); }
  element_type mul(element_type a, element_type b) const { return alg_->mul(a, b); }
  element_type imp(element_type a, element_type b) const { return alg_->imp(a, b); }
  element_type meet(element_type a, element_type b) const { return alg_->meet(a, b); }
  element_type join(element_type a, element_type b) const { return alg_->join(a, b); }
  std::string label(element_type a) const { return alg_->label(a); }
  /// Carrier label; throws ParseError for unknown labels.
  element_type parse_value(std::string_view text) const;

 private:
  const FiniteAlgebra* alg_;
};

template <class B>
using Valuation = std::map<std::string, typename B::element_type, std::less<>>;

namespace detail {

template <class B>
typename B::element_type eval(const Formula& f, const B& b, const Valuation<B>& v, bool direct) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw Error(ErrorCode::UnboundAtom, "no value for atom '" + f.name() + "'");
      return it->second;
    }
    case Formula::Kind::Bottom:
      return b.bottom();
    case Formula::Kind::Conj:
      return b.mul(eval(f.lhs(), b, v, direct), eval(f.rhs(), b, v, direct));
    case Formula::Kind::Impl:
      return b.imp(eval(f.lhs(), b, v, direct), eval(f.rhs(), b, v, direct));
    default:
      break;
  }
  if (!direct) return eval(desugar(f), b, v, false);
  switch (f.kind()) {
    case Formula::Kind::Top:
      return b.top();
    case Formula::Kind::Neg:
      return b.imp(eval(f.lhs(), b, v, true), b.bottom());
    case Formula::Kind::Meet:
      return b.meet(eval(f.lhs(), b, v, true), eval(f.rhs(), b, v, true));
    case Formula::Kind::Join:
      return b.join(eval(f.lhs(), b, v, true), eval(f.rhs(), b, v, true));
    case Formula::Kind::Iff: {
      auto x = eval(f.lhs(), b, v, true);
      auto y = eval(f.rhs(), b, v, true);
      return b.mul(b.imp(x, y), b.imp(y, x));
    }
    default:
      throw Error(ErrorCode::SyntaxError, "unhandled formula node");
  }
}

}  // namespace detail

/// The unique extension of the valuation with e(0) = 0, e(f & g) = e(f) * e(g)
/// and e(f -> g) = e(f) -> e(g); sugar is desugared first. Throws UnboundAtom.
template <class B>
typename B::element_type evaluate(const Formula& f, const B& backend, const Valuation<B>& v) {
  return detail::eval(f.is_core() ? f : desugar(f), backend, v, false);
}

/// Evaluates sugar directly with the backend's lattice meet and join.
template <class B>
typename B::element_type evaluate_direct(const Formula& f, const B& backend,
                                         const Valuation<B>& v) {
  return detail::eval(f, backend, v, true);
}

/// Calls fn(valuation) for every assignment of `domain` values to `atoms`,
/// in lexicographic order (first atom slowest).
template <class B, class Fn>
void for_each_valuation(std::span<const std::string> atoms,
                        std::span<const typename B::element_type> domain, Fn&& fn) {
  Valuation<B> v;
  if (domain.empty()) return;
  std::vector<std::size_t> idx(atoms.size(), 0);
  for (std::size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = domain[0];
  for (;;) {
    fn(std::as_const(v));
    std::size_t pos = atoms.size();
    for (;;) {
      if (pos == 0) return;
      --pos;
      if (++idx[pos] < domain.size()) {
        v[atoms[pos]] = domain[idx[pos]];
        break;
      }
      idx[pos] = 0;
      v[atoms[pos]] = domain[0];
    }
  }
}

/// Evaluates `f` under every valuation over `domain` and reports those whose
/// value is not `expected` (law id `law`).
template <class B>
LawResult check_constant(std::string law, const Formula& f, const B& backend,
                         std::span<const typename B::element_type> domain,
                         const typename B::element_type& expected) {
  const Formula core = desugar(f);
  const auto names = atoms_of(f);
  LawResult r;
  r.law = std::move(law);
  for_each_valuation<B>(names, domain, [&](const Valuation<B>& v) {
    ++r.checked;
    auto value = evaluate(core, backend, v);
    if (value == expected) return;
    ++r.violation_count;
    r.status = LawStatus::Fail;
    if (r.witnesses.size() < kMaxWitnesses) {
      Violation w{r.law, print_formula(f), {}, backend.label(value), "=", backend.label(expected)};
      for (const auto& n : names) w.tuple.push_back(n + "=" + backend.label(v.at(n)));
      r.witnesses.push_back(std::move(w));
    }
  });
  return r;
}

/// "BL5-semantic": (p -> q) | (q -> p) evaluates to the top element everywhere.
template <class B>
LawResult check_prelinearity_tautology(const B& backend,
                                       std::span<const typename B::element_type> domain) {
  return check_constant("BL5-semantic", parse_formula("(p -> q) | (q -> p)"), backend, domain,
                        backend.top());
}

/// "BL4-semantic": e(p ^ q), desugared to p & (p -> q), equals the lattice meet
/// of e(p) and e(q) everywhere.
template <class B>
LawResult check_divisibility_semantics(const B& backend,
                                       std::span<const typename B::element_type> domain) {
  const Formula f = parse_formula("p ^ q");
  const Formula core = desugar(f);
  const std::vector<std::string> names{"p", "q"};
  LawResult r;
  r.law = "BL4-semantic";
  for_each_valuation<B>(names, domain, [&](const Valuation<B>& v) {
    ++r.checked;
    auto lhs = evaluate(core, backend, v);
    auto rhs = backend.meet(v.at("p"), v.at("q"));
    if (lhs == rhs) return;
    ++r.violation_count;
    r.status = LawStatus::Fail;
    if (r.witnesses.size() < kMaxWitnesses)
      r.witnesses.push_back({r.law, "p ^ q", {"p=" + backend.label(v.at("p")), "q=" + backend.label(v.at("q"))},
                             backend.label(lhs), "=", backend.label(rhs)});
  });
  return r;
}

/// "desugaring": evaluate(f) == evaluate_direct(f) for every valuation.
template <class B>
LawResult check_desugaring_soundness(const Formula& f, const B& backend,
                                     std::span<const typename B::element_type> domain) {
  const Formula core = desugar(f);
  const auto names = atoms_of(f);
  LawResult r;
  r.law = "desugaring";
  for_each_valuation<B>(names, domain, [&](const Valuation<B>& v) {
    ++r.checked;
    auto lhs = evaluate(core, backend, v);
    auto rhs = evaluate_direct(f, backend, v);
    if (lhs == rhs) return;
    ++r.violation_count;
    r.status = LawStatus::Fail;
    if (r.witnesses.size() < kMaxWitnesses) {
      Violation w{r.law, print_formula(f), {}, backend.label(lhs), "=", backend.label(rhs)};
      for (const auto& n : names) w.tuple.push_back(n + "=" + backend.label(v.at(n)));
      r.witnesses.push_back(std::move(w));
    }
  });
  return r;
}

/// "p=3/10,q=4/5" -> {{"p", "3/10"}, {"q", "4/5"}}. Throws ParseError.
std::map<std::string, std::string, std::less<>> parse_assignments(std::string_view text);
/// Lines "atom = value"; blank lines and '#' comments ignored. Throws ParseError.
std::map<std::string, std::string, std::less<>> parse_valuation_file(std::string_view text);

template <class B>
Valuation<B> bind_valuation(const B& backend,
                            const std::map<std::string, std::string, std::less<>>& raw) {
  Valuation<B> v;
  for (const auto& [atom, text] : raw) v.emplace(atom, backend.parse_value(text));
  return v;
}

}  // namespace bltk
