#pragma once

#include "bltk/grid.hpp"
#include "bltk/norms.hpp"
#include "bltk/report.hpp"
#include "bltk/unit_value.hpp"

namespace bltk {

/// The s-algebra ([0,1], max, min, S, R_S, 0, 1) of a continuous s-norm.
class SAlgebra {
 public:
  /// Throws DrasticNotResiduated for NormKind::Drastic.
  explicit SAlgebra(NormKind kind);

  NormKind kind() const { return kind_; }
  NormFamily family() const { return s_norm(kind_); }

  UnitValue star(const UnitValue& a, const UnitValue& b) const { return apply_norm(family(), a, b); }
  UnitValue arrow(const UnitValue& a, const UnitValue& b) const { return residuum(family(), a, b); }

 private:
  NormKind kind_;
};

struct PairValue {
  UnitValue first;
  UnitValue second;
  friend bool operator==(const PairValue&, const PairValue&) = default;
};

/// d(a, b) = (a -> b) * (b -> a), evaluated from the s-norm and its residuum.
UnitValue d_star(const SAlgebra& alg, const UnitValue& a, const UnitValue& b);

/// Tabulated closed forms: |x - y| (Lukasiewicz), max{x, y} for x != y (Goedel),
/// |x - y| / (1 - min{x, y}) for x != y (product); 0 on the diagonal.
UnitValue d_star_closed_form(NormKind kind, const UnitValue& a, const UnitValue& b);

/// d(a, b) = d(a1, b1) * d(a2, b2) on [0,1]^2.
UnitValue d_bigstar(const SAlgebra& alg, const PairValue& a, const PairValue& b);

/// Law "closed-form": d_star == d_star_closed_form on every grid pair.
LawResult d_star_closed_form_check(const SAlgebra& alg, const GridSpec& g);

/// Laws "identity", "symmetry", "star-triangle" (d(a,b) <= d(a,c) * d(c,b)) and
/// "numeric-triangle" (d(a,b) <= d(a,c) + d(c,b)). The numeric triangle is only
/// claimed when S <= S_L on the grid and is reported as skipped otherwise.
Report metric_axioms_check(const SAlgebra& alg, const GridSpec& g);

/// The same four laws for d_bigstar over every triple of grid pairs.
Report pair_metric_axioms_check(const SAlgebra& alg, const GridSpec& g);

/// Lipschitz contracts of * and -> against d_bigstar, over every grid 4-tuple
/// (a1, a2, b1, b2):
///   "star-lipschitz"   d(a1*a2, b1*b2) <= D(a, b)
///   "arrow-lipschitz"  d(a1->a2, b1->b2) <= D(a, b)
///   "z1"  (a1->b1) * (b1->b2) >= a1->b2
///   "z2"  (b1->b2) -> (a1->a2) <= (a1->b1) * (b2->a2)
///   "z3"  (a1->a2) -> (b1->b2) <= (b1->a1) * (a2->b2)
Report continuity_inequalities_check(const SAlgebra& alg, const GridSpec& g);

/// DBL1-DBL5 on the grid.
Report dbl_axioms_check(const SAlgebra& alg, const GridSpec& g);
/// D1-D15 on the grid.
Report dbl_laws_check(const SAlgebra& alg, const GridSpec& g);

}  // namespace bltk
