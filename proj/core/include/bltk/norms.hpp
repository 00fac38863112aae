#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bltk/grid.hpp"
#include "bltk/report.hpp"
#include "bltk/unit_value.hpp"

namespace bltk {

enum class NormKind { Lukasiewicz, Goedel, Product, Drastic };
enum class NormSide { TNorm, SNorm };

/// A named t-norm or s-norm on [0, 1]. Drastic norms support only the bare
/// norm function; everything residual throws DrasticNotResiduated.
struct NormFamily {
  NormKind kind = NormKind::Lukasiewicz;
  NormSide side = NormSide::SNorm;

  bool residuated() const { return kind != NormKind::Drastic; }
  friend bool operator==(const NormFamily&, const NormFamily&) = default;
};

inline constexpr NormKind kAllKinds[] = {NormKind::Lukasiewicz, NormKind::Goedel,
                                         NormKind::Product, NormKind::Drastic};
inline constexpr NormKind kContinuousKinds[] = {NormKind::Lukasiewicz, NormKind::Goedel,
                                                NormKind::Product};

inline NormFamily t_norm(NormKind k) { return {k, NormSide::TNorm}; }
inline NormFamily s_norm(NormKind k) { return {k, NormSide::SNorm}; }

std::string_view to_string(NormKind kind);
std::string_view to_string(NormSide side);
std::string to_string(const NormFamily& f);  // e.g. "S_L", "T_pi"
/// Accepts "lukasiewicz", "goedel" (or "godel"), "product", "drastic".
std::optional<NormKind> parse_norm_kind(std::string_view name);

UnitValue apply_norm(const NormFamily& f, const UnitValue& x, const UnitValue& y);

/// The dual family on the other side: S(x, y) = 1 - T(1 - x, 1 - y).
NormFamily dualize(const NormFamily& f);
/// Checks the duality identity at (x, y) between f and dualize(f).
bool dual_check(const NormFamily& f, const UnitValue& x, const UnitValue& y);

/// Closed-form residuum.
///   s-norm side: R(x, y) = min{c : S(c, x) >= y}, so a >= R(b, c) iff S(a, b) >= c.
///   t-norm side: R(x, y) = max{z : T(z, x) <= y}, so z <= R(x, y) iff T(z, x) <= y.
UnitValue residuum(const NormFamily& f, const UnitValue& x, const UnitValue& y);

/// Search-based residuum that never consults the closed forms: the least
/// (s-norm) or greatest (t-norm) point c of a grid with S(c, x) >= y
/// (resp. T(c, x) <= y). The grid passed in is refined from the inputs so
/// that the exact answer is a grid point for the three continuous families.
UnitValue residuum_oracle(const NormFamily& f, const UnitValue& x, const UnitValue& y,
                          const GridSpec& g = {});
/// The denominator residuum_oracle actually scans for (x, y).
mpz_class oracle_denominator(const UnitValue& x, const UnitValue& y, const GridSpec& g);

/// Norm axioms on the grid: "associative", "commutative", "monotone", "boundary".
Report norm_axioms_check(const NormFamily& f, const GridSpec& g);
/// Duality identity on every grid pair.
LawResult duality_check(const NormFamily& f, const GridSpec& g);
/// a >= R(b, c) iff S(a, b) >= c (s-norms) or c <= R(a, b) iff T(c, a) <= b (t-norms),
/// over every grid triple.
LawResult adjointness_check(const NormFamily& f, const GridSpec& g);
/// residuum == residuum_oracle on every grid pair.
LawResult residuum_oracle_check(const NormFamily& f, const GridSpec& g);
/// T_d <= T_L <= T_pi <= T_G and S_G <= S_pi <= S_L <= S_d, pointwise on the grid.
Report ordering_check(const GridSpec& g);

/// Pointwise f <= g on the grid (same side).
bool weaker_than(const NormFamily& f, const NormFamily& g, std::span<const UnitValue> points);

}  // namespace bltk
