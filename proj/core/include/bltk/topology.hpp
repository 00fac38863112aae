#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "bltk/finite_algebra.hpp"
#include "bltk/report.hpp"

namespace bltk {

/// Subset of a carrier of at most 64 elements, bit i = element i.
using ElementSet = std::uint64_t;
/// Subset of L x L, bit a * n + b = the pair (a, b).
using PairSet = boost::dynamic_bitset<>;

inline constexpr std::size_t kDefaultEnumerationBound = 14;
inline constexpr std::size_t kMaxEnumerationBound = 20;
inline constexpr std::size_t kMaxCarrier = 64;

/// Admissible ball radii: the elements strongly less than 1 (BL) or the
/// positive elements (DBL).
struct RadiusSet {
  std::vector<FiniteAlgebra::Index> elements;
  ElementSet mask = 0;

  bool contains(FiniteAlgebra::Index r) const { return (mask >> r) & 1U; }
};

/// a << 1 iff (a v b = 1 implies b = 1) for every b.
bool strongly_less_than_one(const FiniteAlgebra& alg, FiniteAlgebra::Index a);
/// a >> 0 iff (inf(a, b) = 0 implies b = 0) for every b.
bool positive(const FiniteAlgebra& alg, FiniteAlgebra::Index a);

RadiusSet admissible_radii(const FiniteAlgebra& alg);

/// B_r(a) = {b : a <-> b > r} (BL) or N_r(a) = {b : d(a, b) < r} (DBL), in the
/// strict lattice order. Throws InadmissibleRadius.
ElementSet ball(const FiniteAlgebra& alg, FiniteAlgebra::Index center, FiniteAlgebra::Index radius);
PairSet product_ball(const FiniteAlgebra& alg, const ElementPair& center,
                     FiniteAlgebra::Index radius);

/// Every point of s has an admissible radius whose ball lies inside s.
bool is_open(const FiniteAlgebra& alg, ElementSet s);
bool product_is_open(const FiniteAlgebra& alg, const PairSet& s);

struct Topology {
  std::size_t carrier_size = 0;
  /// Open sets ordered by size, then lexicographically by element indices.
  std::vector<ElementSet> opens;

  bool contains(ElementSet s) const;
  bool discrete() const { return opens.size() == (std::size_t{1} << carrier_size); }
};

/// Classifies all 2^n subsets with is_open. Throws CarrierTooLarge when n > bound.
Topology enumerate_topology(const FiniteAlgebra& alg, std::size_t bound = kDefaultEnumerationBound);

/// Laws "T-empty", "T-full", "T-intersection", "T-union" over the whole family.
Report topology_axioms_check(const FiniteAlgebra& alg, const Topology& t);

/// One open set per line as "{a, b}" with labels in carrier order.
std::string export_topology(const FiniteAlgebra& alg, const Topology& t);
std::string format_set(const FiniteAlgebra& alg, ElementSet s);

/// Laws "continuity-star" and "continuity-arrow": the preimage of every open
/// set under the monoid table and under the residuum table is open in L x L.
/// Carriers within `bound` check every open set; larger carriers (up to 64)
/// check the minimal open neighbourhoods, which generate the topology.
Report verify_operation_continuity(const FiniteAlgebra& alg,
                                   std::size_t bound = kDefaultEnumerationBound);

/// G1-G4 (DBL) or L1-L4 (BL), exhaustively.
Report check_radius_lemmas(const FiniteAlgebra& alg);

}  // namespace bltk
