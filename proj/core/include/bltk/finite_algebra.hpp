#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bltk/report.hpp"

namespace bltk {

enum class Signature { BL, DBL };

std::string_view to_string(Signature s);

/// A finite BL- or DBL-algebra given extensionally by tables.
///
/// Elements are indices into the carrier; carrier order fixes index order
/// everywhere (tables, witnesses, exported listings). The order is stored as
/// the reflexive-transitive closure of the pairs supplied at construction and
/// meet/join tables are derived from it. Construction validates structure
/// only (partial order, bounded lattice, closure of the tables); the
/// algebraic axioms are checked by check_axioms.
class FiniteAlgebra {
 public:
  using Index = int;

  /// Throws ParseError (carrier too small, duplicate labels, non-square tables),
  /// TableOutOfRange, NotAPartialOrder or NotALattice.
  FiniteAlgebra(Signature signature, std::vector<std::string> labels,
                const std::vector<std::pair<Index, Index>>& leq_pairs, std::vector<Index> star,
                std::vector<Index> arrow, Index bottom, Index top);

  Signature signature() const { return signature_; }
  std::size_t size() const { return labels_.size(); }
  std::span<const std::string> labels() const { return labels_; }
  const std::string& label(Index i) const { return labels_[static_cast<std::size_t>(i)]; }
  std::optional<Index> index_of(std::string_view label) const;

  /// Least and greatest elements of the lattice order.
  Index bottom() const { return bottom_; }
  Index top() const { return top_; }
  /// Monoid unit: top for BL, bottom for DBL.
  Index unit() const { return signature_ == Signature::BL ? top_ : bottom_; }

  bool leq(Index a, Index b) const { return leq_[at(a, b)] != 0; }
  /// Strict lattice order: comparable and distinct.
  bool lt(Index a, Index b) const { return a != b && leq(a, b); }
  Index mul(Index a, Index b) const { return star_[at(a, b)]; }
  Index imp(Index a, Index b) const { return arrow_[at(a, b)]; }
  Index meet(Index a, Index b) const { return meet_[at(a, b)]; }
  Index join(Index a, Index b) const { return join_[at(a, b)]; }

  std::span<const Index> star_table() const { return star_; }
  std::span<const Index> arrow_table() const { return arrow_; }

  /// Pairs a < b with no element strictly between them, in index order.
  std::vector<std::pair<Index, Index>> covering_pairs() const;

  /// Structural identity: same signature, labels, order, tables and bounds.
  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b);

 private:
  std::size_t at(Index a, Index b) const {
    return static_cast<std::size_t>(a) * labels_.size() + static_cast<std::size_t>(b);
  }

  Signature signature_;
  std::vector<std::string> labels_;
  std::vector<char> leq_;
  std::vector<Index> star_;
  std::vector<Index> arrow_;
  std::vector<Index> meet_;
  std::vector<Index> join_;
  Index bottom_;
  Index top_;
};

using ElementPair = std::pair<FiniteAlgebra::Index, FiniteAlgebra::Index>;

/// ResiduatedView over the whole carrier of a finite algebra.
class FiniteView {
 public:
  using element_type = FiniteAlgebra::Index;

  explicit FiniteView(const FiniteAlgebra& alg);

  std::span<const element_type> elements() const { return elements_; }
  element_type mul(element_type a, element_type b) const { return alg_->mul(a, b); }
  element_type imp(element_type a, element_type b) const { return alg_->imp(a, b); }
  element_type inf(element_type a, element_type b) const { return alg_->meet(a, b); }
  element_type sup(element_type a, element_type b) const { return alg_->join(a, b); }
  bool leq(element_type a, element_type b) const { return alg_->leq(a, b); }
  element_type zero() const { return alg_->bottom(); }
  element_type one() const { return alg_->top(); }
  const std::string& label(element_type a) const { return alg_->label(a); }

 private:
  const FiniteAlgebra* alg_;
  std::vector<element_type> elements_;
};

/// Reads the JSON algebra document (fields carrier, leq, star, arrow, bottom,
/// top, signature). Throws ParseError on malformed input.
FiniteAlgebra load_algebra(std::string_view document);
FiniteAlgebra load_algebra_file(const std::filesystem::path& path);
/// Canonical JSON document; leq is written as covering pairs.
std::string save_algebra(const FiniteAlgebra& alg);

/// BL1-BL5 or DBL1-DBL5 depending on the signature, exhaustively.
Report check_axioms(const FiniteAlgebra& alg);
/// B1-B15 or D1-D15 depending on the signature, exhaustively.
Report check_derived_laws(const FiniteAlgebra& alg);

/// Order-dual relabelling: carrier and tables unchanged, order reversed,
/// bottom and top swapped, signature toggled.
FiniteAlgebra dualize_algebra(const FiniteAlgebra& alg);

/// (a -> b) * (b -> a): the biresiduum on a BL-algebra, the distance d on a DBL-algebra.
FiniteAlgebra::Index biresiduum(const FiniteAlgebra& alg, FiniteAlgebra::Index a,
                                FiniteAlgebra::Index b);
/// (a1 <-> b1) * (a2 <-> b2).
FiniteAlgebra::Index pair_biresiduum(const FiniteAlgebra& alg, const ElementPair& a,
                                     const ElementPair& b);

}  // namespace bltk
