#include "bltk/finite_algebra.hpp"

#include <numeric>
#include <set>

#include "bltk/errors.hpp"
#include "bltk/laws.hpp"

namespace bltk {

std::string_view to_string(Signature s) { return s == Signature::BL ? "BL" : "DBL"; }

FiniteAlgebra::FiniteAlgebra(Signature signature, std::vector<std::string> labels,
                             const std::vector<std::pair<Index, Index>>& leq_pairs,
                             std::vector<Index> star, std::vector<Index> arrow, Index bottom,
                             Index top)
    : signature_(signature),
      labels_(std::move(labels)),
      star_(std::move(star)),
      arrow_(std::move(arrow)),
      bottom_(bottom),
      top_(top) {
  const std::size_t n = labels_.size();
  if (n < 2) throw Error(ErrorCode::ParseError, "carrier needs at least two elements");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n)
    throw Error(ErrorCode::ParseError, "carrier labels must be distinct");
  if (star_.size() != n * n || arrow_.size() != n * n)
    throw Error(ErrorCode::ParseError, "operation tables must be " + std::to_string(n) + "x" +
                                           std::to_string(n));

  const auto in_range = [n](Index i) { return i >= 0 && static_cast<std::size_t>(i) < n; };
  for (Index v : star_)
    if (!in_range(v)) throw Error(ErrorCode::TableOutOfRange, "star table entry outside the carrier");
  for (Index v : arrow_)
    if (!in_range(v)) throw Error(ErrorCode::TableOutOfRange, "arrow table entry outside the carrier");
  if (!in_range(bottom_) || !in_range(top_))
    throw Error(ErrorCode::TableOutOfRange, "bottom/top outside the carrier");

  // Reflexive-transitive closure of the supplied pairs (Warshall).
  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (const auto& [a, b] : leq_pairs) {
    if (!in_range(a) || !in_range(b))
      throw Error(ErrorCode::TableOutOfRange, "order pair outside the carrier");
    leq_[at(a, b)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq_[i * n + j] && leq_[j * n + i])
        throw Error(ErrorCode::NotAPartialOrder,
                    "'" + labels_[i] + "' and '" + labels_[j] + "' are mutually below each other");

  for (std::size_t i = 0; i < n; ++i) {
    if (!leq(bottom_, static_cast<Index>(i)))
      throw Error(ErrorCode::NotALattice, "'" + labels_[static_cast<std::size_t>(bottom_)] +
                                              "' is not below '" + labels_[i] + "'");
    if (!leq(static_cast<Index>(i), top_))
      throw Error(ErrorCode::NotALattice, "'" + labels_[i] + "' is not below '" +
                                              labels_[static_cast<std::size_t>(top_)] + "'");
  }

  meet_.assign(n * n, -1);
  join_.assign(n * n, -1);
  for (Index a = 0; a < static_cast<Index>(n); ++a)
    for (Index b = 0; b < static_cast<Index>(n); ++b) {
      // greatest lower bound: a lower bound above every other lower bound
      for (Index c = 0; c < static_cast<Index>(n) && meet_[at(a, b)] < 0; ++c) {
        if (!leq(c, a) || !leq(c, b)) continue;
        bool greatest = true;
        for (Index d = 0; d < static_cast<Index>(n) && greatest; ++d)
          if (leq(d, a) && leq(d, b) && !leq(d, c)) greatest = false;
        if (greatest) meet_[at(a, b)] = c;
      }
      for (Index c = 0; c < static_cast<Index>(n) && join_[at(a, b)] < 0; ++c) {
        if (!leq(a, c) || !leq(b, c)) continue;
        bool least = true;
        for (Index d = 0; d < static_cast<Index>(n) && least; ++d)
          if (leq(a, d) && leq(b, d) && !leq(c, d)) least = false;
        if (least) join_[at(a, b)] = c;
      }
      if (meet_[at(a, b)] < 0 || join_[at(a, b)] < 0)
        throw Error(ErrorCode::NotALattice, "'" + label(a) + "' and '" + label(b) +
                                                "' have no " +
                                                (meet_[at(a, b)] < 0 ? "meet" : "join"));
    }
}

std::optional<FiniteAlgebra::Index> FiniteAlgebra::index_of(std::string_view l) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == l) return static_cast<Index>(i);
  return std::nullopt;
}

std::vector<std::pair<FiniteAlgebra::Index, FiniteAlgebra::Index>> FiniteAlgebra::covering_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  const auto n = static_cast<Index>(size());
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (!lt(a, b)) continue;
      bool covers = true;
      for (Index c = 0; c < n && covers; ++c)
        if (lt(a, c) && lt(c, b)) covers = false;
      if (covers) out.emplace_back(a, b);
    }
  return out;
}

bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return a.signature_ == b.signature_ && a.labels_ == b.labels_ && a.leq_ == b.leq_ &&
         a.star_ == b.star_ && a.arrow_ == b.arrow_ && a.bottom_ == b.bottom_ && a.top_ == b.top_;
}

FiniteView::FiniteView(const FiniteAlgebra& alg) : alg_(&alg), elements_(alg.size()) {
  std::iota(elements_.begin(), elements_.end(), 0);
}

Report check_axioms(const FiniteAlgebra& alg) {
  const FiniteView v(alg);
  return alg.signature() == Signature::BL ? bl_axioms(v) : dbl_axioms(v);
}

Report check_derived_laws(const FiniteAlgebra& alg) {
  const FiniteView v(alg);
  return alg.signature() == Signature::BL ? bl_derived_laws(v) : dbl_derived_laws(v);
}

FiniteAlgebra dualize_algebra(const FiniteAlgebra& alg) {
  std::vector<std::pair<FiniteAlgebra::Index, FiniteAlgebra::Index>> reversed;
  for (const auto& [a, b] : alg.covering_pairs()) reversed.emplace_back(b, a);
  return FiniteAlgebra(alg.signature() == Signature::BL ? Signature::DBL : Signature::BL,
                       std::vector<std::string>(alg.labels().begin(), alg.labels().end()), reversed,
                       std::vector<FiniteAlgebra::Index>(alg.star_table().begin(), alg.star_table().end()),
                       std::vector<FiniteAlgebra::Index>(alg.arrow_table().begin(), alg.arrow_table().end()),
                       alg.top(), alg.bottom());
}

FiniteAlgebra::Index biresiduum(const FiniteAlgebra& alg, FiniteAlgebra::Index a,
                                FiniteAlgebra::Index b) {
  return alg.mul(alg.imp(a, b), alg.imp(b, a));
}

FiniteAlgebra::Index pair_biresiduum(const FiniteAlgebra& alg, const ElementPair& a,
                                     const ElementPair& b) {
  return alg.mul(biresiduum(alg, a.first, b.first), biresiduum(alg, a.second, b.second));
}

}  // namespace bltk
