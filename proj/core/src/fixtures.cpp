#include "bltk/fixtures.hpp"

#include "bltk/errors.hpp"
#include "bltk/norms.hpp"

namespace bltk::fixtures {

namespace {

using Index = FiniteAlgebra::Index;

/// A chain {0, 1/(n-1), ..., 1} with tables taken from a continuous t-norm
/// and its residuum. Throws TableOutOfRange if the chain is not closed.
FiniteAlgebra chain_from_norm(NormKind kind, int n) {
  if (n < 2) throw Error(ErrorCode::ParseError, "a chain needs at least two elements");
  std::vector<UnitValue> points;
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k) {
    points.emplace_back(k, static_cast<unsigned long>(n - 1));
    labels.push_back(points.back().str());
  }
  auto index_of = [&](const UnitValue& v) -> Index {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == v) return static_cast<Index>(i);
    throw Error(ErrorCode::TableOutOfRange, v.str() + " is not on the chain");
  };
  const NormFamily t = t_norm(kind);
  std::vector<Index> star, arrow;
  std::vector<std::pair<Index, Index>> order;
  for (int a = 0; a < n; ++a) {
    if (a + 1 < n) order.emplace_back(a, a + 1);
    for (int b = 0; b < n; ++b) {
      star.push_back(index_of(apply_norm(t, points[static_cast<std::size_t>(a)], points[static_cast<std::size_t>(b)])));
      arrow.push_back(index_of(residuum(t, points[static_cast<std::size_t>(a)], points[static_cast<std::size_t>(b)])));
    }
  }
  return FiniteAlgebra(Signature::BL, std::move(labels), order, std::move(star), std::move(arrow), 0, n - 1);
}

}  // namespace

FiniteAlgebra lukasiewicz_chain(int n) { return chain_from_norm(NormKind::Lukasiewicz, n); }

FiniteAlgebra goedel_chain(int n) { return chain_from_norm(NormKind::Goedel, n); }

FiniteAlgebra boolean_algebra(int atoms) {
  if (atoms < 1 || atoms > 6) throw Error(ErrorCode::ParseError, "boolean fixtures support 1..6 atoms");
  const int n = 1 << atoms;
  const unsigned full = static_cast<unsigned>(n - 1);
  std::vector<std::string> labels;
  for (int s = 0; s < n; ++s) {
    if (s == 0) labels.emplace_back("0");
    else if (static_cast<unsigned>(s) == full) labels.emplace_back("1");
    else {
      std::string l;
      for (int i = 0; i < atoms; ++i)
        if (s & (1 << i)) l += static_cast<char>('a' + i);
      labels.push_back(l);
    }
  }
  std::vector<Index> star, arrow;
  std::vector<std::pair<Index, Index>> order;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto ua = static_cast<unsigned>(a), ub = static_cast<unsigned>(b);
      star.push_back(static_cast<Index>(ua & ub));
      arrow.push_back(static_cast<Index>(((~ua) & full) | ub));
      if (a != b && (ua & ub) == ua) order.emplace_back(a, b);
    }
  return FiniteAlgebra(Signature::BL, std::move(labels), order, std::move(star), std::move(arrow), 0, n - 1);
}

FiniteAlgebra corrupted_lukasiewicz_4() {
  const FiniteAlgebra l4 = lukasiewicz_chain(4);
  std::vector<Index> arrow(l4.arrow_table().begin(), l4.arrow_table().end());
  // 1/3 -> 0 is 2/3 in the Lukasiewicz chain; make it 1/3.
  arrow[1 * 4 + 0] = 1;
  std::vector<std::pair<Index, Index>> order{{0, 1}, {1, 2}, {2, 3}};
  return FiniteAlgebra(Signature::BL, std::vector<std::string>(l4.labels().begin(), l4.labels().end()),
                       order, std::vector<Index>(l4.star_table().begin(), l4.star_table().end()),
                       std::move(arrow), 0, 3);
}

std::vector<Fixture> standard_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"l2", "two-element Lukasiewicz chain", lukasiewicz_chain(2), true});
  out.push_back({"l4", "four-element Lukasiewicz chain", lukasiewicz_chain(4), true});
  out.push_back({"g3", "three-element Goedel chain", goedel_chain(3), true});
  out.push_back({"bool2", "two-element Boolean algebra", boolean_algebra(1), true});
  out.push_back({"bool4", "four-element Boolean algebra", boolean_algebra(2), true});
  out.push_back({"l4-corrupt", "Lukasiewicz chain with 1/3 -> 0 set to 1/3", corrupted_lukasiewicz_4(), false});
  return out;
}

}  // namespace bltk::fixtures
