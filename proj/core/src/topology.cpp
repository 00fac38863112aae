#include "bltk/topology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "bltk/errors.hpp"
#include "bltk/laws.hpp"

namespace bltk {

namespace {

using Index = FiniteAlgebra::Index;

void require_carrier(const FiniteAlgebra& alg, std::size_t limit, const char* what) {
  if (alg.size() > limit)
    throw Error(ErrorCode::CarrierTooLarge, std::string(what) + " supports carriers of at most " +
                                                std::to_string(limit) + " elements, got " +
                                                std::to_string(alg.size()));
}

ElementSet full_set(std::size_t n) { return n >= 64 ? ~ElementSet{0} : (ElementSet{1} << n) - 1; }

bool contains(ElementSet s, Index i) { return (s >> i) & 1U; }

std::vector<Index> members(ElementSet s) {
  std::vector<Index> out;
  for (Index i = 0; s >> i; ++i)
    if (contains(s, i)) out.push_back(i);
  return out;
}

/// "<" for DBL distances and ">" for BL biresidua, both in the strict lattice order.
bool within(const FiniteAlgebra& alg, Index closeness, Index radius) {
  return alg.signature() == Signature::BL ? alg.lt(radius, closeness) : alg.lt(closeness, radius);
}

void require_radius(const FiniteAlgebra& alg, Index radius) {
  if (radius < 0 || static_cast<std::size_t>(radius) >= alg.size())
    throw Error(ErrorCode::InadmissibleRadius, "radius outside the carrier");
  const bool ok = alg.signature() == Signature::BL ? strongly_less_than_one(alg, radius) : positive(alg, radius);
  if (!ok)
    throw Error(ErrorCode::InadmissibleRadius,
                "'" + alg.label(radius) + "' is not " +
                    (alg.signature() == Signature::BL ? "strongly less than 1" : "positive"));
}

/// Balls of every admissible radius around every point of L.
struct BallTable {
  RadiusSet radii;
  std::vector<std::vector<ElementSet>> balls;  // [center][radius position]

  explicit BallTable(const FiniteAlgebra& alg) : radii(admissible_radii(alg)) {
    balls.resize(alg.size());
    for (Index a = 0; a < static_cast<Index>(alg.size()); ++a)
      for (Index r : radii.elements) balls[static_cast<std::size_t>(a)].push_back(ball(alg, a, r));
  }

  bool point_ok(Index a, ElementSet s) const {
    for (ElementSet b : balls[static_cast<std::size_t>(a)])
      if ((b & ~s) == 0) return true;
    return false;
  }

  bool open(ElementSet s) const {
    for (Index a : members(s))
      if (!point_ok(a, s)) return false;
    return true;
  }
};

/// Balls of every admissible radius around every point of L x L.
struct ProductBallTable {
  std::size_t n;
  std::vector<std::vector<PairSet>> balls;  // [a * n + b][radius position]

  explicit ProductBallTable(const FiniteAlgebra& alg) : n(alg.size()) {
    const RadiusSet radii = admissible_radii(alg);
    balls.resize(n * n);
    for (std::size_t p = 0; p < n * n; ++p)
      for (Index r : radii.elements)
        balls[p].push_back(product_ball(alg, {static_cast<Index>(p / n), static_cast<Index>(p % n)}, r));
  }

  /// First point of s with no ball inside s, or npos.
  std::size_t first_bad_point(const PairSet& s) const {
    for (auto p = s.find_first(); p != PairSet::npos; p = s.find_next(p)) {
      bool ok = false;
      for (const auto& b : balls[p])
        if (b.is_subset_of(s)) {
          ok = true;
          break;
        }
      if (!ok) return p;
    }
    return PairSet::npos;
  }
};

bool index_order_less(ElementSet a, ElementSet b) {
  const int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  const auto ma = members(a), mb = members(b);
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace

bool strongly_less_than_one(const FiniteAlgebra& alg, Index a) {
  for (Index b = 0; b < static_cast<Index>(alg.size()); ++b)
    if (alg.join(a, b) == alg.top() && b != alg.top()) return false;
  return true;
}

bool positive(const FiniteAlgebra& alg, Index a) {
  for (Index b = 0; b < static_cast<Index>(alg.size()); ++b)
    if (alg.meet(a, b) == alg.bottom() && b != alg.bottom()) return false;
  return true;
}

RadiusSet admissible_radii(const FiniteAlgebra& alg) {
  require_carrier(alg, kMaxCarrier, "radius sets");
  RadiusSet rs;
  for (Index a = 0; a < static_cast<Index>(alg.size()); ++a) {
    const bool ok = alg.signature() == Signature::BL ? strongly_less_than_one(alg, a) : positive(alg, a);
    if (ok) {
      rs.elements.push_back(a);
      rs.mask |= ElementSet{1} << a;
    }
  }
  return rs;
}

ElementSet ball(const FiniteAlgebra& alg, Index center, Index radius) {
  require_carrier(alg, kMaxCarrier, "balls");
  require_radius(alg, radius);
  ElementSet s = 0;
  for (Index b = 0; b < static_cast<Index>(alg.size()); ++b)
    if (within(alg, biresiduum(alg, center, b), radius)) s |= ElementSet{1} << b;
  return s;
}

PairSet product_ball(const FiniteAlgebra& alg, const ElementPair& center, Index radius) {
  require_radius(alg, radius);
  const std::size_t n = alg.size();
  PairSet s(n * n);
  for (Index b1 = 0; b1 < static_cast<Index>(n); ++b1)
    for (Index b2 = 0; b2 < static_cast<Index>(n); ++b2)
      if (within(alg, pair_biresiduum(alg, center, {b1, b2}), radius))
        s.set(static_cast<std::size_t>(b1) * n + static_cast<std::size_t>(b2));
  return s;
}

bool is_open(const FiniteAlgebra& alg, ElementSet s) {
  require_carrier(alg, kMaxCarrier, "open sets");
  const RadiusSet radii = admissible_radii(alg);
  for (Index a : members(s)) {
    bool ok = false;
    for (Index r : radii.elements)
      if ((ball(alg, a, r) & ~s) == 0) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool product_is_open(const FiniteAlgebra& alg, const PairSet& s) {
  const std::size_t n = alg.size();
  const RadiusSet radii = admissible_radii(alg);
  for (auto p = s.find_first(); p != PairSet::npos; p = s.find_next(p)) {
    const ElementPair center{static_cast<Index>(p / n), static_cast<Index>(p % n)};
    bool ok = false;
    for (Index r : radii.elements)
      if (product_ball(alg, center, r).is_subset_of(s)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool Topology::contains(ElementSet s) const {
  return std::binary_search(opens.begin(), opens.end(), s, index_order_less);
}

Topology enumerate_topology(const FiniteAlgebra& alg, std::size_t bound) {
  require_carrier(alg, std::min(bound, kMaxEnumerationBound), "topology enumeration");
  const BallTable table(alg);
  Topology t;
  t.carrier_size = alg.size();
  const ElementSet count = ElementSet{1} << alg.size();
  for (ElementSet s = 0; s < count; ++s)
    if (table.open(s)) t.opens.push_back(s);
  std::sort(t.opens.begin(), t.opens.end(), index_order_less);
  return t;
}

std::string format_set(const FiniteAlgebra& alg, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Index i : members(s)) {
    if (!first) out += ", ";
    first = false;
    out += alg.label(i);
  }
  return out + "}";
}

std::string export_topology(const FiniteAlgebra& alg, const Topology& t) {
  std::string out;
  for (ElementSet s : t.opens) out += format_set(alg, s) + "\n";
  return out;
}

Report topology_axioms_check(const FiniteAlgebra& alg, const Topology& t) {
  const std::size_t n = t.carrier_size;
  require_carrier(alg, kMaxEnumerationBound, "topology checks");
  std::vector<char> is_member(std::size_t{1} << n, 0);
  for (ElementSet s : t.opens) is_member[s] = 1;

  auto single = [](std::string law, bool ok, std::string what) {
    LawResult r;
    r.law = std::move(law);
    r.checked = 1;
    if (!ok) {
      r.status = LawStatus::Fail;
      r.violation_count = 1;
      r.witnesses.push_back({r.law, std::move(what), {}, "", "", ""});
    }
    return r;
  };
  Report r;
  r.push_back(single("T-empty", is_member[0] != 0, "empty set is not open"));
  r.push_back(single("T-full", is_member[full_set(n)] != 0, "carrier is not open"));

  LawResult meet, join;
  meet.law = "T-intersection";
  join.law = "T-union";
  for (std::size_t i = 0; i < t.opens.size(); ++i)
    for (std::size_t j = i; j < t.opens.size(); ++j) {
      const ElementSet a = t.opens[i], b = t.opens[j];
      for (auto [lr, s] : {std::pair{&meet, a & b}, std::pair{&join, a | b}}) {
        ++lr->checked;
        if (is_member[s]) continue;
        ++lr->violation_count;
        lr->status = LawStatus::Fail;
        if (lr->witnesses.size() < kMaxWitnesses)
          lr->witnesses.push_back({lr->law, "result " + format_set(alg, s) + " is not open",
                                   {format_set(alg, a), format_set(alg, b)}, "", "", ""});
      }
    }
  r.push_back(meet);
  r.push_back(join);
  return r;
}

Report verify_operation_continuity(const FiniteAlgebra& alg, std::size_t bound) {
  require_carrier(alg, kMaxCarrier, "continuity checks");
  const std::size_t n = alg.size();
  const bool enumerate = n <= std::min(bound, kMaxEnumerationBound);

  Report r;
  std::vector<ElementSet> targets;
  std::string note;
  if (enumerate) {
    targets = enumerate_topology(alg, bound).opens;
    note = std::to_string(targets.size()) + " open sets";
  } else {
    // Every open set is a union of minimal open neighbourhoods U_y, so their
    // preimages decide continuity. U_y is the closure of {y} under the
    // tightest admissible ball, which needs that radius to be admissible and
    // its balls to sit inside every other ball at the same centre.
    const BallTable table(alg);
    const bool bl = alg.signature() == Signature::BL;
    Index tight = table.radii.elements.front();
    for (Index rad : table.radii.elements) tight = bl ? alg.join(tight, rad) : alg.meet(tight, rad);
    LawResult basis;
    basis.law = "neighbourhood-basis";
    const auto pos = std::find(table.radii.elements.begin(), table.radii.elements.end(), tight);
    if (pos == table.radii.elements.end()) {
      basis.status = LawStatus::Fail;
      basis.violation_count = 1;
      basis.witnesses.push_back({basis.law, "tightest radius is not admissible", {alg.label(tight)}, "", "", ""});
      r.push_back(basis);
      return r;
    }
    const auto tight_pos = static_cast<std::size_t>(pos - table.radii.elements.begin());
    for (Index a = 0; a < static_cast<Index>(n); ++a) {
      const auto& balls = table.balls[static_cast<std::size_t>(a)];
      for (std::size_t k = 0; k < balls.size(); ++k) {
        ++basis.checked;
        if ((balls[tight_pos] & ~balls[k]) == 0) continue;
        ++basis.violation_count;
        basis.status = LawStatus::Fail;
      }
    }
    for (Index y = 0; y < static_cast<Index>(n); ++y) {
      ElementSet u = ElementSet{1} << y;
      for (ElementSet prev = 0; prev != u;) {
        prev = u;
        for (Index x : members(prev)) u |= table.balls[static_cast<std::size_t>(x)][tight_pos];
      }
      ++basis.checked;
      if (!table.open(u)) {
        ++basis.violation_count;
        basis.status = LawStatus::Fail;
      }
      targets.push_back(u);
    }
    r.push_back(basis);
    if (!basis.passed()) return r;
    note = std::to_string(n) + " minimal open neighbourhoods";
  }

  const ProductBallTable pairs(alg);
  auto check = [&](std::string law, auto op) {
    LawResult lr;
    lr.law = std::move(law);
    lr.note = note;
    for (ElementSet target : targets) {
      PairSet pre(n * n);
      for (Index a = 0; a < static_cast<Index>(n); ++a)
        for (Index b = 0; b < static_cast<Index>(n); ++b)
          if (contains(target, op(a, b))) pre.set(static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b));
      ++lr.checked;
      const std::size_t bad = pairs.first_bad_point(pre);
      if (bad == PairSet::npos) continue;
      ++lr.violation_count;
      lr.status = LawStatus::Fail;
      if (lr.witnesses.size() < kMaxWitnesses)
        lr.witnesses.push_back({lr.law, "preimage is not open at the second point",
                                {format_set(alg, target),
                                 "(" + alg.label(static_cast<Index>(bad / n)) + ", " +
                                     alg.label(static_cast<Index>(bad % n)) + ")"},
                                "", "", ""});
    }
    return lr;
  };
  r.push_back(check("continuity-star", [&](Index a, Index b) { return alg.mul(a, b); }));
  r.push_back(check("continuity-arrow", [&](Index a, Index b) { return alg.imp(a, b); }));
  return r;
}

Report check_radius_lemmas(const FiniteAlgebra& alg) {
  const RadiusSet rs = admissible_radii(alg);
  const FiniteView v(alg);
  const auto dom = v.elements();
  auto label = [&](Index x) { return alg.label(x); };
  auto in = [&](Index x) { return rs.contains(x); };
  auto fail = [&](const char* clause, Index x) {
    return Outcome(Failure{clause, alg.label(x), "in", "radius set"});
  };
  const bool bl = alg.signature() == Signature::BL;
  Report r;
  if (bl) {
    r.push_back(sweep<1, Index>("L1", dom, [&](Index a) -> Outcome {
      return a != alg.bottom() || in(a) ? Outcome{} : fail("0 << 1", a);
    }, label));
    r.push_back(sweep<1, Index>("L2", dom, [&](Index a) -> Outcome {
      return !in(a) || alg.lt(a, alg.top()) ? Outcome{} : Failure{"a << 1 implies a < 1", alg.label(a), "<", "1"};
    }, label));
    r.push_back(sweep<2, Index>("L3", dom, [&](Index a, Index b) -> Outcome {
      return !(alg.lt(b, a) && in(a)) || in(b) ? Outcome{} : fail("b < a << 1 implies b << 1", b);
    }, label));
    r.push_back(sweep<2, Index>("L4", dom, [&](Index a, Index b) -> Outcome {
      return !(in(a) && in(b)) || in(alg.join(a, b)) ? Outcome{} : fail("a v b << 1", alg.join(a, b));
    }, label));
  } else {
    r.push_back(sweep<1, Index>("G1", dom, [&](Index a) -> Outcome {
      return a != alg.top() || in(a) ? Outcome{} : fail("1 >> 0", a);
    }, label));
    r.push_back(sweep<1, Index>("G2", dom, [&](Index a) -> Outcome {
      return !in(a) || alg.lt(alg.bottom(), a) ? Outcome{} : Failure{"a >> 0 implies a > 0", alg.label(a), ">", "0"};
    }, label));
    r.push_back(sweep<2, Index>("G3", dom, [&](Index a, Index b) -> Outcome {
      return !(alg.lt(a, b) && in(a)) || in(b) ? Outcome{} : fail("b > a >> 0 implies b >> 0", b);
    }, label));
    r.push_back(sweep<2, Index>("G4", dom, [&](Index a, Index b) -> Outcome {
      return !(in(a) && in(b)) || in(alg.meet(a, b)) ? Outcome{} : fail("inf(a,b) >> 0", alg.meet(a, b));
    }, label));
  }
  return r;
}

}  // namespace bltk
