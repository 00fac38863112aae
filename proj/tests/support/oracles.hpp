#pragma once

// Test-side reference implementations. Nothing here calls into the library's
// norm, residuum, metric or topology code; values are recomputed from the
// defining formulas with plain GMP rationals and brute-force search.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Q = mpq_class;

enum class Fam { Lukasiewicz, Goedel, Product, Drastic };

inline const Fam kContinuous[] = {Fam::Lukasiewicz, Fam::Goedel, Fam::Product};

inline Q q(long n, long d) {
  Q r(n, d);
  r.canonicalize();
  return r;
}

inline Q qmin(const Q& a, const Q& b) { return a < b ? a : b; }
inline Q qmax(const Q& a, const Q& b) { return a < b ? b : a; }

inline std::vector<Q> grid(long n) {
  std::vector<Q> g;
  for (long k = 0; k <= n; ++k) g.push_back(q(k, n));
  return g;
}

inline Q t_norm(Fam f, const Q& x, const Q& y) {
  switch (f) {
    case Fam::Lukasiewicz: return qmax(0, x + y - 1);
    case Fam::Goedel: return qmin(x, y);
    case Fam::Product: return x * y;
    case Fam::Drastic: return qmax(x, y) == 1 ? qmin(x, y) : Q(0);
  }
  return 0;
}

inline Q s_norm(Fam f, const Q& x, const Q& y) {
  switch (f) {
    case Fam::Lukasiewicz: return qmin(1, x + y);
    case Fam::Goedel: return qmax(x, y);
    case Fam::Product: return x + y - x * y;
    case Fam::Drastic: return qmin(x, y) == 0 ? qmax(x, y) : Q(1);
  }
  return 0;
}

/// Bisection over {k / den : 0 <= k <= den} for the least k with pred(k / den),
/// pred monotone non-decreasing and true at k = den.
template <class Pred>
Q least_on_grid(const mpz_class& den, Pred pred) {
  mpz_class lo = 0, hi = den;
  while (lo < hi) {
    mpz_class mid = (lo + hi) / 2;
    if (pred(Q(mid, den))) hi = mid;
    else lo = mid + 1;
  }
  Q r(lo, den);
  r.canonicalize();
  return r;
}

/// A denominator whose grid contains every residuum value reached from
/// inputs on the grid 1/n: all answers are ratios of numerators <= n.
inline mpz_class residuum_denominator(long n) {
  mpz_class l = 1;
  for (long k = 1; k <= n; ++k) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(k));
  return l * n;
}

/// min{c : S(c, x) >= y}, found by search on a fine grid.
inline Q s_residuum(Fam f, const Q& x, const Q& y, const mpz_class& den) {
  return least_on_grid(den, [&](const Q& c) { return s_norm(f, c, x) >= y; });
}

/// max{z : T(z, x) <= y}, found by search on a fine grid.
inline Q t_residuum(Fam f, const Q& x, const Q& y, const mpz_class& den) {
  // T(., x) <= y is downward closed; find the least z where it fails.
  mpz_class lo = 0, hi = den + 1;  // hi: first failing index, den + 1 = none fails
  while (lo < hi) {
    mpz_class mid = (lo + hi) / 2;
    if (t_norm(f, Q(mid, den), x) > y) hi = mid;
    else lo = mid + 1;
  }
  Q r(lo - 1, den);
  r.canonicalize();
  return r;
}

/// A search denominator for arbitrary rational inputs x = a/b, y = c/d: every
/// residuum value is one of y - x, y, 1 - x + y, (cb - ad) / (d (b - a)) or
/// cb / (da), all of which have denominators dividing b d (b - a) max(a, 1).
inline mpz_class residuum_denominator(const Q& x, const Q& y) {
  const mpz_class a = x.get_num(), b = x.get_den(), d = y.get_den();
  return b * d * (b - a == 0 ? mpz_class(1) : mpz_class(b - a)) * (a == 0 ? mpz_class(1) : a);
}

/// The residuum metric written from the definition, with searched residua.
inline Q distance(Fam f, const Q& a, const Q& b, const mpz_class& den) {
  return s_norm(f, s_residuum(f, a, b, den), s_residuum(f, b, a, den));
}

inline Q distance(Fam f, const Q& a, const Q& b) {
  return s_norm(f, s_residuum(f, a, b, residuum_denominator(a, b)), s_residuum(f, b, a, residuum_denominator(b, a)));
}

/// Printed closed forms of the three induced metrics.
inline Q table_distance(Fam f, const Q& x, const Q& y) {
  if (x == y) return 0;
  switch (f) {
    case Fam::Lukasiewicz: return abs(x - y);
    case Fam::Goedel: return qmax(x, y);
    case Fam::Product: return abs(x - y) / (1 - qmin(x, y));
    default: return -1;
  }
}

/// Printed closed forms of the three s-residua.
inline Q table_residuum(Fam f, const Q& x, const Q& y) {
  if (x >= y) return 0;
  switch (f) {
    case Fam::Lukasiewicz: return y - x;
    case Fam::Goedel: return y;
    case Fam::Product: return (y - x) / (1 - x);
    default: return -1;
  }
}

/// The n-element Lukasiewicz chain tables, indices k <-> k / (n - 1).
struct ChainTables {
  std::vector<int> star;
  std::vector<int> arrow;
};

inline ChainTables lukasiewicz_tables(int n) {
  ChainTables t;
  const int m = n - 1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t.star.push_back(std::max(0, a + b - m));
      t.arrow.push_back(std::min(m, m - a + b));
    }
  return t;
}

inline ChainTables goedel_tables(int n) {
  ChainTables t;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t.star.push_back(std::min(a, b));
      t.arrow.push_back(a <= b ? n - 1 : b);
    }
  return t;
}

/// Brute-force open-set enumeration for a finite algebra given by callbacks:
/// closeness(a, b) is the biresiduum or distance, below(r, x) the strict
/// comparison deciding ball membership, radius(r) admissibility.
template <class Close, class Within, class Admissible>
std::set<std::set<int>> open_sets(int n, Close closeness, Within within, Admissible admissible) {
  std::vector<std::set<int>> balls_of[64];
  for (int a = 0; a < n; ++a)
    for (int r = 0; r < n; ++r) {
      if (!admissible(r)) continue;
      std::set<int> ball;
      for (int b = 0; b < n; ++b)
        if (within(closeness(a, b), r)) ball.insert(b);
      balls_of[a].push_back(ball);
    }
  std::set<std::set<int>> opens;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::set<int> s;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1U) s.insert(i);
    bool open = true;
    for (int a : s) {
      bool some = false;
      for (const auto& ball : balls_of[a])
        if (std::includes(s.begin(), s.end(), ball.begin(), ball.end())) some = true;
      if (!some) open = false;
    }
    if (open) opens.insert(s);
  }
  return opens;
}

}  // namespace oracle
