#pragma once

#include <string>
#include <vector>

#include "bltk/finite_algebra.hpp"

namespace bltk::fixtures {

/// The n-element Lukasiewicz chain {0, 1/(n-1), ..., 1}, tables from T_L and its residuum.
FiniteAlgebra lukasiewicz_chain(int n);
/// The n-element Goedel chain, tables from min and the Goedel residuum.
FiniteAlgebra goedel_chain(int n);
/// The Boolean algebra of subsets of `atoms` atoms (2^atoms elements), * = meet.
FiniteAlgebra boolean_algebra(int atoms);
/// The 4-element Lukasiewicz chain with the entry 1/3 -> 0 changed from 2/3 to 1/3.
FiniteAlgebra corrupted_lukasiewicz_4();

struct Fixture {
  std::string name;  // file stem, e.g. "l4"
  std::string description;
  FiniteAlgebra algebra;
  bool valid;  // false for deliberately broken fixtures
};

/// l2, l4, g3, bool2, bool4 and l4-corrupt.
std::vector<Fixture> standard_fixtures();

}  // namespace bltk::fixtures
