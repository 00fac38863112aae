#include "bltk/grid.hpp"

#include "bltk/errors.hpp"

namespace bltk {

void GridSpec::validate() const {
  if (denominator < 2)
    throw Error(ErrorCode::InvalidGrid,
                "grid denominator must be at least 2, got " + std::to_string(denominator));
}

std::vector<UnitValue> GridSpec::points() const {
  validate();
  std::vector<UnitValue> pts;
  pts.reserve(static_cast<std::size_t>(denominator) + 1);
  for (long k = 0; k <= denominator; ++k)
    pts.emplace_back(k, static_cast<unsigned long>(denominator));
  return pts;
}

}  // namespace bltk
