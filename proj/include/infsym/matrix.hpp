#pragma once

#include "infsym/rational.hpp"

#include <vector>

namespace infsym {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant by Gaussian elimination; the empty matrix gives 1.
Rational determinant(RationalMatrix m);

}  // namespace infsym
