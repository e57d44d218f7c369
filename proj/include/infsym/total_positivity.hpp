#pragma once

// Minor scan of the Toeplitz matrix [a_{j-i}] of a sequence.

#include "infsym/parallel.hpp"
#include "infsym/rational.hpp"

#include <cstdint>
#include <vector>

namespace infsym {

struct TPResult {
  bool positive = true;
  // First negative minor in the scan order (order, then rows, then columns,
  // both lexicographic). Empty when positive.
  std::vector<int> rows, cols;
  Rational value;
  std::uint64_t minors_checked = 0;
};

/// Checks every minor of order <= max_order of the window x window Toeplitz
/// matrix T[i][j] = a_{j-i} (a_k = 0 for k < 0). Needs a.size() >= window and
/// a_0 > 0.
TPResult is_totally_positive(const std::vector<Rational>& a, int window, int max_order,
                             Exec exec = Exec::parallel);

}  // namespace infsym
