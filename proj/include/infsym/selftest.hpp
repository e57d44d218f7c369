#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace infsym {

struct SelftestResult {
  std::vector<std::pair<std::string, bool>> checks;
  bool ok() const {
    for (const auto& [name, pass] : checks)
      if (!pass) return false;
    return true;
  }
};

/// Diagram relations, coset census, character cross-checks and the series and
/// mixture identities. Randomized parts are driven by `seed`.
SelftestResult run_selftest(std::uint64_t seed, int window = 4);

}  // namespace infsym
