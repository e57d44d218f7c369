#include "infsym/total_positivity.hpp"

#include "infsym/matrix.hpp"

#include <limits>
#include <stdexcept>

namespace infsym {

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TPResult is_totally_positive(const std::vector<Rational>& a, int window, int max_order, Exec exec) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  if (a.size() < static_cast<std::size_t>(window))
    throw std::invalid_argument("need at least `window` coefficients");
  if (a[0] <= 0) throw std::invalid_argument("a_0 must be positive");

  auto entry = [&](int i, int j) { return j >= i ? a[static_cast<std::size_t>(j - i)] : Rational(0); };

  TPResult result;
  for (int r = 1; r <= std::min(max_order, window); ++r) {
    const auto sets = subsets(window, r);
    const auto nsets = static_cast<std::ptrdiff_t>(sets.size());
    // first_bad[i] = index of the first failing column set for row set i.
    std::vector<std::size_t> first_bad(sets.size(), std::numeric_limits<std::size_t>::max());
    std::vector<Rational> bad_value(sets.size());

    auto scan_rows = [&](std::ptrdiff_t ri) {
      const auto& rows = sets[static_cast<std::size_t>(ri)];
      for (std::size_t ci = 0; ci < sets.size(); ++ci) {
        const auto& cols = sets[ci];
        RationalMatrix m(static_cast<std::size_t>(r), std::vector<Rational>(static_cast<std::size_t>(r)));
        for (int x = 0; x < r; ++x)
          for (int y = 0; y < r; ++y)
            m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                entry(rows[static_cast<std::size_t>(x)], cols[static_cast<std::size_t>(y)]);
        Rational d = determinant(std::move(m));
        if (d < 0) {
          first_bad[static_cast<std::size_t>(ri)] = ci;
          bad_value[static_cast<std::size_t>(ri)] = d;
          return;
        }
      }
    };
    if (exec == Exec::serial) {
      for (std::ptrdiff_t i = 0; i < nsets; ++i) scan_rows(i);
    } else {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t i = 0; i < nsets; ++i) scan_rows(i);
    }

    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (first_bad[i] == std::numeric_limits<std::size_t>::max()) {
        result.minors_checked += sets.size();
        continue;
      }
      result.minors_checked += first_bad[i] + 1;
      result.positive = false;
      result.rows = sets[i];
      result.cols = sets[first_bad[i]];
      result.value = bad_value[i];
      return result;
    }
  }
  return result;
}

}  // namespace infsym
