// Serial reference against the OpenMP path for each enumeration kernel.
// Prints one line per kernel: wall times and whether the results agree.

#include "infsym/classify.hpp"
#include "infsym/cosets.hpp"
#include "infsym/diagram.hpp"
#include "infsym/symchar.hpp"
#include "infsym/thoma.hpp"
#include "infsym/total_positivity.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace infsym;

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class Result>
void compare(const std::string& name, const std::function<Result(Exec)>& kernel) {
  Result serial, parallel;
  double ts = seconds([&] { serial = kernel(Exec::serial); });
  double tp = seconds([&] { parallel = kernel(Exec::parallel); });
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name.c_str(), ts, tp,
              tp > 0 ? ts / tp : 0.0, serial == parallel ? "agree" : "MISMATCH");
}

bool same(const RelationReport& a, const RelationReport& b) { return a.checked == b.checked && a.failures == b.failures; }

}  // namespace

int main() {
  std::printf("threads: %d\n", thread_count());

  compare<std::vector<std::vector<Integer>>>("character_table n=14",
                                             [](Exec e) { return character_table(14, e).values; });
  compare<std::map<Partition, std::uint64_t>>("census n=4", [](Exec e) { return census(4, e); });
  compare<bool>("verify_relations window 4", [](Exec e) {
    static RelationReport first;
    static bool have = false;
    RelationReport r = verify_relations(4, false, e);
    if (!have) {
      first = r;
      have = true;
      return true;
    }
    return same(first, r);
  });

  std::vector<Rational> exp_coeffs{1};
  for (int k = 1; k < 12; ++k) exp_coeffs.push_back(exp_coeffs.back() / k);
  compare<std::uint64_t>("tp scan e^t window 12 ord 4",
                         [&](Exec e) { return is_totally_positive(exp_coeffs, 12, 4, e).minors_checked; });
  compare<Rational>("alt_falsifier m=8", [](Exec e) { return alt_falsifier(Rational(1, 5), Rational(3, 2), 8, e).brute; });
  compare<std::vector<Rational>>("ergodic alpha=(1/2,1/2)", [](Exec e) {
    std::vector<Rational> out;
    for (const auto& pt : ergodic_converge(ThomaParams::from_alpha_beta({Rational(1, 2), Rational(1, 2)}, {}), 2,
                                           {40, 80, 160, 320}, e))
      out.push_back(pt.chi);
    return out;
  });
  return 0;
}
