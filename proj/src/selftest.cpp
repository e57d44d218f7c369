#include "infsym/selftest.hpp"

#include "infsym/classify.hpp"
#include "infsym/cosets.hpp"
#include "infsym/diagram.hpp"
#include "infsym/sampling.hpp"
#include "infsym/symchar.hpp"
#include "infsym/thoma.hpp"

namespace infsym {

SelftestResult run_selftest(std::uint64_t seed, int window) {
  SelftestResult r;
  Rng rng(seed);
  auto add = [&](const std::string& name, bool pass) { r.checks.emplace_back(name, pass); };

  add("diagram relations (even window)", verify_relations(window).ok());
  add("diagram relations (odd window)", verify_relations(window, true).ok());

  bool assoc = true;
  for (int t = 0; t < 200 && assoc; ++t) {
    const bool odd = t % 2;
    auto a = random_diagram(3, odd, rng), b = random_diagram(3, odd, rng), c = random_diagram(3, odd, rng);
    assoc = (a * b) * c == a * (b * c) && (a * b).star() == b.star() * a.star();
  }
  add("diagram associativity and star", assoc);

  bool census_ok = true;
  for (int n = 1; n <= 4 && census_ok; ++n) {
    auto tally = census(n);
    std::vector<Integer> by_length(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& lambda : partitions_of(n)) {
      std::uint64_t count = tally.contains(lambda) ? tally.at(lambda) : 0;
      census_ok = census_ok && Integer(static_cast<unsigned long>(count)) == coset_size(lambda, n);
      by_length[static_cast<std::size_t>(lambda.length())] += static_cast<unsigned long>(count);
    }
    census_ok = census_ok && by_length == coset_poly(n);
  }
  add("coset census", census_ok);

  bool mn = true;
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& rho : partitions_of(n)) mn = mn && mn_character(lambda, rho) == frobenius_character(lambda, rho);
  add("Murnaghan-Nakayama = Frobenius determinant", mn);

  bool ortho = true;
  for (int n = 1; n <= 6; ++n) {
    auto shapes = partitions_of(n);
    for (const auto& a : shapes)
      for (const auto& b : shapes)
        ortho = ortho && inner_product(irreducible_character(a), irreducible_character(b)) == (a == b ? 1 : 0);
  }
  add("character orthonormality", ortho);

  bool series = true;
  for (int t = 0; t < 20; ++t) {
    ThomaParams p = random_params(rng);
    PowerSeries h = h_from_params(p, 24);
    series = series && h == h_from_moments(moments(to_measure(p), 24), 24);
    series = series && c_from_h(h) == moments(to_measure(p), 24);
  }
  add("H-series from parameters and from moments", series);

  bool falsifier = true;
  for (int t = 0; t < 20; ++t) {
    Rational x = random_rational(rng, -1, 1, 8);
    if (x == 0) x = Rational(1, 3);
    Rational nu = random_rational(rng, 0, 5, 4);
    auto res = alt_falsifier(x, nu, 1 + t % 5);
    falsifier = falsifier && res.closed == res.brute;
  }
  add("falsifier closed form = brute force", falsifier);

  bool mix = true;
  for (int t = 0; t < 10; ++t) mix = mix && mixture_moment_check(random_mixture(rng, 2 + t % 2), 24).ok();
  add("mixture moment and H-series identities", mix);

  bool coherent = true;
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> m{1, 1};
    for (int k = 2; k <= 7; ++k) m.push_back(random_rational(rng, -2, 2, 9));
    coherent = coherent && coherence_check(m, 6).ok;
  }
  add("Pieri coherence", coherent);
  return r;
}

}  // namespace infsym
