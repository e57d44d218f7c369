#include <doctest.h>

#include "infsym/sampling.hpp"
#include "infsym/symchar.hpp"
#include "infsym/thoma.hpp"

#include "oracles.hpp"

using namespace infsym;

namespace {

Rational R(const char* s) { return parse_rational(s); }

ThomaParams trivial() { return ThomaParams::from_alpha_beta({1}, {}); }
ThomaParams plancherel() { return ThomaParams::from_alpha_beta({}, {}); }
ThomaParams sign() { return ThomaParams::from_alpha_beta({}, {1}); }

}  // namespace

TEST_CASE("parameter validation") {
  CHECK(ThomaParams::from_alpha_beta({R("1/2")}, {R("1/4")}).gamma == R("1/4"));
  CHECK_THROWS_AS(ThomaParams::from_alpha_beta({R("1/4"), R("1/2")}, {}), std::invalid_argument);
  CHECK_THROWS_AS(ThomaParams::from_alpha_beta({R("3/4"), R("1/2")}, {}), std::invalid_argument);
  CHECK_THROWS_AS(ThomaParams::from_alpha_beta({0}, {}), std::invalid_argument);
}

TEST_CASE("params and measures") {
  ThomaMeasure m = to_measure(ThomaParams::from_alpha_beta({R("1/2"), R("1/2")}, {}));
  REQUIRE(m.atoms.size() == 1);
  CHECK(m.atoms.at(R("1/2")) == 1);
  CHECK(m.nu(R("1/2")) == 2);
  CHECK(m.zero_mass == 0);
  CHECK(to_measure(plancherel()).atoms.empty());
  CHECK(to_measure(plancherel()).zero_mass == 1);

  ThomaMeasure bad;
  bad.atoms[R("1/5")] = R("3/10");
  bad.zero_mass = R("7/10");
  CHECK_THROWS_AS(to_params(bad), std::domain_error);

  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    ThomaParams p = random_params(rng);
    CHECK(to_params(to_measure(p)) == p);
    CHECK(to_measure(p).total_mass() == 1);
  }
}

TEST_CASE("Thoma character values") {
  CHECK(thoma_char_value(plancherel(), {2}) == 0);
  CHECK(thoma_char_value(trivial(), {3, 2}) == 1);
  CHECK(thoma_char_value(ThomaParams::from_alpha_beta({R("1/2"), R("1/2")}, {}), {3}) == R("1/4"));
  CHECK(thoma_char_value(sign(), {2}) == -1);
  CHECK(thoma_char_value(sign(), {3}) == 1);
  CHECK(thoma_char_value(trivial(), {}) == 1);
  CHECK_THROWS_AS(thoma_char_value(trivial(), {1}), std::invalid_argument);
}

TEST_CASE("moments") {
  ThomaMeasure point;
  point.atoms[1] = 1;
  point.zero_mass = 0;
  for (int k = 1; k <= 6; ++k) CHECK(moment(point, k) == 1);
  ThomaMeasure zero = to_measure(plancherel());
  CHECK(moment(zero, 1) == 1);
  CHECK(moment(zero, 2) == 0);
  auto c = moments(to_measure(ThomaParams::from_alpha_beta({R("1/2"), R("1/2")}, {})), 4);
  CHECK(c[1] == R("1/2"));
  CHECK(c.size() == 4);
}

TEST_CASE("generalized moments") {
  ThomaParams p = ThomaParams::from_alpha_beta({R("1/2"), R("1/4")}, {R("1/8")});
  ThomaMeasure mu = to_measure(p);
  auto t = SpectralFunction::polynomial({0, 1});
  CHECK(generalized_moment(mu, Permutation::from_cycles({{1, 2, 3}}), {}) == moment(mu, 3));
  CHECK(generalized_moment(mu, Permutation{}, {{1, t}}) == moment(mu, 2));
  CHECK(generalized_moment(mu, Permutation::transposition(1, 2), {{1, t}, {2, t}}) == moment(mu, 4));

  // With every f = 1 the generalized moment is the character value on [sigma].
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    ThomaParams q = random_params(rng);
    ThomaMeasure nu = to_measure(q);
    for (const auto& sigma : {Permutation::from_cycles({{1, 2}}), Permutation::from_cycles({{1, 2, 3}, {4, 5}}),
                              Permutation::from_cycles({{1, 2, 3, 4}})}) {
      CHECK(generalized_moment(nu, sigma, {}) == thoma_char_value(q, cycle_type(sigma, 5).nontrivial));
    }
  }
}

TEST_CASE("H-series closed forms") {
  const int N = 24;
  auto one = h_from_params(trivial(), N);
  auto e = h_from_params(plancherel(), N);
  auto s = h_from_params(sign(), N);
  for (int k = 0; k <= N; ++k) {
    const auto i = static_cast<std::size_t>(k);
    CHECK(one[i] == 1);
    CHECK(e[i] == 1 / Rational(factorial(static_cast<unsigned>(k))));
    CHECK(s[i] == (k <= 1 ? 1 : 0));
  }
  auto half = h_from_params(ThomaParams::from_alpha_beta({R("1/2"), R("1/2")}, {}), N);
  for (int k = 0; k <= N; ++k) CHECK(half[static_cast<std::size_t>(k)] == Rational(k + 1) / pow(Rational(2), static_cast<unsigned>(k)));
}

TEST_CASE("moments and H-series") {
  std::vector<Rational> ones(10, 1), e_moments(10, 0), halves;
  e_moments[0] = 1;
  for (int k = 0; k < 10; ++k) halves.push_back(pow(R("1/2"), static_cast<unsigned>(k)));
  CHECK(h_from_moments(ones, 9) == h_from_params(trivial(), 9));
  CHECK(h_from_moments(e_moments, 9) == h_from_params(plancherel(), 9));
  CHECK(h_from_moments(halves, 9) == h_from_params(ThomaParams::from_alpha_beta({R("1/2"), R("1/2")}, {}), 9));

  CHECK(c_from_h(h_from_params(trivial(), 8)) == std::vector<Rational>(8, 1));
  auto cs = c_from_h(h_from_params(sign(), 8));
  for (int k = 1; k <= 8; ++k) CHECK(cs[static_cast<std::size_t>(k - 1)] == (k % 2 ? 1 : -1));
  auto ce = c_from_h(h_from_params(plancherel(), 8));
  CHECK(ce[0] == 1);
  for (std::size_t k = 1; k < ce.size(); ++k) CHECK(ce[k] == 0);

  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c{1};
    for (int k = 2; k <= 12; ++k) c.push_back(random_rational(rng, -1, 1));
    auto back = c_from_h(h_from_moments(c, 12));
    CHECK(back == c);
    ThomaParams p = random_params(rng);
    CHECK(h_from_params(p, 24) == h_from_moments(moments(to_measure(p), 24), 24));
  }
}

TEST_CASE("sign transform") {
  CHECK(sign_transform(PowerSeries::geometric(R("1/3"), 6)) == PowerSeries(std::vector<Rational>{1, R("1/3"), 0, 0, 0, 0, 0}));
  CHECK(sign_transform(h_from_params(plancherel(), 10)) == h_from_params(plancherel(), 10));
  CHECK(sign_transform(h_from_params(trivial(), 10)) == h_from_params(sign(), 10));
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    ThomaParams p = random_params(rng);
    ThomaParams swapped = ThomaParams::from_alpha_beta(p.beta, p.alpha);
    CHECK(sign_transform(h_from_params(p, 24)) == h_from_params(swapped, 24));
  }
}

TEST_CASE("Fourier coefficients") {
  std::vector<Rational> ones(8, 1), e;
  for (int k = 0; k < 8; ++k) e.push_back(1 / Rational(factorial(static_cast<unsigned>(k))));
  CHECK(m_lambda(ones, {1, 1}) == 0);
  CHECK(m_lambda(e, {1, 1}) == R("1/2"));
  CHECK(m_lambda(e, {}) == 1);
  CHECK_THROWS_AS(m_lambda(e, {9}), std::invalid_argument);
  // Plancherel: m(lambda) = dim lambda / n!
  for (int n = 0; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      CHECK(m_lambda(e, lambda) == Rational(oracle::count_syt(lambda)) / Rational(factorial(static_cast<unsigned>(n))));
}

TEST_CASE("Fourier coefficients are the character pairings and are nonnegative") {
  Rng rng(4);
  for (int trial = 0; trial < 8; ++trial) {
    ThomaParams p = random_params(rng);
    auto mseq = h_from_params(p, 6).coeffs();
    CycleFunction phi = [&](const Partition& c) { return thoma_char_value(p, c); };
    for (int n = 0; n <= 6; ++n)
      for (const auto& lambda : partitions_of(n)) {
        ClassFunction chi = irreducible_character(lambda);
        Rational lhs = m_lambda(mseq, lambda);
        CHECK(lhs == pairing(phi, n, [&](const Partition& rho) { return chi.at(rho); }));
        CHECK(lhs >= 0);
      }
  }
}

TEST_CASE("ratio chain is monotone") {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    ThomaParams p = random_params(rng);
    auto m = h_from_params(p, 21).coeffs();
    for (std::size_t k = 1; k + 1 < m.size(); ++k) {
      if (m[k] == 0) break;
      CHECK(m[k] / m[k - 1] >= m[k + 1] / m[k]);
    }
  }
}

TEST_CASE("coherence") {
  std::vector<Rational> ones(10, 1), e;
  for (int k = 0; k < 10; ++k) e.push_back(1 / Rational(factorial(static_cast<unsigned>(k))));
  CHECK(m_lambda(ones, {1}) == m_lambda(ones, {2}) + m_lambda(ones, {1, 1}));
  CHECK(m_lambda(e, {1}) == m_lambda(e, {2}) + m_lambda(e, {1, 1}));
  CHECK(coherence_check(ones, 6).ok);
  CHECK(coherence_check(e, 6).ok);
  // Without m(1) = 1 the identity breaks at the empty partition.
  std::vector<Rational> off = ones;
  off[1] = 2;
  auto r = coherence_check(off, 6);
  CHECK(!r.ok);
  REQUIRE(r.failure.has_value());
  CHECK(r.failure->empty());
}

TEST_CASE("multiplicativity") {
  CHECK(multiplicativity_check(trivial(), 2, 2).ok);
  CHECK(multiplicativity_check(sign(), 1, 3).ok);
  Rng rng(9);
  for (int trial = 0; trial < 5; ++trial) CHECK(multiplicativity_check(random_params(rng), 2, 3).ok);

  ClassFunction chi = irreducible_character({2, 2});
  const Rational dim(dim_syt({2, 2}));
  CycleFunction phi = [&](const Partition& c) -> Rational { return chi.at(with_fixed_points(c, 4)) / dim; };
  auto r = multiplicativity_check(phi, 2, 2);
  CHECK(!r.ok);
  CHECK(r.lhs != r.rhs);
  CHECK_THROWS_AS(multiplicativity_check(trivial(), 4, 3), std::invalid_argument);
}

TEST_CASE("Edrei peel") {
  ThomaParams p = ThomaParams::from_alpha_beta({R("3/5"), R("2/5")}, {});
  auto m = h_from_params(p, 20).coeffs();
  for (int k = 0; k <= 20; ++k)
    CHECK(m[static_cast<std::size_t>(k)] ==
          (pow(R("3/5"), static_cast<unsigned>(k + 1)) - pow(R("2/5"), static_cast<unsigned>(k + 1))) / R("1/5"));
  EdreiResult exact = edrei_peel(m, 20, 1e-9, R("3/5"));
  CHECK(exact.exact);
  CHECK(exact.residual == 0);
  for (const auto& v : exact.peeled) CHECK(v == 1);

  EdreiResult t = edrei_peel(std::vector<Rational>(30, 1), 29);
  CHECK(t.status == PeelStatus::terminal);
  CHECK(t.alpha == 1);

  auto e = h_from_params(plancherel(), 30).coeffs();
  EdreiResult ent = edrei_peel(e, 30);
  CHECK(ent.status == PeelStatus::entire);
  CHECK(ent.alpha == 0);

  CHECK_THROWS_AS(edrei_peel(m, 20), std::domain_error);
  CHECK_THROWS_AS(edrei_peel(m, 40), std::invalid_argument);
}

TEST_CASE("integrality falsifier") {
  CHECK(alt_falsifier(R("1/5"), R("3/2"), 3).closed == R("-1/2000"));
  CHECK(alt_falsifier(R("1/4"), 2, 3).closed == 0);
  CHECK(alt_falsifier(R("1/4"), 2, 3).brute == 0);
  CHECK(alt_falsifier(R("-1/4"), R("5/2"), 4).brute == alt_falsifier(R("-1/4"), R("5/2"), 4).closed);
  CHECK_THROWS_AS(alt_falsifier(0, 1, 2), std::invalid_argument);
}

TEST_CASE("Stirling identity by brute force") {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    Rational x = random_rational(rng, -3, 3);
    for (int m = 1; m <= 7; ++m) {
      Rational rising = 1;
      for (int i = 0; i < m; ++i) rising *= x + i;
      CHECK(oracle::stirling_sum(x, m) == rising);
    }
  }
}
