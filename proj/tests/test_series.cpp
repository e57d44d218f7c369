#include <doctest.h>

#include "infsym/sampling.hpp"
#include "infsym/series.hpp"

using namespace infsym;

namespace {

PowerSeries exp_series(int order) {
  std::vector<Rational> c;
  for (int k = 0; k <= order; ++k) c.push_back(1 / Rational(factorial(static_cast<unsigned>(k))));
  return PowerSeries(c);
}

}  // namespace

TEST_CASE("series arithmetic") {
  PowerSeries g = PowerSeries::geometric(Rational(1, 2), 6);
  CHECK(g[3] == Rational(1, 8));
  PowerSeries one_minus(std::vector<Rational>{1, Rational(-1, 2), 0, 0, 0, 0, 0});
  CHECK(g * one_minus == PowerSeries::one(6));
  CHECK(one_minus.reciprocal() == g);
  CHECK((g + g) == Rational(2) * g);
  CHECK((g - g) == PowerSeries(6));
  CHECK(g.truncated(2).order() == 2);
  CHECK(g.truncated(8)[8] == 0);
  CHECK_THROWS_AS(PowerSeries(std::vector<Rational>{0, 1}).reciprocal(), std::domain_error);
}

TEST_CASE("exp and log") {
  PowerSeries t(std::vector<Rational>{0, 1, 0, 0, 0, 0, 0, 0});
  CHECK(t.exp() == exp_series(7));
  CHECK(exp_series(7).log() == t);
  // -log(1 - t) = sum t^k / k
  PowerSeries l = PowerSeries::geometric(1, 7).log();
  for (int k = 1; k <= 7; ++k) CHECK(l[static_cast<std::size_t>(k)] == Rational(1, k));
  CHECK_THROWS(PowerSeries(std::vector<Rational>{2, 1}).log());
}

TEST_CASE("log inverts exp on random series") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c{0};
    for (int k = 1; k <= 10; ++k) c.push_back(random_rational(rng, -3, 3));
    PowerSeries f(c);
    CHECK(f.exp().log() == f);
  }
}

TEST_CASE("derivative and scaling") {
  PowerSeries e = exp_series(6);
  CHECK(e.derivative() == e.truncated(5));
  PowerSeries s = PowerSeries::geometric(1, 5).scaled_argument(Rational(1, 3));
  CHECK(s == PowerSeries::geometric(Rational(1, 3), 5));
}
