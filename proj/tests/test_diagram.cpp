#include <doctest.h>

#include "infsym/diagram.hpp"

#include <algorithm>
#include <random>

using namespace infsym;

namespace {

WiringDiagram with_loop(WiringDiagram d, const Rational& len) {
  d.add_loop(len);
  return d;
}

}  // namespace

TEST_CASE("endpoint labels") {
  CHECK(Endpoint{Side::top, 1}.label() == "T+1");
  CHECK(Endpoint{Side::bottom, -2}.label() == "B-2");
  CHECK(Endpoint{Side::top, 0}.label() == "T0");
  CHECK(Endpoint::parse("B-2") == Endpoint{Side::bottom, -2});
  CHECK_THROWS_AS(Endpoint::parse("X+1"), std::invalid_argument);
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(WiringDiagram::from_strands(1, false, {{{Side::top, 1}, {Side::bottom, 1}, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(p_diagram(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(a_diagram(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(perm_diagram(Permutation::transposition(1, 5), 3), std::invalid_argument);
  CHECK_THROWS_AS(WiringDiagram::identity(2) * WiringDiagram::identity(3), std::invalid_argument);
}

TEST_CASE("generator identities") {
  const int N = 3;
  auto g = Permutation::from_cycles({{1, 2, -3}});
  CHECK(perm_diagram(g, N) * perm_diagram(g.inverse(), N) == WiringDiagram::identity(N));
  CHECK(perm_diagram(g, N) * perm_diagram(Permutation::transposition(1, -1), N) ==
        perm_diagram(g * Permutation::transposition(1, -1), N));
  for (int k = 0; k < N; ++k) CHECK(p_diagram(k, N) * p_diagram(k, N) == p_diagram(k, N));
  CHECK(a_diagram(1, N) * a_diagram(2, N) == a_diagram(2, N) * a_diagram(1, N));
  CHECK(c_diagram(1, N) == WiringDiagram::identity(N));
  CHECK(c_diagram(2, N).loops() == std::vector<Rational>{2});
}

TEST_CASE("worked products") {
  const int N = 3;
  auto cyc = perm_diagram(Permutation::from_cycles({{1, 2, 3}}), N);
  CHECK(p_diagram(0, N) * cyc * p_diagram(0, N) == with_loop(p_diagram(0, N), 3));
  auto A2 = a_diagram(2, N);
  auto P1 = p_diagram(1, N);
  CHECK(P1 * A2 * A2 * P1 == with_loop(P1, 3));
  CHECK(P1 * A2 * A2 * A2 * P1 == with_loop(P1, 4));
  auto t = perm_diagram(Permutation::transposition(1, 2), N);
  CHECK(t * a_diagram(1, N) * t == a_diagram(2, N));
}

TEST_CASE("star") {
  const int N = 3;
  auto g = Permutation::from_cycles({{1, -2, 3}});
  CHECK(perm_diagram(g, N).star() == perm_diagram(g.inverse(), N));
  for (int i : {-3, -1, 1, 2}) CHECK(a_diagram(i, N).star() == a_diagram(i, N));
  for (int k = 0; k < N; ++k) CHECK(p_diagram(k, N).star() == p_diagram(k, N));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const bool odd = trial % 2;
    auto a = random_diagram(N, odd, rng), b = random_diagram(N, odd, rng);
    CHECK((a * b).star() == b.star() * a.star());
    CHECK(a.star().star() == a);
  }
}

TEST_CASE("associativity and normal form") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const int N = 1 + trial % 4;
    const bool odd = (trial / 4) % 2;
    auto a = random_diagram(N, odd, rng), b = random_diagram(N, odd, rng), c = random_diagram(N, odd, rng);
    auto left = (a * b) * c;
    CHECK(left == a * (b * c));
    for (const auto& len : left.loops()) {
      CHECK(len != 1);
      CHECK(len >= 0);
    }
    CHECK(left * c_diagram(1, N, odd) == left);
  }
}

TEST_CASE("loops of generator words have integer length") {
  std::mt19937_64 rng(43);
  const int N = 3;
  std::uniform_int_distribution<int> kind(0, 3), idx(1, N), sgn(0, 1), pidx(0, N - 1), len(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    WiringDiagram w = WiringDiagram::identity(N);
    for (int step = 0; step < 8; ++step) {
      const int i = idx(rng) * (sgn(rng) ? 1 : -1);
      switch (kind(rng)) {
        case 0: w = w * perm_diagram(Permutation::transposition(i, idx(rng)), N); break;
        case 1: w = w * a_diagram(i, N); break;
        case 2: w = w * c_diagram(len(rng), N); break;
        default: w = w * p_diagram(pidx(rng), N); break;
      }
    }
    for (const auto& l : w.loops()) CHECK(is_integer(l));
  }
}

TEST_CASE("relation suite") {
  for (int N : {3, 4}) {
    RelationReport even = verify_relations(N);
    CHECK(even.ok());
    CHECK(even.checked.size() == 7);
    CHECK(even.exhaustive_conjugation);
  }
  RelationReport odd = verify_relations(3, true);
  CHECK(odd.ok());
  CHECK(odd.exhaustive_conjugation);  // 7 index points
  CHECK_THROWS_AS(verify_relations(2), std::invalid_argument);
}

TEST_CASE("random diagrams stay in the advertised length range") {
  std::mt19937_64 rng(47);
  const std::vector<Rational> allowed = {0, Rational(1, 2), 1, Rational(3, 2), 2};
  auto ok = [&](const Rational& q) { return std::find(allowed.begin(), allowed.end(), q) != allowed.end(); };
  for (int trial = 0; trial < 200; ++trial) {
    auto d = random_diagram(1 + trial % 4, trial % 2, rng);
    for (const auto& s : d.strands()) CHECK(ok(s.length));
    CHECK(d.loops().size() <= 2);
    for (const auto& l : d.loops()) {
      CHECK(ok(l));
      CHECK(l == parse_rational(to_string(l)));
    }
  }
}
