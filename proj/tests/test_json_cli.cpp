#include <doctest.h>

#include "infsym/cli.hpp"
#include "infsym/json_io.hpp"
#include "infsym/sampling.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace infsym;

namespace {

template <class T>
T round_trip(const T& v) {
  return decode<T>(json::parse(encode(v).dump()));
}

struct Run {
  int code;
  std::string out, err;
  json result() const { return json::parse(out); }
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "infsym_unit";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("rationals as text") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(parse_rational("0.3") == Rational(3, 10));
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK(to_string(parse_rational("-3/9")) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(parse_rational_list("1/2,1/3").size() == 2);
  CHECK(simplest_between(Rational(59, 100), Rational(61, 100)) == Rational(3, 5));
  CHECK(decode<Rational>(json(3)) == 3);
  CHECK(encode(parse_rational("6/4")) == json("3/2"));
}

TEST_CASE("round trips") {
  Rng rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    Rational q = random_rational(rng, -5, 5, 20);
    CHECK(round_trip(q) == q);
    Partition p = random_partition(rng, trial);
    CHECK(round_trip(p) == p);
    ThomaParams tp = random_params(rng);
    CHECK(round_trip(tp) == tp);
    ThomaMeasure mu = random_thoma_measure(rng);
    CHECK(round_trip(mu) == mu);
    PowerSeries s = h_from_params(tp, 6);
    CHECK(round_trip(s) == s);
    MixtureSpec spec = random_mixture(rng, 1 + trial % 3);
    MixtureSpec back = round_trip(spec);
    REQUIRE(back.components.size() == spec.components.size());
    for (std::size_t i = 0; i < spec.components.size(); ++i) {
      CHECK(back.components[i].first == spec.components[i].first);
      CHECK(back.components[i].second == spec.components[i].second);
    }
    WiringDiagram d = random_diagram(1 + trial % 4, trial % 2, rng);
    CHECK(round_trip(d) == d);
    std::vector<Rational> v{q, 0, Rational(1, 7)};
    CHECK(round_trip(v) == v);
  }
  Permutation g = Permutation::from_cycles({{1, -2, 3}, {4, 5}});
  CHECK(round_trip(g) == g);
  YoungDistribution yd;
  yd.set(Rational(1, 2), {2, 1});
  yd.set(0, {1});
  CHECK(round_trip(yd) == yd);
  ReprLabel label;
  label.pair = Pair::D;
  label.depth = 3;
  label.measure.atoms[Rational(-1, 2)] = Rational(1, 2);
  label.measure.zero_mass = Rational(1, 2);
  label.lambda = yd;
  label.mu.set(Rational(-1, 2), {3});
  CHECK(round_trip(label) == label);
}

TEST_CASE("malformed JSON is an invalid_argument") {
  CHECK_THROWS_AS(decode<Partition>(json::parse("[1,2]")), std::invalid_argument);
  CHECK_THROWS_AS(decode<Partition>(json::parse("\"x\"")), std::invalid_argument);
  CHECK_THROWS_AS(decode<Rational>(json::parse("1.5")), std::invalid_argument);
  CHECK_THROWS_AS(decode<ThomaParams>(json::parse("{\"alpha\":[\"3/4\",\"1/2\"]}")), std::invalid_argument);
  CHECK_THROWS_AS(decode<WiringDiagram>(json::parse("{\"window\":1,\"pairs\":[]}")), std::invalid_argument);
  CHECK_THROWS_AS(decode<ReprLabel>(json::parse("{\"pair\":\"Q\"}")), std::invalid_argument);
}

TEST_CASE("cli: worked examples") {
  Run r = cli({"thoma", "eval", "--alpha", "1/2,1/2", "--cycles", "3"});
  CHECK(r.code == exit_ok);
  CHECK(r.result() == json::parse(R"({"value":"1/4"})"));

  r = cli({"hseries", "expand", "--gamma", "1", "--order", "4"});
  CHECK(r.code == exit_ok);
  CHECK(r.result()["coeffs"] == json::parse(R"(["1","1","1/2","1/6","1/24"])"));

  r = cli({"cosets", "poly", "--n", "2"});
  CHECK(r.code == exit_ok);
  CHECK(r.result() == json::parse(R"({"coeffs":{"1":"16","2":"8"}})"));
}

TEST_CASE("cli: exit codes") {
  CHECK(cli({}).code == exit_input);
  CHECK(cli({"bogus"}).code == exit_input);
  CHECK(cli({"thoma", "eval", "--alpha", "1/2,1/2", "--wat"}).code == exit_input);
  CHECK(cli({"thoma", "eval", "--alpha", "3/4,1/2", "--cycles", "2"}).code == exit_input);
  CHECK(cli({"cosets", "census", "--n", "6"}).code == exit_input);
  CHECK(cli({"diagram", "verify", "--window", "12"}).code == exit_input);

  std::string bad = temp_file("bad_tp.json", R"(["1","1","0","1","0","0","0","0","0","0"])");
  Run r = cli({"tp", "check", "--coeffs", bad, "--window", "10", "--order", "4"});
  CHECK(r.code == exit_check_failed);
  CHECK(r.result()["totally_positive"] == false);
  CHECK(r.result()["witness"]["minor"] == "-1");

  std::string rejected = temp_file("rejected.json", R"({"pair":"D","depth":1,
    "measure":{"atoms":[{"x":"1/2","mass":"1/2"}],"zero_mass":"1/2"},
    "lambda":[{"x":"1/2","shape":[1]}],"mu":[{"x":"1/2","shape":[1]}]})");
  r = cli({"classify", "--label", rejected});
  CHECK(r.code == exit_check_failed);
  CHECK(r.result()["admissible"] == false);

  std::string broken = temp_file("broken.json", "{not json");
  CHECK(cli({"classify", "--label", broken}).code == exit_input);
  CHECK(cli({"classify", "--label", "/nonexistent/label.json"}).code == exit_input);
}

TEST_CASE("cli: determinism and output file") {
  Run a = cli({"char", "table", "--n", "5"});
  Run b = cli({"char", "table", "--n", "5", "--pretty"});
  CHECK(a.code == exit_ok);
  CHECK(a.result() == b.result());
  CHECK(a.out == cli({"char", "table", "--n", "5"}).out);

  auto path = (std::filesystem::temp_directory_path() / "infsym_unit" / "falsify.json").string();
  Run f = cli({"--out", path, "thoma", "falsify", "--x", "1/5", "--nu", "3/2", "--m", "3"});
  CHECK(f.code == exit_ok);
  std::ifstream in(path);
  json j = json::parse(in);
  CHECK(j["closed"] == "-1/2000");
  CHECK(j["brute"] == "-1/2000");
}

TEST_CASE("cli: character table cache") {
  auto dir = std::filesystem::temp_directory_path() / "infsym_unit" / "cache";
  std::filesystem::remove_all(dir);
  setenv("INFSYM_CACHE_DIR", dir.c_str(), 1);
  Run first = cli({"char", "table", "--n", "4"});
  CHECK(std::filesystem::exists(dir / "char_table_4.json"));
  Run second = cli({"char", "table", "--n", "4"});
  unsetenv("INFSYM_CACHE_DIR");
  CHECK(first.out == second.out);
  CHECK(first.out == cli({"char", "table", "--n", "4"}).out);
}

TEST_CASE("cli: character values are exact strings") {
  Run r = cli({"char", "eval", "--shape", "2,1", "--class", "3", "--method", "eta"});
  CHECK(r.result()["value"] == "0");
  r = cli({"char", "eval", "--shape", "20,20", "--class", "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1"});
  CHECK(r.code == exit_ok);
  // dim (20,20) is the Catalan number C_20.
  CHECK(r.result()["value"] == "6564120420");
}
