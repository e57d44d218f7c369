#include "infsym/cli.hpp"

#include "infsym/classify.hpp"
#include "infsym/cosets.hpp"
#include "infsym/diagram.hpp"
#include "infsym/json_io.hpp"
#include "infsym/selftest.hpp"
#include "infsym/symchar.hpp"
#include "infsym/thoma.hpp"
#include "infsym/total_positivity.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace infsym {

namespace {

// A failed mathematical check: the result is still printed, exit code 2.
struct CheckFailed {
  json result;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: '" + text + "'");
    }
  }
  return out;
}

Partition parse_partition(const std::string& text) { return Partition::from_unsorted(parse_int_list(text)); }

// "1,-1;2,3" -> cycles (1 -1)(2 3)
Permutation parse_cycles(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) cycles.push_back(parse_int_list(item));
  return Permutation::from_cycles(cycles);
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<Rational> read_coeffs(const std::string& path) {
  json j = read_json(path);
  return decode<std::vector<Rational>>(j.is_array() ? j : j.contains("coeffs") ? j["coeffs"] : j);
}

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

struct ParamFlags {
  std::string alpha, beta, gamma;
  void attach(CLI::App* sub) {
    sub->add_option("--alpha", alpha, "alpha parameters, e.g. 1/2,1/2");
    sub->add_option("--beta", beta, "beta parameters");
    sub->add_option("--gamma", gamma, "gamma (must equal the deficit)");
  }
  ThomaParams get() const {
    ThomaParams p = ThomaParams::from_alpha_beta(parse_rational_list(alpha), parse_rational_list(beta));
    if (!gamma.empty() && parse_rational(gamma) != p.gamma)
      throw std::invalid_argument("--gamma " + gamma + " disagrees with 1 - sum(alpha) - sum(beta) = " + to_string(p.gamma));
    return p;
  }
};

CharacterTable cached_table(int n) {
  const char* dir = std::getenv("INFSYM_CACHE_DIR");
  if (!dir || !*dir) return character_table(n);
  namespace fs = std::filesystem;
  fs::path file = fs::path(dir) / ("char_table_" + std::to_string(n) + ".json");
  if (fs::exists(file)) {
    json j = read_json(file.string());
    CharacterTable t;
    t.n = j.at("n").get<int>();
    for (const auto& s : j.at("shapes")) t.shapes.push_back(decode<Partition>(s));
    for (const auto& c : j.at("classes")) t.classes.push_back(decode<Partition>(c));
    for (const auto& row : j.at("values")) {
      std::vector<Integer> r;
      for (const auto& v : row) r.emplace_back(v.get<long>());
      t.values.push_back(std::move(r));
    }
    if (t.n == n && t.shapes == partitions_of(n)) return t;
  }
  CharacterTable t = character_table(n);
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream(file) << encode(t).dump() << '\n';
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with characters of the infinite symmetric group", "infsym"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  bool pretty = false;
  app.add_option("--out", out_path, "write the JSON result to this file");
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::function<json()> action;
  auto set = [&](CLI::App* sub, std::function<json()> f) { sub->callback([&action, f] { action = f; }); };

  // partition ---------------------------------------------------------------
  auto* part = app.add_subcommand("partition", "partition utilities");
  part->require_subcommand(1);
  std::string shape_text, dir_text = "up";
  {
    auto* s = part->add_subcommand("conjugate", "transpose a diagram");
    s->add_option("--shape", shape_text, "parts, e.g. 3,1")->required();
    set(s, [&] { return json{{"conjugate", encode(conjugate(parse_partition(shape_text)))}}; });
    s = part->add_subcommand("covers", "diagrams one box larger or smaller");
    s->add_option("--shape", shape_text)->required();
    s->add_option("--dir", dir_text)->check(CLI::IsMember({"up", "down"}));
    set(s, [&] {
      json list = json::array();
      for (const auto& c : covers(parse_partition(shape_text), dir_text == "up" ? CoverDirection::up : CoverDirection::down))
        list.push_back(encode(c));
      return json{{"covers", list}};
    });
    s = part->add_subcommand("dim", "number of standard tableaux");
    s->add_option("--shape", shape_text)->required();
    set(s, [&] { return json{{"dim", encode(dim_syt(parse_partition(shape_text)))}}; });
    s = part->add_subcommand("z", "centralizer order and length");
    s->add_option("--shape", shape_text)->required();
    set(s, [&] {
      auto zl = z_and_length(parse_partition(shape_text));
      return json{{"z", encode(zl.z)}, {"length", zl.length}};
    });
  }

  // char --------------------------------------------------------------------
  auto* chr = app.add_subcommand("char", "characters of S(n)");
  chr->require_subcommand(1);
  int n = 0, k = 0;
  std::string class_text, method = "mn";
  {
    auto* s = chr->add_subcommand("table", "full character table");
    s->add_option("--n", n)->required();
    set(s, [&] {
      require(n >= 0 && n <= 14, "--n must lie in 0..14");
      return encode(cached_table(n));
    });
    s = chr->add_subcommand("eval", "one character value");
    s->add_option("--shape", shape_text)->required();
    s->add_option("--class", class_text)->required();
    s->add_option("--method", method)->check(CLI::IsMember({"mn", "frobenius", "eta"}));
    set(s, [&] {
      Partition lambda = parse_partition(shape_text), rho = parse_partition(class_text);
      require(lambda.size() <= 40, "shape too large");
      if (method == "frobenius") require(lambda.length() <= 8, "Frobenius expansion limited to 8 rows");
      Integer v = method == "mn" ? mn_character(lambda, rho)
                  : method == "frobenius" ? frobenius_character(lambda, rho)
                                          : eta_character(lambda, rho);
      return json{{"value", encode(v)}};
    });
    s = chr->add_subcommand("cycle", "normalized character on a k-cycle");
    s->add_option("--shape", shape_text)->required();
    s->add_option("--k", k)->required();
    set(s, [&] { return json{{"value", encode(normalized_cycle_char(parse_partition(shape_text), k))}}; });
  }

  // thoma -------------------------------------------------------------------
  auto* thoma = app.add_subcommand("thoma", "Thoma characters and measures");
  thoma->require_subcommand(1);
  ParamFlags params;
  std::string cycles_text, x_text, nu_text, measure_path, coeffs_path;
  int order = 24, n1 = 0, n2 = 0, m = 0, nmax = 6;
  {
    auto* s = thoma->add_subcommand("eval", "character value on cycle lengths [sigma]");
    params.attach(s);
    s->add_option("--cycles", cycles_text, "non-trivial cycle lengths, e.g. 3,2");
    set(s, [&] { return json{{"value", encode(thoma_char_value(params.get(), parse_partition(cycles_text)))}}; });

    s = thoma->add_subcommand("moments", "c_1..c_N");
    params.attach(s);
    s->add_option("--order", order);
    set(s, [&] {
      require(order >= 1 && order <= 500, "--order must lie in 1..500");
      return json{{"c", encode(moments(to_measure(params.get()), order))}};
    });

    s = thoma->add_subcommand("measure", "parameters to measure");
    params.attach(s);
    set(s, [&] { return encode(to_measure(params.get())); });

    s = thoma->add_subcommand("params", "measure to parameters");
    s->add_option("--measure", measure_path, "measure JSON file")->required();
    set(s, [&] { return encode(to_params(decode<ThomaMeasure>(read_json(measure_path)))); });

    s = thoma->add_subcommand("mlambda", "Fourier coefficient m(lambda)");
    params.attach(s);
    s->add_option("--shape", shape_text)->required();
    set(s, [&] {
      Partition lambda = parse_partition(shape_text);
      require(lambda.size() <= 60, "shape too large");
      auto mseq = h_from_params(params.get(), lambda[0] + lambda.length()).coeffs();
      return json{{"value", encode(m_lambda(mseq, lambda))}};
    });

    s = thoma->add_subcommand("falsify", "closed form against brute force for a single atom");
    s->add_option("--x", x_text)->required();
    s->add_option("--nu", nu_text)->required();
    s->add_option("--m", m)->required();
    set(s, [&] {
      auto r = alt_falsifier(parse_rational(x_text), parse_rational(nu_text), m);
      json j{{"closed", encode(r.closed)}, {"brute", encode(r.brute)}, {"agree", r.closed == r.brute}};
      if (r.closed != r.brute) throw CheckFailed{j};
      return j;
    });

    s = thoma->add_subcommand("multiplicativity", "eta-basis multiplicativity check");
    params.attach(s);
    s->add_option("--n1", n1)->required();
    s->add_option("--n2", n2)->required();
    set(s, [&] {
      auto r = multiplicativity_check(params.get(), n1, n2);
      if (!r.ok)
        throw CheckFailed{json{{"multiplicative", false},
                               {"mu", encode(r.failure->first)},
                               {"nu", encode(r.failure->second)},
                               {"lhs", encode(r.lhs)},
                               {"rhs", encode(r.rhs)}}};
      return json{{"multiplicative", true}};
    });

    s = thoma->add_subcommand("coherence", "branching coherence of an m-sequence");
    s->add_option("--coeffs", coeffs_path, "JSON array m(0), m(1), ...")->required();
    s->add_option("--nmax", nmax);
    set(s, [&] {
      require(nmax >= 1 && nmax <= 12, "--nmax must lie in 1..12");
      auto r = coherence_check(read_coeffs(coeffs_path), nmax);
      if (!r.ok) throw CheckFailed{json{{"coherent", false}, {"lambda", encode(*r.failure)}}};
      return json{{"coherent", true}};
    });
  }

  // hseries -----------------------------------------------------------------
  auto* hs = app.add_subcommand("hseries", "H-series algebra");
  hs->require_subcommand(1);
  double tol = 1e-9;
  std::string alpha_exact;
  int peel_order = -1;
  {
    auto* s = hs->add_subcommand("expand", "H(t) from parameters");
    params.attach(s);
    s->add_option("--order", order);
    set(s, [&] {
      require(order >= 0 && order <= 500, "--order must lie in 0..500");
      return encode(h_from_params(params.get(), order));
    });

    s = hs->add_subcommand("moments", "c_k from H(t) = sum m(k) t^k");
    s->add_option("--coeffs", coeffs_path)->required();
    set(s, [&] { return json{{"c", encode(c_from_h(PowerSeries(read_coeffs(coeffs_path))))}}; });

    s = hs->add_subcommand("sign", "1/H(-t)");
    s->add_option("--coeffs", coeffs_path)->required();
    set(s, [&] { return encode(sign_transform(PowerSeries(read_coeffs(coeffs_path)))); });

    s = hs->add_subcommand("peel", "remove the largest geometric factor");
    s->add_option("--coeffs", coeffs_path)->required();
    s->add_option("--order", peel_order, "use m(0..N); default all given");
    s->add_option("--tol", tol);
    s->add_option("--alpha", alpha_exact, "use this alpha exactly");
    set(s, [&] {
      auto mseq = read_coeffs(coeffs_path);
      int N = peel_order >= 0 ? peel_order : static_cast<int>(mseq.size()) - 1;
      std::optional<Rational> a;
      if (!alpha_exact.empty()) a = parse_rational(alpha_exact);
      return encode(edrei_peel(mseq, N, tol, a));
    });
  }

  // tp ----------------------------------------------------------------------
  auto* tp = app.add_subcommand("tp", "total positivity");
  tp->require_subcommand(1);
  int window = 10;
  {
    auto* s = tp->add_subcommand("check", "scan Toeplitz minors");
    s->add_option("--coeffs", coeffs_path)->required();
    s->add_option("--window", window);
    s->add_option("--order", order);
    set(s, [&] {
      require(window >= 1 && window <= 40, "--window must lie in 1..40");
      require(order >= 1, "--order must be positive");
      double minors = 0;
      for (int r = 1; r <= std::min(order, window); ++r) {
        double c = std::tgamma(window + 1.0) / (std::tgamma(r + 1.0) * std::tgamma(window - r + 1.0));
        minors += c * c;
      }
      require(minors <= 5e6, "window/order would scan more than 5e6 minors");
      auto r = is_totally_positive(read_coeffs(coeffs_path), window, order);
      json j = encode(r);
      if (!r.positive) {
        throw CheckFailed{j};
      }
      return j;
    });
  }

  // diagram -----------------------------------------------------------------
  auto* dg = app.add_subcommand("diagram", "wiring diagrams");
  dg->require_subcommand(1);
  std::string lhs_path, rhs_path, in_path, kind, len_text = "0";
  bool odd = false;
  int index = 1;
  {
    auto* s = dg->add_subcommand("mul", "compose two diagrams");
    s->add_option("--lhs", lhs_path)->required();
    s->add_option("--rhs", rhs_path)->required();
    set(s, [&] { return encode(decode<WiringDiagram>(read_json(lhs_path)) * decode<WiringDiagram>(read_json(rhs_path))); });

    s = dg->add_subcommand("star", "reflect top and bottom");
    s->add_option("--in", in_path)->required();
    set(s, [&] { return encode(decode<WiringDiagram>(read_json(in_path)).star()); });

    s = dg->add_subcommand("gen", "a generator diagram");
    s->add_option("--kind", kind)->required()->check(CLI::IsMember({"perm", "A", "C", "P"}));
    s->add_option("--window", window)->required();
    s->add_option("--index", index, "i for A, n for P");
    s->add_option("--len", len_text, "loop length for C");
    s->add_option("--cycles", cycles_text, "permutation, e.g. 1,2,3;-1,-2");
    s->add_flag("--odd", odd, "include index 0");
    set(s, [&] {
      require(window >= 1 && window <= 64, "--window must lie in 1..64");
      if (kind == "perm") return encode(perm_diagram(parse_cycles(cycles_text), window, odd));
      if (kind == "A") return encode(a_diagram(index, window, odd));
      if (kind == "C") return encode(c_diagram(parse_rational(len_text), window, odd));
      return encode(p_diagram(index, window, odd));
    });

    s = dg->add_subcommand("verify", "check the defining identities in a window");
    s->add_option("--window", window)->required();
    s->add_flag("--odd", odd, "include index 0");
    set(s, [&] {
      require(window >= 3 && window <= 6, "--window must lie in 3..6");
      auto r = verify_relations(window, odd);
      json j = encode(r);
      if (!r.ok()) {
        throw CheckFailed{j};
      }
      return j;
    });
  }

  // cosets ------------------------------------------------------------------
  auto* cs = app.add_subcommand("cosets", "double cosets of the hyperoctahedral subgroup");
  cs->require_subcommand(1);
  bool long_run = false;
  {
    auto* s = cs->add_subcommand("census", "enumerate S(2n) by coset type");
    s->add_option("--n", n)->required();
    s->add_flag("--long", long_run, "allow n = 5");
    set(s, [&] {
      auto tally = census(n, Exec::parallel, long_run);
      json counts = json::array();
      std::uint64_t total = 0;
      for (auto it = tally.rbegin(); it != tally.rend(); ++it) {
        counts.push_back({{"type", encode(it->first)}, {"count", it->second}, {"size", encode(coset_size(it->first, n))}});
        total += it->second;
      }
      return json{{"n", n}, {"counts", counts}, {"total", total}};
    });

    s = cs->add_subcommand("poly", "sum over g of t^l(g)");
    s->add_option("--n", n)->required();
    set(s, [&] {
      require(n >= 1 && n <= 200, "--n must lie in 1..200");
      auto poly = coset_poly(n);
      json coeffs = json::object();
      for (std::size_t i = 0; i < poly.size(); ++i)
        if (poly[i] != 0) coeffs[std::to_string(i)] = encode(poly[i]);
      return json{{"coeffs", coeffs}};
    });

    s = cs->add_subcommand("size", "elements of type lambda");
    s->add_option("--shape", shape_text)->required();
    set(s, [&] {
      Partition lambda = parse_partition(shape_text);
      return json{{"size", encode(coset_size(lambda, lambda.size()))}};
    });

    s = cs->add_subcommand("type", "coset type of a permutation of +-1..+-n");
    s->add_option("--cycles", cycles_text)->required();
    s->add_option("--n", n)->required();
    set(s, [&] { return json{{"type", encode(coset_type(parse_cycles(cycles_text), n))}}; });

    s = cs->add_subcommand("thm4", "n! 2^n prod (1 + 2jx) against the enumeration");
    s->add_option("--x", x_text)->required();
    s->add_option("--n", n)->required();
    set(s, [&] {
      require(n >= 1 && n <= 200, "--n must lie in 1..200");
      auto r = theorem4_sum(parse_rational(x_text), n);
      json j{{"closed", encode(r.closed)}};
      if (r.brute) {
        j["brute"] = encode(*r.brute);
        if (*r.brute != r.closed) throw CheckFailed{j};
      }
      return j;
    });
  }

  // classify, mixture, ergodic ---------------------------------------------
  std::string label_path, spec_path, ns_text;
  int check_order = 24;
  {
    auto* s = app.add_subcommand("classify", "admissibility of a label");
    s->add_option("--label", label_path)->required();
    set(s, [&] {
      auto v = classify(decode<ReprLabel>(read_json(label_path)));
      json j = encode(v);
      if (!v.admissible) {
        throw CheckFailed{j};
      }
      return j;
    });

    s = app.add_subcommand("mixture", "mix labels with weights");
    s->add_option("--spec", spec_path)->required();
    s->add_option("--check-order", check_order);
    set(s, [&] {
      require(check_order >= 1 && check_order <= 200, "--check-order must lie in 1..200");
      MixtureSpec spec = decode<MixtureSpec>(read_json(spec_path));
      auto mix = mixture(spec);
      auto check = mixture_moment_check(spec, check_order);
      json j{{"label", encode(mix.label)},
             {"irreducible", mix.irreducible},
             {"thoma_measure", is_thoma_measure(mix.label.measure).ok},
             {"check", {{"moments", check.moments_ok}, {"hseries", check.series_ok}}}};
      if (!check.ok()) {
        throw CheckFailed{j};
      }
      return j;
    });

    s = app.add_subcommand("ergodic", "normalized characters along growing diagrams");
    params.attach(s);
    s->add_option("--k", k)->required();
    s->add_option("--n", ns_text)->required();
    set(s, [&] {
      auto ns = parse_int_list(ns_text);
      for (int v : ns) require(v >= 1 && v <= 2000, "every n must lie in 1..2000");
      ThomaParams p = params.get();
      json points = json::array();
      for (const auto& pt : ergodic_converge(p, k, ns))
        points.push_back({{"n", pt.n},
                          {"shape", encode(pt.shape)},
                          {"chi", encode(pt.chi)},
                          {"chi_float", pt.chi.get_d()},
                          {"deviation", encode(pt.deviation)},
                          {"deviation_float", pt.deviation.get_d()}});
      return json{{"c_k", encode(thoma_char_value(p, Partition{k}))}, {"points", points}};
    });
  }

  std::uint64_t seed = 1;
  int self_window = 4;
  {
    auto* s = app.add_subcommand("selftest", "run the built-in identity suites");
    s->add_option("--seed", seed);
    s->add_option("--window", self_window, "diagram window, 3..5");
    set(s, [&] {
      require(self_window >= 3 && self_window <= 5, "--window must lie in 3..5");
      auto r = run_selftest(seed, self_window);
      json checks = json::object();
      for (const auto& [name, pass] : r.checks) checks[name] = pass;
      json j{{"seed", seed}, {"checks", checks}, {"ok", r.ok()}};
      if (!r.ok()) {
        throw CheckFailed{j};
      }
      return j;
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_input;
  }
  if (!action) {
    err << app.help();
    return exit_input;
  }

  auto emit = [&](const json& result) {
    std::string text = pretty ? result.dump(2) : result.dump();
    if (out_path.empty()) {
      out << text << '\n';
    } else {
      std::ofstream file(out_path);
      if (!file) throw std::invalid_argument("cannot write '" + out_path + "'");
      file << text << '\n';
    }
  };
  try {
    try {
      emit(action());
      return exit_ok;
    } catch (const CheckFailed& failed) {
      emit(failed.result);
      return exit_check_failed;
    }
  } catch (const std::domain_error& e) {
    err << "check failed: " << e.what() << '\n';
    return exit_check_failed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
}

}  // namespace infsym
