#include "infsym/json_io.hpp"

#include <stdexcept>

namespace infsym {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

const json& as_array(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

}  // namespace

json encode(const Rational& q) { return to_string(q); }
json encode(const Integer& z) { return to_string(z); }

json encode(const Partition& p) { return p.parts(); }

json encode(const Permutation& g) { return g.cycles(); }

json encode(const YoungDistribution& d) {
  json out = json::array();
  for (const auto& [x, shape] : d.entries()) out.push_back({{"x", encode(x)}, {"shape", encode(shape)}});
  return out;
}

json encode(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(encode(q));
  return out;
}

json encode(const ThomaParams& p) {
  return {{"alpha", encode(p.alpha)}, {"beta", encode(p.beta)}, {"gamma", encode(p.gamma)}};
}

json encode(const ThomaMeasure& mu) {
  json atoms = json::array();
  for (const auto& [x, m] : mu.atoms) atoms.push_back({{"x", encode(x)}, {"mass", encode(m)}});
  return {{"atoms", atoms}, {"zero_mass", encode(mu.zero_mass)}};
}

json encode(const PowerSeries& s) { return {{"coeffs", encode(s.coeffs())}}; }

json encode(const WiringDiagram& d) {
  json pairs = json::array();
  for (const auto& s : d.strands()) pairs.push_back({{"a", s.a.label()}, {"b", s.b.label()}, {"len", encode(s.length)}});
  return {{"window", d.window()}, {"pairs", pairs}, {"loops", encode(d.loops())}};
}

json encode(const ReprLabel& label) {
  json j = {{"pair", to_string(label.pair)},
            {"depth", label.depth},
            {"measure", encode(label.measure)},
            {"lambda", encode(label.lambda)}};
  if (label.pair == Pair::D) j["mu"] = encode(label.mu);
  return j;
}

json encode(const MixtureSpec& spec) {
  json comps = json::array();
  for (const auto& [label, p] : spec.components) comps.push_back({{"label", encode(label)}, {"weight", encode(p)}});
  return {{"components", comps}};
}

json encode(const CharacterTable& t) {
  json shapes = json::array(), classes = json::array(), values = json::array();
  for (const auto& s : t.shapes) shapes.push_back(encode(s));
  for (const auto& c : t.classes) classes.push_back(encode(c));
  for (const auto& row : t.values) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.get_si());
    values.push_back(r);
  }
  return {{"n", t.n}, {"shapes", shapes}, {"classes", classes}, {"values", values}};
}

json encode(const Verdict& v) {
  json j = {{"admissible", v.admissible}};
  if (!v.admissible) {
    j["condition"] = to_string(v.failed);
    j["reason"] = v.reason;
  }
  return j;
}

json encode(const RelationReport& r) {
  json checked = json::object();
  for (const auto& [name, count] : r.checked) checked[name] = count;
  return {{"window", r.window},
          {"odd", r.odd},
          {"exhaustive_conjugation", r.exhaustive_conjugation},
          {"checked", checked},
          {"failures", r.failures},
          {"ok", r.ok()}};
}

json encode(const TPResult& r) {
  json j = {{"totally_positive", r.positive}, {"minors_checked", r.minors_checked}};
  if (!r.positive) j["witness"] = {{"rows", r.rows}, {"cols", r.cols}, {"minor", encode(r.value)}};
  return j;
}

json encode(const EdreiResult& r) {
  const char* status = r.status == PeelStatus::geometric ? "geometric"
                       : r.status == PeelStatus::terminal ? "terminal"
                                                          : "entire";
  return {{"status", status},
          {"alpha", encode(r.alpha)},
          {"alpha_exact", r.exact},
          {"alpha_float", r.alpha.get_d()},
          {"peeled", encode(r.peeled)},
          {"residual", encode(r.residual)}};
}

template <>
Rational decode<Rational>(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail("rationals must be strings such as \"3/10\"");
}

template <>
std::vector<Rational> decode<std::vector<Rational>>(const json& j) {
  std::vector<Rational> out;
  for (const auto& e : as_array(j, "rational list")) out.push_back(decode<Rational>(e));
  return out;
}

template <>
Partition decode<Partition>(const json& j) {
  std::vector<int> parts;
  for (const auto& e : as_array(j, "partition")) parts.push_back(as_int(e, "partition part"));
  return Partition(std::move(parts));
}

template <>
Permutation decode<Permutation>(const json& j) {
  std::vector<std::vector<int>> cycles;
  for (const auto& c : as_array(j, "permutation")) {
    std::vector<int> cyc;
    for (const auto& e : as_array(c, "cycle")) cyc.push_back(as_int(e, "cycle entry"));
    cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(cycles);
}

template <>
YoungDistribution decode<YoungDistribution>(const json& j) {
  YoungDistribution d;
  for (const auto& e : as_array(j, "distribution")) {
    Rational x = decode<Rational>(field(e, "x"));
    if (!d.at(x).empty()) fail("point " + to_string(x) + " listed twice");
    Partition shape = decode<Partition>(field(e, "shape"));
    if (shape.empty()) fail("distribution entries must have non-empty shapes");
    d.set(x, shape);
  }
  return d;
}

template <>
ThomaParams decode<ThomaParams>(const json& j) {
  if (!j.is_object()) fail("parameters must be an object");
  std::vector<Rational> alpha, beta;
  if (j.contains("alpha")) alpha = decode<std::vector<Rational>>(j["alpha"]);
  if (j.contains("beta")) beta = decode<std::vector<Rational>>(j["beta"]);
  ThomaParams p = ThomaParams::from_alpha_beta(std::move(alpha), std::move(beta));
  if (j.contains("gamma") && decode<Rational>(j["gamma"]) != p.gamma)
    fail("gamma disagrees with 1 - sum(alpha) - sum(beta)");
  return p;
}

template <>
ThomaMeasure decode<ThomaMeasure>(const json& j) {
  ThomaMeasure mu;
  for (const auto& a : as_array(field(j, "atoms"), "atoms")) {
    Rational x = decode<Rational>(field(a, "x"));
    if (mu.atoms.contains(x)) fail("atom " + to_string(x) + " listed twice");
    mu.atoms[x] = decode<Rational>(field(a, "mass"));
  }
  mu.zero_mass = j.contains("zero_mass") ? decode<Rational>(j["zero_mass"]) : Rational(0);
  mu.validate();
  return mu;
}

template <>
PowerSeries decode<PowerSeries>(const json& j) {
  const json& c = j.is_array() ? j : field(j, "coeffs");
  return PowerSeries(decode<std::vector<Rational>>(c));
}

template <>
WiringDiagram decode<WiringDiagram>(const json& j) {
  int window = as_int(field(j, "window"), "window");
  std::vector<Strand> strands;
  bool odd = false;
  for (const auto& p : as_array(field(j, "pairs"), "pairs")) {
    const json& a = field(p, "a");
    const json& b = field(p, "b");
    if (!a.is_string() || !b.is_string()) fail("endpoints must be strings such as \"T+1\"");
    Strand s{Endpoint::parse(a.get<std::string>()), Endpoint::parse(b.get<std::string>()),
             p.contains("len") ? decode<Rational>(p["len"]) : Rational(0)};
    odd = odd || s.a.index == 0 || s.b.index == 0;
    if (s.b < s.a) std::swap(s.a, s.b);
    strands.push_back(s);
  }
  std::vector<Rational> loops;
  if (j.contains("loops")) loops = decode<std::vector<Rational>>(j["loops"]);
  return WiringDiagram::from_strands(window, odd, strands, loops);
}

template <>
ReprLabel decode<ReprLabel>(const json& j) {
  ReprLabel label;
  const json& pair = field(j, "pair");
  if (!pair.is_string()) fail("pair must be a string");
  label.pair = parse_pair(pair.get<std::string>());
  label.depth = as_int(field(j, "depth"), "depth");
  label.measure = decode<ThomaMeasure>(field(j, "measure"));
  if (j.contains("lambda")) label.lambda = decode<YoungDistribution>(j["lambda"]);
  if (j.contains("mu")) label.mu = decode<YoungDistribution>(j["mu"]);
  return label;
}

template <>
MixtureSpec decode<MixtureSpec>(const json& j) {
  MixtureSpec spec;
  for (const auto& c : as_array(field(j, "components"), "components"))
    spec.components.emplace_back(decode<ReprLabel>(field(c, "label")), decode<Rational>(field(c, "weight")));
  return spec;
}

}  // namespace infsym
