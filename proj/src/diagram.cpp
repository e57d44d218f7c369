#include "infsym/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace infsym {

std::string Endpoint::label() const {
  std::string s = side == Side::top ? "T" : "B";
  if (index > 0) s += '+';
  return s + std::to_string(index);
}

Endpoint Endpoint::parse(const std::string& label) {
  if (label.size() < 2 || (label[0] != 'T' && label[0] != 'B'))
    throw std::invalid_argument("bad endpoint label '" + label + "'");
  Endpoint e{label[0] == 'T' ? Side::top : Side::bottom, 0};
  std::size_t used = 0;
  try {
    e.index = std::stoi(label.substr(1), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad endpoint label '" + label + "'");
  }
  if (used != label.size() - 1) throw std::invalid_argument("bad endpoint label '" + label + "'");
  return e;
}

WiringDiagram::WiringDiagram(int window, bool odd) : window_(window), odd_(odd) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  partner_.assign(static_cast<std::size_t>(2 * slots()), -1);
  length_.assign(static_cast<std::size_t>(2 * slots()), Rational(0));
}

int WiringDiagram::id(Endpoint e) const {
  const int i = e.index;
  if (i == 0 && !odd_) throw std::invalid_argument("index 0 exists only in the odd window");
  if (i < -window_ || i > window_)
    throw std::invalid_argument("index " + std::to_string(i) + " outside window " + std::to_string(window_));
  int pos = i < 0 ? i + window_ : window_ + i - (odd_ ? 0 : 1);
  return (e.side == Side::top ? 0 : slots()) + pos;
}

Endpoint WiringDiagram::endpoint(int id) const {
  Side side = id < slots() ? Side::top : Side::bottom;
  int pos = id % slots();
  int index = pos < window_ ? pos - window_ : pos - window_ + (odd_ ? 0 : 1);
  return {side, index};
}

void WiringDiagram::connect(int p, int q, const Rational& length) {
  partner_[static_cast<std::size_t>(p)] = q;
  partner_[static_cast<std::size_t>(q)] = p;
  length_[static_cast<std::size_t>(p)] = length;
  length_[static_cast<std::size_t>(q)] = length;
}

void WiringDiagram::add_loop(const Rational& length) {
  if (length < 0) throw std::invalid_argument("negative loop length");
  if (length == 1) return;
  loops_.insert(std::upper_bound(loops_.begin(), loops_.end(), length), length);
}

WiringDiagram WiringDiagram::identity(int window, bool odd) {
  WiringDiagram d(window, odd);
  for (int p = 0; p < d.slots(); ++p) d.connect(p, p + d.slots(), 0);
  return d;
}

WiringDiagram WiringDiagram::from_strands(int window, bool odd, const std::vector<Strand>& strands,
                                          std::vector<Rational> loops) {
  WiringDiagram d(window, odd);
  for (const auto& s : strands) {
    int p = d.id(s.a), q = d.id(s.b);
    if (p == q) throw std::invalid_argument("strand joins " + s.a.label() + " to itself");
    if (d.partner_[static_cast<std::size_t>(p)] >= 0 || d.partner_[static_cast<std::size_t>(q)] >= 0)
      throw std::invalid_argument("endpoint used twice near " + s.a.label() + "/" + s.b.label());
    if (s.length < 0) throw std::invalid_argument("negative strand length");
    d.connect(p, q, s.length);
  }
  for (std::size_t p = 0; p < d.partner_.size(); ++p)
    if (d.partner_[p] < 0) throw std::invalid_argument("endpoint " + d.endpoint(static_cast<int>(p)).label() + " unmatched");
  for (const auto& l : loops) d.add_loop(l);
  return d;
}

std::vector<Strand> WiringDiagram::strands() const {
  std::vector<Strand> out;
  for (int p = 0; p < 2 * slots(); ++p) {
    int q = partner_[static_cast<std::size_t>(p)];
    if (p < q) out.push_back({endpoint(p), endpoint(q), length_[static_cast<std::size_t>(p)]});
  }
  for (auto& s : out)
    if (s.b < s.a) std::swap(s.a, s.b);
  std::sort(out.begin(), out.end(), [](const Strand& x, const Strand& y) { return x.a < y.a; });
  return out;
}

WiringDiagram WiringDiagram::star() const {
  WiringDiagram d(window_, odd_);
  const int m = slots();
  auto flip = [m](int p) { return p < m ? p + m : p - m; };
  for (int p = 0; p < 2 * m; ++p) {
    d.partner_[static_cast<std::size_t>(flip(p))] = flip(partner_[static_cast<std::size_t>(p)]);
    d.length_[static_cast<std::size_t>(flip(p))] = length_[static_cast<std::size_t>(p)];
  }
  d.loops_ = loops_;
  return d;
}

WiringDiagram operator*(const WiringDiagram& a, const WiringDiagram& b) {
  if (a.window_ != b.window_ || a.odd_ != b.odd_)
    throw std::invalid_argument("cannot compose diagrams over different windows");
  const int m = a.slots();
  WiringDiagram out(a.window_, a.odd_);
  const WiringDiagram* parts[2] = {&a, &b};
  // visited[d][p]: point p of diagram d already traced
  std::vector<char> visited[2] = {std::vector<char>(static_cast<std::size_t>(2 * m), 0),
                                  std::vector<char>(static_cast<std::size_t>(2 * m), 0)};
  // The middle boundary is a's bottom (ids m..2m-1) glued to b's top (0..m-1).
  auto is_middle = [m](int d, int p) { return d == 0 ? p >= m : p < m; };
  auto across = [m](int d, int p) { return d == 0 ? std::pair{1, p - m} : std::pair{0, p + m}; };

  // Outer points keep their ids: a's top and b's bottom are the result's.
  auto trace_open = [&](int d, int p) {
    const int start = p;
    Rational len = 0;
    while (true) {
      visited[d][static_cast<std::size_t>(p)] = 1;
      int q = parts[d]->partner_[static_cast<std::size_t>(p)];
      len += parts[d]->length_[static_cast<std::size_t>(p)];
      visited[d][static_cast<std::size_t>(q)] = 1;
      if (!is_middle(d, q)) {
        out.connect(start, q, len);
        return;
      }
      std::tie(d, p) = across(d, q);
    }
  };
  for (int p = 0; p < m; ++p)
    if (!visited[0][static_cast<std::size_t>(p)]) trace_open(0, p);
  for (int p = m; p < 2 * m; ++p)
    if (!visited[1][static_cast<std::size_t>(p)]) trace_open(1, p);

  for (int p = m; p < 2 * m; ++p) {
    if (visited[0][static_cast<std::size_t>(p)]) continue;
    int d = 0, cur = p;
    Rational len = 0;
    do {
      visited[d][static_cast<std::size_t>(cur)] = 1;
      int q = parts[d]->partner_[static_cast<std::size_t>(cur)];
      len += parts[d]->length_[static_cast<std::size_t>(cur)];
      visited[d][static_cast<std::size_t>(q)] = 1;
      std::tie(d, cur) = across(d, q);
    } while (!(d == 0 && cur == p));
    out.add_loop(len);
  }
  for (const auto& l : a.loops_) out.add_loop(l);
  for (const auto& l : b.loops_) out.add_loop(l);
  return out;
}

WiringDiagram perm_diagram(const Permutation& g, int window, bool odd) {
  for (int i : g.support())
    if (i < -window || i > window || (i == 0 && !odd))
      throw std::invalid_argument("permutation moves " + std::to_string(i) + ", outside the window");
  Permutation ginv = g.inverse();
  std::vector<Strand> strands;
  for (int s = -window; s <= window; ++s) {
    if (s == 0 && !odd) continue;
    strands.push_back({{Side::top, s}, {Side::bottom, ginv(s)}, 0});
  }
  return WiringDiagram::from_strands(window, odd, strands);
}

namespace {
void check_index(int i, int window, bool odd) {
  if (i < -window || i > window || (i == 0 && !odd))
    throw std::invalid_argument("index " + std::to_string(i) + " outside window " + std::to_string(window));
}
}  // namespace

WiringDiagram a_diagram(int i, int window, bool odd) {
  check_index(i, window, odd);
  std::vector<Strand> strands;
  for (int s = -window; s <= window; ++s) {
    if (s == 0 && !odd) continue;
    strands.push_back({{Side::top, s}, {Side::bottom, s}, s == i ? Rational(1) : Rational(0)});
  }
  return WiringDiagram::from_strands(window, odd, strands);
}

WiringDiagram c_diagram(const Rational& length, int window, bool odd) {
  WiringDiagram d = WiringDiagram::identity(window, odd);
  d.add_loop(length);
  return d;
}

WiringDiagram p_diagram(int n, int window, bool odd) {
  if (n < 0 || n >= window)
    throw std::invalid_argument("P(" + std::to_string(n) + ") needs 0 <= n < window " + std::to_string(window));
  std::vector<Strand> strands;
  const Rational half(1, 2);
  if (odd) strands.push_back({{Side::top, 0}, {Side::bottom, 0}, 0});
  for (int i = 1; i <= window; ++i) {
    if (i <= n) {
      strands.push_back({{Side::top, i}, {Side::bottom, i}, 0});
      strands.push_back({{Side::top, -i}, {Side::bottom, -i}, 0});
    } else {
      strands.push_back({{Side::top, -i}, {Side::top, i}, half});
      strands.push_back({{Side::bottom, -i}, {Side::bottom, i}, half});
    }
  }
  return WiringDiagram::from_strands(window, odd, strands);
}

WiringDiagram random_diagram(int window, bool odd, std::mt19937_64& rng) {
  std::vector<Endpoint> points;
  for (Side side : {Side::top, Side::bottom})
    for (int s = -window; s <= window; ++s)
      if (s != 0 || odd) points.push_back({side, s});
  std::shuffle(points.begin(), points.end(), rng);
  std::uniform_int_distribution<int> units(0, 4), loop_count(0, 2);
  auto half_units = [&](std::mt19937_64& g) -> Rational { return Rational(units(g)) / 2; };
  std::vector<Strand> strands;
  for (std::size_t k = 0; k + 1 < points.size(); k += 2) {
    Strand s{points[k], points[k + 1], half_units(rng)};
    if (s.b < s.a) std::swap(s.a, s.b);
    strands.push_back(s);
  }
  std::vector<Rational> loops;
  for (int n = loop_count(rng); n > 0; --n) loops.push_back(half_units(rng));
  return WiringDiagram::from_strands(window, odd, strands, loops);
}

namespace {

struct Checker {
  RelationReport& report;
  void operator()(const std::string& relation, bool pass, const std::string& instance) {
    ++report.checked[relation];
    if (!pass) report.failures.push_back(relation + " [" + instance + "]");
  }
};

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

}  // namespace

RelationReport verify_relations(int window, bool odd, Exec exec) {
  if (window < 3) throw std::invalid_argument("verify_relations needs window >= 3");
  const int N = window;
  RelationReport report;
  report.window = N;
  report.odd = odd;
  Checker check{report};

  std::vector<int> indices;
  for (int s = -N; s <= N; ++s)
    if (s != 0 || odd) indices.push_back(s);
  std::map<int, WiringDiagram> a_cache;
  for (int i : indices) a_cache.emplace(i, a_diagram(i, N, odd));
  auto A = [&](int i) -> const WiringDiagram& { return a_cache.at(i); };
  auto P = [&](int n) { return p_diagram(n, N, odd); };
  auto C = [&](int k) { return c_diagram(Rational(k), N, odd); };
  auto perm = [&](const Permutation& g) { return perm_diagram(g, N, odd); };
  auto abs_i = [](int i) { return i < 0 ? -i : i; };

  const std::string commute = "A_i A_j = A_j A_i";
  for (int i : indices)
    for (int j : indices)
      if (i < j) check(commute, A(i) * A(j) == A(j) * A(i), "i=" + std::to_string(i) + ",j=" + std::to_string(j));

  // Conjugation: either every bijection of the index set or adjacent transpositions.
  const std::string conj = "g A_i g^-1 = A_g(i)";
  std::vector<Permutation> group;
  report.exhaustive_conjugation = indices.size() <= 8;
  if (report.exhaustive_conjugation) {
    std::vector<int> img = indices;
    do {
      std::map<int, int> m;
      for (std::size_t k = 0; k < indices.size(); ++k) m[indices[k]] = img[k];
      group.push_back(Permutation::from_map(m));
    } while (std::next_permutation(img.begin(), img.end()));
  } else {
    for (std::size_t k = 0; k + 1 < indices.size(); ++k)
      group.push_back(Permutation::transposition(indices[k], indices[k + 1]));
  }
  std::vector<std::vector<std::string>> conj_failures(group.size());
  auto conj_one = [&](std::ptrdiff_t gi) {
    const Permutation& g = group[static_cast<std::size_t>(gi)];
    const WiringDiagram pg = perm(g), pginv = perm(g.inverse());
    for (int i : indices)
      if (!(pg * A(i) * pginv == A(g(i))))
        conj_failures[static_cast<std::size_t>(gi)].push_back(conj + " [g=" + g.str() + ",i=" + std::to_string(i) + "]");
  };
  const auto ng = static_cast<std::ptrdiff_t>(group.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t gi = 0; gi < ng; ++gi) conj_one(gi);
  } else {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t gi = 0; gi < ng; ++gi) conj_one(gi);
  }
  report.checked[conj] += group.size() * indices.size();
  for (auto& f : conj_failures) report.failures.insert(report.failures.end(), f.begin(), f.end());

  const std::string inner = "A_i P_n = P_n A_i (|i|<=n)";
  const std::string outer = "A_i P_n = A_-i P_n (|i|>n)";
  const std::string swap = "P_n A_i P_n = P_n (i,k) P_n";
  const std::string powers = "P_n prod A_i^k P_n = P_n prod C_(k+1)";
  for (int n = 0; n < N; ++n) {
    const WiringDiagram pn = P(n);
    for (int i : indices) {
      std::string tag = "n=" + std::to_string(n) + ",i=" + std::to_string(i);
      if (abs_i(i) <= n) {
        check(inner, A(i) * pn == pn * A(i), tag);
        for (int k : indices)
          if (abs_i(k) > n)
            check(swap, pn * A(i) * pn == pn * perm(Permutation::transposition(i, k)) * pn,
                  tag + ",k=" + std::to_string(k));
      } else {
        check(outer, A(i) * pn == A(-i) * pn, tag);
      }
    }
    // Distinct positive indices above n, exponents 1..3.
    std::vector<int> free;
    for (int i = n + 1; i <= N; ++i) free.push_back(i);
    const int f = static_cast<int>(free.size());
    for (int mask = 1; mask < (1 << f); ++mask) {
      std::vector<int> chosen;
      for (int b = 0; b < f; ++b)
        if (mask >> b & 1) chosen.push_back(free[static_cast<std::size_t>(b)]);
      std::vector<int> exps(chosen.size(), 1);
      while (true) {
        WiringDiagram lhs = pn, rhs = pn;
        for (std::size_t t = 0; t < chosen.size(); ++t) {
          for (int e = 0; e < exps[t]; ++e) lhs = lhs * A(chosen[t]);
          rhs = rhs * C(exps[t] + 1);
        }
        lhs = lhs * pn;
        check(powers, lhs == rhs, "n=" + std::to_string(n) + ",i=" + join_ints(chosen) + ",k=" + join_ints(exps));
        std::size_t t = 0;
        while (t < exps.size() && exps[t] == 3) exps[t++] = 1;
        if (t == exps.size()) break;
        ++exps[t];
      }
    }
  }

  const std::string cycles = "P_0 s P_0 = P_0 prod_[s] C_k";
  std::vector<int> pos(static_cast<std::size_t>(N));
  std::iota(pos.begin(), pos.end(), 1);
  const WiringDiagram p0 = P(0);
  std::vector<int> img = pos;
  do {
    std::map<int, int> m;
    for (std::size_t k = 0; k < pos.size(); ++k) m[pos[k]] = img[k];
    Permutation s = Permutation::from_map(m);
    WiringDiagram rhs = p0;
    const Partition lengths = cycle_type(s, N).nontrivial;
    for (int k : lengths.parts()) rhs = rhs * C(k);
    check(cycles, p0 * perm(s) * p0 == rhs, "s=" + s.str());
  } while (std::next_permutation(img.begin(), img.end()));

  std::sort(report.failures.begin(), report.failures.end());
  return report;
}

}  // namespace infsym
