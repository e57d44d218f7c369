#include "infsym/thoma.hpp"

#include "infsym/matrix.hpp"
#include "infsym/symchar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace infsym {

namespace {

void check_decreasing_positive(const std::vector<Rational>& v, const char* name) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0 || v[i] > 1) throw std::invalid_argument(std::string(name) + " entries must lie in (0,1]");
    if (i > 0 && v[i] > v[i - 1]) throw std::invalid_argument(std::string(name) + " must be weakly decreasing");
  }
}

Rational sum_of(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

ThomaParams ThomaParams::from_alpha_beta(std::vector<Rational> alpha, std::vector<Rational> beta) {
  ThomaParams p{std::move(alpha), std::move(beta), 0};
  p.gamma = 1 - sum_of(p.alpha) - sum_of(p.beta);
  p.validate();
  return p;
}

void ThomaParams::validate() const {
  check_decreasing_positive(alpha, "alpha");
  check_decreasing_positive(beta, "beta");
  if (gamma < 0) throw std::invalid_argument("sum of alpha and beta exceeds 1");
  if (sum_of(alpha) + sum_of(beta) + gamma != 1)
    throw std::invalid_argument("alpha, beta and gamma must sum to 1");
}

void ThomaMeasure::validate() const {
  for (const auto& [x, m] : atoms) {
    if (x == 0) throw std::invalid_argument("mass at 0 belongs in zero_mass, not in atoms");
    if (x < -1 || x > 1) throw std::invalid_argument("atom " + to_string(x) + " outside [-1,1]");
    if (m <= 0) throw std::invalid_argument("atom " + to_string(x) + " has nonpositive mass");
  }
  if (zero_mass < 0) throw std::invalid_argument("negative mass at 0");
}

Rational ThomaMeasure::total_mass() const {
  Rational s = zero_mass;
  for (const auto& [x, m] : atoms) s += m;
  return s;
}

Rational ThomaMeasure::nu(const Rational& x) const {
  auto it = atoms.find(x);
  if (it == atoms.end()) return 0;
  return it->second / abs_of(x);
}

ThomaMeasure to_measure(const ThomaParams& p) {
  ThomaMeasure mu;
  for (const auto& a : p.alpha) mu.atoms[a] += a;
  for (const auto& b : p.beta) mu.atoms[-b] += b;
  mu.zero_mass = p.gamma;
  return mu;
}

ThomaParams to_params(const ThomaMeasure& mu) {
  mu.validate();
  ThomaParams p;
  for (const auto& [x, m] : mu.atoms) {
    Rational nu = mu.nu(x);
    if (!is_integer(nu))
      throw std::domain_error("atom " + to_string(x) + " has nu = " + to_string(nu) + ", not an integer");
    auto count = nu.get_num().get_ui();
    auto& side = x > 0 ? p.alpha : p.beta;
    side.insert(side.end(), count, abs_of(x));
  }
  std::sort(p.alpha.begin(), p.alpha.end(), std::greater<>());
  std::sort(p.beta.begin(), p.beta.end(), std::greater<>());
  p.gamma = mu.zero_mass;
  p.validate();
  return p;
}

Rational thoma_char_value(const ThomaParams& p, const Partition& cycles) {
  Rational value = 1;
  for (int k : cycles.parts()) {
    if (k < 2) throw std::invalid_argument("cycle lengths must be at least 2");
    Rational ck = 0;
    for (const auto& a : p.alpha) ck += pow(a, static_cast<unsigned>(k));
    for (const auto& b : p.beta) {
      if (k % 2) ck += pow(b, static_cast<unsigned>(k));
      else ck -= pow(b, static_cast<unsigned>(k));
    }
    value *= ck;
  }
  return value;
}

Rational moment(const ThomaMeasure& mu, int k) {
  if (k < 1) throw std::invalid_argument("moment index must be >= 1");
  Rational c = k == 1 ? mu.zero_mass : Rational(0);
  for (const auto& [x, m] : mu.atoms) c += pow(x, static_cast<unsigned>(k - 1)) * m;
  return c;
}

std::vector<Rational> moments(const ThomaMeasure& mu, int N) {
  std::vector<Rational> c;
  for (int k = 1; k <= N; ++k) c.push_back(moment(mu, k));
  return c;
}

SpectralFunction SpectralFunction::polynomial(std::vector<Rational> coeffs) {
  SpectralFunction f;
  f.coeffs_ = std::move(coeffs);
  return f;
}

SpectralFunction SpectralFunction::atom_table(std::map<Rational, Rational> values) {
  SpectralFunction f;
  f.is_table_ = true;
  f.table_ = std::move(values);
  return f;
}

Rational SpectralFunction::operator()(const Rational& t) const {
  if (is_table_) {
    auto it = table_.find(t);
    return it == table_.end() ? Rational(0) : it->second;
  }
  Rational v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
  return v;
}

Rational generalized_moment(const ThomaMeasure& mu, const Permutation& sigma,
                            const std::map<int, SpectralFunction>& functions) {
  std::set<int> positions;
  for (int i : sigma.support()) positions.insert(i);
  for (const auto& [i, _] : functions) positions.insert(i);

  auto f_at = [&](int j, const Rational& t) {
    auto it = functions.find(j);
    return it == functions.end() ? Rational(1) : it->second(t);
  };

  Rational result = 1;
  std::set<int> seen;
  for (int start : positions) {
    if (seen.contains(start)) continue;
    std::vector<int> orbit;
    for (int i = start; !seen.contains(i); i = sigma(i)) {
      seen.insert(i);
      orbit.push_back(i);
    }
    const auto s = static_cast<unsigned>(orbit.size());
    Rational integral = 0;
    for (const auto& [x, m] : mu.atoms) {
      Rational term = pow(x, s - 1) * m;
      for (int j : orbit) term *= f_at(j, x);
      integral += term;
    }
    if (s == 1) integral += mu.zero_mass * f_at(orbit[0], Rational(0));
    result *= integral;
    if (result == 0) break;
  }
  return result;
}

PowerSeries h_from_params(const ThomaParams& p, int N) {
  PowerSeries h = PowerSeries::one(N);
  for (const auto& a : p.alpha) h = h * PowerSeries::geometric(a, N);
  for (const auto& b : p.beta) {
    PowerSeries f = PowerSeries::one(N);
    if (N >= 1) f[1] = b;
    h = h * f;
  }
  if (p.gamma != 0) {
    PowerSeries g(N);
    if (N >= 1) g[1] = p.gamma;
    h = h * g.exp();
  }
  return h;
}

PowerSeries h_from_moments(const std::vector<Rational>& c, int N) {
  if (N < 0) throw std::invalid_argument("negative order");
  if (c.size() < static_cast<std::size_t>(N))
    throw std::invalid_argument("need c_1..c_" + std::to_string(N) + ", got " + std::to_string(c.size()));
  PowerSeries h(N);
  h[0] = 1;
  for (int k = 1; k <= N; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += c[static_cast<std::size_t>(j - 1)] * h[static_cast<std::size_t>(k - j)];
    h[static_cast<std::size_t>(k)] = acc / k;
  }
  return h;
}

std::vector<Rational> c_from_h(const PowerSeries& h) {
  if (h[0] != 1) throw std::domain_error("H-series must have constant term 1");
  if (h.order() == 0) return {};
  PowerSeries q = h.derivative() * h.reciprocal().truncated(h.order() - 1);
  return q.coeffs();
}

PowerSeries sign_transform(const PowerSeries& h) {
  if (h[0] != 1) throw std::domain_error("H-series must have constant term 1");
  return h.scaled_argument(-1).reciprocal();
}

Rational m_lambda(const std::vector<Rational>& mseq, const Partition& lambda) {
  const int l = lambda.length();
  RationalMatrix a(static_cast<std::size_t>(l), std::vector<Rational>(static_cast<std::size_t>(l)));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      int k = lambda[static_cast<std::size_t>(i)] - i + j;
      if (k < 0) continue;
      if (static_cast<std::size_t>(k) >= mseq.size())
        throw std::invalid_argument("m-sequence too short for " + lambda.str());
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mseq[static_cast<std::size_t>(k)];
    }
  }
  return determinant(std::move(a));
}

CoherenceReport coherence_check(const std::vector<Rational>& mseq, int nmax) {
  CoherenceReport report;
  for (int n = 0; n < nmax; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      Rational sum = 0;
      for (const auto& big : covers(lambda, CoverDirection::up)) sum += m_lambda(mseq, big);
      if (sum != m_lambda(mseq, lambda)) {
        report.ok = false;
        report.failure = lambda;
        return report;
      }
    }
  }
  return report;
}

Rational pairing(const CycleFunction& phi, int n, const std::function<Rational(const Partition&)>& f) {
  Rational s = 0;
  for (const auto& rho : partitions_of(n)) s += phi(nontrivial_parts(rho)) * f(rho) / Rational(z_lambda(rho));
  return s;
}

MultiplicativityReport multiplicativity_check(const CycleFunction& phi, int n1, int n2) {
  if (n1 < 0 || n2 < 0 || n1 + n2 > 6) throw std::invalid_argument("multiplicativity_check needs n1 + n2 <= 6");
  auto eta = [](const Partition& mu) {
    return [mu](const Partition& rho) { return Rational(eta_character(mu, rho)); };
  };
  MultiplicativityReport report;
  for (const auto& mu : partitions_of(n1)) {
    Rational a = pairing(phi, n1, eta(mu));
    for (const auto& nu : partitions_of(n2)) {
      Rational b = pairing(phi, n2, eta(nu));
      Rational joint = pairing(phi, n1 + n2, eta(union_parts(mu, nu)));
      if (joint != a * b) {
        report.ok = false;
        report.failure = std::make_pair(mu, nu);
        report.lhs = joint;
        report.rhs = a * b;
        return report;
      }
    }
  }
  return report;
}

MultiplicativityReport multiplicativity_check(const ThomaParams& p, int n1, int n2) {
  return multiplicativity_check([&p](const Partition& cycles) { return thoma_char_value(p, cycles); }, n1, n2);
}

namespace {

EdreiResult peel_with(const std::vector<Rational>& mseq, int N, const Rational& alpha, bool exact) {
  EdreiResult r;
  r.alpha = alpha;
  r.exact = exact;
  if (alpha == 1) {
    r.status = PeelStatus::terminal;
    return r;
  }
  r.status = alpha == 0 ? PeelStatus::entire : PeelStatus::geometric;
  const Rational scale = 1 / (1 - alpha);
  Rational factor = 1;
  for (int k = 0; k <= N; ++k) {
    Rational prev = k > 0 ? mseq[static_cast<std::size_t>(k - 1)] : Rational(0);
    r.peeled.push_back(factor * (mseq[static_cast<std::size_t>(k)] - alpha * prev));
    factor *= scale;
  }
  PowerSeries h(std::vector<Rational>(mseq.begin(), mseq.begin() + N + 1));
  PowerSeries rebuilt = PowerSeries(r.peeled).scaled_argument(1 - alpha) * PowerSeries::geometric(alpha, N);
  r.residual = 0;
  const PowerSeries diff = h - rebuilt;
  for (const auto& c : diff.coeffs()) r.residual = std::max(r.residual, abs_of(c));
  return r;
}

}  // namespace

EdreiResult edrei_peel(const std::vector<Rational>& mseq, int N, double tol, std::optional<Rational> alpha) {
  if (N < 3) throw std::invalid_argument("edrei_peel needs N >= 3");
  if (mseq.size() < static_cast<std::size_t>(N) + 1) throw std::invalid_argument("m-sequence shorter than N+1");
  if (alpha) {
    if (*alpha < 0 || *alpha > 1) throw std::domain_error("alpha must lie in [0,1]");
    return peel_with(mseq, N, *alpha, true);
  }
  for (int k = 0; k <= N; ++k)
    if (mseq[static_cast<std::size_t>(k)] <= 0) throw std::invalid_argument("m-sequence must be positive up to N");

  auto ratio = [&](int k) -> Rational { return mseq[static_cast<std::size_t>(k + 1)] / mseq[static_cast<std::size_t>(k)]; };
  const Rational r1 = ratio(N - 3), r2 = ratio(N - 2), r3 = ratio(N - 1);
  const Rational t(tol);
  if (abs_of(r3 - r2) <= t && abs_of(r2 - r1) <= t) {
    Rational a = simplest_between(r3 - t, r3 + t);
    if (a > 1) throw std::domain_error("ratio estimate " + to_string(a) + " exceeds 1");
    return peel_with(mseq, N, a, false);
  }
  // Ratios drifting to 0 like s/k: no geometric factor left.
  const Rational s2 = ratio(N - 2) * (N - 1), s3 = ratio(N - 1) * N;
  if (abs_of(s3 - s2) <= abs_of(s3) / 100) return peel_with(mseq, N, 0, false);
  throw std::domain_error("ratios m(k+1)/m(k) did not converge within tolerance");
}

EdreiResult edrei_peel(const ThomaParams& p, int N) {
  p.validate();
  std::vector<Rational> mseq = h_from_params(p, N).coeffs();
  Rational alpha = p.alpha.empty() ? Rational(0) : p.alpha.front();
  return peel_with(mseq, N, alpha, true);
}

FalsifierResult alt_falsifier(const Rational& x, const Rational& nu, int m, Exec exec) {
  if (x == 0) throw std::invalid_argument("alt_falsifier needs x != 0");
  if (m < 0 || m > 9) throw std::invalid_argument("alt_falsifier needs 0 <= m <= 9");
  const Rational ax = abs_of(x);
  const Rational mfact(factorial(static_cast<unsigned>(m)));

  FalsifierResult r;
  r.closed = pow(ax, static_cast<unsigned>(m));
  for (int i = 0; i < m; ++i) r.closed *= nu - i;
  r.closed /= mfact;

  if (m == 0) {
    r.brute = 1;
    return r;
  }

  ThomaMeasure mu;
  if (nu != 0) mu.atoms[x] = nu * ax;
  mu.zero_mass = 1 - nu * ax;
  std::map<int, SpectralFunction> f;
  for (int j = 1; j <= m; ++j) f.emplace(j, SpectralFunction::indicator(x));
  const bool twist = x > 0;

  // One shard per value of w(0); shard sums are added in index order.
  std::vector<Rational> shard(static_cast<std::size_t>(m));
  auto run_shard = [&](int first) {
    std::vector<int> w(static_cast<std::size_t>(m));
    std::iota(w.begin(), w.end(), 0);
    std::rotate(w.begin(), w.begin() + first, w.begin() + first + 1);
    Rational sum = 0;
    do {
      std::map<int, int> images;
      for (int j = 0; j < m; ++j) images[j + 1] = w[static_cast<std::size_t>(j)] + 1;
      Permutation sigma = Permutation::from_map(images);
      Rational term = generalized_moment(mu, sigma, f);
      int even_cycles = 0;
      for (const auto& c : sigma.cycles()) even_cycles += c.size() % 2 == 0;
      if (twist && even_cycles % 2) sum -= term;
      else sum += term;
    } while (std::next_permutation(w.begin() + 1, w.end()));
    shard[static_cast<std::size_t>(first)] = sum;
  };
  if (exec == Exec::serial) {
    for (int i = 0; i < m; ++i) run_shard(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < m; ++i) run_shard(i);
  }
  r.brute = 0;
  for (const auto& s : shard) r.brute += s;
  r.brute /= mfact;
  return r;
}

}  // namespace infsym
