#include "infsym/classify.hpp"

#include "infsym/symchar.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace infsym {

std::string to_string(Pair p) {
  switch (p) {
    case Pair::D: return "D";
    case Pair::E: return "E";
    case Pair::O: return "O";
  }
  return "?";
}

Pair parse_pair(const std::string& s) {
  if (s == "D") return Pair::D;
  if (s == "E") return Pair::E;
  if (s == "O") return Pair::O;
  throw std::invalid_argument("pair must be D, E or O, got '" + s + "'");
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::none: return "none";
    case Condition::measure: return "measure";
    case Condition::parity: return "parity";
    case Condition::support: return "support";
    case Condition::size: return "size";
    case Condition::inequality: return "inequality";
  }
  return "?";
}

ThomaCheck is_thoma_measure(const ThomaMeasure& mu) {
  ThomaCheck r;
  for (const auto& [x, m] : mu.atoms) {
    Rational nu = mu.nu(x);
    if (!is_integer(nu) || nu <= 0) {
      r.ok = false;
      r.offending.push_back(x);
    }
  }
  return r;
}

namespace {

Verdict reject(Condition c, std::string reason) { return {false, c, std::move(reason)}; }

Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

Verdict classify(const ReprLabel& label) {
  label.measure.validate();
  if (label.measure.total_mass() != 1) throw std::invalid_argument("measure must have total mass 1");
  if (label.depth < 0) throw std::invalid_argument("negative depth");
  if (label.pair != Pair::D && !label.mu.empty()) throw std::invalid_argument("M is only defined for the pair D");

  const auto& mu = label.measure;
  if (auto check = is_thoma_measure(mu); !check.ok)
    return reject(Condition::measure, "nu(" + to_string(check.offending.front()) + ") = " +
                                          to_string(mu.nu(check.offending.front())) + " is not a positive integer");

  if (label.pair != Pair::D) {
    for (const auto& [x, m] : mu.atoms) {
      Rational nu = mu.nu(x);
      if (x < 0 && nu.get_num() % 2 != 0)
        return reject(Condition::parity, "nu(" + to_string(x) + ") = " + to_string(nu) + " is odd at a negative atom");
    }
  }

  auto supported = [&](const YoungDistribution& d) -> std::optional<Rational> {
    for (const auto& x : d.support())
      if (x != 0 && !mu.atoms.contains(x)) return x;
    return std::nullopt;
  };
  if (auto x = supported(label.lambda)) return reject(Condition::support, "Lambda has a point " + to_string(*x) + " outside supp mu");
  if (auto x = supported(label.mu)) return reject(Condition::support, "M has a point " + to_string(*x) + " outside supp mu");

  const int d = label.depth, nl = label.lambda.size(), nm = label.mu.size();
  switch (label.pair) {
    case Pair::D:
      if (nl != d || nm != d)
        return reject(Condition::size, "|Lambda| = " + std::to_string(nl) + ", |M| = " + std::to_string(nm) +
                                           ", depth " + std::to_string(d));
      break;
    case Pair::E:
      if (nl != 2 * d) return reject(Condition::size, "|Lambda| = " + std::to_string(nl) + " != 2d");
      break;
    case Pair::O:
      if (nl != 2 * d + 1) return reject(Condition::size, "|Lambda| = " + std::to_string(nl) + " != 2d+1");
      break;
  }

  std::set<Rational> points;
  for (const auto& x : label.lambda.support()) points.insert(x);
  for (const auto& x : label.mu.support()) points.insert(x);
  for (const auto& x : points) {
    if (x == 0) continue;
    const Rational nu = mu.nu(x);
    const Partition L = label.lambda.at(x), M = label.mu.at(x);
    if (label.pair == Pair::D) {
      int stat = x > 0 ? L.length() + M.length() : L[0] + M[0];
      if (stat > nu)
        return reject(Condition::inequality, "at " + to_string(x) + ": " + std::to_string(stat) + " > nu = " + to_string(nu));
    } else if (x > 0) {
      Partition Lc = conjugate(L);
      int stat = Lc[0] + Lc[1];
      if (stat > nu)
        return reject(Condition::inequality, "at " + to_string(x) + ": " + std::to_string(stat) + " > nu = " + to_string(nu));
    } else {
      if (L[0] > nu / 2)
        return reject(Condition::inequality, "at " + to_string(x) + ": " + std::to_string(L[0]) + " > nu/2 = " + to_string(Rational(nu / 2)));
    }
  }
  return {};
}

Rational boundary_values(BoundaryKind kind, const Rational& x, const Rational& nu, int l1, int l2) {
  if (x == 0) throw std::invalid_argument("boundary_values needs x != 0");
  if (l1 < 0 || l2 < 0) throw std::invalid_argument("boundary_values needs l >= 0");
  if (kind == BoundaryKind::altD) return abs_of(x) * (nu - l1 - l2) / ((l1 + 1) * (l2 + 1));
  return 2 * abs_of(x) * (nu - 2 * l1) / ((l1 + 1) * (l1 + 2));
}

MixtureResult mixture(const MixtureSpec& spec) {
  if (spec.components.empty()) throw std::invalid_argument("mixture needs at least one component");
  Rational total = 0;
  bool any_d = false, all_d = true;
  for (const auto& [label, p] : spec.components) {
    if (p <= 0) throw std::invalid_argument("mixture weights must be positive");
    total += p;
    any_d = any_d || label.pair == Pair::D;
    all_d = all_d && label.pair == Pair::D;
  }
  if (total != 1) throw std::invalid_argument("mixture weights sum to " + to_string(total) + ", not 1");
  if (any_d && !all_d) throw std::invalid_argument("the pair D mixes only with D");

  MixtureResult r;
  ReprLabel& out = r.label;
  out.measure.zero_mass = 0;
  std::set<Rational> seen;
  int depth = 0;
  for (const auto& [label, p] : spec.components) {
    label.measure.validate();
    for (const auto& [y, m] : label.measure.atoms) out.measure.atoms[p * y] += p * m;
    out.measure.zero_mass += p * label.measure.zero_mass;
    YoungDistribution scaled = label.lambda.scaled(p);
    for (const auto& x : scaled.support())
      if (!seen.insert(x).second) r.irreducible = false;
    out.lambda = out.lambda.merged(scaled);
    out.mu = out.mu.merged(label.mu.scaled(p));
    depth += label.depth;
  }
  if (all_d) {
    out.pair = Pair::D;
    out.depth = depth;
  } else {
    const int n = out.lambda.size();
    out.pair = n % 2 ? Pair::O : Pair::E;
    out.depth = n / 2;
  }
  return r;
}

MixtureCheck mixture_moment_check(const MixtureSpec& spec, int N) {
  if (N < 1) throw std::invalid_argument("mixture_moment_check needs N >= 1");
  MixtureCheck check;
  const MixtureResult mix = mixture(spec);
  const std::vector<Rational> c_mix = moments(mix.label.measure, N);
  std::vector<Rational> expected(static_cast<std::size_t>(N), Rational(0));
  PowerSeries product = PowerSeries::one(N);
  for (const auto& [label, p] : spec.components) {
    const std::vector<Rational> c = moments(label.measure, N);
    for (int k = 1; k <= N; ++k)
      expected[static_cast<std::size_t>(k - 1)] += pow(p, static_cast<unsigned>(k)) * c[static_cast<std::size_t>(k - 1)];
    product = product * h_from_moments(c, N).scaled_argument(p);
  }
  check.moments_ok = c_mix == expected;
  check.series_ok = h_from_moments(c_mix, N) == product;
  return check;
}

Integer dim_induced(const YoungDistribution& d) {
  Integer dim = factorial(static_cast<unsigned>(d.size()));
  for (const auto& [x, shape] : d.entries()) {
    dim /= factorial(static_cast<unsigned>(shape.size()));
    dim *= dim_syt(shape);
  }
  return dim;
}

Integer dim_root(const ReprLabel& label) {
  if (label.pair != Pair::D && !label.mu.empty()) throw std::invalid_argument("M is only defined for the pair D");
  Integer dim = dim_induced(label.lambda);
  if (label.pair == Pair::D) dim *= dim_induced(label.mu);
  return dim;
}

Integer mixture_dim(int d1, const Integer& m1, int d2, const Integer& m2) {
  if (d1 < 0 || d2 < 0) throw std::invalid_argument("depths must be nonnegative");
  return binomial(static_cast<unsigned>(2 * (d1 + d2)), static_cast<unsigned>(2 * d1)) * m1 * m2;
}

Partition ergodic_shape(const ThomaParams& p, int n) {
  p.validate();
  if (n < static_cast<int>(p.alpha.size() + p.beta.size()) || n < 1)
    throw std::invalid_argument("n = " + std::to_string(n) + " is smaller than the number of parameters");
  auto floor_of = [](const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return static_cast<int>(f.get_si());
  };
  std::vector<int> parts;
  int used = 0;
  for (const auto& a : p.alpha) {
    int row = floor_of(a * n);
    if (row > 0) parts.push_back(row);
    used += row;
  }
  std::vector<int> cols;
  for (const auto& b : p.beta) {
    int col = floor_of(b * n);
    if (col > 0) cols.push_back(col);
    used += col;
  }
  const Partition col_rows = conjugate(Partition(cols));
  for (int part : col_rows.parts()) parts.push_back(part);
  int r = n - used;
  if (r < 0) throw std::invalid_argument("infeasible shape assembly at n = " + std::to_string(n));
  int side = static_cast<int>(std::sqrt(static_cast<double>(r)));
  while ((side + 1) * (side + 1) <= r) ++side;
  while (side * side > r) --side;
  for (int i = 0; i < side; ++i) parts.push_back(side);
  int left = r - side * side;
  while (left > 0) {
    int row = std::min(left, std::max(side, 1));
    parts.push_back(row);
    left -= row;
  }
  Partition shape = Partition::from_unsorted(std::move(parts));
  if (shape.size() != n) throw std::logic_error("ergodic_shape assembled the wrong size");
  return shape;
}

std::vector<ErgodicPoint> ergodic_converge(const ThomaParams& p, int k, const std::vector<int>& ns, Exec exec) {
  if (k < 2) throw std::invalid_argument("cycle length must be >= 2");
  for (int n : ns)
    if (n < k) throw std::invalid_argument("every n must be >= k");
  const Rational ck = thoma_char_value(p, Partition{k});
  std::vector<ErgodicPoint> out(ns.size());
  auto one = [&](std::ptrdiff_t i) {
    const int n = ns[static_cast<std::size_t>(i)];
    ErgodicPoint& pt = out[static_cast<std::size_t>(i)];
    pt.n = n;
    pt.shape = ergodic_shape(p, n);
    pt.chi = normalized_cycle_char(pt.shape, k);
    pt.deviation = abs_of(pt.chi - ck);
  };
  const auto count = static_cast<std::ptrdiff_t>(ns.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) one(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) one(i);
  }
  return out;
}

GramDiagnostic gram_diagnostic(const std::vector<Permutation>& elements,
                               const std::function<Rational(const Permutation&)>& phi) {
  const auto n = static_cast<Eigen::Index>(elements.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = phi(elements[static_cast<std::size_t>(i)] * elements[static_cast<std::size_t>(j)].inverse()).get_d();
  // Symmetrize so that complex-conjugate pairing of a real function is respected.
  Eigen::MatrixXd sym = (g + g.transpose()) / 2;
  GramDiagnostic d;
  d.norm = sym.norm();
  if (n == 0) return d;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = solver.eigenvalues().minCoeff();
  d.positive_semidefinite = d.min_eigenvalue >= -1e-9 * d.norm;
  return d;
}

}  // namespace infsym
