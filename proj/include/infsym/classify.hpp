#pragma once

// Labels of irreducible admissible representations for the pairs D, E, O:
// validity, admissibility, mixtures, root dimensions and the ergodic-limit
// harness.

#include "infsym/parallel.hpp"
#include "infsym/partition.hpp"
#include "infsym/thoma.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace infsym {

enum class Pair { D, E, O };
std::string to_string(Pair p);
Pair parse_pair(const std::string& s);

struct ReprLabel {
  Pair pair = Pair::E;
  int depth = 0;
  ThomaMeasure measure;
  YoungDistribution lambda;
  YoungDistribution mu;  // D only

  friend bool operator==(const ReprLabel&, const ReprLabel&) = default;
};

struct ThomaCheck {
  bool ok = true;
  std::vector<Rational> offending;  // atoms whose nu is not a positive integer
};
ThomaCheck is_thoma_measure(const ThomaMeasure& mu);

enum class Condition { none, measure, parity, support, size, inequality };
std::string to_string(Condition c);

struct Verdict {
  bool admissible = true;
  Condition failed = Condition::none;
  std::string reason;
};

/// Checks in order: measure validity, parity of nu at negative atoms (E/O),
/// support, sizes, pointwise inequalities. Throws std::invalid_argument for a
/// malformed label (bad measure, total mass != 1, negative depth, M given
/// for E/O).
Verdict classify(const ReprLabel& label);

enum class BoundaryKind { altD, symE };
/// altD: |x|(nu - l1 - l2)/((l1+1)(l2+1)); symE: 2|x|(nu - 2 l1)/((l1+1)(l1+2)).
Rational boundary_values(BoundaryKind kind, const Rational& x, const Rational& nu, int l1, int l2 = 0);

struct MixtureSpec {
  std::vector<std::pair<ReprLabel, Rational>> components;
};

struct MixtureResult {
  ReprLabel label;
  bool irreducible = true;
};

/// Throws std::invalid_argument when weights are not positive with sum 1 or
/// the pair tags cannot be mixed (D only with D; E and O freely).
MixtureResult mixture(const MixtureSpec& spec);

struct MixtureCheck {
  bool moments_ok = true;
  bool series_ok = true;
  bool ok() const { return moments_ok && series_ok; }
};
/// c_k(mix) = sum p_i^k c_k(i) for k <= N and H_mix(t) = prod H_i(p_i t) to order N.
MixtureCheck mixture_moment_check(const MixtureSpec& spec, int N);

/// dim V_Lambda = |Lambda|!/prod |Lambda(x)|! * prod dim_syt(Lambda(x)).
Integer dim_induced(const YoungDistribution& d);
/// dim V_Lambda, times dim V_M for D.
Integer dim_root(const ReprLabel& label);
Integer mixture_dim(int d1, const Integer& m1, int d2, const Integer& m2);

/// Rows floor(alpha_i n), columns floor(beta_j n), the rest as a near-square
/// block; parts merged and sorted. Throws std::invalid_argument when n is
/// smaller than the number of parameters.
Partition ergodic_shape(const ThomaParams& p, int n);

struct ErgodicPoint {
  int n;
  Partition shape;
  Rational chi;        // normalized character on a k-cycle
  Rational deviation;  // |chi - c_k|
};
std::vector<ErgodicPoint> ergodic_converge(const ThomaParams& p, int k, const std::vector<int>& ns,
                                           Exec exec = Exec::parallel);

struct GramDiagnostic {
  double min_eigenvalue = 0;
  double norm = 0;  // Frobenius norm
  bool positive_semidefinite = true;
};
/// Floating-point check of [phi(g_i g_j^{-1})]; eigenvalues down to
/// -1e-9 * norm count as nonnegative.
GramDiagnostic gram_diagnostic(const std::vector<Permutation>& elements,
                               const std::function<Rational(const Permutation&)>& phi);

}  // namespace infsym
