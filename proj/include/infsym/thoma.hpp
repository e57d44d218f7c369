#pragma once

// Thoma parameters and measures, moment sequences, H-series, Fourier
// coefficients m(lambda) and the checks built on them.

#include "infsym/parallel.hpp"
#include "infsym/partition.hpp"
#include "infsym/series.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace infsym {

struct ThomaParams {
  std::vector<Rational> alpha;  // weakly decreasing, positive
  std::vector<Rational> beta;   // weakly decreasing, positive
  Rational gamma;               // 1 - sum(alpha) - sum(beta)

  /// Fills gamma from the deficit and validates. Throws std::invalid_argument.
  static ThomaParams from_alpha_beta(std::vector<Rational> alpha, std::vector<Rational> beta);
  /// Throws std::invalid_argument if any invariant fails.
  void validate() const;

  friend bool operator==(const ThomaParams&, const ThomaParams&) = default;
};

/// Discrete measure on [-1,1]: nonzero atoms plus a mass at 0. Integrality
/// of nu(x) = mass(x)/|x| is a predicate, not an invariant.
struct ThomaMeasure {
  std::map<Rational, Rational> atoms;  // x != 0 -> positive mass
  Rational zero_mass;

  /// Throws std::invalid_argument on atoms outside [-1,1], at 0, with
  /// nonpositive mass, or a negative zero mass. Total mass is not checked.
  void validate() const;
  Rational total_mass() const;
  /// mass(x)/|x|, or 0 when x is not an atom.
  Rational nu(const Rational& x) const;

  friend bool operator==(const ThomaMeasure&, const ThomaMeasure&) = default;
};

ThomaMeasure to_measure(const ThomaParams& p);
/// Expands each atom nu(x) times. Throws std::domain_error when some nu(x)
/// is not a positive integer.
ThomaParams to_params(const ThomaMeasure& mu);

/// prod over k in cycles of (sum alpha^k + (-1)^{k-1} sum beta^k).
/// Throws std::invalid_argument for parts < 2.
Rational thoma_char_value(const ThomaParams& p, const Partition& cycles);

/// c_k = integral of t^{k-1}; k >= 1.
Rational moment(const ThomaMeasure& mu, int k);
/// c_1..c_N; element k-1 holds c_k.
std::vector<Rational> moments(const ThomaMeasure& mu, int N);

/// A function on [-1,1] entering a generalized moment: either a polynomial
/// or a table of values at atoms (zero everywhere else, including at 0).
class SpectralFunction {
 public:
  static SpectralFunction polynomial(std::vector<Rational> coeffs);
  static SpectralFunction atom_table(std::map<Rational, Rational> values);
  static SpectralFunction indicator(const Rational& x) { return atom_table({{x, Rational(1)}}); }

  Rational operator()(const Rational& t) const;

 private:
  bool is_table_ = false;
  std::vector<Rational> coeffs_;
  std::map<Rational, Rational> table_;
};

/// prod over orbits p of sigma of the integral of t^{|p|-1} prod_{j in p} f_j.
/// Positions missing from `functions` carry f = 1.
Rational generalized_moment(const ThomaMeasure& mu, const Permutation& sigma,
                            const std::map<int, SpectralFunction>& functions);

/// e^{gamma t} prod (1 + beta t) / prod (1 - alpha t), to order N.
PowerSeries h_from_params(const ThomaParams& p, int N);
/// exp(sum c_i t^i / i); c holds c_1..c_M with M >= N.
PowerSeries h_from_moments(const std::vector<Rational>& c, int N);
/// Coefficients of H'/H: c_1..c_order. Requires H(0) = 1.
std::vector<Rational> c_from_h(const PowerSeries& h);
/// 1 / H(-t).
PowerSeries sign_transform(const PowerSeries& h);

/// det[m(lambda_i - i + j)] with m(k) = 0 for k < 0. Throws
/// std::invalid_argument if mseq is too short.
Rational m_lambda(const std::vector<Rational>& mseq, const Partition& lambda);

struct CoherenceReport {
  bool ok = true;
  std::optional<Partition> failure;
};
/// m(lambda) = sum over Lambda covering lambda of m(Lambda), for |lambda| < nmax.
CoherenceReport coherence_check(const std::vector<Rational>& mseq, int nmax);

/// A function on S(infinity) given by its value on the non-trivial cycle
/// lengths [sigma].
using CycleFunction = std::function<Rational(const Partition& nontrivial)>;

/// <phi|S(n), f> for a class function f of S(n).
Rational pairing(const CycleFunction& phi, int n, const std::function<Rational(const Partition&)>& f);

struct MultiplicativityReport {
  bool ok = true;
  std::optional<std::pair<Partition, Partition>> failure;
  Rational lhs, rhs;
};
/// Checks <phi, eta^mu o eta^nu> = <phi, eta^mu><phi, eta^nu> over mu |- n1,
/// nu |- n2. Requires n1 + n2 <= 6.
MultiplicativityReport multiplicativity_check(const CycleFunction& phi, int n1, int n2);
MultiplicativityReport multiplicativity_check(const ThomaParams& p, int n1, int n2);

enum class PeelStatus {
  geometric,  // 0 < alpha < 1, one factor peeled
  terminal,   // alpha = 1: the sequence is the trivial character
  entire,     // ratios tend to 0: no geometric factor
};

struct EdreiResult {
  PeelStatus status = PeelStatus::geometric;
  Rational alpha;
  bool exact = false;               // alpha known exactly rather than estimated
  std::vector<Rational> peeled;     // m~(0..N)
  Rational residual;                // max |coeff| of H - H~((1-alpha)t)/(1-alpha t)
};

/// Peels the largest geometric factor off m(0..N). With `alpha` given it is
/// used exactly; otherwise it is estimated from the last three ratios and
/// snapped to the simplest rational within tol. Throws std::domain_error if
/// the ratios do not settle or the estimate exceeds 1.
EdreiResult edrei_peel(const std::vector<Rational>& mseq, int N, double tol = 1e-9,
                       std::optional<Rational> alpha = std::nullopt);
/// Exact variant: the m-sequence and alpha_1 come from the parameters.
EdreiResult edrei_peel(const ThomaParams& p, int N);

struct FalsifierResult {
  Rational closed;
  Rational brute;
};
/// closed = |x|^m nu(nu-1)...(nu-m+1)/m!; brute antisymmetrizes the
/// generalized moment of a single atom at x over S(m) (symmetrizes when x<0).
/// Requires x != 0 and 0 <= m <= 9.
FalsifierResult alt_falsifier(const Rational& x, const Rational& nu, int m, Exec exec = Exec::parallel);

}  // namespace infsym
