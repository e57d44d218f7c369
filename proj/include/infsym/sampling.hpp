#pragma once

// Seeded generators for randomized checks.

#include "infsym/classify.hpp"
#include "infsym/partition.hpp"
#include "infsym/thoma.hpp"

#include <random>

namespace infsym {

using Rng = std::mt19937_64;

/// Uniform rational p/q with 1 <= q <= max_den and lo <= p/q <= hi.
Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, int max_den = 12);

/// Up to three alphas and three betas with small denominators; gamma is the
/// (nonnegative) deficit.
ThomaParams random_params(Rng& rng);

/// Random partition of n (uniform over a random walk of part choices, not
/// uniform over partitions).
Partition random_partition(Rng& rng, int n);

/// Valid Thoma measure: one to three atoms with integral nu, rest at 0.
ThomaMeasure random_thoma_measure(Rng& rng);

/// 1, 2 or 3 components with E/O labels on random valid measures, weights
/// summing to 1.
MixtureSpec random_mixture(Rng& rng, int components);

}  // namespace infsym
