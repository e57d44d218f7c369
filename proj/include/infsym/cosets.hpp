#pragma once

// Double cosets K\G/K for G = S(2n) acting on {+-1..+-n} and K its
// hyperoctahedral subgroup (permutations commuting with i -> -i).

#include "infsym/parallel.hpp"
#include "infsym/partition.hpp"
#include "infsym/thoma.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace infsym {

/// Join of {i,-i} with {g(i),g(-i)}; lambda = half the block sizes. Throws
/// std::invalid_argument if g moves 0 or leaves {+-1..+-n}.
Partition coset_type(const Permutation& g, int n);

/// Number of elements of the double coset of type lambda: 2^{2n-l} (n!)^2 / z.
Integer coset_size(const Partition& lambda, int n);

/// Coefficients of sum over g of t^{l(g)}; index = power of t.
std::vector<Integer> coset_poly(int n);

/// Exhaustive tally of coset types over all (2n)! elements. n <= 4, or 5 when
/// allow_large is set; anything larger throws std::invalid_argument.
std::map<Partition, std::uint64_t> census(int n, Exec exec = Exec::parallel, bool allow_large = false);

/// prod over parts k of coset_type(g) of c_k(mu).
Rational spherical_value_E(const ThomaMeasure& mu, const Permutation& g, int n);

struct Theorem4Sum {
  Rational closed;
  std::optional<Rational> brute;
};
/// closed = n! 2^n prod_{j<n} (1 + 2 j x); brute = sum_g x^{n - l(g)} by
/// enumeration when n <= brute_limit (at most 4).
Theorem4Sum theorem4_sum(const Rational& x, int n, int brute_limit = 3);

}  // namespace infsym
