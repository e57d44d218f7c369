#include "infsym/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace infsym {

Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, int max_den) {
  if (lo > hi) throw std::invalid_argument("random_rational: empty range");
  std::uniform_int_distribution<int> den_dist(1, max_den);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int q = den_dist(rng);
    Rational a = lo * q, b = hi * q;
    Integer first, last;
    mpz_cdiv_q(first.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_fdiv_q(last.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    if (first > last) continue;
    std::uniform_int_distribution<long> num_dist(first.get_si(), last.get_si());
    Rational r(num_dist(rng), q);
    r.canonicalize();
    return r;
  }
  return lo;
}

ThomaParams random_params(Rng& rng) {
  std::uniform_int_distribution<int> count(0, 3);
  Rational budget = 1;
  auto draw = [&](int n) {
    std::vector<Rational> v;
    for (int i = 0; i < n && budget >= Rational(1, 12); ++i) {
      Rational x = random_rational(rng, Rational(1, 12), budget, 12);
      v.push_back(x);
      budget -= x;
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  };
  std::vector<Rational> alpha = draw(count(rng));
  std::vector<Rational> beta = draw(count(rng));
  return ThomaParams::from_alpha_beta(std::move(alpha), std::move(beta));
}

Partition random_partition(Rng& rng, int n) {
  std::vector<int> parts;
  int left = n;
  while (left > 0) {
    std::uniform_int_distribution<int> d(1, left);
    int p = d(rng);
    parts.push_back(p);
    left -= p;
  }
  return Partition::from_unsorted(std::move(parts));
}

ThomaMeasure random_thoma_measure(Rng& rng) {
  static const int dens[] = {2, 3, 4, 5, 6, 8, 10};
  std::uniform_int_distribution<int> count(1, 3), pick(0, 6), sign(0, 1);
  ThomaMeasure mu;
  Rational left = 1;
  for (int a = count(rng); a > 0; --a) {
    Rational x(1, dens[pick(rng)]);
    if (sign(rng)) x = -x;
    if (mu.atoms.contains(x)) continue;
    const Rational ax = x < 0 ? Rational(-x) : x;
    const Rational cap = left / ax;
    Integer max_nu;
    mpz_fdiv_q(max_nu.get_mpz_t(), cap.get_num_mpz_t(), cap.get_den_mpz_t());
    if (max_nu < 1) continue;
    std::uniform_int_distribution<long> nu_dist(1, std::min<long>(max_nu.get_si(), 4));
    Rational mass = ax * nu_dist(rng);
    mu.atoms[x] = mass;
    left -= mass;
  }
  mu.zero_mass = left;
  return mu;
}

MixtureSpec random_mixture(Rng& rng, int components) {
  if (components < 1) throw std::invalid_argument("need at least one component");
  MixtureSpec spec;
  Rational left = 1;
  std::uniform_int_distribution<int> tag(0, 1);
  for (int i = 0; i < components; ++i) {
    Rational p = i + 1 == components ? left : random_rational(rng, Rational(1, 6), left - Rational(1, 6) * (components - 1 - i), 6);
    left -= p;
    ReprLabel label;
    label.measure = random_thoma_measure(rng);
    label.pair = tag(rng) ? Pair::E : Pair::O;
    // A single box at 0 for O, nothing for E: the label stays admissible.
    if (label.pair == Pair::O) label.lambda.set(0, Partition{1});
    spec.components.emplace_back(std::move(label), p);
  }
  return spec;
}

}  // namespace infsym
