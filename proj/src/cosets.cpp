#include "infsym/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace infsym {

namespace {

struct UnionFind {
  std::vector<int> parent, size;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
  }
};

// Positions 0..n-1 hold +1..+n, positions n..2n-1 hold -1..-n.
int pos_of(int i, int n) { return i > 0 ? i - 1 : n - i - 1; }
int neg_pos(int p, int n) { return p < n ? p + n : p - n; }

Partition type_of_images(const std::vector<int>& img, int n) {
  UnionFind uf(2 * n);
  for (int p = 0; p < n; ++p) {
    uf.unite(p, neg_pos(p, n));
    uf.unite(img[static_cast<std::size_t>(p)], img[static_cast<std::size_t>(neg_pos(p, n))]);
  }
  std::vector<int> halves;
  for (int p = 0; p < 2 * n; ++p)
    if (uf.find(p) == p) halves.push_back(uf.size[static_cast<std::size_t>(p)] / 2);
  return Partition::from_unsorted(std::move(halves));
}

}  // namespace

Partition coset_type(const Permutation& g, int n) {
  if (n < 1) throw std::invalid_argument("coset_type needs n >= 1");
  for (int i : g.support())
    if (i == 0 || i < -n || i > n)
      throw std::invalid_argument("permutation " + g.str() + " is not in the group on +-1..+-" + std::to_string(n));
  std::vector<int> img(static_cast<std::size_t>(2 * n));
  for (int p = 0; p < 2 * n; ++p) {
    int i = p < n ? p + 1 : -(p - n + 1);
    img[static_cast<std::size_t>(p)] = pos_of(g(i), n);
  }
  return type_of_images(img, n);
}

Integer coset_size(const Partition& lambda, int n) {
  if (lambda.size() != n) throw std::invalid_argument("coset_size: |lambda| != n");
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * n - lambda.length()));
  Integer nf = factorial(static_cast<unsigned>(n));
  return two_pow * nf * nf / z_lambda(lambda);
}

std::vector<Integer> coset_poly(int n) {
  if (n < 1) throw std::invalid_argument("coset_poly needs n >= 1");
  std::vector<Integer> poly{1};
  for (int j = 0; j < n; ++j) {
    // multiply by (t + 2j)
    std::vector<Integer> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] += poly[k] * (2 * j);
    }
    poly = std::move(next);
  }
  Integer scale = factorial(static_cast<unsigned>(n));
  scale <<= static_cast<mp_bitcnt_t>(n);
  for (auto& c : poly) c *= scale;
  return poly;
}

std::map<Partition, std::uint64_t> census(int n, Exec exec, bool allow_large) {
  if (n < 1) throw std::invalid_argument("census needs n >= 1");
  if (n > 5 || (n == 5 && !allow_large))
    throw std::invalid_argument("census of n=" + std::to_string(n) + " exceeds the enumeration budget (n <= 4, or 5 with the long-run flag)");
  const int m = 2 * n;
  std::vector<std::map<Partition, std::uint64_t>> shards(static_cast<std::size_t>(m));
  auto run_shard = [&](int first) {
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    std::rotate(img.begin(), img.begin() + first, img.begin() + first + 1);
    auto& tally = shards[static_cast<std::size_t>(first)];
    do {
      ++tally[type_of_images(img, n)];
    } while (std::next_permutation(img.begin() + 1, img.end()));
  };
  if (exec == Exec::serial) {
    for (int f = 0; f < m; ++f) run_shard(f);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int f = 0; f < m; ++f) run_shard(f);
  }
  std::map<Partition, std::uint64_t> total;
  for (const auto& shard : shards)
    for (const auto& [lambda, count] : shard) total[lambda] += count;
  return total;
}

Rational spherical_value_E(const ThomaMeasure& mu, const Permutation& g, int n) {
  Rational v = 1;
  const Partition type = coset_type(g, n);
  for (int k : type.parts()) v *= moment(mu, k);
  return v;
}

Theorem4Sum theorem4_sum(const Rational& x, int n, int brute_limit) {
  if (x == 0 || x < -1 || x > 1) throw std::invalid_argument("theorem4_sum needs x in [-1,1] without 0");
  if (n < 1) throw std::invalid_argument("theorem4_sum needs n >= 1");
  if (brute_limit > 4) throw std::invalid_argument("brute-force sum limited to n <= 4");
  Theorem4Sum r;
  Integer scale = factorial(static_cast<unsigned>(n));
  scale <<= static_cast<mp_bitcnt_t>(n);
  r.closed = Rational(scale);
  for (int j = 1; j < n; ++j) r.closed *= 1 + 2 * j * x;
  if (n <= brute_limit) {
    Rational sum = 0;
    for (const auto& [lambda, count] : census(n)) {
      Rational term = pow(x, static_cast<unsigned>(n - lambda.length()));
      sum += term * Rational(Integer(static_cast<unsigned long>(count)));
    }
    r.brute = sum;
  }
  return r;
}

}  // namespace infsym
