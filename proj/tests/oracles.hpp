#pragma once

// Brute-force references used only by the tests. None of them calls the
// library routine it is meant to check.

#include "infsym/partition.hpp"
#include "infsym/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using infsym::Integer;
using infsym::Partition;
using infsym::Rational;

// Standard tableaux counted by placing 1..n one box at a time.
inline Integer count_syt(const Partition& shape) {
  std::vector<int> target = shape.parts();
  std::vector<int> rows(target.size(), 0);
  std::function<Integer(int)> place = [&](int left) -> Integer {
    if (left == 0) return 1;
    Integer total = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r] == target[r]) continue;
      if (r > 0 && rows[r] == rows[r - 1]) continue;
      ++rows[r];
      total += place(left - 1);
      --rows[r];
    }
    return total;
  };
  return place(shape.size());
}

// A permutation of {0..n-1} with the given cycle type, as an image array.
inline std::vector<int> representative(const Partition& rho) {
  std::vector<int> img(static_cast<std::size_t>(rho.size()));
  int start = 0;
  for (int len : rho.parts()) {
    for (int k = 0; k < len; ++k) img[static_cast<std::size_t>(start + k)] = start + (k + 1) % len;
    start += len;
  }
  return img;
}

// Fixed points of g on S(n)/(S(mu_1) x S(mu_2) x ...): maps from points to
// blocks with block sizes mu that are constant on the orbits of g.
inline Integer eta_by_cosets(const Partition& mu, const Partition& rho) {
  const int n = rho.size();
  const int blocks = mu.length();
  std::vector<int> g = representative(rho);
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  Integer count = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<int> sizes(static_cast<std::size_t>(blocks), 0);
      for (int b : f) ++sizes[static_cast<std::size_t>(b)];
      for (int b = 0; b < blocks; ++b)
        if (sizes[static_cast<std::size_t>(b)] != mu[static_cast<std::size_t>(b)]) return;
      for (int p = 0; p < n; ++p)
        if (f[static_cast<std::size_t>(g[static_cast<std::size_t>(p)])] != f[static_cast<std::size_t>(p)]) return;
      ++count;
      return;
    }
    for (int b = 0; b < blocks; ++b) {
      f[static_cast<std::size_t>(i)] = b;
      rec(i + 1);
    }
  };
  if (n == 0) return 1;
  rec(0);
  return count;
}

// Number of cycles of an image array.
inline int cycle_count(const std::vector<int>& img) {
  std::vector<char> seen(img.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img[j])) seen[j] = 1;
  }
  return cycles;
}

inline int sign_of(const std::vector<int>& img) {
  return (static_cast<int>(img.size()) - cycle_count(img)) % 2 ? -1 : 1;
}

// sum over S(m) of x^{cycles}.
inline Rational stirling_sum(const Rational& x, int m) {
  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 0);
  Rational sum = 0;
  do {
    Rational term = 1;
    for (int c = cycle_count(img); c > 0; --c) term *= x;
    sum += term;
  } while (std::next_permutation(img.begin(), img.end()));
  return sum;
}

// Leibniz expansion.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  Rational det = 0;
  do {
    Rational term = sign_of(img);
    for (int i = 0; i < n; ++i) term *= a[static_cast<std::size_t>(i)][static_cast<std::size_t>(img[static_cast<std::size_t>(i)])];
    det += term;
  } while (std::next_permutation(img.begin(), img.end()));
  return det;
}

// Double cosets K g K of S(2n) on positions 0..2n-1 where position p pairs
// with p^1; K = permutations preserving the pairing. Returns the sizes of the
// double cosets, found by closing orbits under left and right K-action.
inline std::vector<std::size_t> double_coset_sizes(int n) {
  const int m = 2 * n;
  std::vector<std::vector<int>> k_elems;
  {
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    do {
      bool ok = true;
      for (int p = 0; p < m && ok; ++p) ok = (img[static_cast<std::size_t>(p ^ 1)] == (img[static_cast<std::size_t>(p)] ^ 1));
      if (ok) k_elems.push_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
  }
  auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
  };
  std::set<std::vector<int>> unseen;
  {
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    do unseen.insert(img);
    while (std::next_permutation(img.begin(), img.end()));
  }
  std::vector<std::size_t> sizes;
  while (!unseen.empty()) {
    std::vector<int> g = *unseen.begin();
    std::set<std::vector<int>> coset;
    for (const auto& k1 : k_elems)
      for (const auto& k2 : k_elems) coset.insert(compose(k1, compose(g, k2)));
    for (const auto& h : coset) unseen.erase(h);
    sizes.push_back(coset.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace oracle
