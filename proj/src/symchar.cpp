#include "infsym/symchar.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace infsym {

ClassFunction::ClassFunction(int n) : n_(n) {
  for (const auto& rho : partitions_of(n)) values_[rho] = 0;
}

ClassFunction::ClassFunction(int n, const std::function<Rational(const Partition&)>& values) : n_(n) {
  for (const auto& rho : partitions_of(n)) values_[rho] = values(rho);
}

const Rational& ClassFunction::at(const Partition& rho) const {
  auto it = values_.find(rho);
  if (it == values_.end()) throw std::invalid_argument("class " + rho.str() + " is not a class of S(" + std::to_string(n_) + ")");
  return it->second;
}

void ClassFunction::set(const Partition& rho, const Rational& value) {
  if (rho.size() != n_) throw std::invalid_argument("class size mismatch");
  values_[rho] = value;
}

namespace {

void require_same_size(const Partition& a, const Partition& b, const char* what) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(what) + ": size mismatch " + a.str() + " vs " + b.str());
}

// Cycles grouped by length: the DP assigns all cycles of one length at a
// time. Cycles are distinguishable, so placing j of the m cycles of length
// L into a block contributes a binomial factor.
Integer eta_dp(const std::vector<std::pair<int, int>>& groups, std::size_t g,
               std::vector<int>& capacity, std::map<std::pair<std::size_t, std::vector<int>>, Integer>& memo) {
  if (g == groups.size()) {
    for (int c : capacity)
      if (c != 0) return 0;
    return 1;
  }
  auto key = std::make_pair(g, capacity);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const auto [len, count] = groups[g];
  Integer total = 0;
  // Distribute `count` labelled cycles among the blocks, block by block.
  std::function<void(std::size_t, int, Integer)> place = [&](std::size_t b, int left, Integer ways) {
    if (b == capacity.size()) {
      if (left == 0) total += ways * eta_dp(groups, g + 1, capacity, memo);
      return;
    }
    int max_here = std::min(left, capacity[b] / len);
    for (int j = 0; j <= max_here; ++j) {
      capacity[b] -= j * len;
      place(b + 1, left - j, ways * binomial(static_cast<unsigned>(left), static_cast<unsigned>(j)));
      capacity[b] += j * len;
    }
  };
  place(0, count, 1);
  memo.emplace(std::move(key), total);
  return total;
}

// Beta-set (first-column hook lengths) of a shape padded to `len` rows.
std::vector<int> beta_set(const Partition& lambda, int len) {
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int p = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

}  // namespace

Integer eta_character(const Partition& mu, const Partition& rho) {
  require_same_size(mu, rho, "eta_character");
  std::vector<std::pair<int, int>> groups;
  for (std::size_t i = 0; i < rho.parts().size();) {
    std::size_t j = i;
    while (j < rho.parts().size() && rho.parts()[j] == rho.parts()[i]) ++j;
    groups.emplace_back(rho.parts()[i], static_cast<int>(j - i));
    i = j;
  }
  std::vector<int> capacity = mu.parts();
  std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
  return eta_dp(groups, 0, capacity, memo);
}

std::vector<RimHook> rim_hooks(const Partition& lambda, int k) {
  std::vector<RimHook> out;
  if (k <= 0) return out;
  int len = lambda.length();
  std::vector<int> beta = beta_set(lambda, len);
  for (int i = 0; i < len; ++i) {
    int b = beta[static_cast<std::size_t>(i)];
    int target = b - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int x : beta)
      if (x > target && x < b) ++height;
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = target;
    out.push_back({from_beta_set(std::move(moved)), height});
  }
  return out;
}

namespace {

// Non-unit cycles are stripped first; once only fixed points remain the
// value is the number of standard tableaux of what is left.
Integer mn_rec(const Partition& shape, const std::vector<int>& cycles, std::size_t idx,
               std::map<std::pair<Partition, std::size_t>, Integer>& memo) {
  if (idx == cycles.size() || cycles[idx] == 1) return dim_syt(shape);
  auto key = std::make_pair(shape, idx);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Integer total = 0;
  for (const auto& hook : rim_hooks(shape, cycles[idx])) {
    Integer v = mn_rec(hook.rest, cycles, idx + 1, memo);
    if (hook.height % 2) total -= v;
    else total += v;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& rho) {
  require_same_size(lambda, rho, "mn_character");
  std::map<std::pair<Partition, std::size_t>, Integer> memo;
  return mn_rec(lambda, rho.parts(), 0, memo);
}

Integer frobenius_character(const Partition& lambda, const Partition& rho) {
  require_same_size(lambda, rho, "frobenius_character");
  const int r = lambda.length();
  std::vector<int> w(static_cast<std::size_t>(r));
  std::iota(w.begin(), w.end(), 0);
  Integer total = 0;
  do {
    // sign of w via inversion count
    int inversions = 0;
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        if (w[static_cast<std::size_t>(a)] > w[static_cast<std::size_t>(b)]) ++inversions;
    std::vector<int> composition;
    bool negative = false;
    for (int i = 0; i < r; ++i) {
      int part = lambda[static_cast<std::size_t>(i)] - i + w[static_cast<std::size_t>(i)];
      if (part < 0) {
        negative = true;
        break;
      }
      composition.push_back(part);
    }
    if (negative) continue;
    Integer term = eta_character(Partition::from_unsorted(composition), rho);
    if (inversions % 2) total -= term;
    else total += term;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.n() != g.n()) throw std::invalid_argument("inner_product: class functions on different S(n)");
  Rational sum = 0;
  for (const auto& [rho, fv] : f.values()) sum += fv * g.at(rho) / Rational(z_lambda(rho));
  return sum;
}

ClassFunction irreducible_character(const Partition& lambda) {
  return ClassFunction(lambda.size(), [&](const Partition& rho) { return Rational(mn_character(lambda, rho)); });
}

ClassFunction eta_function(const Partition& mu) {
  return ClassFunction(mu.size(), [&](const Partition& rho) { return Rational(eta_character(mu, rho)); });
}

Rational normalized_cycle_char(const Partition& lambda, int k) {
  if (k < 2 || k > lambda.size())
    throw std::invalid_argument("normalized_cycle_char: cycle length " + std::to_string(k) + " out of range");
  Integer sum = 0;
  for (const auto& hook : rim_hooks(lambda, k)) {
    Integer d = dim_syt(hook.rest);
    if (hook.height % 2) sum -= d;
    else sum += d;
  }
  Rational q(sum, dim_syt(lambda));
  q.canonicalize();
  return q;
}

CharacterTable character_table(int n, Exec exec) {
  CharacterTable t;
  t.n = n;
  t.shapes = partitions_of(n);
  t.classes = t.shapes;
  const auto rows = static_cast<std::ptrdiff_t>(t.shapes.size());
  t.values.assign(t.shapes.size(), std::vector<Integer>(t.classes.size()));
  auto fill_row = [&](std::ptrdiff_t i) {
    auto& row = t.values[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < t.classes.size(); ++j)
      row[j] = mn_character(t.shapes[static_cast<std::size_t>(i)], t.classes[j]);
  };
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < rows; ++i) fill_row(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < rows; ++i) fill_row(i);
  }
  return t;
}

}  // namespace infsym
