#include "infsym/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace infsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
    throw std::invalid_argument("negative part");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  if (lambda.empty()) return {};
  cols.reserve(lambda[0]);
  for (int c = 0; c < lambda[0]; ++c) {
    int len = 0;
    while (len < lambda.length() && lambda[len] > c) ++len;
    cols.push_back(len);
  }
  return Partition(std::move(cols));
}

ZAndLength z_and_length(const Partition& lambda) {
  Integer z = 1;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    unsigned m = static_cast<unsigned>(j - i);
    Integer ipow;
    mpz_ui_pow_ui(ipow.get_mpz_t(), static_cast<unsigned long>(p[i]), m);
    z *= ipow * factorial(m);
    i = j;
  }
  return {z, lambda.length()};
}

int hook_length(const Partition& lambda, int r, int c) {
  int arm = lambda[r] - c - 1;
  int leg = 0;
  while (r + leg + 1 < lambda.length() && lambda[r + leg + 1] > c) ++leg;
  return arm + leg + 1;
}

Integer dim_syt(const Partition& lambda) {
  Integer hooks = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c) hooks *= hook_length(lambda, r, c);
  return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

std::vector<Partition> covers(const Partition& lambda, CoverDirection dir) {
  std::vector<Partition> out;
  const auto& p = lambda.parts();
  if (dir == CoverDirection::down) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i + 1 < p.size() && p[i + 1] == p[i]) continue;  // not a corner
      std::vector<int> q = p;
      if (--q[i] == 0) q.pop_back();
      out.emplace_back(std::move(q));
    }
  } else {
    for (std::size_t i = 0; i <= p.size(); ++i) {
      std::vector<int> q = p;
      if (i == q.size()) {
        q.push_back(1);
      } else {
        ++q[i];
      }
      if (i > 0 && q[i] > q[i - 1]) continue;
      out.emplace_back(std::move(q));
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Partition union_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

Partition nontrivial_parts(const Partition& rho) {
  std::vector<int> parts;
  for (int p : rho.parts())
    if (p >= 2) parts.push_back(p);
  return Partition(std::move(parts));
}

Partition with_fixed_points(const Partition& rho, int n) {
  if (rho.size() > n) throw std::invalid_argument("with_fixed_points: partition larger than n");
  std::vector<int> parts = rho.parts();
  parts.insert(parts.end(), static_cast<std::size_t>(n - rho.size()), 1);
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------

Permutation Permutation::from_map(const std::map<int, int>& images) {
  std::set<int> targets;
  for (auto [i, gi] : images) targets.insert(gi);
  if (targets.size() != images.size())
    throw std::invalid_argument("permutation map is not injective");
  for (int t : targets)
    if (!images.contains(t)) throw std::invalid_argument("permutation map does not close on its domain");
  Permutation g;
  for (auto [i, gi] : images)
    if (i != gi) g.moved_[i] = gi;
  return g;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles) {
  std::map<int, int> images;
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (images.contains(cyc[k])) throw std::invalid_argument("cycles are not disjoint");
      images[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
  }
  return from_map(images);
}

Permutation Permutation::transposition(int a, int b) {
  if (a == b) return {};
  return from_map({{a, b}, {b, a}});
}

int Permutation::operator()(int i) const {
  auto it = moved_.find(i);
  return it == moved_.end() ? i : it->second;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  for (auto [i, gi] : moved_) inv.moved_[gi] = i;
  return inv;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  std::set<int> pts;
  for (auto [i, _] : g.moved_) pts.insert(i);
  for (auto [i, _] : h.moved_) pts.insert(i);
  Permutation gh;
  for (int i : pts) {
    int v = g(h(i));
    if (v != i) gh.moved_[i] = v;
  }
  return gh;
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  for (auto [i, _] : moved_) s.push_back(i);
  return s;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::set<int> seen;
  for (auto [start, _] : moved_) {
    if (seen.contains(start)) continue;
    std::vector<int> cyc;
    for (int i = start; !seen.contains(i); i = (*this)(i)) {
      seen.insert(i);
      cyc.push_back(i);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

bool Permutation::member_of_GE() const { return (*this)(0) == 0; }

bool Permutation::member_of_GD() const {
  if (!member_of_GE()) return false;
  for (auto [i, gi] : moved_)
    if ((i > 0) != (gi > 0)) return false;
  return true;
}

bool Permutation::member_of_K() const {
  for (auto [i, gi] : moved_)
    if ((*this)(-i) != -gi) return false;
  return true;
}

std::string Permutation::str() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
    os << ')';
  }
  return os.str();
}

CycleType cycle_type(const Permutation& g, std::span<const int> ambient) {
  std::set<int> amb(ambient.begin(), ambient.end());
  for (int i : g.support())
    if (!amb.contains(i)) throw std::invalid_argument("permutation support leaves the ambient set");
  std::vector<int> lengths;
  int moved = 0;
  for (const auto& c : g.cycles()) {
    lengths.push_back(static_cast<int>(c.size()));
    moved += static_cast<int>(c.size());
  }
  Partition nontrivial = Partition::from_unsorted(lengths);
  lengths.insert(lengths.end(), amb.size() - static_cast<std::size_t>(moved), 1);
  return {Partition::from_unsorted(std::move(lengths)), nontrivial};
}

CycleType cycle_type(const Permutation& g, int n) {
  std::vector<int> amb(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(amb.begin(), amb.end(), 1);
  return cycle_type(g, amb);
}

// ---------------------------------------------------------------------------

void YoungDistribution::set(const Rational& x, const Partition& shape) {
  if (x < -1 || x > 1) throw std::invalid_argument("Young distribution point outside [-1,1]");
  if (shape.empty()) {
    entries_.erase(x);
  } else {
    entries_[x] = shape;
  }
}

void YoungDistribution::add(const Rational& x, const Partition& shape) {
  set(x, union_parts(at(x), shape));
}

Partition YoungDistribution::at(const Rational& x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? Partition{} : it->second;
}

std::vector<Rational> YoungDistribution::support() const {
  std::vector<Rational> s;
  for (const auto& [x, _] : entries_) s.push_back(x);
  return s;
}

int YoungDistribution::size() const {
  int n = 0;
  for (const auto& [_, shape] : entries_) n += shape.size();
  return n;
}

YoungDistribution YoungDistribution::scaled(const Rational& p) const {
  if (p <= 0 || p > 1) throw std::invalid_argument("scale factor must lie in (0,1]");
  YoungDistribution out;
  for (const auto& [y, shape] : entries_) out.add(p * y, shape);
  return out;
}

YoungDistribution YoungDistribution::merged(const YoungDistribution& other) const {
  YoungDistribution out = *this;
  for (const auto& [x, shape] : other.entries_) out.add(x, shape);
  return out;
}

Partition YoungDistribution::rho() const {
  std::vector<int> sizes;
  for (const auto& [_, shape] : entries_) sizes.push_back(shape.size());
  return Partition::from_unsorted(std::move(sizes));
}

}  // namespace infsym
