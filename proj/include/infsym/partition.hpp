#pragma once

// Integer partitions, finite-support permutations of Z and Young
// distributions: the vocabulary shared by every other module.

#include "infsym/rational.hpp"

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace infsym {

/// Weakly decreasing list of positive parts. The empty list is the empty
/// partition and is a perfectly ordinary value.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless the parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts and drops zero parts; negative parts are rejected.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// i-th part, 0-based; zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Multiplicity of parts equal to `k`.
  int multiplicity(int k) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  /// "(3,1)"; the empty partition prints as "()".
  std::string str() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition conjugate(const Partition& lambda);

struct ZAndLength {
  Integer z;
  int length;
};

/// z = prod_i i^{m_i} m_i!, and the number of parts.
ZAndLength z_and_length(const Partition& lambda);
inline Integer z_lambda(const Partition& lambda) { return z_and_length(lambda).z; }

/// Number of standard Young tableaux (hook-length formula).
Integer dim_syt(const Partition& lambda);

enum class CoverDirection { up, down };

/// Diagrams obtained by adding (up) or removing (down) one box, in
/// decreasing lexicographic order.
std::vector<Partition> covers(const Partition& lambda, CoverDirection dir);

/// All partitions of n in decreasing lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

/// Union of the part multisets.
Partition union_parts(const Partition& a, const Partition& b);

/// Parts >= 2 only (the non-trivial cycle lengths).
Partition nontrivial_parts(const Partition& rho);

/// Pads with parts equal to 1 up to size n.
Partition with_fixed_points(const Partition& rho, int n);

/// Hook length of the box in row r, column c (0-based).
int hook_length(const Partition& lambda, int r, int c);

/// Bijection of a finite subset of Z; every other point is fixed.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection of its
  /// key set.
  static Permutation from_map(const std::map<int, int>& images);
  /// Cycles listed as sequences i -> next; cycles must be disjoint.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int a, int b);

  int operator()(int i) const;
  Permutation inverse() const;

  /// Composition: (g * h)(i) = g(h(i)).
  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Points actually moved, ascending.
  std::vector<int> support() const;
  const std::map<int, int>& moved() const { return moved_; }

  /// Cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const;

  /// g(0) = 0.
  bool member_of_GE() const;
  /// g(0) = 0 and g maps the positive integers onto themselves.
  bool member_of_GD() const;
  /// g(-i) = -g(i) for all i.
  bool member_of_K() const;

  std::string str() const;

 private:
  std::map<int, int> moved_;  // only points with g(i) != i
};

struct CycleType {
  Partition full;        // includes fixed points of the ambient set
  Partition nontrivial;  // [sigma]: lengths >= 2 only
};

/// Cycle type inside S(n) acting on {1..n}. Throws std::invalid_argument when
/// the support leaves the ambient set.
CycleType cycle_type(const Permutation& g, int n);
/// Cycle type on an arbitrary finite ambient set.
CycleType cycle_type(const Permutation& g, std::span<const int> ambient);

/// Finitely supported map from rational points of [-1,1] to non-empty
/// partitions. Points compare exactly.
class YoungDistribution {
 public:
  YoungDistribution() = default;

  /// Setting an empty shape removes the point. Throws std::invalid_argument
  /// for points outside [-1,1].
  void set(const Rational& x, const Partition& shape);
  /// Merges `shape` into whatever already sits at x (part-multiset union).
  void add(const Rational& x, const Partition& shape);

  /// Shape at x, or the empty partition.
  Partition at(const Rational& x) const;

  const std::map<Rational, Partition>& entries() const { return entries_; }
  std::vector<Rational> support() const;
  bool empty() const { return entries_.empty(); }

  /// Total number of boxes |Lambda|.
  int size() const;

  /// Entry at y moves to p*y; shapes landing on one point are merged.
  /// Requires 0 < p <= 1.
  YoungDistribution scaled(const Rational& p) const;

  /// Pointwise union of part multisets.
  YoungDistribution merged(const YoungDistribution& other) const;

  /// Sorted sizes |Lambda(x)|.
  Partition rho() const;

  friend bool operator==(const YoungDistribution&, const YoungDistribution&) = default;

 private:
  std::map<Rational, Partition> entries_;
};

}  // namespace infsym
