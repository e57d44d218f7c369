#pragma once

// Finite-window wiring diagrams: perfect matchings of two copies of the index
// set, each pair carrying a length, plus a multiset of closed loops. Loops
// of length exactly 1 are deleted on construction.

#include "infsym/parallel.hpp"
#include "infsym/partition.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace infsym {

enum class Side { top, bottom };

struct Endpoint {
  Side side;
  int index;

  /// "T+1", "B-2", "T0".
  std::string label() const;
  static Endpoint parse(const std::string& label);
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Strand {
  Endpoint a, b;  // a < b
  Rational length;
  friend bool operator==(const Strand&, const Strand&) = default;
};

class WiringDiagram {
 public:
  /// Identity on {+-1..+-N}, plus index 0 when `odd`.
  static WiringDiagram identity(int window, bool odd = false);
  /// Throws std::invalid_argument unless the strands form a perfect matching
  /// of the boundary and all lengths are nonnegative.
  static WiringDiagram from_strands(int window, bool odd, const std::vector<Strand>& strands,
                                    std::vector<Rational> loops = {});

  int window() const { return window_; }
  bool odd() const { return odd_; }
  /// Sorted by first endpoint.
  std::vector<Strand> strands() const;
  /// Sorted, never containing 1.
  const std::vector<Rational>& loops() const { return loops_; }

  WiringDiagram star() const;
  /// Glues the bottom of `a` to the top of `b`. Throws std::invalid_argument
  /// when the windows differ.
  friend WiringDiagram operator*(const WiringDiagram& a, const WiringDiagram& b);
  friend bool operator==(const WiringDiagram&, const WiringDiagram&) = default;

  /// Adds a loop (dropped when its length is 1).
  void add_loop(const Rational& length);

 private:
  WiringDiagram(int window, bool odd);
  int slots() const { return 2 * window_ + (odd_ ? 1 : 0); }
  int id(Endpoint e) const;
  Endpoint endpoint(int id) const;
  void connect(int p, int q, const Rational& length);

  int window_ = 0;
  bool odd_ = false;
  std::vector<int> partner_;
  std::vector<Rational> length_;
  std::vector<Rational> loops_;
};

/// Strands top s -- bottom g^{-1}(s) of length 0, so perm(g)perm(h) = perm(gh).
WiringDiagram perm_diagram(const Permutation& g, int window, bool odd = false);
/// Identity with strand i of length 1.
WiringDiagram a_diagram(int i, int window, bool odd = false);
/// Identity with one loop.
WiringDiagram c_diagram(const Rational& length, int window, bool odd = false);
/// Vertical strands for |i| <= n, arcs of length 1/2 joining i and -i on each
/// side for n < |i| <= window. Requires 0 <= n < window.
WiringDiagram p_diagram(int n, int window, bool odd = false);

/// Uniform random matching with lengths in {0,1/2,1,3/2,2} and up to two loops.
WiringDiagram random_diagram(int window, bool odd, std::mt19937_64& rng);

struct RelationReport {
  int window = 0;
  bool odd = false;
  bool exhaustive_conjugation = true;  // every g of the window, or generators only
  std::map<std::string, std::uint64_t> checked;  // relation -> instance count
  std::vector<std::string> failures;             // sorted descriptions
  bool ok() const { return failures.empty(); }
};

/// Instantiates the seven defining identities over every legal index tuple
/// in the window. Conjugation g A_i g^-1 = A_g(i) runs over every g when the
/// index set has at most 8 points, otherwise over adjacent transpositions
/// (the identity is multiplicative in g). Requires window >= 3.
RelationReport verify_relations(int window, bool odd = false, Exec exec = Exec::parallel);

}  // namespace infsym
