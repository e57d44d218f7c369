#pragma once

// Exact character theory of the finite symmetric groups S(n).

#include "infsym/parallel.hpp"
#include "infsym/partition.hpp"

#include <functional>
#include <map>
#include <vector>

namespace infsym {

/// Class function on S(n): one exact value per conjugacy class.
class ClassFunction {
 public:
  explicit ClassFunction(int n);
  ClassFunction(int n, const std::function<Rational(const Partition&)>& values);

  int n() const { return n_; }
  const Rational& at(const Partition& rho) const;
  void set(const Partition& rho, const Rational& value);
  const std::map<Partition, Rational>& values() const { return values_; }

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int n_;
  std::map<Partition, Rational> values_;
};

/// Value on class rho of the character induced from the trivial character
/// of the Young subgroup S(mu_1) x S(mu_2) x ...; counts ordered
/// distributions of the cycles of rho into blocks of sizes mu_i.
Integer eta_character(const Partition& mu, const Partition& rho);

/// chi^lambda(rho) by the Murnaghan-Nakayama rule.
Integer mn_character(const Partition& lambda, const Partition& rho);

/// chi^lambda(rho) by expanding det[eta^{lambda_i - i + j}] over S(l).
Integer frobenius_character(const Partition& lambda, const Partition& rho);

/// sum_rho f(rho) g(rho) / z_rho.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

ClassFunction irreducible_character(const Partition& lambda);
ClassFunction eta_function(const Partition& mu);

/// chi^lambda(k-cycle) / dim lambda, via removable k-rim hooks.
Rational normalized_cycle_char(const Partition& lambda, int k);

/// Removable rim hooks of length k: the remaining shape and the hook height
/// (number of rows minus one).
struct RimHook {
  Partition rest;
  int height;
};
std::vector<RimHook> rim_hooks(const Partition& lambda, int k);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> shapes;   // rows
  std::vector<Partition> classes;  // columns
  std::vector<std::vector<Integer>> values;
};

/// Full table of S(n); rows computed in parallel unless exec is serial.
CharacterTable character_table(int n, Exec exec = Exec::parallel);

}  // namespace infsym
