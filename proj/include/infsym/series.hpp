#pragma once

// Truncated formal power series over Q at a fixed order.

#include "infsym/rational.hpp"

#include <vector>

namespace infsym {

class PowerSeries {
 public:
  /// Zero series of the given truncation order (order+1 coefficients).
  explicit PowerSeries(int order = 0);
  /// Coefficients a_0..a_order; order = coeffs.size() - 1.
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries one(int order);
  /// 1 / (1 - a t)
  static PowerSeries geometric(const Rational& a, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  Rational& operator[](std::size_t k) { return coeffs_.at(k); }

  /// Drops coefficients above `order` (or pads with zeros).
  PowerSeries truncated(int order) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& c, const PowerSeries& a);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  /// Throws std::domain_error when the constant term is zero.
  PowerSeries reciprocal() const;
  /// Derivative; the top coefficient is lost, so order drops by one.
  PowerSeries derivative() const;
  /// f(c t).
  PowerSeries scaled_argument(const Rational& c) const;
  /// exp(f); requires f(0) = 0.
  PowerSeries exp() const;
  /// log(f); requires f(0) = 1.
  PowerSeries log() const;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace infsym
