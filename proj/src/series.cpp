#include "infsym/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace infsym {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("power series needs at least one coefficient");
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

PowerSeries PowerSeries::geometric(const Rational& a, int order) {
  PowerSeries s(order);
  Rational p = 1;
  for (auto& c : s.coeffs_) {
    c = p;
    p *= a;
  }
  return s;
}

PowerSeries PowerSeries::truncated(int order) const {
  PowerSeries s(order);
  std::size_t n = std::min(s.coeffs_.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), n, s.coeffs_.begin());
  return s;
}

namespace {
int common_order(const PowerSeries& a, const PowerSeries& b) { return std::min(a.order(), b.order()); }
}  // namespace

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries s(common_order(a, b));
  for (std::size_t k = 0; k < s.coeffs_.size(); ++k) s.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return s;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries s(common_order(a, b));
  for (std::size_t k = 0; k < s.coeffs_.size(); ++k) s.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return s;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries s(common_order(a, b));
  const std::size_t n = s.coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return s;
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
  PowerSeries s = a;
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

PowerSeries PowerSeries::reciprocal() const {
  if (coeffs_[0] == 0) throw std::domain_error("reciprocal of a series with zero constant term");
  PowerSeries r(order());
  Rational inv = 1 / coeffs_[0];
  r.coeffs_[0] = inv;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
    r.coeffs_[k] = -acc * inv;
  }
  return r;
}

PowerSeries PowerSeries::derivative() const {
  if (order() == 0) return PowerSeries(0);
  PowerSeries d(order() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.coeffs_[k - 1] = coeffs_[k] * static_cast<long>(k);
  return d;
}

PowerSeries PowerSeries::scaled_argument(const Rational& c) const {
  PowerSeries s = *this;
  Rational p = 1;
  for (auto& x : s.coeffs_) {
    x *= p;
    p *= c;
  }
  return s;
}

// g = exp(f) satisfies g' = f' g, i.e. k g_k = sum_j j f_j g_{k-j}.
PowerSeries PowerSeries::exp() const {
  if (coeffs_[0] != 0) throw std::domain_error("exp needs a zero constant term");
  PowerSeries g(order());
  g.coeffs_[0] = 1;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j)
      if (coeffs_[j] != 0) acc += coeffs_[j] * static_cast<long>(j) * g.coeffs_[k - j];
    g.coeffs_[k] = acc / static_cast<long>(k);
  }
  return g;
}

PowerSeries PowerSeries::log() const {
  if (coeffs_[0] != 1) throw std::domain_error("log needs constant term 1");
  PowerSeries q = derivative() * reciprocal().truncated(order() - 1 < 0 ? 0 : order() - 1);
  PowerSeries l(order());
  for (std::size_t k = 1; k < coeffs_.size(); ++k) l.coeffs_[k] = q.coeffs_[k - 1] / static_cast<long>(k);
  return l;
}

}  // namespace infsym
