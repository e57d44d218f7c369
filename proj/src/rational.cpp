#include "infsym/rational.hpp"

#include <stdexcept>

namespace infsym {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  Integer z(std::string(s), 10);
  return neg ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    Integer digits(std::string(whole) + std::string(frac) + (whole.empty() && frac.empty() ? "0" : ""), 10);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational q(neg ? Integer(-digits) : digits, scale);
    q.canonicalize();
    return q;
  }

  return Rational(parse_integer(text));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Rational pow(const Rational& q, unsigned k) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), k);
  return r;
}

namespace {

// Simplest rational in [x, y] for 0 < x <= y.
Rational simplest_positive(const Rational& x, const Rational& y) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (Rational(fl) == x) return x;
  if (Rational(fl + 1) <= y) return Rational(fl + 1);
  Rational inner = simplest_positive(1 / (y - fl), 1 / (x - fl));
  return Rational(fl) + 1 / inner;
}

}  // namespace

Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
  Rational lo = lo_in, hi = hi_in;
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_positive(-hi, -lo);
  return simplest_positive(lo, hi);
}

}  // namespace infsym
