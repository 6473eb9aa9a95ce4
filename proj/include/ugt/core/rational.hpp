#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <string>
#include <string_view>

#include "ugt/core/errors.hpp"

namespace ugt {

using rational = mpq_class;

// Accepts "p", "p/q", and plain decimals such as "-0.375" or "2.5e-3".
// Decimals are converted exactly; no floating point is involved.
inline rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&]() -> rational { throw invalid_argument("not a rational: '" + s + "'"); };
  if (s.empty()) return fail();

  if (s.find('/') != std::string::npos) {
    auto slash = s.find('/');
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    auto integral = [](const std::string& t, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
      return true;
    };
    if (!integral(num, true) || !integral(den, false)) return fail();
    if (num[0] == '+') num.erase(0, 1);
    mpz_class p(num, 10), q(den, 10);
    if (q == 0) throw invalid_argument("zero denominator in '" + s + "'");
    rational r(p, q);
    r.canonicalize();
    return r;
  }

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '-' || s[i] == '+') negative = s[i++] == '-';
  std::string digits;
  long exponent = 0;
  bool any = false, dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (dot) --exponent;
      any = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!any) return fail();
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') return fail();
    ++i;
    std::string e = s.substr(i);
    if (e.empty()) return fail();
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(e, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != e.size() || value > 4096 || value < -4096) return fail();
    exponent += value;
  }
  mpz_class mant(digits, 10);
  if (negative) mant = -mant;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  rational r = exponent >= 0 ? rational(mant * scale) : rational(mant, scale);
  r.canonicalize();
  return r;
}

// Lowest terms; integers print without a denominator.
inline std::string to_string(const rational& r) {
  rational c(r);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline double to_double(const rational& r) { return r.get_d(); }

inline long double to_long_double(const rational& r) {
  // mpq_get_d truncates to double; refine with the residual for extra bits.
  double head = r.get_d();
  rational rest = r - rational(head);
  return static_cast<long double>(head) + static_cast<long double>(rest.get_d());
}

// Nearest rational with denominator at most max_den (continued fractions).
inline rational rationalize(long double x, unsigned long max_den = 1000000000UL) {
  if (!std::isfinite(static_cast<double>(x))) throw invalid_argument("cannot rationalize non-finite value");
  bool negative = x < 0;
  if (negative) x = -x;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  long double v = x;
  for (int iter = 0; iter < 64; ++iter) {
    long double a_ld = std::floor(v);
    mpz_class a(static_cast<double>(a_ld));
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    long double frac = v - a_ld;
    if (frac < 1e-18L) break;
    v = 1.0L / frac;
  }
  if (q1 == 0) return rational(0);
  rational r(negative ? mpz_class(-p1) : p1, q1);
  r.canonicalize();
  return r;
}

}  // namespace ugt
