#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "rsverify/errors.hpp"

namespace rsv {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; values built from strings are canonicalized here.
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational rational_pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw domain_error("zero raised to a negative power");
    Rational inv = 1 / base;
    return rational_pow(inv, -exponent);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  out.canonicalize();
  return out;
}

/// Always "num/den", including integers ("3/1").
inline std::string to_fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw domain_error("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw domain_error("malformed rational literal: " + s);
  if (sgn(r.get_den()) == 0) throw domain_error("zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace rsv
