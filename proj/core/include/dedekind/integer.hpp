#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dedekind {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  return c.get_str();
}

// Throws std::invalid_argument on anything other than an optionally signed
// run of decimal digits.
Integer parse_integer(std::string_view text);

// Floor of the square root of a nonnegative integer.
inline Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Floor division (rounds toward negative infinity).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Integer& d, const Integer& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool fits_long(const Integer& v) { return v.fits_slong_p(); }

}  // namespace dedekind
