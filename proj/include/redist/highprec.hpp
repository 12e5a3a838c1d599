#pragma once

// Conversions between exact rationals and MPFR floats for values that are
// proposed in high precision and then rounded to a fixed number of decimals.

#include <boost/multiprecision/mpfr.hpp>

#include "redist/exactgeo.hpp"

namespace redist {

using BigFloat = boost::multiprecision::mpfr_float;

/// Sets the working precision (decimal digits) for new BigFloat values.
inline void set_working_digits(int digits) { BigFloat::default_precision(static_cast<unsigned>(digits)); }

inline BigFloat to_big(const Rational& q) {
  BigFloat r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

/// Rounds to `digits` decimals, ties away from zero.
inline Rational round_big(const BigFloat& v, int digits) {
  BigFloat scaled = v * boost::multiprecision::pow(BigFloat(10), digits);
  BigFloat r = scaled < 0 ? -boost::multiprecision::floor(-scaled + BigFloat(0.5))
                          : boost::multiprecision::floor(scaled + BigFloat(0.5));
  BigInt n;
  mpfr_get_z(n.get_mpz_t(), r.backend().data(), MPFR_RNDN);
  return make_rational(n, pow10(digits));
}

}  // namespace redist
