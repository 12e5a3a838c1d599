#pragma once

#include <string>

#include "redist/exactgeo.hpp"

namespace redist {

enum class Mode { PaperExact, Adaptive };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

struct ReductionParams {
  Rational gamma;
  Rational d;  // target d; the layout itself is built at d = eta + eps
  Mode mode = Mode::Adaptive;
  long N = 0;  // vertices of the incidence graph
  Rational delta1;
  Rational delta2;  // radians, rational upper approximation kept small
  Rational delta;
  Rational eta;
  Rational eps;
  int p = 0;     // decimal digits of eta and eps
  int t = 1800;  // circle table size

  /// Decimal digits of every town coordinate.
  int town_digits() const { return 2 * p + 20; }
};

/// ceil(2 log10 N) + 10, computed exactly.
int precision_digits(long N);

/// Largest p-digit decimal strictly below x (x > 0).
Rational p_digits_below(const Rational& x, int p);

/// delta = 1/(10^4 N^2); eta = delta/201 and eps = eta/201, both rounded
/// down to p digits.
ReductionParams paper_exact_params(long N, const Rational& gamma, const Rational& d);

/// delta = min(delta1, delta2 * delta1) / 100; eta starts at delta/8.
ReductionParams adaptive_params(long N, const Rational& gamma, const Rational& d, const Rational& delta1,
                                const Rational& delta2);

/// Sets eta (rounded down to p digits) and eps = eta/201 rounded down.
void set_eta(ReductionParams& prm, const Rational& eta);

void check_gamma_d(const Rational& gamma, const Rational& d);

}  // namespace redist
