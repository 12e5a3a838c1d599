#include "redist/params.hpp"

#include <stdexcept>

namespace redist {

std::string to_string(Mode m) { return m == Mode::PaperExact ? "paper-exact" : "adaptive"; }

Mode parse_mode(const std::string& s) {
  if (s == "paper-exact" || s == "paper_exact") return Mode::PaperExact;
  if (s == "adaptive") return Mode::Adaptive;
  throw std::invalid_argument("unknown mode: " + s);
}

int precision_digits(long N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  const BigInt sq = BigInt(N) * N;
  int k = 0;
  while (pow10(k) < sq) ++k;
  return k + 10;
}

Rational p_digits_below(const Rational& x, int p) {
  if (x <= 0) throw std::invalid_argument("value must be positive");
  const BigInt scale = pow10(p);
  BigInt n = ceil_of(x * scale) - 1;
  if (n <= 0) throw std::invalid_argument("value below 10^-p");
  return make_rational(n, scale);
}

void check_gamma_d(const Rational& gamma, const Rational& d) {
  if (gamma <= 0 || gamma >= 1) throw std::invalid_argument("gamma must lie in (0,1)");
  if (d <= 0) throw std::invalid_argument("d must be positive");
}

void set_eta(ReductionParams& prm, const Rational& eta) {
  prm.eta = round_down_to_decimals(eta, prm.p);
  if (prm.eta <= 0) throw std::invalid_argument("eta underflows p digits");
  prm.eps = round_down_to_decimals(prm.eta / 201, prm.p);
  if (prm.eps <= 0) throw std::invalid_argument("eps underflows p digits");
}

ReductionParams paper_exact_params(long N, const Rational& gamma, const Rational& d) {
  check_gamma_d(gamma, d);
  ReductionParams prm;
  prm.gamma = gamma;
  prm.d = d;
  prm.mode = Mode::PaperExact;
  prm.N = N;
  prm.p = precision_digits(N);
  prm.delta = make_rational(BigInt(1), BigInt(10000) * N * N);
  prm.eta = round_down_to_decimals(prm.delta / 201, prm.p);
  prm.eps = round_down_to_decimals(prm.eta / 201, prm.p);
  if (prm.eps <= 0) throw std::logic_error("p digits too few for eps");
  return prm;
}

ReductionParams adaptive_params(long N, const Rational& gamma, const Rational& d, const Rational& delta1,
                                const Rational& delta2) {
  check_gamma_d(gamma, d);
  ReductionParams prm;
  prm.gamma = gamma;
  prm.d = d;
  prm.mode = Mode::Adaptive;
  prm.N = N;
  prm.p = precision_digits(N);
  prm.delta1 = delta1;
  prm.delta2 = delta2;
  const Rational chord = delta2 * delta1;
  prm.delta = (delta1 < chord ? delta1 : chord) / 100;
  set_eta(prm, prm.delta / 8);
  return prm;
}

}  // namespace redist
