#include "redist/ztable.hpp"

#include <stdexcept>

#include "redist/highprec.hpp"

namespace redist {


std::vector<Point2> unit_circle_table(int t, int digits) {
  if (t <= 0 || t % 36 != 0) throw std::invalid_argument("table size must be a positive multiple of 36");
  const unsigned working = static_cast<unsigned>(digits) + 30;
  set_working_digits(static_cast<int>(working));
  const BigFloat two_pi = 2 * boost::multiprecision::acos(BigFloat(-1));
  const Rational one_ulp = make_rational(BigInt(1), pow10(digits));
  std::vector<Point2> out;
  out.reserve(t);
  for (int j = 0; j < t; ++j) {
    Point2 u;
    if (j % (t / 4) == 0) {
      // Axis directions are exact.
      static const int cs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      const int q = j / (t / 4);
      u = {Rational(cs[q][0]), Rational(cs[q][1])};
    } else {
      const BigFloat a = two_pi * j / t;
      u = {round_big(boost::multiprecision::cos(a), digits), round_big(boost::multiprecision::sin(a), digits)};
      while (dot(u, u) > 1) {
        Rational& big = abs(u.x) >= abs(u.y) ? u.x : u.y;
        big += big > 0 ? Rational(-one_ulp) : one_ulp;
      }
    }
    out.push_back(u);
  }
  return out;
}

std::vector<Point2> build_z_table(const Rational& eta, int p, int t) {
  const auto units = unit_circle_table(t, p + 20);
  const Rational lo = Rational(99, 100) * Rational(99, 100);
  std::vector<Point2> z;
  z.reserve(units.size());
  for (const auto& u : units) {
    const Rational n2 = dot(u, u);
    if (n2 < lo || n2 > 1) throw std::runtime_error("z table norm check failed");
    z.push_back(eta * u);
  }
  return z;
}

}  // namespace redist
