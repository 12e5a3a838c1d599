#include "redist/exactgeo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace redist {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("malformed rational: " + std::string(text));
    BigInt n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    out = make_rational(n, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw std::invalid_argument("malformed decimal: " + std::string(text));
    BigInt n(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    out = make_rational(n, pow10(static_cast<unsigned>(frac.size())));
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed rational: " + std::string(text));
    out = Rational(BigInt(std::string(s), 10));
  }
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

BigInt floor_of(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

BigInt ceil_of(const Rational& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

BigInt pow10(unsigned digits) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, digits);
  return r;
}

Rational round_to_decimals(const Rational& x, unsigned digits) {
  const BigInt scale = pow10(digits);
  Rational scaled = abs(x) * scale;
  BigInt n = floor_of(scaled + Rational(1, 2));
  if (x < 0) n = -n;
  return make_rational(n, scale);
}

Rational round_down_to_decimals(const Rational& x, unsigned digits) {
  const BigInt scale = pow10(digits);
  return make_rational(floor_of(x * scale), scale);
}

Rational from_double(double v, unsigned digits) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite double");
  return round_to_decimals(Rational(v), digits);
}

double to_double(const Rational& x) { return x.get_d(); }

Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }

Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }

int orientation(const Point2& a, const Point2& b, const Point2& c) {
  return sgn(cross(b - a, c - a));
}

bool on_segment(const Point2& p, const Segment& s) {
  if (orientation(s.a, s.b, p) != 0) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

bool segments_intersect(const Segment& s, const Segment& t) {
  const int o1 = orientation(s.a, s.b, t.a);
  const int o2 = orientation(s.a, s.b, t.b);
  const int o3 = orientation(t.a, t.b, s.a);
  const int o4 = orientation(t.a, t.b, s.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(t.a, s) || on_segment(t.b, s) || on_segment(s.a, t) || on_segment(s.b, t);
}

namespace {

bool is_endpoint(const Point2& p, const Segment& s) { return p == s.a || p == s.b; }

}  // namespace

bool segments_properly_intersect(const Segment& s, const Segment& t) {
  if (!segments_intersect(s, t)) return false;
  const int o1 = orientation(s.a, s.b, t.a);
  const int o2 = orientation(s.a, s.b, t.b);
  if (o1 == 0 && o2 == 0) {
    // Collinear: the overlap is a nondegenerate interval unless the segments
    // only touch end to end.
    const bool use_x = s.a.x != s.b.x || t.a.x != t.b.x;
    auto key = [&](const Point2& p) -> const Rational& { return use_x ? p.x : p.y; };
    const Rational lo = std::max(std::min(key(s.a), key(s.b)), std::min(key(t.a), key(t.b)));
    const Rational hi = std::min(std::max(key(s.a), key(s.b)), std::max(key(t.a), key(t.b)));
    return lo < hi;
  }
  // Non-collinear: the intersection is a single point.
  Point2 p;
  if (o1 == 0 || o2 == 0) {
    p = (o1 == 0) ? t.a : t.b;
  } else if (orientation(t.a, t.b, s.a) == 0) {
    p = s.a;
  } else if (orientation(t.a, t.b, s.b) == 0) {
    p = s.b;
  } else {
    return true;  // strict crossing
  }
  return !(is_endpoint(p, s) && is_endpoint(p, t));
}

Rational sq_dist(const Point2& a, const Point2& b) {
  const Point2 d = a - b;
  return dot(d, d);
}

Rational sq_dist_point_segment(const Point2& p, const Segment& s) {
  const Point2 ab = s.b - s.a;
  const Rational len2 = dot(ab, ab);
  if (len2 == 0) return sq_dist(p, s.a);
  const Rational t = dot(p - s.a, ab);
  if (t <= 0) return sq_dist(p, s.a);
  if (t >= len2) return sq_dist(p, s.b);
  const Rational c = cross(ab, p - s.a);
  return c * c / len2;
}

Rational sq_dist_segments(const Segment& s, const Segment& t) {
  if (segments_intersect(s, t)) return Rational(0);
  Rational best = sq_dist_point_segment(s.a, t);
  for (const Rational& d : {sq_dist_point_segment(s.b, t), sq_dist_point_segment(t.a, s),
                            sq_dist_point_segment(t.b, s)}) {
    if (d < best) best = d;
  }
  return best;
}

ConvexPolygon convex_hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return {points};
  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    const auto& p = points[i];
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  // All points collinear: monotone chain leaves the two extremes.
  return {hull};
}

namespace {

// Interval of projections of poly's vertices onto axis.
std::pair<Rational, Rational> project(const ConvexPolygon& poly, const Point2& axis) {
  Rational lo = dot(poly.vertices[0], axis);
  Rational hi = lo;
  for (std::size_t i = 1; i < poly.vertices.size(); ++i) {
    Rational v = dot(poly.vertices[i], axis);
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return {lo, hi};
}

void collect_axes(const ConvexPolygon& poly, std::vector<Point2>& axes) {
  const auto& v = poly.vertices;
  if (v.size() < 2) return;
  const std::size_t edges = v.size() == 2 ? 1 : v.size();
  for (std::size_t i = 0; i < edges; ++i) {
    const Point2 d = v[(i + 1) % v.size()] - v[i];
    axes.push_back({-d.y, d.x});
    axes.push_back(d);
  }
}

}  // namespace

bool hulls_disjoint(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (p.vertices.empty() || q.vertices.empty()) return true;
  std::vector<Point2> axes;
  collect_axes(p, axes);
  collect_axes(q, axes);
  axes.push_back(q.vertices[0] - p.vertices[0]);
  for (const auto& axis : axes) {
    if (axis.x == 0 && axis.y == 0) continue;
    auto [plo, phi] = project(p, axis);
    auto [qlo, qhi] = project(q, axis);
    if (phi < qlo || qhi < plo) return true;
  }
  return false;
}

bool point_in_convex(const Point2& p, const ConvexPolygon& poly) {
  const auto& v = poly.vertices;
  if (v.empty()) return false;
  if (v.size() == 1) return p == v[0];
  if (v.size() == 2) return on_segment(p, {v[0], v[1]});
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (orientation(v[i], v[(i + 1) % v.size()], p) < 0) return false;
  }
  return true;
}

std::pair<Rational, Rational> grid_angle_distance_bounds(long grid_side) {
  if (grid_side < 2) throw std::invalid_argument("grid side must be at least 2");
  const Rational b = make_rational(1, 2 * grid_side * grid_side);
  return {b, b};
}

Rational sin_sq_angle(const Point2& a, const Point2& b, const Point2& c) {
  const Point2 u = a - b;
  const Point2 w = c - b;
  const Rational cr = cross(u, w);
  return cr * cr / (dot(u, u) * dot(w, w));
}

}  // namespace redist
