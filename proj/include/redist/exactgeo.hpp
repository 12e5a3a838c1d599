#pragma once

// Exact rational arithmetic and the planar predicates every verdict rests on.
// Nothing in this header uses floating point.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace redist {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

/// Accepts "p/q", "p", and finite decimals such as "-0.125"; throws
/// std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

BigInt floor_of(const Rational& x);
BigInt ceil_of(const Rational& x);
BigInt pow10(unsigned digits);

/// Nearest multiple of 10^-digits; ties go away from zero.
Rational round_to_decimals(const Rational& x, unsigned digits);
/// Largest multiple of 10^-digits that is <= x.
Rational round_down_to_decimals(const Rational& x, unsigned digits);

/// Rational approximation of a double (exact binary value, then rounded).
Rational from_double(double v, unsigned digits);
double to_double(const Rational& x);

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
  friend bool operator<(const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

Point2 operator+(const Point2& a, const Point2& b);
Point2 operator-(const Point2& a, const Point2& b);
Point2 operator*(const Rational& s, const Point2& p);

Rational dot(const Point2& a, const Point2& b);
Rational cross(const Point2& a, const Point2& b);

struct Segment {
  Point2 a;
  Point2 b;
};

/// Vertices in counterclockwise order; 1 or 2 vertices for degenerate hulls.
struct ConvexPolygon {
  std::vector<Point2> vertices;
};

/// Sign of (b-a) x (c-a).
int orientation(const Point2& a, const Point2& b, const Point2& c);

/// Closed-segment intersection test (touching counts).
bool segments_intersect(const Segment& s, const Segment& t);

/// True iff s and t share a point interior to at least one of them. Two
/// segments meeting only at a common endpoint do not properly intersect.
bool segments_properly_intersect(const Segment& s, const Segment& t);

/// p lies on the closed segment s.
bool on_segment(const Point2& p, const Segment& s);

Rational sq_dist(const Point2& a, const Point2& b);
Rational sq_dist_point_segment(const Point2& p, const Segment& s);
Rational sq_dist_segments(const Segment& s, const Segment& t);

/// Strictly convex hull, counterclockwise, starting at the lexicographically
/// smallest vertex. Collinear boundary points are dropped.
ConvexPolygon convex_hull(std::vector<Point2> points);

/// True iff the closed hulls share no point. Separating-axis test over the
/// edge normals and edge directions of both polygons.
bool hulls_disjoint(const ConvexPolygon& p, const ConvexPolygon& q);

/// Point inside or on the boundary of a closed convex polygon (any size).
bool point_in_convex(const Point2& p, const ConvexPolygon& poly);

/// Lower bounds (on sin of a nonzero grid angle, on a nonzero point-segment
/// distance) for distinct points of an l x l integer grid: both 1/(2 l^2).
std::pair<Rational, Rational> grid_angle_distance_bounds(long grid_side);

/// sin^2 of the angle ABC, as cross^2 / (|BA|^2 |BC|^2).
Rational sin_sq_angle(const Point2& a, const Point2& b, const Point2& c);

}  // namespace redist
