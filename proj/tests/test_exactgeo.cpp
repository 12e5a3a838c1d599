#include <doctest.h>

#include <random>

#include "redist/exactgeo.hpp"

using namespace redist;

namespace {

Point2 P(long x, long y) { return {Rational(x), Rational(y)}; }
Point2 P(const Rational& x, const Rational& y) { return {x, y}; }

// Oracle predicates written out directly from cross products.
int orient(const Point2& a, const Point2& b, const Point2& c) {
  return sgn((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}
bool within(const Point2& p, const Point2& a, const Point2& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}
bool closed_segments_meet(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within(c, a, b)) return true;
  if (o2 == 0 && within(d, a, b)) return true;
  if (o3 == 0 && within(a, c, d)) return true;
  if (o4 == 0 && within(b, c, d)) return true;
  return false;
}
bool inside_closed(const Point2& p, const std::vector<Point2>& poly) {
  if (poly.size() == 1) return p == poly[0];
  if (poly.size() == 2) return orient(poly[0], poly[1], p) == 0 && within(p, poly[0], poly[1]);
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (orient(poly[i], poly[(i + 1) % poly.size()], p) < 0) return false;
  return true;
}
bool naive_meet(const std::vector<Point2>& p, const std::vector<Point2>& q) {
  auto edges = [](const std::vector<Point2>& v) {
    std::vector<std::pair<Point2, Point2>> e;
    if (v.size() <= 2) {
      e.push_back({v.front(), v.back()});
    } else {
      for (std::size_t i = 0; i < v.size(); ++i) e.push_back({v[i], v[(i + 1) % v.size()]});
    }
    return e;
  };
  for (const auto& [a, b] : edges(p))
    for (const auto& [c, d] : edges(q))
      if (closed_segments_meet(a, b, c, d)) return true;
  for (const auto& v : p)
    if (inside_closed(v, q)) return true;
  for (const auto& v : q)
    if (inside_closed(v, p)) return true;
  return false;
}

std::vector<Point2> random_points(std::mt19937& rng, int max_count, int span, int shift) {
  std::uniform_int_distribution<int> count(1, max_count), coord(0, span);
  std::vector<Point2> pts(count(rng));
  for (auto& p : pts) p = P(coord(rng) + shift, coord(rng));
  return pts;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1//2"), std::invalid_argument);
}

TEST_CASE("orientation") {
  CHECK(orientation(P(0, 0), P(1, 0), P(0, 1)) == 1);
  CHECK(orientation(P(0, 0), P(1, 1), P(2, 2)) == 0);
  CHECK(orientation(P(0, 0), P(0, 1), P(1, 1)) == -1);
}

TEST_CASE("orientation is antisymmetric under swaps") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int i = 0; i < 500; ++i) {
    Point2 a = P(c(rng), c(rng)), b = P(c(rng), c(rng)), d = P(c(rng), c(rng));
    const int o = orientation(a, b, d);
    CHECK(orientation(b, a, d) == -o);
    CHECK(orientation(a, d, b) == -o);
    CHECK(orientation(d, b, a) == -o);
  }
}

TEST_CASE("proper intersection") {
  CHECK(segments_properly_intersect({P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)}));
  CHECK_FALSE(segments_properly_intersect({P(0, 0), P(1, 0)}, {P(1, 0), P(2, 1)}));
  CHECK_FALSE(segments_properly_intersect({P(0, 0), P(1, 0)}, {P(0, 1), P(1, 1)}));
  // T-junction: endpoint of one in the interior of the other.
  CHECK(segments_properly_intersect({P(0, 0), P(2, 0)}, {P(1, 0), P(1, 1)}));
  // Collinear overlap.
  CHECK(segments_properly_intersect({P(0, 0), P(2, 0)}, {P(1, 0), P(3, 0)}));
}

TEST_CASE("squared distances") {
  CHECK(sq_dist(P(0, 0), P(3, 4)) == 25);
  CHECK(sq_dist_point_segment(P(1, 1), {P(0, 0), P(2, 1)}) == Rational(1, 5));
  CHECK(sq_dist_point_segment(P(5, 0), {P(0, 0), P(2, 0)}) == 9);
  CHECK(sq_dist_segments({P(0, 0), P(1, 0)}, {P(0, 0), P(0, 1)}) == 0);
  CHECK(sq_dist_segments({P(0, 0), P(1, 0)}, {P(0, 2), P(1, 3)}) == 4);
}

TEST_CASE("segment distance is zero exactly when segments meet") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(0, 4);
  for (int i = 0; i < 1000; ++i) {
    Point2 a = P(c(rng), c(rng)), b = P(c(rng), c(rng)), d = P(c(rng), c(rng)), e = P(c(rng), c(rng));
    if (a == b || d == e) continue;
    CHECK((sq_dist_segments({a, b}, {d, e}) == 0) == closed_segments_meet(a, b, d, e));
  }
}

TEST_CASE("convex hull") {
  auto sq = convex_hull({P(0, 0), P(1, 0), P(0, 1), P(1, 1), P(Rational(1, 2), Rational(1, 2))});
  CHECK(sq.vertices.size() == 4);
  CHECK(convex_hull({P(0, 0)}).vertices.size() == 1);
  auto seg = convex_hull({P(0, 0), P(1, 1), P(2, 2)});
  REQUIRE(seg.vertices.size() == 2);
  CHECK(seg.vertices[0] == P(0, 0));
  CHECK(seg.vertices[1] == P(2, 2));
  CHECK(convex_hull({P(3, 3), P(3, 3)}).vertices.size() == 1);
}

TEST_CASE("convex hull contains its input and is strictly convex") {
  std::mt19937 rng(3);
  for (int it = 0; it < 300; ++it) {
    auto pts = random_points(rng, 9, 5, 0);
    auto h = convex_hull(pts).vertices;
    for (const auto& p : pts) CHECK(inside_closed(p, h));
    for (const auto& v : h) CHECK(std::find(pts.begin(), pts.end(), v) != pts.end());
    if (h.size() >= 3)
      for (std::size_t i = 0; i < h.size(); ++i)
        CHECK(orient(h[i], h[(i + 1) % h.size()], h[(i + 2) % h.size()]) == 1);
  }
}

TEST_CASE("hulls_disjoint examples") {
  auto square = [](long dx) { return convex_hull({P(dx, 0), P(dx + 1, 0), P(dx, 1), P(dx + 1, 1)}); };
  CHECK(hulls_disjoint(square(0), square(3)));
  CHECK_FALSE(hulls_disjoint(square(0), square(1)));
  CHECK_FALSE(hulls_disjoint(convex_hull({P(Rational(1, 2), Rational(1, 2))}), square(0)));
  CHECK(hulls_disjoint(convex_hull({P(0, 0)}), convex_hull({P(0, 1)})));
  CHECK_FALSE(hulls_disjoint(convex_hull({P(0, 0)}), convex_hull({P(0, 0)})));
  // Collinear segments touching end to end.
  CHECK_FALSE(hulls_disjoint(convex_hull({P(0, 0), P(1, 0)}), convex_hull({P(1, 0), P(2, 0)})));
  CHECK(hulls_disjoint(convex_hull({P(0, 0), P(1, 0)}), convex_hull({P(2, 0), P(3, 0)})));
}

TEST_CASE("hulls_disjoint agrees with the naive oracle") {
  std::mt19937 rng(2024);
  int meet = 0, apart = 0;
  for (int it = 0; it < 3000; ++it) {
    auto a = convex_hull(random_points(rng, 5, 4, 0));
    auto b = convex_hull(random_points(rng, 5, 4, it % 3));
    const bool oracle = naive_meet(a.vertices, b.vertices);
    CHECK(hulls_disjoint(a, b) == !oracle);
    CHECK(hulls_disjoint(b, a) == !oracle);
    (oracle ? meet : apart)++;
  }
  CHECK(meet > 300);
  CHECK(apart > 300);
}

TEST_CASE("round_to_decimals") {
  CHECK(round_to_decimals(Rational(1, 3), 3) == Rational(333, 1000));
  CHECK(round_to_decimals(Rational(-1, 2), 0) == -1);
  CHECK(round_to_decimals(Rational(1, 2), 0) == 1);
  CHECK(round_to_decimals(Rational(7, 4), 2) == Rational(7, 4));
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 9999);
  for (int i = 0; i < 500; ++i) {
    const Rational x(num(rng), den(rng));
    const unsigned d = static_cast<unsigned>(i % 6);
    const Rational r = round_to_decimals(x, d);
    Rational diff = r - x;
    if (diff < 0) diff = -diff;
    CHECK(diff * 2 * pow10(d) <= 1);
    CHECK(Rational(r * pow10(d)).get_den() == 1);
  }
}

TEST_CASE("grid bounds") {
  CHECK(grid_angle_distance_bounds(2) == std::pair<Rational, Rational>{Rational(1, 8), Rational(1, 8)});
  CHECK(grid_angle_distance_bounds(10) == std::pair<Rational, Rational>{Rational(1, 200), Rational(1, 200)});
}

TEST_CASE("smallest nonzero grid sine and distance on the 4x4 grid") {
  // Frozen from an independent enumeration with Python fractions.
  Rational min_sin = 1, min_dist = 100;
  const int l = 4;
  std::vector<Point2> g;
  for (int x = 0; x < l; ++x)
    for (int y = 0; y < l; ++y) g.push_back(P(x, y));
  for (const auto& a : g)
    for (const auto& b : g)
      for (const auto& c : g) {
        if (a == b || b == c) continue;
        const Rational s = sin_sq_angle(a, b, c);
        if (s > 0 && s < min_sin) min_sin = s;
        const Rational d = sq_dist_point_segment(a, {b, c});
        if (d > 0 && d < min_dist) min_dist = d;
      }
  CHECK(min_sin == Rational(1, 65));
  CHECK(min_dist == Rational(1, 13));
  const Rational bound = grid_angle_distance_bounds(l).first;
  CHECK(min_sin >= bound * bound);
  CHECK(min_dist >= bound * bound);
}
