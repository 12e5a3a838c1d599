#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "redist/verify.hpp"

using namespace redist;

namespace {

Point2 P(long x, long y) { return {Rational(x), Rational(y)}; }

int orient(const Point2& a, const Point2& b, const Point2& c) {
  const Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}
bool on_closed_segment(const Point2& p, const Point2& a, const Point2& b) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}
bool segments_meet(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_closed_segment(c, a, b) || on_closed_segment(d, a, b) || on_closed_segment(a, c, d) ||
         on_closed_segment(b, c, d);
}
bool in_triangle(const Point2& p, const Point2& a, const Point2& b, const Point2& c) {
  const int s = orient(a, b, c);
  if (s == 0) return false;  // degenerate triangles are covered by the segment cases
  return orient(a, b, p) * s >= 0 && orient(b, c, p) * s >= 0 && orient(c, a, p) * s >= 0;
}

// Closed hulls of two planar point sets meet iff some at most four of the
// points (a point and a triangle, or two segments, or lower-dimensional
// cases) already witness it.
bool hulls_meet_oracle(const std::vector<Point2>& A, const std::vector<Point2>& B) {
  auto one_side = [](const std::vector<Point2>& X, const std::vector<Point2>& Y) {
    for (const auto& p : X)
      for (std::size_t i = 0; i < Y.size(); ++i)
        for (std::size_t j = i; j < Y.size(); ++j) {
          if (on_closed_segment(p, Y[i], Y[j])) return true;
          for (std::size_t k = j + 1; k < Y.size(); ++k)
            if (in_triangle(p, Y[i], Y[j], Y[k])) return true;
        }
    return false;
  };
  if (one_side(A, B) || one_side(B, A)) return true;
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j)
      for (std::size_t k = 0; k < B.size(); ++k)
        for (std::size_t l = k + 1; l < B.size(); ++l)
          if (segments_meet(A[i], A[j], B[k], B[l])) return true;
  return false;
}

RedistrictingInstance tiny(std::vector<Point2> loc, std::vector<int> pref, long k, long m, Rational gamma,
                           Rational d) {
  return make_instance(k, m, gamma, d, loc, pref);
}

}  // namespace

TEST_CASE("single district, huge d") {
  auto inst = tiny({P(0, 0), P(5, 1), P(2, 2)}, {1, 0, 1}, 1, 0, make_rational(1, 2), Rational(1000));
  const auto rep = full_report(inst, {1, {0, 0, 0}});
  CHECK(rep.is_legal);
  CHECK(rep.is_fair);
  CHECK(rep.majority == 1);
}

TEST_CASE("two far voters, small d: only F3 fails") {
  auto inst = tiny({P(0, 0), P(10, 0)}, {1, 1}, 1, 0, make_rational(1, 2), Rational(1));
  const auto rep = full_report(inst, {1, {0, 0}});
  CHECK(rep.f1.failures() == 0);
  CHECK(rep.f2.empty());
  REQUIRE(rep.f3.size() == 1);
  CHECK(rep.f3[0].sq_dist == 100);
  CHECK_FALSE(rep.is_legal);
  CHECK(rep.is_fair);
}

TEST_CASE("F1 window and empty districts") {
  auto inst = tiny({P(0, 0), P(0, 1), P(0, 2), P(9, 0)}, {1, 1, 0, 0}, 2, 1, make_rational(1, 2), Rational(100));
  auto f1 = check_F1(inst, {2, {0, 0, 0, 1}});
  CHECK(f1.lower == 1);
  CHECK(f1.upper == 3);
  CHECK(f1.failures() == 0);
  f1 = check_F1(inst, {2, {0, 0, 0, 0}});
  CHECK(f1.failures() == 2);  // 4 > 3 and the empty district
  CHECK_FALSE(full_report(inst, {2, {0, 0, 0, 0}}).is_legal);
}

TEST_CASE("F4 counts strict majorities") {
  auto inst = tiny({P(0, 0), P(0, 1), P(5, 0), P(5, 1)}, {1, 0, 1, 1}, 2, 2, make_rational(1, 2), Rational(100));
  auto [count, pass] = check_F4(inst, {2, {0, 0, 1, 1}}, 2);
  CHECK(count == 1);  // a tie is not a majority
  CHECK_FALSE(pass);
  std::tie(count, pass) = check_F4(inst, {2, {0, 0, 1, 1}}, 1);
  CHECK(pass);
}

TEST_CASE("splitting a location always violates F2") {
  auto inst = tiny({P(0, 0), P(0, 0), P(3, 0)}, {1, 0, 1}, 2, 0, make_rational(9, 10), Rational(100));
  const auto f2 = check_F2(inst, {2, {0, 1, 1}});
  REQUIRE(f2.size() == 1);
  CHECK(f2[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("mismatched districtings are rejected") {
  auto inst = tiny({P(0, 0), P(1, 0)}, {1, 0}, 2, 0, make_rational(1, 2), Rational(1));
  CHECK_THROWS_AS(check_districting(inst, {2, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(check_districting(inst, {2, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(check_districting(inst, {3, {0, 1}}), std::invalid_argument);
}

TEST_CASE("F2 agrees with a brute-force oracle") {
  std::mt19937_64 rng(17);
  long meets = 0, total = 0;
  for (int it = 0; it < 1500; ++it) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const int k = 2 + static_cast<int>(rng() % 3);
    std::vector<Point2> loc(n);
    for (auto& p : loc) p = P(static_cast<long>(rng() % 5), static_cast<long>(rng() % 5));
    std::vector<int> assign(n);
    for (auto& a : assign) a = static_cast<int>(rng() % k);
    auto inst = tiny(loc, std::vector<int>(n, 1), k, 0, make_rational(1, 2), Rational(100));
    auto got = check_F2(inst, {k, assign});
    std::sort(got.begin(), got.end());
    std::vector<std::pair<int, int>> want;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        std::vector<Point2> A, B;
        for (int i = 0; i < n; ++i) {
          if (assign[i] == a) A.push_back(loc[i]);
          if (assign[i] == b) B.push_back(loc[i]);
        }
        if (A.empty() || B.empty()) continue;
        ++total;
        if (hulls_meet_oracle(A, B)) want.push_back({a, b});
      }
    meets += static_cast<long>(want.size());
    CHECK(got == want);
  }
  CHECK(meets > 200);
  CHECK(total - meets > 200);
}

TEST_CASE("verdicts are invariant under relabeling and similarity") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 200; ++it) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const int k = 1 + static_cast<int>(rng() % 3);
    std::vector<Point2> loc(n);
    std::vector<int> pref(n), assign(n);
    for (int i = 0; i < n; ++i) {
      loc[i] = P(static_cast<long>(rng() % 7), static_cast<long>(rng() % 7));
      pref[i] = static_cast<int>(rng() % 2);
      assign[i] = static_cast<int>(rng() % k);
    }
    const Rational gamma = make_rational(1 + static_cast<long>(rng() % 9), 10);
    const Rational d(1 + static_cast<long>(rng() % 8));
    const long m = static_cast<long>(rng() % 3);
    const auto base = full_report(tiny(loc, pref, k, m, gamma, d), {k, assign});

    // Voter permutation and district relabeling.
    std::vector<int> perm(n), dperm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::iota(dperm.begin(), dperm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::shuffle(dperm.begin(), dperm.end(), rng);
    std::vector<Point2> loc2(n);
    std::vector<int> pref2(n), assign2(n);
    for (int i = 0; i < n; ++i) {
      loc2[perm[i]] = loc[i];
      pref2[perm[i]] = pref[i];
      assign2[perm[i]] = dperm[assign[i]];
    }
    const auto relabeled = full_report(tiny(loc2, pref2, k, m, gamma, d), {k, assign2});
    CHECK(relabeled.is_legal == base.is_legal);
    CHECK(relabeled.is_fair == base.is_fair);
    CHECK(relabeled.majority == base.majority);

    // Scale coordinates and d alike, then translate.
    const Rational s = make_rational(3, 7);
    std::vector<Point2> loc3(n);
    for (int i = 0; i < n; ++i) loc3[i] = s * loc[i] + Point2{make_rational(1, 3), Rational(-2)};
    const auto scaled = full_report(tiny(loc3, pref, k, m, gamma, s * d), {k, assign});
    CHECK(scaled.is_legal == base.is_legal);
    CHECK(scaled.f2 == base.f2);
    CHECK(scaled.f3.size() == base.f3.size());
  }
}

TEST_CASE("report text has one line per violation") {
  auto inst = tiny({P(0, 0), P(10, 0), P(0, 0)}, {1, 1, 0}, 2, 2, make_rational(1, 2), Rational(1));
  const auto rep = full_report(inst, {2, {0, 0, 1}});
  const std::string text = rep.to_text();
  CHECK(text.rfind("legal no\nfair no\n", 0) == 0);
  CHECK(text.find("f2 districts 0 1") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') ==
        6 + static_cast<long>(rep.f2.size() + rep.f3.size() + rep.f1.failures()));
}
