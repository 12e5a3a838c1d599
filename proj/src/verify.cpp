#include "redist/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace redist {

long F1Report::failures() const {
  return std::count_if(districts.begin(), districts.end(), [](const F1Entry& e) { return !e.pass; });
}

void check_districting(const RedistrictingInstance& inst, const Districting& dist) {
  if (dist.k != inst.k)
    throw std::invalid_argument("districting has k=" + std::to_string(dist.k) + ", instance k=" + std::to_string(inst.k));
  if (static_cast<long>(dist.assignment.size()) != inst.n)
    throw std::invalid_argument("districting covers " + std::to_string(dist.assignment.size()) + " voters, instance has " +
                                std::to_string(inst.n));
  for (int d : dist.assignment)
    if (d < 0 || d >= dist.k) throw std::invalid_argument("district index out of range: " + std::to_string(d));
}

std::vector<std::vector<int>> district_sites(const RedistrictingInstance& inst, const Districting& dist) {
  std::vector<std::vector<int>> out(dist.k);
  for (long i = 0; i < inst.n; ++i) out[dist.assignment[i]].push_back(inst.site_of[i]);
  for (auto& s : out) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return out;
}

F1Report check_F1(const RedistrictingInstance& inst, const Districting& dist) {
  F1Report r;
  const Rational avg = inst.k > 0 ? Rational(inst.n) / Rational(inst.k) : Rational(0);
  r.lower = (1 - inst.gamma) * avg;
  r.upper = (1 + inst.gamma) * avg;
  std::vector<long> size(dist.k, 0);
  for (int d : dist.assignment) ++size[d];
  for (long d = 0; d < dist.k; ++d) {
    const Rational s(size[d]);
    r.districts.push_back({static_cast<int>(d), size[d], r.lower <= s && s <= r.upper});
  }
  return r;
}

std::vector<std::pair<int, int>> check_F2(const RedistrictingInstance& inst, const Districting& dist) {
  const auto sites = district_sites(inst, dist);
  struct Box {
    double x0, x1, y0, y1;
    int district;
  };
  std::vector<ConvexPolygon> hull(dist.k);
  std::vector<Box> boxes;
  for (long d = 0; d < dist.k; ++d) {
    if (sites[d].empty()) continue;
    std::vector<Point2> pts;
    for (int s : sites[d]) pts.push_back(inst.sites[s]);
    hull[d] = convex_hull(std::move(pts));
    Box b{INFINITY, -INFINITY, INFINITY, -INFINITY, static_cast<int>(d)};
    for (const auto& p : hull[d].vertices) {
      const double x = to_double(p.x), y = to_double(p.y);
      b.x0 = std::min(b.x0, x), b.x1 = std::max(b.x1, x), b.y0 = std::min(b.y0, y), b.y1 = std::max(b.y1, y);
    }
    // Widen past any conversion error so no touching pair is missed.
    const double pad = 1e-9 * (1 + std::max({std::fabs(b.x0), std::fabs(b.x1), std::fabs(b.y0), std::fabs(b.y1)}));
    b.x0 -= pad, b.x1 += pad, b.y0 -= pad, b.y1 += pad;
    boxes.push_back(b);
  }
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) { return a.x0 < b.x0; });
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < boxes.size(); ++i)
    for (std::size_t j = i + 1; j < boxes.size() && boxes[j].x0 <= boxes[i].x1; ++j) {
      if (boxes[j].y0 > boxes[i].y1 || boxes[i].y0 > boxes[j].y1) continue;
      const int a = boxes[i].district, b = boxes[j].district;
      if (!hulls_disjoint(hull[a], hull[b])) out.emplace_back(std::min(a, b), std::max(a, b));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<F3Violation> check_F3(const RedistrictingInstance& inst, const Districting& dist, const Rational& d) {
  const Rational d2 = d * d;
  // One representative voter per (district, site), first voter wins.
  std::vector<std::tuple<int, int, long>> keyed;
  keyed.reserve(inst.n);
  for (long i = 0; i < inst.n; ++i) keyed.emplace_back(dist.assignment[i], inst.site_of[i], i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::vector<long>> members(dist.k);
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    const auto [dd, s, v] = keyed[i];
    if (i == 0 || std::get<0>(keyed[i - 1]) != dd || std::get<1>(keyed[i - 1]) != s) members[dd].push_back(v);
  }
  // The diameter is attained at hull vertices.
  for (auto& mem : members) {
    if (mem.size() <= 16) continue;
    std::vector<Point2> pts;
    for (long v : mem) pts.push_back(inst.loc(v));
    const auto hull = convex_hull(std::move(pts));
    std::vector<long> keep;
    for (long v : mem)
      if (std::find(hull.vertices.begin(), hull.vertices.end(), inst.loc(v)) != hull.vertices.end()) keep.push_back(v);
    mem = std::move(keep);
  }
  std::vector<F3Violation> out;
  for (long k = 0; k < dist.k; ++k) {
    const auto& mem = members[k];
    F3Violation worst{static_cast<int>(k), 0, 0, Rational(0)};
    for (std::size_t a = 0; a < mem.size(); ++a)
      for (std::size_t b = a + 1; b < mem.size(); ++b) {
        Rational s = sq_dist(inst.loc(mem[a]), inst.loc(mem[b]));
        if (s > worst.sq_dist) worst = {static_cast<int>(k), mem[a], mem[b], std::move(s)};
      }
    if (worst.sq_dist > d2) out.push_back(std::move(worst));
  }
  return out;
}

std::pair<long, bool> check_F4(const RedistrictingInstance& inst, const Districting& dist, long m) {
  std::vector<long> ones(dist.k, 0), size(dist.k, 0);
  for (long i = 0; i < inst.n; ++i) {
    ++size[dist.assignment[i]];
    ones[dist.assignment[i]] += inst.pref[i];
  }
  long count = 0;
  for (long d = 0; d < dist.k; ++d) count += 2 * ones[d] > size[d];
  return {count, count >= m};
}

LegalityReport full_report(const RedistrictingInstance& inst, const Districting& dist) {
  check_districting(inst, dist);
  LegalityReport r;
  r.f1 = check_F1(inst, dist);
  r.f2 = check_F2(inst, dist);
  r.f3 = check_F3(inst, dist, inst.d);
  std::tie(r.majority, r.is_fair) = check_F4(inst, dist, inst.m);
  r.m = inst.m;
  r.is_legal = r.f1.failures() == 0 && r.f2.empty() && r.f3.empty();
  return r;
}

std::string LegalityReport::to_text() const {
  std::ostringstream os;
  os << "legal " << (is_legal ? "yes" : "no") << "\n";
  os << "fair " << (is_fair ? "yes" : "no") << "\n";
  os << "f1 window " << to_string(f1.lower) << " " << to_string(f1.upper) << " failures " << f1.failures() << "\n";
  os << "f2 failures " << f2.size() << "\n";
  os << "f3 failures " << f3.size() << "\n";
  os << "f4 majority " << majority << " m " << m << "\n";
  for (const auto& e : f1.districts)
    if (!e.pass) os << "f1 district " << e.district << " size " << e.size << "\n";
  for (auto [a, b] : f2) os << "f2 districts " << a << " " << b << "\n";
  for (const auto& v : f3)
    os << "f3 district " << v.district << " voters " << v.voter_a << " " << v.voter_b << " sqdist " << to_string(v.sq_dist)
       << "\n";
  return os.str();
}

}  // namespace redist
