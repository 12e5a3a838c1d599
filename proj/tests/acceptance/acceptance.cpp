// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <variant>

#include "../support.hpp"
#include "redist/deform.hpp"
#include "redist/embed.hpp"
#include "redist/exactgeo.hpp"
#include "redist/pipeline.hpp"
#include "redist/planarity.hpp"
#include "redist/populate.hpp"
#include "redist/roundtrip.hpp"
#include "redist/solve.hpp"
#include "redist/validate.hpp"

using namespace redist;
using clk = std::chrono::steady_clock;

namespace {

double since(clk::time_point t) { return std::chrono::duration<double>(clk::now() - t).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

const Rational kGamma = make_rational(1, 4);

// ---- criteria 1, 4 and 7 share one sweep over the corpus ----

struct Sweep {
  int formulas = 0, agree = 0, unsat = 0, legal = 0, valid = 0;
  double roundtrip_seconds = 0;
  bool has_sample = false;
  int singles = 0;
  std::vector<std::string> failures1, failures4, failures7;
};

Sweep corpus_sweep() {
  Sweep s;
  for (const auto& name : testsupport::corpus_names()) {
    const Cnf3 f = testsupport::corpus_formula(name);
    ++s.formulas;
    s.has_sample |= name == "sample.cnf";
    s.singles += name.rfind("single_", 0) == 0;

    const auto t0 = clk::now();
    const Reduction r = reduce(f);
    const RoundtripResult rt = roundtrip(r, kGamma);
    const double secs = since(t0);
    s.roundtrip_seconds += secs;
    if (rt.verdict == Verdict::Disagree)
      s.failures1.push_back(name + ": " + rt.note);
    else
      ++s.agree;
    s.unsat += rt.verdict == Verdict::AgreeUnsat;

    const RedistrictingInstance inst = populate(r.layout, kGamma);
    const auto rep = full_report(inst, solve_legal(inst, r.layout));
    if (rep.is_legal)
      ++s.legal;
    else
      s.failures4.push_back(name);

    const auto d12 = check_D1_D2(r.poly, r.layout.params.delta);
    if (r.report.ok() && d12.empty())
      ++s.valid;
    else
      s.failures7.push_back(name);

    std::cerr << "  " << name << " " << to_string(rt.verdict) << " towns=" << rt.towns << " voters=" << rt.voters
              << " legal=" << (rep.is_legal ? "yes" : "no") << " " << secs << "s\n";
  }
  return s;
}

std::string joined(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ", ") + x;
  return out;
}

Outcome criterion1(const Sweep& s) {
  std::ostringstream os;
  os << s.agree << "/" << s.formulas << " AGREE (" << s.unsat << " unsat, " << s.singles << " single-clause), "
     << static_cast<long>(s.roundtrip_seconds) << " s";
  if (!s.failures1.empty()) os << "; " << joined(s.failures1);
  return {s.formulas >= 30 && s.agree == s.formulas && s.unsat >= 3 && s.singles == 8 && s.has_sample &&
              s.roundtrip_seconds <= 600,
          os.str()};
}

Outcome criterion4(const Sweep& s) {
  std::ostringstream os;
  os << s.legal << "/" << s.formulas << " legal";
  if (!s.failures4.empty()) os << "; failed: " << joined(s.failures4);
  return {s.legal == s.formulas, os.str()};
}

Outcome criterion7(const Sweep& s) {
  std::ostringstream os;
  os << s.valid << "/" << s.formulas << " pass validation and D1/D2";
  if (!s.failures7.empty()) os << "; failed: " << joined(s.failures7);
  return {s.valid == s.formulas, os.str()};
}

// ---- sample criteria ----

const Reduction& sample() {
  static const Reduction r = reduce(parse_cnf(testsupport::kSample));
  return r;
}

Outcome criterion2() {
  const auto& r = sample();
  const auto inst = populate(r.layout, kGamma);
  const Assignment a = {false, false, false, true};
  const Districting dist = assignment_to_districting(inst, r.layout, a);
  const auto rep = full_report(inst, dist);
  const Assignment back = districting_to_assignment(inst, r.layout, dist);
  std::ostringstream os;
  os << "legal=" << rep.is_legal << " fair=" << rep.is_fair << " m=" << inst.m << " majority=" << rep.majority
     << " decoded=" << (back == a ? "0001" : "other");
  return {rep.is_legal && rep.is_fair && inst.m == 4 && rep.majority == 4 && back == a, os.str()};
}

Outcome criterion3() {
  const auto& L = sample().layout;
  const auto x2 = testsupport::runs_between_clauses(L, L.cycles[1]);
  const auto x4 = testsupport::runs_between_clauses(L, L.cycles[3]);
  bool ok = !x2.empty() && !x4.empty();
  std::ostringstream os;
  os << "x2 runs";
  for (int n : x2) {
    os << " " << n;
    ok &= n % 2 == 1;
  }
  os << "; x4 runs";
  for (int n : x4) {
    os << " " << n;
    ok &= n % 2 == 0;
  }
  return {ok, os.str()};
}

// ---- embedding and grid bounds ----

Outcome criterion5() {
  std::mt19937_64 rng(2024);
  int good = 0, largest = 0;
  for (int it = 0; it < 200; ++it) {
    const int n = 3 + static_cast<int>(rng() % 48);
    const double keep = 0.3 + 0.7 * static_cast<double>(rng() % 1000) / 1000;
    const auto g = make_graph(n, testsupport::random_planar_edges(rng, n, keep));
    const auto e = grid_embed(g, std::get<RotationSystem>(check_planarity(g)));
    bool ok = e.grid_side <= 2 * n && validate_embedding(e).empty();
    for (const auto& p : e.coords)
      ok &= p.x >= 0 && p.y >= 0 && p.x <= 2 * n && p.y <= 2 * n && p.x.get_den() == 1 && p.y.get_den() == 1;
    good += ok;
    largest = std::max(largest, n);
  }
  return {good == 200, std::to_string(good) + "/200 valid, up to " + std::to_string(largest) + " vertices"};
}

Outcome criterion6() {
  const auto t0 = clk::now();
  bool ok = true;
  long triples = 0;
  for (std::int64_t l = 1; l <= 10; ++l) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    for (std::int64_t x = 0; x <= l; ++x)
      for (std::int64_t y = 0; y <= l; ++y) pts.push_back({x, y});
    const std::int64_t l4x4 = 4 * l * l * l * l;
    const std::size_t P = pts.size();
    for (std::size_t b = 0; b < P; ++b)
      for (std::size_t a = 0; a < P; ++a) {
        if (a == b) continue;
        const std::int64_t ux = pts[a].first - pts[b].first, uy = pts[a].second - pts[b].second;
        const std::int64_t uu = ux * ux + uy * uy;
        for (std::size_t c = 0; c < P; ++c) {
          if (c == b || c == a) continue;
          ++triples;
          const std::int64_t vx = pts[c].first - pts[b].first, vy = pts[c].second - pts[b].second;
          const std::int64_t vv = vx * vx + vy * vy;
          const std::int64_t cr = ux * vy - uy * vx;
          // Angle at b: sin^2 = cr^2 / (uu vv).
          if (cr != 0 && l4x4 * cr * cr < uu * vv) ok = false;
          // Point a against segment b-c.
          const std::int64_t t = ux * vx + uy * vy;
          if (t >= 0 && t <= vv) {
            if (cr != 0 && l4x4 * cr * cr < vv) ok = false;  // dist^2 = cr^2 / vv
          } else {
            const std::int64_t wx = pts[a].first - pts[c].first, wy = pts[a].second - pts[c].second;
            const std::int64_t d2 = t < 0 ? uu : wx * wx + wy * wy;
            if (d2 != 0 && l4x4 * d2 < 1) ok = false;
          }
        }
      }
    // The library bound (defined from side 2 on) is the square root of the
    // one checked here.
    if (l >= 2) {
      const auto lib = grid_angle_distance_bounds(l);
      ok &= lib.first * lib.first == make_rational(1, l4x4) && lib.second * lib.second == make_rational(1, l4x4);
    }
  }
  const double secs = since(t0);
  std::ostringstream os;
  os << "l = 1..10, " << triples << " ordered triples, " << secs << " s";
  return {ok && secs <= 120, os.str()};
}

// ---- hull oracle ----

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
  if (s == 0) return false;
  return orient(a, b, p) * s >= 0 && orient(b, c, p) * s >= 0 && orient(c, a, p) * s >= 0;
}
// Two closed hulls meet iff a point of one lies in a triangle or on a segment
// of the other, or a segment of one crosses a segment of the other.
bool hulls_meet_naive(const std::vector<Point2>& A, const std::vector<Point2>& B) {
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

Outcome criterion8() {
  std::mt19937_64 rng(8);
  auto coord = [&] { return make_rational(static_cast<long>(rng() % 10), 1 + static_cast<long>(rng() % 3)); };
  int agree = 0, meet = 0;
  const int pairs = 2000;
  for (int it = 0; it < pairs; ++it) {
    std::vector<Point2> A(1 + rng() % 8), B(1 + rng() % 8);
    for (auto& p : A) p = {coord(), coord()};
    for (auto& p : B) p = {coord(), coord()};
    const bool naive = hulls_meet_naive(A, B);
    meet += naive;
    agree += hulls_disjoint(convex_hull(A), convex_hull(B)) == !naive;
  }
  std::ostringstream os;
  os << agree << "/" << pairs << " agree (" << meet << " meeting, " << pairs - meet << " disjoint)";
  return {agree == pairs && meet > 100 && pairs - meet > 100, os.str()};
}

// ---- scaling ----

struct Verdicts {
  bool legal, fair, valid, found;
  long majority;
  std::size_t f1, f2, f3;
  std::vector<int> legal_assign, fair_assign;
  Assignment decoded;
  bool operator==(const Verdicts&) const = default;
};

Verdicts verdicts(const Reduction& r) {
  Verdicts v{};
  const auto inst = populate(r.layout, kGamma);
  const auto legal = solve_legal(inst, r.layout);
  const auto rep = full_report(inst, legal);
  v.legal = rep.is_legal;
  v.fair = rep.is_fair;
  v.majority = rep.majority;
  v.f1 = static_cast<std::size_t>(rep.f1.failures());
  v.f2 = rep.f2.size();
  v.f3 = rep.f3.size();
  v.valid = validate_reduction(r.layout).ok();
  v.legal_assign = legal.assignment;
  const auto fair = solve_fair_structured(inst, r.layout);
  v.found = fair.has_value();
  if (fair) {
    v.fair_assign = fair->assignment;
    v.decoded = districting_to_assignment(inst, r.layout, *fair);
    const auto frep = full_report(inst, *fair);
    v.fair = v.fair && frep.is_fair;
  }
  return v;
}

Outcome criterion9() {
  const std::vector<std::string> names = {"sample.cnf", "single_5.cnf", "random_03.cnf"};
  int same = 0, total = 0;
  std::string bad;
  for (const auto& name : names) {
    const Cnf3 f = testsupport::corpus_formula(name);
    const Verdicts base = verdicts(reduce(f));
    for (const Rational& d : {make_rational(1, 3), Rational(1), make_rational(17, 5)}) {
      ReduceOptions opt;
      opt.d = d;
      const Reduction r = reduce(f, opt);
      ++total;
      if (r.layout.params.eta + r.layout.params.eps == d && verdicts(r) == base)
        ++same;
      else
        bad += " " + name + "@" + to_string(d);
    }
  }
  return {same == total, std::to_string(same) + "/" + std::to_string(total) + " identical" + bad};
}

// ---- voter blocks and parameters ----

Outcome criterion10() {
  const Rational g = make_rational(1, 2);
  bool ok = choose_L(g) == 8;
  auto blk = [&](TownKind k, long ones, long zeros) {
    const auto b = block_for(k, g);
    ok &= b.count_pref1 == ones && b.count_pref0 == zeros;
  };
  blk(TownKind::BigClause, 8, 0);
  blk(TownKind::SmallClause, 2, 0);
  blk(TownKind::ClauseAdjacent, 2, 2);
  blk(TownKind::Edge, 1, 3);
  const auto inst = populate(sample().layout, g);
  long ones = 0;
  for (int p : inst.pref) ones += p == 1;
  ok &= Rational(ones) > (1 - g) / 2 * inst.n;
  std::ostringstream os;
  os << "L=" << choose_L(g) << ", pref 1 voters " << ones << " of " << inst.n;
  return {ok, os.str()};
}

Outcome criterion11() {
  bool ok = true;
  std::ostringstream os;
  for (long N : {6L, 20L, 100L}) {
    const auto p = paper_exact_params(N, kGamma, Rational(1));
    // Smallest c with 10^c >= N^2 is ceil(2 log10 N).
    long c = 0;
    for (long t = 1; t < N * N; t *= 10) ++c;
    ok &= p.delta == make_rational(1, 10000 * N * N);
    ok &= p.p == c + 10;
    ok &= p.eta * 200 < p.delta && p.eps * 200 < p.eta && p.eta > 0 && p.eps > 0;
    os << "N=" << N << " p=" << p.p << "; ";
  }
  // Full placement at paper-exact eta on a single-clause toy drawing, scaled
  // so the shortest clause approach is 300 eta.
  const Cnf3 f = parse_cnf("p cnf 3 1\n1 2 3 0\n");
  const auto g = build_incidence_graph(f);
  const auto grid = grid_embed(g, std::get<RotationSystem>(check_planarity(g)));
  const auto poly = deform_clause_edges(grid, g);
  const long N = g.num_vertices();
  const auto prm = compute_params(poly, N, kGamma, Rational(1), Mode::PaperExact);
  const auto ref = paper_exact_params(N, kGamma, Rational(1));
  ok &= prm.delta == ref.delta && prm.eta == ref.eta && prm.eps == ref.eps && prm.p == ref.p;
  const PolyEmbedding toy = scale_poly(poly, prm.eta * 300 / shortest_approach(poly));
  TownLayout L = place_clause_towns(toy, f, prm);
  place_edge_towns(toy, f, L);
  canonicalize(L);
  const bool toy_ok = validate_reduction(L).ok();
  ok &= toy_ok;
  os << "toy " << L.towns.size() << " towns " << (toy_ok ? "valid" : "invalid");
  return {ok, os.str()};
}

Outcome guarded(const std::function<Outcome()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

// With arguments, runs only the listed criteria.
int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  auto wanted = [&](int c) { return only.empty() || only.count(c) > 0; };

  const auto t0 = clk::now();
  Sweep sweep;
  std::string sweep_error;
  if (wanted(1) || wanted(4) || wanted(7)) {
    std::cerr << "corpus sweep\n";
    try {
      sweep = corpus_sweep();
    } catch (const std::exception& e) {
      sweep_error = e.what();
    }
  }
  auto from_sweep = [&](Outcome (*fn)(const Sweep&)) {
    return [&, fn] { return sweep_error.empty() ? fn(sweep) : Outcome{false, "exception: " + sweep_error}; };
  };

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"round-trip equivalence on the corpus", from_sweep(criterion1)},
      {"sample assignment 0001 encodes to a fair districting", criterion2},
      {"sample parity of x2 and x4", criterion3},
      {"legal solver on every corpus reduction", from_sweep(criterion4)},
      {"grid embeddings of random planar graphs", criterion5},
      {"exhaustive grid angle and distance bounds", criterion6},
      {"layout validation and D1/D2 on the corpus", from_sweep(criterion7)},
      {"hull disjointness against a naive oracle", criterion8},
      {"scaling invariance in d", criterion9},
      {"voter blocks at gamma 1/2", criterion10},
      {"paper-exact parameters and toy placement", criterion11},
  };
  int passed = 0, run = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!wanted(static_cast<int>(i) + 1)) continue;
    const auto& [title, fn] = criteria[i];
    const Outcome out = guarded(fn);
    ++run;
    passed += out.pass;
    std::cout << (out.pass ? "PASS " : "FAIL ") << (i + 1) << " " << title << ": " << out.detail << std::endl;
  }
  std::cout << passed << "/" << run << " criteria passed in " << static_cast<long>(since(t0)) << " s\n";
  return passed == run ? 0 : 1;
}
