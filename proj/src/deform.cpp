#include "redist/deform.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace redist {

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg_of(double dx, double dy) {
  double a = std::atan2(dy, dx) * 180.0 / kPi;
  if (a < 0) a += 360.0;
  if (a >= 360.0) a -= 360.0;
  return a;
}

double wrap360(double a) {
  a = std::fmod(a, 360.0);
  return a < 0 ? a + 360.0 : a;
}

// Signed difference b - a folded into (-180, 180].
double signed_diff(double a, double b) {
  double d = wrap360(b - a);
  return d > 180.0 ? d - 360.0 : d;
}

double circ_dist(double a, double b) { return std::fabs(signed_diff(a, b)); }

// x strictly inside the arc that starts at a and sweeps `sweep` degrees
// (positive = counterclockwise).
bool in_arc(double a, double sweep, double x, double margin = 0) {
  if (sweep >= 0) {
    const double d = wrap360(x - a + margin);
    return d > 0 && d < sweep + 2 * margin;
  }
  const double d = wrap360(a - x + margin);
  return d > 0 && d < -sweep + 2 * margin;
}

struct D2 {
  double x, y;
};

D2 dbl(const Point2& p) { return {to_double(p.x), to_double(p.y)}; }

Point2 rounded(const Point2& p, int digits) { return {round_to_decimals(p.x, digits), round_to_decimals(p.y, digits)}; }

Point2 from_dbl(double x, double y, int digits) { return {from_double(x, digits), from_double(y, digits)}; }

Rational inf_norm(const Point2& w) {
  const Rational ax = abs(w.x), ay = abs(w.y);
  return ax > ay ? ax : ay;
}

// Point of the infinity-norm ring of radius rho around c in direction w.
Point2 ring_point(const Point2& c, const Rational& rho, const Point2& w, int digits) {
  const Rational s = rho / inf_norm(w);
  return rounded(c + s * w, digits);
}

// Infinity-norm distance from p to segment ab (convex in the parameter).
double inf_dist_point_segment(D2 p, D2 a, D2 b) {
  auto f = [&](double t) {
    return std::max(std::fabs(p.x - (a.x + t * (b.x - a.x))), std::fabs(p.y - (a.y + t * (b.y - a.y))));
  };
  double lo = 0, hi = 1;
  for (int i = 0; i < 200; ++i) {
    const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (f(m1) < f(m2)) hi = m2;
    else lo = m1;
  }
  return std::min({f(0), f(1), f((lo + hi) / 2)});
}

const std::array<double, 4> kCorners = {45, 135, 225, 315};

Point2 corner_point(const Point2& c, const Rational& rho, double deg) {
  const int sx = (deg < 90 || deg > 270) ? 1 : -1;
  const int sy = deg < 180 ? 1 : -1;
  return {c.x + sx * rho, c.y + sy * rho};
}

// Ring corners met when travelling from angle a to angle b in direction dir.
std::vector<double> corners_between(double a, double b, int dir) {
  std::vector<std::pair<double, double>> hits;  // (travelled, corner)
  for (double k : kCorners) {
    const double travelled = dir > 0 ? wrap360(k - a) : wrap360(a - k);
    const double total = dir > 0 ? wrap360(b - a) : wrap360(a - b);
    if (travelled > 1e-12 && travelled < total - 1e-12) hits.emplace_back(travelled, k);
  }
  std::sort(hits.begin(), hits.end());
  std::vector<double> out;
  for (auto& h : hits) out.push_back(h.second);
  return out;
}

double angle_at(D2 a, D2 x, D2 b) {
  const double ux = a.x - x.x, uy = a.y - x.y, vx = b.x - x.x, vy = b.y - x.y;
  const double c = (ux * vx + uy * vy) / (std::hypot(ux, uy) * std::hypot(vx, vy));
  return std::acos(std::clamp(c, -1.0, 1.0)) * 180.0 / kPi;
}

double seg_len(D2 a, D2 b) { return std::hypot(b.x - a.x, b.y - a.y); }

// Point at arclength s from pts[k] walking in direction step (-1 or +1); also
// returns the index of the first vertex not passed.
std::pair<D2, int> walk_from(const std::vector<D2>& pts, int k, int step, double s) {
  int i = k;
  D2 cur = pts[k];
  while (true) {
    const int j = i + step;
    const double l = seg_len(cur, pts[j]);
    if (l >= s || j == 0 || j == static_cast<int>(pts.size()) - 1) {
      const double t = std::min(1.0, s / l);
      // Never land on a protected end vertex.
      const double tt = (j == 0 || j == static_cast<int>(pts.size()) - 1) ? std::min(t, 0.5) : t;
      return {{cur.x + tt * (pts[j].x - cur.x), cur.y + tt * (pts[j].y - cur.y)}, j};
    }
    s -= l;
    cur = pts[j];
    i = j;
  }
}

// Cuts every interior corner sharper than min_deg, or flanked by a piece
// shorter than s, by a straight chord between the points at arclength s on
// either side.
std::vector<Point2> chamfer(std::vector<Point2> pts, double s, double min_deg, int digits) {
  for (int iter = 0; iter < 64; ++iter) {
    std::vector<D2> d;
    for (auto& p : pts) d.push_back(dbl(p));
    const int n = static_cast<int>(pts.size());
    int k = -1;
    for (int i = 1; i + 1 < n; ++i) {
      const bool sharp = angle_at(d[i - 1], d[i], d[i + 1]) < min_deg;
      const bool short_piece =
          (i > 1 && seg_len(d[i - 1], d[i]) < s) || (i + 2 < n && seg_len(d[i], d[i + 1]) < s);
      if (sharp || short_piece) {
        k = i;
        break;
      }
    }
    if (k < 0) return pts;
    auto [a, ia] = walk_from(d, k, -1, s);
    auto [b, ib] = walk_from(d, k, +1, s);
    std::vector<Point2> out(pts.begin(), pts.begin() + ia + 1);
    out.push_back(from_dbl(a.x, a.y, digits));
    out.push_back(from_dbl(b.x, b.y, digits));
    out.insert(out.end(), pts.begin() + ib, pts.end());
    pts = std::move(out);
  }
  throw std::runtime_error("corner cutting did not settle");
}

struct EndRoute {
  bool routed = false;
  Point2 q;          // first ring point (end of the radial piece)
  Rational rho;      // ring radius
  double from_deg = 0;  // angle of q
  int dir = 1;       // travel sense along the ring
};

// Points from center outward: center, radial to the ring, ring corners, then
// the crossing of the ray w with the ring.
std::vector<Point2> route_end(const Point2& c, const EndRoute& r, const Point2& w, int digits) {
  std::vector<Point2> out{c};
  if (!r.routed) return out;
  out.push_back(r.q);
  const D2 wd = dbl(w);
  const double theta = deg_of(wd.x, wd.y);
  for (double k : corners_between(r.from_deg, theta, r.dir)) out.push_back(corner_point(c, r.rho, k));
  out.push_back(ring_point(c, r.rho, w, digits));
  return out;
}

void push_unique(std::vector<Point2>& v, const Point2& p) {
  if (v.empty() || v.back() != p) v.push_back(p);
}

}  // namespace

Point2 approach_direction(int k, int digits) {
  if (k == 0) return {Rational(1), Rational(0)};
  const Rational x = -from_double(1.0 / std::sqrt(3.0), std::min(digits, 16));
  return {x, Rational(k == 1 ? 1 : -1)};
}

PolyEmbedding deform_clause_edges(const GridEmbedding& e, const IncidenceGraph& g, const DeformOptions& opt) {
  const int V = g.num_vars, C = g.num_clauses, n = g.num_vertices();
  const int digits = opt.digits;
  PolyEmbedding pe;
  pe.num_vars = V;
  pe.num_clauses = C;
  pe.vertex = e.coords;

  const auto adj = g.adjacency();
  std::vector<D2> pos;
  for (auto& p : e.coords) pos.push_back(dbl(p));

  // delta1 per vertex: a fraction of its infinity-norm clearance to every
  // other vertex and every edge not incident to it.
  std::vector<double> clear(n, std::numeric_limits<double>::infinity());
  for (int v = 0; v < n; ++v) {
    if (adj[v].empty()) continue;
    for (int w = 0; w < n; ++w)
      if (w != v)
        clear[v] = std::min(clear[v], std::max(std::fabs(pos[v].x - pos[w].x), std::fabs(pos[v].y - pos[w].y)));
    for (auto [a, b] : e.edges)
      if (a != v && b != v) clear[v] = std::min(clear[v], inf_dist_point_segment(pos[v], pos[a], pos[b]));
    if (!std::isfinite(clear[v])) clear[v] = 1;
  }
  // Clause rings reach 2/3 of delta1, variable fans at most 4/5 of it; the
  // factors keep the balls of any two vertices apart.
  std::vector<Rational> dl1(n);
  for (int v = 0; v < n; ++v) {
    if (adj[v].empty()) continue;
    const double f = g.is_clause(v) ? opt.clause_factor : opt.variable_factor;
    dl1[v] = round_down_to_decimals(from_double(f * clear[v], 17), 6);
    if (dl1[v] <= 0) dl1[v] = from_double(f * clear[v], 17);
  }

  // Edge directions at each clause and the pre-bend test.
  const std::vector<double> T = {0, 120, 240, 22.5, 67.5, 112.5, 157.5};
  auto dist_T = [&](double a) {
    double m = 360;
    for (double t : T) m = std::min(m, circ_dist(a, t));
    return m;
  };
  std::map<std::pair<int, int>, int> edge_index;  // (var, clause vertex) -> chain
  for (std::size_t i = 0; i < g.edges.size(); ++i) edge_index[g.edges[i]] = static_cast<int>(i);

  double delta2 = 180.0 / 128;  // degrees
  for (int c = 0; c < C; ++c) {
    const int cv = V + c;
    std::vector<double> ang;
    for (int x : adj[cv]) ang.push_back(deg_of(pos[x].x - pos[cv].x, pos[x].y - pos[cv].y));
    for (std::size_t i = 0; i < ang.size(); ++i)
      for (std::size_t j = i + 1; j < ang.size(); ++j) delta2 = std::min(delta2, circ_dist(ang[i], ang[j]));
  }
  bool any_near = false;
  for (int c = 0; c < C; ++c)
    for (int x : adj[V + c])
      if (dist_T(deg_of(pos[x].x - pos[V + c].x, pos[x].y - pos[V + c].y)) < delta2) any_near = true;
  if (any_near) delta2 /= 4;

  // Ray direction used inside each clause ball, per chain.
  std::vector<Point2> ray(g.edges.size());
  std::vector<bool> bent(g.edges.size(), false);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto [x, cv] = g.edges[i];
    ray[i] = e.coords[x] - e.coords[cv];
    const D2 w = dbl(ray[i]);
    const double a = deg_of(w.x, w.y);
    if (dist_T(a) < delta2) {
      const double b = (a + 2 * delta2) * kPi / 180.0;
      ray[i] = from_dbl(std::cos(b), std::sin(b), 12);
      bent[i] = true;
    }
  }
  std::vector<Rational> dl1_outer = dl1;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (bent[i]) dl1[g.edges[i].second] = dl1_outer[g.edges[i].second] / 2;

  pe.local_delta1 = dl1;
  pe.ring_spacing = dl1;
  pe.delta1 = 0;
  for (int v = 0; v < n; ++v)
    if (!adj[v].empty() && (pe.delta1 == 0 || dl1[v] < pe.delta1)) pe.delta1 = dl1[v];
  pe.delta2 = round_down_to_decimals(from_double(delta2 * kPi / 180.0, 17), 8);

  // Clause ends.
  std::vector<EndRoute> clause_route(g.edges.size());
  std::vector<int> target(g.edges.size(), 0);
  pe.approach_case.assign(C, 0);
  for (int c = 0; c < C; ++c) {
    const int cv = V + c;
    std::vector<int> es;
    for (int x : adj[cv]) es.push_back(edge_index.at({x, cv}));
    std::vector<double> th;
    for (int i : es) {
      const D2 w = dbl(ray[i]);
      th.push_back(deg_of(w.x, w.y));
    }
    // Normalise by rotation/reflection so that the section counts satisfy
    // n0 >= n2 >= n1.
    int best_s = 0, best_k = 0;
    for (int s : {1, -1}) {
      for (int k = 0; k < 3 && best_s == 0; ++k) {
        std::array<int, 3> cnt{};
        for (double t : th) ++cnt[static_cast<int>(wrap360(s * t + 120 * k) / 120.0) % 3];
        if (cnt[0] >= cnt[2] && cnt[2] >= cnt[1]) best_s = s, best_k = k;
      }
      if (best_s) break;
    }
    std::array<double, 3> tn;
    std::array<int, 3> sec;
    std::array<int, 3> cnt{};
    for (int i = 0; i < 3; ++i) {
      tn[i] = wrap360(best_s * th[i] + 120 * best_k);
      sec[i] = static_cast<int>(tn[i] / 120.0) % 3;
      ++cnt[sec[i]];
    }
    std::array<int, 3> tgt_n{}, dir_n{}, level{};
    if (cnt[0] == 1) {
      pe.approach_case[c] = 1;
      for (int i = 0; i < 3; ++i) tgt_n[i] = 120 * sec[i], dir_n[i] = 1, level[i] = 1;
    } else {
      std::vector<int> in0;
      int other = -1;
      for (int i = 0; i < 3; ++i) (sec[i] == 0 ? in0.push_back(i) : void(other = i));
      std::sort(in0.begin(), in0.end(), [&](int a, int b) { return tn[a] < tn[b]; });
      tgt_n[in0[0]] = 0, dir_n[in0[0]] = 1, level[in0[0]] = 1;
      tgt_n[in0[1]] = 120, dir_n[in0[1]] = -1, level[in0[1]] = 1;
      if (cnt[0] == 2) {
        pe.approach_case[c] = 2;
        tgt_n[other] = 240, dir_n[other] = 1, level[other] = 1;
      } else {
        pe.approach_case[c] = 3;
        tgt_n[in0[2]] = 240, dir_n[in0[2]] = -1, level[in0[2]] = 2;
      }
    }
    for (int i = 0; i < 3; ++i) {
      const int ch = es[i];
      const double tau = wrap360(best_s * (tgt_n[i] - 120.0 * best_k));
      const int k = static_cast<int>(std::lround(tau / 120.0)) % 3;
      target[ch] = k;
      EndRoute r;
      r.routed = true;
      r.rho = level[i] * dl1[cv] / 3;
      r.from_deg = 120.0 * k;
      r.dir = best_s * dir_n[i];
      const Point2 u = approach_direction(k, digits);
      r.q = rounded(e.coords[cv] + r.rho * u, digits);
      clause_route[ch] = r;
    }
  }

  // Variable ends: fan out when two edges leave too close together.
  std::vector<EndRoute> var_route(g.edges.size());
  for (int x = 0; x < V; ++x) {
    const int deg = static_cast<int>(adj[x].size());
    if (deg < 2) continue;
    std::vector<std::pair<double, int>> order;
    for (int cv : adj[x]) order.emplace_back(deg_of(pos[cv].x - pos[x].x, pos[cv].y - pos[x].y), edge_index.at({x, cv}));
    std::sort(order.begin(), order.end());
    double min_gap = 360;
    for (int i = 0; i < deg; ++i)
      min_gap = std::min(min_gap, wrap360(order[(i + 1) % deg].first - order[i].first));
    if (min_gap >= opt.fan_threshold_deg) continue;

    const double step = 360.0 / deg;
    const double margin = std::min(1.0, 0.4 * min_gap);
    const int masks = deg <= 12 ? (1 << deg) : 1;
    int best_levels = 99;
    double best_rot = 1e9;
    std::vector<double> best_phi, best_sweep;
    std::vector<int> best_lvl;
    for (double off = 0; off < 360; off += 1) {
      std::vector<double> phi(deg), sweep(deg);
      for (int i = 0; i < deg; ++i) phi[i] = wrap360(order[0].first + off + i * step);
      // Bit i of mask sends edge i the long way round.
      for (int mask = 0; mask < masks; ++mask) {
        bool ok = true;
        for (int i = 0; i < deg && ok; ++i) {
          sweep[i] = signed_diff(phi[i], order[i].first);
          if (mask >> i & 1) sweep[i] += sweep[i] > 0 ? -360 : 360;
          if (std::fabs(sweep[i]) > 300) ok = false;
        }
        if (!ok) continue;
        // less[i][j]: ring of i must be strictly inside ring of j.
        std::vector<std::vector<bool>> less(deg, std::vector<bool>(deg, false));
        for (int i = 0; i < deg && ok; ++i)
          for (int j = 0; j < deg && ok; ++j) {
            if (i == j) continue;
            const bool radial_in = in_arc(phi[i], sweep[i], phi[j], margin);
            const bool ray_in = in_arc(phi[i], sweep[i], order[j].first, margin);
            if (radial_in && ray_in) ok = false;
            if (radial_in) less[j][i] = true;
            if (ray_in) less[i][j] = true;
          }
        if (!ok) continue;
        // Longest-path levels; reject cycles.
        std::vector<int> lvl(deg, 1);
        for (int round = 0; round <= deg; ++round) {
          bool changed = false;
          for (int i = 0; i < deg; ++i)
            for (int j = 0; j < deg; ++j)
              if (less[i][j] && lvl[j] <= lvl[i]) lvl[j] = lvl[i] + 1, changed = true;
          if (!changed) break;
          if (round == deg) ok = false;
        }
        if (!ok) continue;
        const int levels = *std::max_element(lvl.begin(), lvl.end());
        double rot = 0;
        for (int i = 0; i < deg; ++i) rot = std::max(rot, std::fabs(sweep[i]));
        if (levels < best_levels || (levels == best_levels && rot < best_rot - 1e-9)) {
          best_levels = levels, best_rot = rot, best_phi = phi, best_sweep = sweep, best_lvl = lvl;
        }
      }
    }
    if (best_phi.empty()) throw std::runtime_error("no fan-out found at variable " + std::to_string(x + 1));
    pe.fanned.push_back(x);
    const Rational spacing = dl1[x] / (best_levels + 1);
    pe.ring_spacing[x] = spacing;
    for (int i = 0; i < deg; ++i) {
      const int ch = order[i].second;
      EndRoute r;
      r.routed = true;
      r.rho = best_lvl[i] * spacing;
      const double a = best_phi[i] * kPi / 180.0;
      const Point2 u = from_dbl(std::cos(a), std::sin(a), 8);
      r.q = ring_point(e.coords[x], r.rho, u, digits);
      const D2 qd = dbl(r.q - e.coords[x]);
      r.from_deg = deg_of(qd.x, qd.y);
      r.dir = best_sweep[i] >= 0 ? 1 : -1;
      var_route[ch] = r;
    }
  }

  // Assemble the chains and cut sharp corners.
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto [x, cv] = g.edges[i];
    const double s = to_double(dl1[x] < dl1[cv] ? dl1[x] : dl1[cv]) / 18.0;
    Chain ch;
    ch.var = x;
    ch.clause = cv - V;
    ch.target = target[i];
    const Point2 dir_xc = e.coords[cv] - e.coords[x];
    auto head = route_end(e.coords[x], var_route[i], dir_xc, digits);
    auto tail = route_end(e.coords[cv], clause_route[i], ray[i], digits);
    if (bent[i]) {
      tail.push_back(ring_point(e.coords[cv], dl1[cv], ray[i], digits));
      tail.push_back(ring_point(e.coords[cv], dl1_outer[cv], e.coords[x] - e.coords[cv], digits));
    }
    for (auto& p : head) push_unique(ch.pts, p);
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) push_unique(ch.pts, *it);
    ch.pts = chamfer(std::move(ch.pts), s, opt.chamfer_deg, digits);
    pe.chains.push_back(std::move(ch));
    if (bent[i]) pe.prebent.push_back(static_cast<int>(i));
  }
  return pe;
}

Rational shortest_approach(const PolyEmbedding& pe) {
  double best = std::numeric_limits<double>::infinity();
  for (auto& c : pe.chains) {
    const D2 a = dbl(c.pts[c.pts.size() - 2]), b = dbl(c.pts.back());
    best = std::min(best, seg_len(a, b));
  }
  const int digits = 9 - static_cast<int>(std::floor(std::log10(best)));
  return round_down_to_decimals(from_double(best, 17), std::max(digits, 1));
}

std::size_t segment_count(const PolyEmbedding& pe) {
  std::size_t k = 0;
  for (auto& c : pe.chains) k += c.pts.size() - 1;
  return k;
}

std::vector<std::string> check_D1_D2(const PolyEmbedding& pe, const Rational& delta) {
  std::vector<std::string> bad;
  struct Seg {
    int chain, idx;
    Segment s;
    double minx, maxx, miny, maxy;
  };
  std::vector<Seg> segs;
  const Rational d2 = delta * delta;
  for (std::size_t c = 0; c < pe.chains.size(); ++c) {
    const auto& pts = pe.chains[c].pts;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      Seg sg{static_cast<int>(c), static_cast<int>(k), {pts[k], pts[k + 1]}, 0, 0, 0, 0};
      const D2 a = dbl(pts[k]), b = dbl(pts[k + 1]);
      sg.minx = std::min(a.x, b.x), sg.maxx = std::max(a.x, b.x);
      sg.miny = std::min(a.y, b.y), sg.maxy = std::max(a.y, b.y);
      if (sq_dist(sg.s.a, sg.s.b) < d2)
        bad.push_back("D1: chain " + std::to_string(c) + " segment " + std::to_string(k) + " shorter than delta");
      segs.push_back(std::move(sg));
    }
  }
  const double dd = to_double(delta) * 1.001 + 1e-300;
  auto vertex_id = [&](const Point2& p) {
    for (std::size_t v = 0; v < pe.vertex.size(); ++v)
      if (pe.vertex[v] == p) return static_cast<int>(v);
    return -1;
  };
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto& A = segs[i];
      const auto& B = segs[j];
      if (A.maxx + dd < B.minx || B.maxx + dd < A.minx || A.maxy + dd < B.miny || B.maxy + dd < A.miny) continue;
      const bool consecutive = A.chain == B.chain && std::abs(A.idx - B.idx) == 1;
      if (consecutive) {
        if (segments_properly_intersect(A.s, B.s))
          bad.push_back("chain " + std::to_string(A.chain) + " folds back at vertex " + std::to_string(std::max(A.idx, B.idx)));
        continue;
      }
      if (segments_intersect(A.s, B.s)) {
        // Allowed only at a shared graph vertex.
        bool ok = false;
        for (const Point2* p : {&A.s.a, &A.s.b})
          if ((*p == B.s.a || *p == B.s.b) && vertex_id(*p) >= 0 && !segments_properly_intersect(A.s, B.s)) ok = true;
        if (!ok)
          bad.push_back("chains " + std::to_string(A.chain) + " and " + std::to_string(B.chain) + " intersect");
        continue;
      }
      if (sq_dist_segments(A.s, B.s) < d2)
        bad.push_back("D2: chains " + std::to_string(A.chain) + "/" + std::to_string(B.chain) + " segments " +
                      std::to_string(A.idx) + "/" + std::to_string(B.idx) + " closer than delta");
    }
  }
  return bad;
}

}  // namespace redist
