#include "redist/towns.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "redist/highprec.hpp"
#include "redist/ztable.hpp"

namespace redist {

std::string to_string(TownKind k) {
  switch (k) {
    case TownKind::BigClause: return "big";
    case TownKind::SmallClause: return "small";
    case TownKind::ClauseAdjacent: return "adjacent";
    case TownKind::Edge: return "edge";
  }
  return "?";
}

TownKind parse_town_kind(const std::string& s) {
  if (s == "big") return TownKind::BigClause;
  if (s == "small") return TownKind::SmallClause;
  if (s == "adjacent") return TownKind::ClauseAdjacent;
  if (s == "edge") return TownKind::Edge;
  throw std::invalid_argument("unknown town kind: " + s);
}

std::size_t TownLayout::count(TownKind k) const {
  return static_cast<std::size_t>(
      std::count_if(towns.begin(), towns.end(), [k](const Town& t) { return t.kind == k; }));
}

namespace {

struct P {
  double x, y;
};

P dp(const Point2& p) { return {to_double(p.x), to_double(p.y)}; }

double d2(P a, P b) { return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y); }

// Squared distance from p to segment ab and the parameter of the nearest point.
double seg_d2(P p, P a, P b, double* t_out = nullptr) {
  const double vx = b.x - a.x, vy = b.y - a.y;
  const double l2 = vx * vx + vy * vy;
  double t = l2 > 0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / l2 : 0;
  t = std::clamp(t, 0.0, 1.0);
  if (t_out) *t_out = t;
  return d2(p, {a.x + t * vx, a.y + t * vy});
}

Point2 nearest_on_segment(const Point2& p, const Segment& s) {
  const Point2 v = s.b - s.a;
  const Rational l2 = dot(v, v);
  Rational t = dot(p - s.a, v) / l2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return s.a + t * v;
}

int literal_sign(const Cnf3& f, int clause, int var) {
  for (const auto& l : f.clauses[clause])
    if (l.variable == var) return l.negated ? -1 : 1;
  throw std::logic_error("variable not in clause");
}

class TownGrid {
 public:
  explicit TownGrid(double cell) : cell_(cell) {}

  void insert(int id, P p) { cells_[key(cx(p.x), cy(p.y))].push_back(id); }

  // Removes the most recently inserted id of its cell.
  void erase(int id, P p) {
    auto& v = cells_[key(cx(p.x), cy(p.y))];
    if (!v.empty() && v.back() == id) v.pop_back();
  }

  // Ids in the 3x3 block of cells around p.
  void near(P p, std::vector<int>& out) const {
    out.clear();
    const long ix = cx(p.x), iy = cy(p.y);
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find(key(ix + dx, iy + dy));
        if (it != cells_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
      }
  }

 private:
  long cx(double x) const { return static_cast<long>(std::floor(x / cell_)); }
  long cy(double y) const { return static_cast<long>(std::floor(y / cell_)); }
  static long long key(long x, long y) { return (static_cast<long long>(x) << 32) ^ (y & 0xffffffffLL); }

  double cell_;
  std::unordered_map<long long, std::vector<int>> cells_;
};

struct SegRef {
  P a, b;
  int chain;
  int var;
  int k;  // index within the chain
};

class Placer {
 public:
  Placer(const PolyEmbedding& pe, const Cnf3& f, TownLayout& layout)
      : pe_(pe), f_(f), L_(layout), prm_(layout.params), grid_(2.1 * to_double(layout.params.eta)) {
    eta_ = to_double(prm_.eta);
    reach2_ = to_double((prm_.eta + prm_.eps) * (prm_.eta + prm_.eps));
    z_ = build_z_table(prm_.eta, prm_.p, prm_.t);
    for (auto& z : z_) zd_.push_back(dp(z));
    for (std::size_t c = 0; c < pe.chains.size(); ++c) {
      const auto& pts = pe.chains[c].pts;
      std::vector<Segment> ex;
      for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        ex.push_back({pts[k], pts[k + 1]});
        segs_.push_back({dp(pts[k]), dp(pts[k + 1]), static_cast<int>(c), pe.chains[c].var, static_cast<int>(k)});
      }
      exact_.push_back(std::move(ex));
    }
    var_clauses_.assign(pe.num_vars, {});
    for (auto& ch : pe.chains) var_clauses_[ch.var].push_back(dp(pe.clause_vertex(ch.clause)));
    for (std::size_t id = 0; id < L_.towns.size(); ++id) {
      pos_.push_back(dp(L_.towns[id].loc));
      grid_.insert(static_cast<int>(id), pos_.back());
    }
  }

  WalkStats run() {
    const int V = pe_.num_vars;
    // Chain arriving at each (clause, approach direction).
    std::vector<std::array<int, 3>> chain_at(pe_.num_clauses, {-1, -1, -1});
    for (std::size_t c = 0; c < pe_.chains.size(); ++c) chain_at[pe_.chains[c].clause][pe_.chains[c].target] = static_cast<int>(c);

    // Seeds, one per clause-adjacent town, in clause and table order.
    std::vector<std::array<std::array<int, 2>, 3>> seed(pe_.num_clauses);
    for (int c = 0; c < pe_.num_clauses; ++c)
      for (int k = 0; k < 3; ++k)
        for (int side = 0; side < 2; ++side) {
          const int ch = chain_at[c][k];
          const int u = side == 0 ? L_.clause_pairs[c][k].first : L_.clause_pairs[c][k].second;
          seed[c][k][side] = place_seed(u, ch);
        }

    L_.cycles.assign(V, {});
    for (int x = 0; x < V; ++x) {
      // Chains of x in counterclockwise order of their first segment.
      std::vector<std::pair<double, int>> order;
      for (std::size_t c = 0; c < pe_.chains.size(); ++c) {
        if (pe_.chains[c].var != x) continue;
        const P a = dp(pe_.chains[c].pts[0]), b = dp(pe_.chains[c].pts[1]);
        order.emplace_back(std::atan2(b.y - a.y, b.x - a.x), static_cast<int>(c));
      }
      std::sort(order.begin(), order.end());
      const int deg = static_cast<int>(order.size());
      auto& cycle = L_.cycles[x];
      for (int i = 0; i < deg; ++i) {
        const Chain& from = pe_.chains[order[i].second];
        const int to_idx = order[(i + 1) % deg].second;
        const Chain& to = pe_.chains[to_idx];
        const int start_ca = L_.clause_pairs[from.clause][from.target].first;
        const int end_ca = L_.clause_pairs[to.clause][to.target].second;
        const int start = seed[from.clause][from.target][0];
        const int end = seed[to.clause][to.target][1];
        const bool odd = literal_sign(f_, from.clause, x) != literal_sign(f_, to.clause, x);
        cycle.push_back(start_ca);
        auto towns = walk(x, start, end, to_idx, odd);
        cycle.insert(cycle.end(), towns.begin(), towns.end());
        cycle.push_back(end_ca);
      }
      for (std::size_t k = 0; k < cycle.size(); ++k)
        if (L_.towns[cycle[k]].kind == TownKind::Edge) L_.towns[cycle[k]].index = static_cast<int>(k);
    }
    return stats_;
  }

 private:
  int add_town(const Point2& p, int owner) {
    L_.towns.push_back({TownKind::Edge, p, owner, 0});
    pos_.push_back(dp(p));
    const int id = static_cast<int>(L_.towns.size()) - 1;
    grid_.insert(id, pos_.back());
    return id;
  }

  // Drops the most recent town.
  void pop_town() {
    const int id = static_cast<int>(L_.towns.size()) - 1;
    grid_.erase(id, pos_.back());
    L_.towns.pop_back();
    pos_.pop_back();
  }

  // Segments within r of p, optionally only those of one variable.
  void near_segments(P p, double r, std::vector<int>& out) const {
    out.clear();
    const double r2 = r * r;
    for (std::size_t s = 0; s < segs_.size(); ++s) {
      const auto& g = segs_[s];
      if (std::min(g.a.x, g.b.x) - r > p.x || std::max(g.a.x, g.b.x) + r < p.x) continue;
      if (std::min(g.a.y, g.b.y) - r > p.y || std::max(g.a.y, g.b.y) + r < p.y) continue;
      if (seg_d2(p, g.a, g.b) <= r2) out.push_back(static_cast<int>(s));
    }
  }

  // Candidates w + z_j sorted by score, then j. With score_chain >= 0 the
  // target distance is measured to that chain only.
  std::vector<std::pair<double, int>> candidates(int cur, int var, int score_chain, const std::vector<int>& near_towns,
                                                 const std::vector<int>& near_segs) const {
    const P w = pos_[cur];
    const double m = 1e-9;
    const double lo = eta_ * eta_ * (1 + m), hi = 2.25 * eta_ * eta_ * (1 - m);
    const double clause_r2 = 1.8225 * eta_ * eta_ * (1 + m);
    const double target = 1.5625 * eta_ * eta_;
    const double reach = reach2_ * (1 + m);
    std::vector<std::pair<double, int>> out;
    for (int j = 0; j < static_cast<int>(zd_.size()); ++j) {
      const P p{w.x + zd_[j].x, w.y + zd_[j].y};
      bool ok = true;
      for (int o : near_towns)
        if (o != cur && d2(p, pos_[o]) <= reach) {
          ok = false;
          break;
        }
      if (!ok) continue;
      double best_x = std::numeric_limits<double>::infinity(), best_all = best_x, best_t = 0;
      int best_s = -1;
      for (int s : near_segs) {
        const auto& g = segs_[s];
        double t;
        const double dd = seg_d2(p, g.a, g.b, &t);
        if (score_chain >= 0 ? g.chain == score_chain : true) best_all = std::min(best_all, dd);
        if (g.var == var && dd < best_x) best_x = dd, best_s = s, best_t = t;
      }
      if (best_s < 0 || best_x < lo || best_x > hi) continue;
      const auto& g = segs_[best_s];
      const P q{g.a.x + best_t * (g.b.x - g.a.x), g.a.y + best_t * (g.b.y - g.a.y)};
      for (const P& c : var_clauses_[var])
        if (d2(q, c) <= clause_r2) {
          ok = false;
          break;
        }
      if (!ok) continue;
      out.emplace_back(std::fabs(best_all - target), j);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool verify_exact(const Point2& p, int cur, int var, const std::vector<int>& near_towns,
                    const std::vector<int>& near_segs) const {
    const Rational reach2 = (prm_.eta + prm_.eps) * (prm_.eta + prm_.eps);
    for (int o : near_towns)
      if (o != cur && sq_dist(p, L_.towns[o].loc) <= reach2) return false;
    const Rational e2 = prm_.eta * prm_.eta;
    Rational best;
    const Segment* best_seg = nullptr;
    for (int s : near_segs) {
      const auto& g = segs_[s];
      if (g.var != var) continue;
      const Segment& seg = exact_[g.chain][g.k];
      const Rational dd = sq_dist_point_segment(p, seg);
      if (!best_seg || dd < best) best = dd, best_seg = &seg;
    }
    if (!best_seg || best < e2 || best > Rational(9, 4) * e2) return false;
    const Point2 q = nearest_on_segment(p, *best_seg);
    const Rational clause_r2 = Rational(729, 400) * e2;
    for (auto& ch : pe_.chains)
      if (ch.var == var && sq_dist(q, pe_.clause_vertex(ch.clause)) <= clause_r2) return false;
    return true;
  }

  // Candidates for a town next to `cur`, best first.
  std::vector<std::pair<double, int>> options(int cur, int var, int score_chain) {
    std::vector<int> near_towns, near_segs;
    grid_.near(pos_[cur], near_towns);
    near_segments(pos_[cur], 3 * eta_, near_segs);
    return candidates(cur, var, score_chain, near_towns, near_segs);
  }

  // Places the first candidate from position `from` on that passes the exact
  // check; returns its id or -1 and advances `from`.
  int try_next(int cur, int var, const std::vector<std::pair<double, int>>& cands, std::size_t& from) {
    std::vector<int> near_towns, near_segs;
    grid_.near(pos_[cur], near_towns);
    near_segments(pos_[cur], 3 * eta_, near_segs);
    while (from < cands.size()) {
      const int j = cands[from++].second;
      const Point2 p = L_.towns[cur].loc + z_[j];
      if (verify_exact(p, cur, var, near_towns, near_segs)) return add_town(p, var);
      ++stats_.rejected_exact;
    }
    return -1;
  }

  int step(int cur, int var, int score_chain) {
    const auto cands = options(cur, var, score_chain);
    std::size_t from = 0;
    return try_next(cur, var, cands, from);
  }

  int place_seed(int ca, int chain) {
    const int id = step(ca, pe_.chains[chain].var, chain);
    if (id < 0) throw WalkStuck("no seed next to clause-adjacent town " + std::to_string(ca));
    return id;
  }

  // Whether the walk may stop at `cur` and fill straight to `end`, which sits
  // next to the last segment of chain `to`.
  bool at_terminal(int cur, int end, int to) const {
    const auto& pts = pe_.chains[to].pts;
    const P a = dp(pts[pts.size() - 2]), b = dp(pts.back());
    const P w = pos_[cur], e = pos_[end];
    if (d2(w, e) > 1e4 * eta_ * eta_) return false;
    if (sq_dist(L_.towns[cur].loc, L_.towns[end].loc) > 10000 * prm_.eta * prm_.eta) return false;
    auto side = [&](P p) { return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x); };
    if ((side(w) > 0) != (side(e) > 0)) return false;
    double t;
    const double dw = seg_d2(w, a, b, &t);
    if (t <= 0 || t >= 1) return false;
    // The final segment must be the nearest piece of the variable's chains.
    std::vector<int> near;
    near_segments(w, 3 * eta_, near);
    for (int s : near) {
      const auto& g = segs_[s];
      if (g.var != pe_.chains[to].var || (g.chain == to && g.k + 2 == static_cast<int>(pts.size()))) continue;
      if (seg_d2(w, g.a, g.b) < dw) return false;
    }
    return true;
  }

  // Straight fill from cur to end: returns the new towns in order, or
  // nothing (and no new towns) when the fill does not fit.
  std::optional<std::vector<int>> fill(int cur, int end, int to, int var) {
    const int digits = prm_.town_digits();
    set_working_digits(digits + 40);
    const Point2& W = L_.towns[cur].loc;
    const Point2& E = L_.towns[end].loc;
    const BigFloat wx = to_big(W.x), wy = to_big(W.y);
    const BigFloat dx = to_big(E.x) - wx, dy = to_big(E.y) - wy;
    const BigFloat len = boost::multiprecision::sqrt(dx * dx + dy * dy);
    const BigFloat eta = to_big(prm_.eta);
    const BigFloat rr = boost::multiprecision::floor(len / (BigFloat(195) / 100 * eta));
    const long r = rr.convert_to<long>();
    if (r < 1) return std::nullopt;
    const BigFloat q = len / r;
    if (q < BigFloat(195) / 100 * eta || q > BigFloat(199) / 100 * eta) return std::nullopt;
    const BigFloat h = boost::multiprecision::sqrt(BigFloat(995) / 1000 * eta * (BigFloat(995) / 1000 * eta) - q * q / 4);
    const BigFloat ux = dx / len, uy = dy / len;
    // Offset the staggered row away from the chain.
    const auto& pts = pe_.chains[to].pts;
    const P a = dp(pts[pts.size() - 2]), b = dp(pts.back());
    const double mid_x = to_double(W.x) + 0.5 * dx.convert_to<double>(), mid_y = to_double(W.y) + 0.5 * dy.convert_to<double>();
    const double nx = -uy.convert_to<double>(), ny = ux.convert_to<double>();
    const double up = seg_d2({mid_x + eta_ * nx, mid_y + eta_ * ny}, a, b);
    const double down = seg_d2({mid_x - eta_ * nx, mid_y - eta_ * ny}, a, b);
    const int sgn = up >= down ? 1 : -1;
    std::vector<int> out;
    for (long j = 1; j <= 2 * r - 1; ++j) {
      const BigFloat along = q * j / 2;
      const BigFloat off = (j % 2 == 1) ? h * sgn : BigFloat(0);
      const Point2 p{round_big(wx + along * ux - off * uy, digits), round_big(wy + along * uy + off * ux, digits)};
      out.push_back(add_town(p, var));
    }
    // Local exact check: chain neighbours within the window, everything else
    // farther than eta + eps.
    const Rational lo = Rational(99, 100) * Rational(99, 100) * prm_.eta * prm_.eta;
    const Rational hi = prm_.eta * prm_.eta;
    const Rational reach2 = (prm_.eta + prm_.eps) * (prm_.eta + prm_.eps);
    std::vector<int> seq{cur};
    seq.insert(seq.end(), out.begin(), out.end());
    seq.push_back(end);
    std::vector<int> near;
    bool ok = true;
    for (std::size_t k = 1; k + 1 < seq.size() && ok; ++k) {
      const int id = seq[k];
      grid_.near(pos_[id], near);
      for (int o : near) {
        if (o == id) continue;
        const Rational dd = sq_dist(L_.towns[id].loc, L_.towns[o].loc);
        if (o == seq[k - 1] || o == seq[k + 1]) ok = ok && dd >= lo && dd <= hi;
        else ok = ok && dd > reach2;
        if (!ok) break;
      }
    }
    if (!ok) {
      for (std::size_t k = 0; k < out.size(); ++k) pop_town();
      return std::nullopt;
    }
    stats_.fill += static_cast<long>(out.size());
    return out;
  }

  // Edge towns of one component from the start seed to the end seed. A
  // greedy walk; when it cannot go on it backs up and takes the next-best
  // candidate of an earlier town, up to kBacktrackDepth towns back.
  std::vector<int> walk(int var, int start, int end, int to, bool odd) {
    static constexpr std::size_t kBacktrackDepth = 64;
    static constexpr long kBacktrackBudget = 20000;
    double length = 0;
    for (auto& g : segs_)
      if (g.var == var) length += std::sqrt(d2(g.a, g.b));
    const std::size_t limit = static_cast<std::size_t>(4 * length / eta_) + 1000;
    std::vector<int> towns{start};
    // Candidate lists of the most recent towns: (list, next index).
    std::deque<std::pair<std::vector<std::pair<double, int>>, std::size_t>> pending;
    // Index of the first town where the walk could stop but had the wrong parity.
    std::size_t first_terminal = 0;
    bool seen_terminal = false;
    long backtracks = 0;
    // Total count is i + 2r + 1, so i must have the opposite parity of the target.
    const std::size_t want = odd ? 0 : 1;
    auto stuck = [&](const std::string& why) {
      return WalkStuck(why + " for variable " + std::to_string(var + 1) + " after " + std::to_string(towns.size() - 1) +
                       " steps at (" + std::to_string(pos_[towns.back()].x) + ", " +
                       std::to_string(pos_[towns.back()].y) + ")");
    };
    bool fresh = true;  // the top town has not been examined yet
    while (true) {
      const int cur = towns.back();
      const std::size_t i = towns.size() - 1;
      if (fresh) {
        fresh = false;
        if (at_terminal(cur, end, to)) {
          if (i % 2 == want) {
            if (auto f = fill(cur, end, to, var)) {
              towns.insert(towns.end(), f->begin(), f->end());
              towns.push_back(end);
              return towns;
            }
          } else if (!seen_terminal) {
            seen_terminal = true;
            first_terminal = i;
          }
        }
        pending.emplace_back(std::vector<std::pair<double, int>>{}, 0);
        if (!(seen_terminal && i >= first_terminal + 2)) pending.back().first = options(cur, var, -1);
        if (pending.size() > kBacktrackDepth) pending.pop_front();
      }
      auto& [cands, from] = pending.back();
      const int next = try_next(cur, var, cands, from);
      if (next >= 0) {
        towns.push_back(next);
        ++stats_.steps;
        fresh = true;
        if (towns.size() > limit) throw stuck("walk did not reach its end");
        continue;
      }
      // Back up one town.
      if (towns.size() == 1 || pending.size() <= 1 || ++backtracks > kBacktrackBudget) throw stuck("walk stuck");
      pending.pop_back();
      towns.pop_back();
      pop_town();
      --stats_.steps;
      ++stats_.backtracks;
      if (seen_terminal && towns.size() - 1 < first_terminal) seen_terminal = false;
    }
  }

  const PolyEmbedding& pe_;
  const Cnf3& f_;
  TownLayout& L_;
  const ReductionParams& prm_;
  TownGrid grid_;
  double eta_ = 0, reach2_ = 0;
  std::vector<Point2> z_;
  std::vector<P> zd_;
  std::vector<SegRef> segs_;
  std::vector<std::vector<Segment>> exact_;
  std::vector<std::vector<P>> var_clauses_;
  std::vector<P> pos_;
  WalkStats stats_;
};

}  // namespace

TownLayout place_clause_towns(const PolyEmbedding& pe, const Cnf3& f, const ReductionParams& prm) {
  TownLayout L;
  L.params = prm;
  L.num_vars = pe.num_vars;
  L.num_clauses = pe.num_clauses;
  const auto z = build_z_table(prm.eta, prm.p, prm.t);
  const int C = pe.num_clauses;
  for (int c = 0; c < C; ++c) L.towns.push_back({TownKind::BigClause, pe.clause_vertex(c), c, 0});
  for (int c = 0; c < C; ++c)
    L.towns.push_back({TownKind::SmallClause, pe.clause_vertex(c) + Point2{prm.eps, Rational(0)}, c, 0});
  L.clause_pairs.resize(C);
  L.pair_literal.resize(C);
  for (int c = 0; c < C; ++c) {
    std::vector<int> js;
    for (auto& pr : kAdjacentIndex) js.insert(js.end(), {pr[0], pr[1]});
    std::sort(js.begin(), js.end());
    std::unordered_map<int, int> id_of;
    for (int j : js) {
      id_of[j] = static_cast<int>(L.towns.size());
      L.towns.push_back({TownKind::ClauseAdjacent, pe.clause_vertex(c) + z[j], c, j});
    }
    for (int k = 0; k < 3; ++k) L.clause_pairs[c][k] = {id_of[kAdjacentIndex[k][0]], id_of[kAdjacentIndex[k][1]]};
  }
  for (auto& ch : pe.chains)
    L.pair_literal[ch.clause][ch.target] = {ch.var, literal_sign(f, ch.clause, ch.var) < 0};
  return L;
}

WalkStats place_edge_towns(const PolyEmbedding& pe, const Cnf3& f, TownLayout& layout) {
  Placer placer(pe, f, layout);
  return placer.run();
}

void canonicalize(TownLayout& layout) {
  const auto& t = layout.towns;
  std::vector<int> order(t.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(t[a].kind, t[a].owner, t[a].index) < std::tie(t[b].kind, t[b].owner, t[b].index);
  });
  std::vector<int> new_id(t.size());
  std::vector<Town> towns;
  towns.reserve(t.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_id[order[k]] = static_cast<int>(k);
    towns.push_back(t[order[k]]);
  }
  layout.towns = std::move(towns);
  for (auto& cyc : layout.cycles)
    for (int& id : cyc) id = new_id[id];
  for (auto& pairs : layout.clause_pairs)
    for (auto& pr : pairs) pr = {new_id[pr.first], new_id[pr.second]};
}

std::string params_line(const ReductionParams& prm) {
  std::ostringstream os;
  os << "params gamma=" << to_string(prm.gamma) << " d=" << to_string(prm.d) << " eta=" << to_string(prm.eta)
     << " eps=" << to_string(prm.eps) << " delta=" << to_string(prm.delta) << " p=" << prm.p
     << " mode=" << to_string(prm.mode);
  return os.str();
}

std::string dump_layout(const TownLayout& layout) {
  std::ostringstream os;
  os << params_line(layout.params) << "\n";
  for (std::size_t id = 0; id < layout.towns.size(); ++id) {
    const auto& t = layout.towns[id];
    const char prefix = t.kind == TownKind::Edge ? 'v' : 'c';
    os << "t " << id << " " << to_string(t.kind) << " " << prefix << (t.owner + 1) << " " << to_string(t.loc.x) << " "
       << to_string(t.loc.y) << "\n";
  }
  return os.str();
}

}  // namespace redist
