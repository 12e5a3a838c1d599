#include <algorithm>
#include <cmath>
#include <limits>

#include "redist/embed.hpp"

namespace redist {

namespace {

struct IP {
  long long x, y;
  friend bool operator==(const IP&, const IP&) = default;
};

int orient(IP a, IP b, IP c) {
  const long long v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

bool on_seg(IP p, IP a, IP b) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool seg_cross(IP a, IP b, IP c, IP d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  return on_seg(c, a, b) || on_seg(d, a, b) || on_seg(a, c, d) || on_seg(b, c, d);
}

// Infinity-norm distance from p to segment ab.
double inf_dist(double px, double py, double ax, double ay, double bx, double by) {
  const double ux = px - ax, uy = py - ay, dx = bx - ax, dy = by - ay;
  auto f = [&](double t) { return std::max(std::fabs(ux - t * dx), std::fabs(uy - t * dy)); };
  double best = std::min(f(0), f(1));
  for (double t : {dx - dy != 0 ? (ux - uy) / (dx - dy) : -1.0, dx + dy != 0 ? (ux + uy) / (dx + dy) : -1.0,
                   dx != 0 ? ux / dx : -1.0, dy != 0 ? uy / dy : -1.0})
    if (t > 0 && t < 1) best = std::min(best, f(t));
  return best;
}

// Variable clearance counts this many times the clause clearance.
constexpr double kVarWeight = 4;

class Spreader {
 public:
  Spreader(const GridEmbedding& e, const IncidenceGraph& g, long long scale) : g_(g), edges_(e.edges) {
    for (auto& p : e.coords) pos_.push_back({floor_of(p.x * static_cast<long>(scale)).get_si(), floor_of(p.y * static_cast<long>(scale)).get_si()});
    adj_ = g.adjacency();
    inc_.assign(pos_.size(), {});
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      inc_[edges_[k].first].push_back(static_cast<int>(k));
      inc_[edges_[k].second].push_back(static_cast<int>(k));
    }
  }

  double score() const {
    double length = 0;
    for (auto [a, b] : edges_) length += std::hypot(double(pos_[a].x - pos_[b].x), double(pos_[a].y - pos_[b].y));
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < pos_.size(); ++v) {
      if (adj_[v].empty()) continue;
      const double c = clearance(static_cast<int>(v));
      m = std::min(m, g_.is_clause(static_cast<int>(v)) ? c * bend_factor(static_cast<int>(v)) : kVarWeight * c);
    }
    return length / m;
  }

  // Whether moving v to p keeps the drawing plane.
  bool can_move(int v, IP p) const {
    for (std::size_t w = 0; w < pos_.size(); ++w)
      if (static_cast<int>(w) != v && pos_[w] == p) return false;
    auto at = [&](int u) { return u == v ? p : pos_[u]; };
    for (int k : inc_[v]) {
      const auto [a, b] = edges_[k];
      const IP A = at(a), B = at(b);
      for (std::size_t w = 0; w < pos_.size(); ++w)
        if (static_cast<int>(w) != a && static_cast<int>(w) != b && on_seg(pos_[w], A, B)) return false;
      for (std::size_t l = 0; l < edges_.size(); ++l) {
        if (static_cast<int>(l) == k) continue;
        const auto [c, d] = edges_[l];
        const IP C = at(c), D = at(d);
        const bool share = c == a || c == b || d == a || d == b;
        if (!share) {
          if (seg_cross(A, B, C, D)) return false;
        } else {
          // Two edges at a common vertex must not overlap.
          const IP mid = (c == a || c == b) ? (c == a ? A : B) : (d == a ? A : B);
          const IP o1 = (A == mid) ? B : A, o2 = (C == mid) ? D : C;
          if (orient(mid, o1, o2) == 0 && (o1.x - mid.x) * (o2.x - mid.x) + (o1.y - mid.y) * (o2.y - mid.y) > 0)
            return false;
        }
      }
    }
    // v must not land on an edge it is not part of.
    for (std::size_t l = 0; l < edges_.size(); ++l) {
      const auto [c, d] = edges_[l];
      if (c != v && d != v && on_seg(p, pos_[c], pos_[d])) return false;
    }
    return true;
  }

  void run(int rounds) {
    static const long long steps[] = {-8, -4, -2, -1, 0, 1, 2, 4, 8};
    double best = score();
    for (int r = 0; r < rounds; ++r) {
      bool improved = false;
      for (std::size_t v = 0; v < pos_.size(); ++v) {
        const IP orig = pos_[v];
        IP best_p = orig;
        for (long long dx : steps)
          for (long long dy : steps) {
            if (dx == 0 && dy == 0) continue;
            const IP p{orig.x + dx, orig.y + dy};
            if (!can_move(static_cast<int>(v), p)) continue;
            pos_[v] = p;
            const double s = score();
            pos_[v] = orig;
            if (s < best * (1 - 1e-9)) best = s, best_p = p;
          }
        if (!(best_p == orig)) {
          pos_[v] = best_p;
          improved = true;
        }
      }
      if (!improved) break;
    }
  }

  GridEmbedding result(const GridEmbedding& e) const {
    long long mx = std::numeric_limits<long long>::max(), my = mx, Mx = 0, My = 0;
    for (auto& p : pos_) mx = std::min(mx, p.x), my = std::min(my, p.y);
    GridEmbedding out = e;
    for (std::size_t v = 0; v < pos_.size(); ++v) {
      out.coords[v] = {Rational(static_cast<long>(pos_[v].x - mx)), Rational(static_cast<long>(pos_[v].y - my))};
      Mx = std::max(Mx, pos_[v].x - mx), My = std::max(My, pos_[v].y - my);
    }
    out.grid_side = static_cast<long>(std::max(Mx, My) + 1);
    return out;
  }

 private:
  double clearance(int v) const {
    double c = std::numeric_limits<double>::infinity();
    const double px = static_cast<double>(pos_[v].x), py = static_cast<double>(pos_[v].y);
    for (std::size_t w = 0; w < pos_.size(); ++w)
      if (static_cast<int>(w) != v) c = std::min(c, std::max(std::fabs(px - pos_[w].x), std::fabs(py - pos_[w].y)));
    for (auto [a, b] : edges_)
      if (a != v && b != v)
        c = std::min(c, inf_dist(px, py, double(pos_[a].x), double(pos_[a].y), double(pos_[b].x), double(pos_[b].y)));
    return c;
  }

  // Clause edges close to the avoided directions get their ring halved.
  double bend_factor(int c) const {
    static const double T[] = {0, 120, 240, 22.5, 67.5, 112.5, 157.5};
    for (int x : adj_[c]) {
      double a = std::atan2(double(pos_[x].y - pos_[c].y), double(pos_[x].x - pos_[c].x)) * 180 / M_PI;
      if (a < 0) a += 360;
      for (double t : T) {
        const double d = std::fabs(std::remainder(a - t, 360.0));
        if (d < 1.5) return 0.5;
      }
    }
    return 1;
  }

  const IncidenceGraph& g_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<IP> pos_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> inc_;
};

}  // namespace

double spread_score(const GridEmbedding& e, const IncidenceGraph& g) { return Spreader(e, g, 1).score(); }

GridEmbedding spread_embedding(const GridEmbedding& e, const IncidenceGraph& g, int max_rounds) {
  Spreader s(e, g, 4);
  s.run(max_rounds);
  return s.result(e);
}

}  // namespace redist
