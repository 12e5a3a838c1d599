#include "redist/validate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace redist {

bool ValidationReport::ok() const {
  return std::all_of(failures.begin(), failures.end(), [](long n) { return n == 0; });
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (int c = 0; c < 9; ++c) os << (c ? " " : "") << static_cast<char>('a' + c) << "=" << failures[c];
  return os.str();
}

std::vector<std::pair<int, int>> reach_pairs(const TownLayout& layout) {
  const auto& towns = layout.towns;
  const Rational reach = layout.params.eta + layout.params.eps;
  const Rational reach2 = reach * reach;
  const double r = to_double(reach);
  std::vector<std::pair<double, double>> pos;
  pos.reserve(towns.size());
  for (auto& t : towns) pos.emplace_back(to_double(t.loc.x), to_double(t.loc.y));
  std::unordered_map<long long, std::vector<int>> cells;
  auto key = [](long x, long y) { return (static_cast<long long>(x) << 32) ^ (y & 0xffffffffLL); };
  auto cell = [&](double v) { return static_cast<long>(std::floor(v / r)); };
  for (std::size_t i = 0; i < towns.size(); ++i) cells[key(cell(pos[i].first), cell(pos[i].second))].push_back(static_cast<int>(i));
  std::vector<std::pair<int, int>> out;
  const double loose = r * r * (1 + 1e-6);
  for (std::size_t i = 0; i < towns.size(); ++i) {
    const long cx = cell(pos[i].first), cy = cell(pos[i].second);
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy) {
        auto it = cells.find(key(cx + dx, cy + dy));
        if (it == cells.end()) continue;
        for (int j : it->second) {
          if (j <= static_cast<int>(i)) continue;
          const double ddx = pos[i].first - pos[j].first, ddy = pos[i].second - pos[j].second;
          if (ddx * ddx + ddy * ddy > loose) continue;
          if (sq_dist(towns[i].loc, towns[j].loc) <= reach2) out.emplace_back(static_cast<int>(i), j);
        }
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class Checker {
 public:
  Checker(const TownLayout& L, std::size_t cap, ValidationReport& rep) : L_(L), cap_(cap), rep_(rep) {
    const auto n = L.towns.size();
    nb_.assign(n, {});
    for (auto [a, b] : reach_pairs(L)) {
      nb_[a].push_back(b);
      nb_[b].push_back(a);
    }
    for (auto& v : nb_) std::sort(v.begin(), v.end());
    const Rational eta2 = L.params.eta * L.params.eta;
    lo_ = Rational(9801, 10000) * eta2;
    hi_ = eta2;
    big_.assign(L.num_clauses, -1);
    small_.assign(L.num_clauses, -1);
    for (std::size_t id = 0; id < n; ++id) {
      const auto& t = L.towns[id];
      if (t.kind == TownKind::BigClause) big_[t.owner] = static_cast<int>(id);
      if (t.kind == TownKind::SmallClause) small_[t.owner] = static_cast<int>(id);
    }
    pair_of_.assign(n, {-1, -1});
    partner_.assign(n, -1);
    for (int c = 0; c < L.num_clauses; ++c)
      for (int k = 0; k < 3; ++k) {
        auto [a, b] = L.clause_pairs[c][k];
        pair_of_[a] = {c, k};
        pair_of_[b] = {c, k};
        partner_[a] = b;
        partner_[b] = a;
      }
    cycle_of_.assign(n, -1);
    prev_.assign(n, -1);
    next_.assign(n, -1);
    for (std::size_t v = 0; v < L.cycles.size(); ++v) {
      const auto& cyc = L.cycles[v];
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        const int id = cyc[k];
        if (cycle_of_[id] >= 0) fail('f', "town " + std::to_string(id) + " lies on two cycles");
        cycle_of_[id] = static_cast<int>(v);
        prev_[id] = cyc[(k + cyc.size() - 1) % cyc.size()];
        next_[id] = cyc[(k + 1) % cyc.size()];
      }
    }
  }

  void run() {
    const auto n = L_.towns.size();
    for (std::size_t id = 0; id < n; ++id) {
      switch (L_.towns[id].kind) {
        case TownKind::Edge: check_edge(static_cast<int>(id)); break;
        case TownKind::ClauseAdjacent: check_adjacent(static_cast<int>(id)); break;
        case TownKind::SmallClause: check_clause_town(static_cast<int>(id), 'c', big_[L_.towns[id].owner]); break;
        case TownKind::BigClause: check_clause_town(static_cast<int>(id), 'd', small_[L_.towns[id].owner]); break;
      }
      if (L_.towns[id].kind == TownKind::Edge || L_.towns[id].kind == TownKind::ClauseAdjacent)
        if (cycle_of_[id] < 0) fail('f', "town " + std::to_string(id) + " is on no cycle");
    }
    check_triangles();
    check_cycles();
    check_separation();
    const std::size_t non_clause = L_.count(TownKind::ClauseAdjacent) + L_.count(TownKind::Edge);
    if (non_clause % 2) fail('i', "odd number of non-clause towns: " + std::to_string(non_clause));
  }

 private:
  void fail(char c, const std::string& msg) {
    ++rep_.failures[c - 'a'];
    if (rep_.messages.size() < cap_) rep_.messages.push_back(std::string("(") + c + ") " + msg);
  }

  bool in_window(int a, int b) const {
    const Rational dd = sq_dist(L_.towns[a].loc, L_.towns[b].loc);
    return dd >= lo_ && dd <= hi_;
  }

  void check_edge(int id) {
    const auto& nb = nb_[id];
    bool ok = nb.size() == 2;
    for (int o : nb) ok = ok && in_window(id, o);
    if (!ok) fail('a', "edge town " + std::to_string(id) + " has " + std::to_string(nb.size()) + " towns within reach");
  }

  void check_adjacent(int id) {
    const int c = L_.towns[id].owner;
    int edges = 0;
    bool ok = true;
    bool has_partner = false, has_big = false, has_small = false;
    for (int o : nb_[id]) {
      if (o == partner_[id]) has_partner = true;
      else if (o == big_[c]) has_big = true;
      else if (o == small_[c]) has_small = true;
      else if (L_.towns[o].kind == TownKind::Edge && in_window(id, o)) ++edges;
      else ok = false;
    }
    if (!(ok && has_partner && has_big && has_small && edges == 1))
      fail('b', "clause-adjacent town " + std::to_string(id) + " has unexpected towns within reach");
  }

  void check_clause_town(int id, char check, int other) {
    const int c = L_.towns[id].owner;
    std::vector<int> want{other};
    for (int k = 0; k < 3; ++k) want.insert(want.end(), {L_.clause_pairs[c][k].first, L_.clause_pairs[c][k].second});
    std::sort(want.begin(), want.end());
    if (nb_[id] != want)
      fail(check, std::string(check == 'c' ? "small" : "big") + " clause town " + std::to_string(id) +
                      " reaches " + std::to_string(nb_[id].size()) + " towns, expected 7");
  }

  // Members of {big, small, pair} of one clause.
  bool same_group(int a, int b, int c) const {
    std::pair<int, int> key{-1, -1};
    for (int t : {a, b, c}) {
      const auto& town = L_.towns[t];
      if (town.kind == TownKind::Edge) return false;
      if (town.kind == TownKind::ClauseAdjacent) {
        if (key.first >= 0 && key != pair_of_[t]) return false;
        key = pair_of_[t];
      }
    }
    const int clause = L_.towns[a].owner;
    return L_.towns[b].owner == clause && L_.towns[c].owner == clause;
  }

  void check_triangles() {
    for (std::size_t a = 0; a < nb_.size(); ++a) {
      const auto& na = nb_[a];
      for (std::size_t i = 0; i < na.size(); ++i) {
        if (na[i] <= static_cast<int>(a)) continue;
        for (std::size_t j = i + 1; j < na.size(); ++j) {
          const int b = na[i], c = na[j];
          if (!std::binary_search(nb_[b].begin(), nb_[b].end(), c)) continue;
          if (!same_group(static_cast<int>(a), b, c))
            fail('e', "towns " + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) +
                          " are pairwise within reach");
        }
      }
    }
  }

  void check_cycles() {
    for (std::size_t v = 0; v < L_.cycles.size(); ++v) {
      const auto& cyc = L_.cycles[v];
      if (cyc.size() % 2) fail('f', "cycle of variable " + std::to_string(v + 1) + " has odd length");
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        const int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
        if (sq_dist(L_.towns[a].loc, L_.towns[b].loc) > hi_)
          fail('f', "consecutive towns " + std::to_string(a) + " and " + std::to_string(b) + " are farther than eta");
      }
      // Runs of edge towns between consecutive clause-adjacent towns.
      std::vector<std::size_t> at;
      for (std::size_t k = 0; k < cyc.size(); ++k)
        if (L_.towns[cyc[k]].kind == TownKind::ClauseAdjacent) at.push_back(k);
      for (std::size_t i = 0; i < at.size(); ++i) {
        const std::size_t p = at[i], q = at[(i + 1) % at.size()];
        const std::size_t run = (q + cyc.size() - p - 1) % cyc.size();
        const int a = cyc[p], b = cyc[q];
        if (run == 0 && partner_[a] == b) continue;
        const auto [ca, ka] = pair_of_[a];
        const auto [cb, kb] = pair_of_[b];
        const bool opposite = L_.pair_literal[ca][ka].negated != L_.pair_literal[cb][kb].negated;
        if ((run % 2 == 1) != opposite)
          fail('g', "variable " + std::to_string(v + 1) + ": " + std::to_string(run) + " edge towns between clauses " +
                        std::to_string(ca + 1) + " and " + std::to_string(cb + 1));
      }
    }
  }

  void check_separation() {
    for (std::size_t a = 0; a < nb_.size(); ++a)
      for (int b : nb_[a]) {
        if (b <= static_cast<int>(a)) continue;
        const auto& ta = L_.towns[a];
        const auto& tb = L_.towns[b];
        const bool clause_a = ta.kind != TownKind::Edge, clause_b = tb.kind != TownKind::Edge;
        if (clause_a == clause_b && ta.owner == tb.owner) continue;
        const bool seed = (ta.kind == TownKind::ClauseAdjacent && tb.kind == TownKind::Edge &&
                           (next_[a] == b || prev_[a] == b)) ||
                          (tb.kind == TownKind::ClauseAdjacent && ta.kind == TownKind::Edge &&
                           (next_[b] == static_cast<int>(a) || prev_[b] == static_cast<int>(a)));
        if (!seed) fail('h', "towns " + std::to_string(a) + " and " + std::to_string(b) + " of different features are within reach");
      }
  }

  const TownLayout& L_;
  std::size_t cap_;
  ValidationReport& rep_;
  std::vector<std::vector<int>> nb_;
  Rational lo_, hi_;
  std::vector<int> big_, small_, partner_, cycle_of_, prev_, next_;
  std::vector<std::pair<int, int>> pair_of_;
};

}  // namespace

ValidationReport validate_reduction(const TownLayout& layout, std::size_t max_messages) {
  ValidationReport rep;
  Checker(layout, max_messages, rep).run();
  return rep;
}

TownLayout scale_to_d(const TownLayout& layout, const Rational& d) {
  const Rational s = d / (layout.params.eta + layout.params.eps);
  TownLayout out = layout;
  for (auto& t : out.towns) t.loc = s * t.loc;
  out.params.eta *= s;
  out.params.eps *= s;
  out.params.d = d;
  return out;
}

}  // namespace redist
