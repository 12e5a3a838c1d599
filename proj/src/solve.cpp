#include "redist/solve.hpp"

#include <algorithm>
#include <string>

#include "redist/validate.hpp"

namespace redist {

CycleStructure derive_cycles(const TownLayout& layout) {
  const auto& towns = layout.towns;
  const std::size_t n = towns.size();
  const Rational eta2 = layout.params.eta * layout.params.eta;
  auto clause_town = [&](int id) {
    return towns[id].kind == TownKind::BigClause || towns[id].kind == TownKind::SmallClause;
  };
  std::vector<std::vector<int>> adj(n), reach(n);
  for (auto [a, b] : reach_pairs(layout)) {
    reach[a].push_back(b);
    reach[b].push_back(a);
    if (!clause_town(a) && !clause_town(b) && sq_dist(towns[a].loc, towns[b].loc) <= eta2) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  CycleStructure cs;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (clause_town(static_cast<int>(s)) || seen[s]) continue;
    if (adj[s].size() != 2) throw NotCycles("town " + std::to_string(s) + " has " + std::to_string(adj[s].size()) + " neighbours within eta");
    std::vector<int> cyc{static_cast<int>(s)};
    seen[s] = true;
    int prev = static_cast<int>(s), cur = std::min(adj[s][0], adj[s][1]);
    while (cur != static_cast<int>(s)) {
      if (adj[cur].size() != 2)
        throw NotCycles("town " + std::to_string(cur) + " has " + std::to_string(adj[cur].size()) + " neighbours within eta");
      if (seen[cur]) throw NotCycles("component through town " + std::to_string(s) + " is not a cycle");
      seen[cur] = true;
      cyc.push_back(cur);
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    if (cyc.size() % 2) throw NotCycles("cycle through town " + std::to_string(s) + " has odd length");
    cs.cycles.push_back(std::move(cyc));
  }

  for (std::size_t s = 0; s < n; ++s) {
    if (towns[s].kind != TownKind::SmallClause) continue;
    ClauseGadget g;
    g.small = static_cast<int>(s);
    std::vector<int> adjacent;
    for (int o : reach[s]) {
      if (towns[o].kind == TownKind::BigClause) g.big = o;
      if (towns[o].kind == TownKind::ClauseAdjacent) adjacent.push_back(o);
    }
    std::sort(adjacent.begin(), adjacent.end());
    for (int a : adjacent)
      for (int b : adj[a])
        if (a < b && std::binary_search(adjacent.begin(), adjacent.end(), b)) g.pairs.emplace_back(a, b);
    std::sort(g.pairs.begin(), g.pairs.end());
    if (g.big < 0) throw NotCycles("small town " + std::to_string(s) + " has no big town within reach");
    cs.clauses.push_back(std::move(g));
  }
  std::sort(cs.clauses.begin(), cs.clauses.end(), [](const ClauseGadget& a, const ClauseGadget& b) { return a.big < b.big; });
  return cs;
}

Districting expand(const RedistrictingInstance& inst, const TownDistricting& towns, long k) {
  if (inst.town_of.size() != static_cast<std::size_t>(inst.n)) throw std::invalid_argument("instance has no town provenance");
  Districting d;
  d.k = k;
  d.assignment.reserve(inst.n);
  for (long i = 0; i < inst.n; ++i) d.assignment.push_back(towns.at(inst.town_of[i]));
  return d;
}

namespace {

struct Group {
  int big = -1, small = -1;
  int join = -1;  // a clause-adjacent town the small town joins, or -1
};

// Clause districts first (in group order), then the matched pairs of every
// cycle in cycle order.
std::pair<TownDistricting, long> build(std::size_t num_towns, const std::vector<std::vector<int>>& cycles,
                                       const std::vector<int>& choice, const std::vector<Group>& groups) {
  TownDistricting td(num_towns, -1);
  long next = 0;
  for (const auto& g : groups) td[g.big] = static_cast<int>(next++);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto& cyc = cycles[c];
    for (std::size_t j = choice[c]; j < cyc.size() + choice[c]; j += 2) {
      td[cyc[j % cyc.size()]] = static_cast<int>(next);
      td[cyc[(j + 1) % cyc.size()]] = static_cast<int>(next);
      ++next;
    }
  }
  for (std::size_t c = 0; c < groups.size(); ++c) td[groups[c].small] = groups[c].join >= 0 ? td[groups[c].join] : td[groups[c].big];
  for (std::size_t t = 0; t < num_towns; ++t)
    if (td[t] < 0) throw Malformed("town " + std::to_string(t) + " is on no cycle and in no clause");
  return {td, next};
}

// Cycle index and position per town.
std::vector<std::pair<int, int>> positions(std::size_t num_towns, const std::vector<std::vector<int>>& cycles) {
  std::vector<std::pair<int, int>> pos(num_towns, {-1, -1});
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (std::size_t j = 0; j < cycles[c].size(); ++j) pos[cycles[c][j]] = {static_cast<int>(c), static_cast<int>(j)};
  return pos;
}

// Parity of the matching that contains the cycle edge a-b.
int edge_parity(const std::vector<std::pair<int, int>>& pos, const std::vector<std::vector<int>>& cycles, int a, int b) {
  const auto [c, ia] = pos[a];
  const int L = static_cast<int>(cycles[c].size());
  const int ib = pos[b].second;
  if (pos[b].first != c) throw Malformed("pair spans two cycles");
  if ((ia + 1) % L == ib) return ia % 2;
  if ((ib + 1) % L == ia) return ib % 2;
  throw Malformed("pair is not a cycle edge");
}

}  // namespace

Districting solve_legal(const RedistrictingInstance& inst, const TownLayout& layout) {
  const CycleStructure cs = derive_cycles(layout);
  std::vector<Group> groups;
  for (const auto& g : cs.clauses) groups.push_back({g.big, g.small, -1});
  auto [td, k] = build(layout.towns.size(), cs.cycles, std::vector<int>(cs.cycles.size(), 0), groups);
  return expand(inst, td, k);
}

std::optional<Districting> solve_fair_structured(const RedistrictingInstance& inst, const TownLayout& layout, int limit,
                                                 StructuredStats* stats) {
  const CycleStructure cs = derive_cycles(layout);
  const int C = static_cast<int>(cs.cycles.size());
  if (C > limit) throw LimitExceeded(std::to_string(C) + " cycles exceed the limit of " + std::to_string(limit));
  const auto pos = positions(layout.towns.size(), cs.cycles);
  // Per clause: (cycle, parity, first town) of each pair.
  std::vector<std::vector<std::tuple<int, int, int>>> options(cs.clauses.size());
  for (std::size_t c = 0; c < cs.clauses.size(); ++c)
    for (auto [a, b] : cs.clauses[c].pairs)
      options[c].emplace_back(pos[a].first, edge_parity(pos, cs.cycles, a, b), a);

  StructuredStats local;
  StructuredStats& st = stats ? *stats : local;
  const unsigned long total = 1UL << C;
  std::vector<Group> groups(cs.clauses.size());
  std::vector<int> choice(C);
  for (unsigned long mask = 0; mask < total; ++mask) {
    ++st.combinations;
    bool all = true;
    for (std::size_t c = 0; c < cs.clauses.size() && all; ++c) {
      groups[c] = {cs.clauses[c].big, cs.clauses[c].small, -1};
      for (auto [cyc, parity, a] : options[c])
        if (static_cast<int>((mask >> cyc) & 1) == parity) {
          groups[c].join = a;
          break;
        }
      all = groups[c].join >= 0;
    }
    if (!all) continue;
    ++st.verified;
    for (int c = 0; c < C; ++c) choice[c] = static_cast<int>((mask >> c) & 1);
    auto [td, k] = build(layout.towns.size(), cs.cycles, choice, groups);
    Districting dist = expand(inst, td, k);
    const LegalityReport rep = full_report(inst, dist);
    if (rep.is_legal && rep.is_fair) return dist;
  }
  return std::nullopt;
}

Assignment districting_to_assignment(const RedistrictingInstance& inst, const TownLayout& layout,
                                     const Districting& dist) {
  TownDistricting td(layout.towns.size(), -1);
  for (long i = 0; i < inst.n; ++i) {
    int& slot = td.at(inst.town_of.at(i));
    if (slot >= 0 && slot != dist.assignment[i]) throw Malformed("town " + std::to_string(inst.town_of[i]) + " is split");
    slot = dist.assignment[i];
  }
  for (const auto& cyc : layout.cycles) {
    const std::size_t L = cyc.size();
    // Exactly one of every two consecutive edges joins a district.
    for (std::size_t j = 0; j < L; ++j) {
      const bool shared = td[cyc[j]] == td[cyc[(j + 1) % L]];
      const bool next_shared = td[cyc[(j + 1) % L]] == td[cyc[(j + 2) % L]];
      if (shared == next_shared) throw Malformed("cycle is not split by a perfect matching");
    }
  }
  Assignment a(layout.num_vars, false);
  std::vector<int> known(layout.num_vars, -1);
  for (int c = 0; c < layout.num_clauses; ++c)
    for (int k = 0; k < 3; ++k) {
      const auto [x, y] = layout.clause_pairs[c][k];
      const Literal lit = layout.pair_literal[c][k];
      const int value = (td[x] == td[y]) != lit.negated;
      if (known[lit.variable] >= 0 && known[lit.variable] != value)
        throw Malformed("variable " + std::to_string(lit.variable + 1) + " reads both true and false");
      known[lit.variable] = value;
      a[lit.variable] = value;
    }
  return a;
}

Districting assignment_to_districting(const RedistrictingInstance& inst, const TownLayout& layout, const Assignment& a) {
  if (static_cast<int>(a.size()) != layout.num_vars) throw std::invalid_argument("assignment size differs from variable count");
  const auto pos = positions(layout.towns.size(), layout.cycles);
  std::vector<int> choice(layout.cycles.size(), 0);
  std::vector<bool> fixed(layout.cycles.size(), false);
  std::vector<Group> groups;
  for (int c = 0; c < layout.num_clauses; ++c) {
    Group g;
    for (std::size_t id = 0; id < layout.towns.size(); ++id) {
      const auto& t = layout.towns[id];
      if (t.owner != c) continue;
      if (t.kind == TownKind::BigClause) g.big = static_cast<int>(id);
      if (t.kind == TownKind::SmallClause) g.small = static_cast<int>(id);
    }
    for (int k = 0; k < 3; ++k) {
      const auto [x, y] = layout.clause_pairs[c][k];
      const Literal lit = layout.pair_literal[c][k];
      const bool truth = a[lit.variable] != lit.negated;
      const int cyc = lit.variable;
      if (!fixed[cyc]) {
        const int parity = edge_parity(pos, layout.cycles, x, y);
        choice[cyc] = truth ? parity : 1 - parity;
        fixed[cyc] = true;
      }
      if (truth && g.join < 0) g.join = x;
    }
    groups.push_back(g);
  }
  auto [td, k] = build(layout.towns.size(), layout.cycles, choice, groups);
  return expand(inst, td, k);
}

std::optional<Districting> solve_fair_naive(const RedistrictingInstance& inst, const NaiveLimits& limits) {
  if (inst.k > limits.max_k) throw LimitExceeded("k=" + std::to_string(inst.k) + " exceeds " + std::to_string(limits.max_k));
  if (inst.k < 1) return std::nullopt;
  // Units are voters, or whole sites for larger instances.
  const bool by_voter = inst.n <= limits.max_voters;
  if (!by_voter && static_cast<long>(inst.sites.size()) > limits.max_sites)
    throw LimitExceeded("instance too large for exhaustive search");
  std::vector<std::vector<long>> units;
  if (by_voter) {
    for (long i = 0; i < inst.n; ++i) units.push_back({i});
  } else {
    units.resize(inst.sites.size());
    for (long i = 0; i < inst.n; ++i) units[inst.site_of[i]].push_back(i);
  }
  const int U = static_cast<int>(units.size());
  const Rational avg = Rational(inst.n) / Rational(inst.k);
  const Rational lower = (1 - inst.gamma) * avg, upper = (1 + inst.gamma) * avg;
  const Rational d2 = inst.d * inst.d;
  std::vector<std::vector<bool>> near(U, std::vector<bool>(U, false));
  for (int i = 0; i < U; ++i)
    for (int j = 0; j < U; ++j) near[i][j] = sq_dist(inst.loc(units[i][0]), inst.loc(units[j][0])) <= d2;

  std::vector<int> block(U, -1);
  std::vector<long> size(inst.k, 0);
  std::optional<Districting> found;
  auto leaf = [&]() {
    for (long s : size)
      if (Rational(s) < lower) return false;
    Districting dist;
    dist.k = inst.k;
    dist.assignment.assign(inst.n, 0);
    for (int u = 0; u < U; ++u)
      for (long v : units[u]) dist.assignment[v] = block[u];
    if (!check_F4(inst, dist, inst.m).second) return false;
    const LegalityReport rep = full_report(inst, dist);
    if (rep.is_legal && rep.is_fair) found = std::move(dist);
    return found.has_value();
  };
  auto dfs = [&](auto&& self, int u, int used) -> bool {
    if (U - u < inst.k - used) return false;
    if (u == U) return leaf();
    const int top = static_cast<int>(std::min<long>(used + 1, inst.k));
    for (int b = 0; b < top; ++b) {
      const long w = static_cast<long>(units[u].size());
      if (Rational(size[b] + w) > upper) continue;
      bool ok = true;
      for (int o = 0; o < u && ok; ++o) ok = block[o] != b || near[o][u];
      if (!ok) continue;
      block[u] = b;
      size[b] += w;
      if (self(self, u + 1, std::max(used, b + 1))) return true;
      size[b] -= w;
      block[u] = -1;
    }
    return false;
  };
  dfs(dfs, 0, 0);
  return found;
}

}  // namespace redist
