#include "redist/populate.hpp"

#include <map>
#include <stdexcept>

namespace redist {

long choose_L(const Rational& gamma) {
  if (gamma <= 0 || gamma >= 1) throw std::invalid_argument("gamma must lie in (0,1)");
  const Rational inv = 1 / (gamma * gamma);
  return (floor_of(inv / 4).get_si() + 1) * 4;
}

VoterBlock block_for(TownKind kind, const Rational& gamma) {
  const long L = choose_L(gamma);
  const auto fl = [&](const Rational& x) { return floor_of(x).get_si(); };
  VoterBlock b;
  switch (kind) {
    case TownKind::BigClause: b.count_pref1 = L; break;
    case TownKind::SmallClause: b.count_pref1 = fl(Rational(2, 3) * gamma * L); break;
    case TownKind::ClauseAdjacent:
      b.count_pref1 = L / 4;
      b.count_pref0 = L / 4 + fl(gamma * L / 6);
      break;
    case TownKind::Edge:
      b.count_pref1 = L / 4 - fl(gamma * L / 4);
      b.count_pref0 = L / 4 + fl(gamma * L / 4);
      break;
  }
  return b;
}

RedistrictingInstance populate(const TownLayout& layout, const Rational& gamma) {
  const std::size_t non_clause = layout.count(TownKind::ClauseAdjacent) + layout.count(TownKind::Edge);
  if (non_clause % 2) throw std::logic_error("odd number of non-clause towns");
  RedistrictingInstance inst;
  inst.gamma = gamma;
  inst.d = layout.params.d;
  inst.k = layout.num_clauses + static_cast<long>(non_clause / 2);
  inst.m = 2L * layout.num_clauses;
  VoterBlock blocks[4];
  for (int k = 0; k < 4; ++k) blocks[k] = block_for(static_cast<TownKind>(k), gamma);
  for (std::size_t id = 0; id < layout.towns.size(); ++id) {
    const auto& t = layout.towns[id];
    const VoterBlock& b = blocks[static_cast<int>(t.kind)];
    const int site = static_cast<int>(inst.sites.size());
    inst.sites.push_back(t.loc);
    for (long i = 0; i < b.size(); ++i) {
      inst.site_of.push_back(site);
      inst.pref.push_back(i < b.count_pref1 ? 1 : 0);
      inst.town_of.push_back(static_cast<int>(id));
    }
  }
  inst.n = static_cast<long>(inst.pref.size());
  return inst;
}

Rational popular_vote_share(const RedistrictingInstance& inst) {
  if (inst.n == 0) return 0;
  long ones = 0;
  for (int p : inst.pref) ones += p;
  return Rational(ones) / inst.n;
}

RedistrictingInstance make_instance(long k, long m, const Rational& gamma, const Rational& d,
                                    const std::vector<Point2>& loc, const std::vector<int>& pref) {
  if (loc.size() != pref.size()) throw std::invalid_argument("loc and pref differ in length");
  RedistrictingInstance inst;
  inst.n = static_cast<long>(loc.size());
  inst.k = k;
  inst.m = m;
  inst.gamma = gamma;
  inst.d = d;
  inst.pref = pref;
  std::map<Point2, int> index;
  for (const auto& p : loc) {
    auto [it, fresh] = index.emplace(p, static_cast<int>(inst.sites.size()));
    if (fresh) inst.sites.push_back(p);
    inst.site_of.push_back(it->second);
  }
  return inst;
}

}  // namespace redist
