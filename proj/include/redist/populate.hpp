#pragma once

// Voters and preferences on top of a town layout.

#include <vector>

#include "redist/exactgeo.hpp"
#include "redist/towns.hpp"

namespace redist {

/// A redistricting instance (n, k, loc, m, pref) with gamma and d.
/// Voters sharing a location share a site, so loc(i) = sites[site_of[i]].
struct RedistrictingInstance {
  long n = 0;
  long k = 0;
  long m = 0;
  Rational gamma;
  Rational d;
  std::vector<Point2> sites;
  std::vector<int> site_of;  // per voter
  std::vector<int> pref;     // per voter, 0 or 1
  // Per voter town id on reduced instances; empty otherwise.
  std::vector<int> town_of;

  const Point2& loc(long voter) const { return sites[site_of[voter]]; }
};

struct VoterBlock {
  int town = 0;
  long count_pref1 = 0;
  long count_pref0 = 0;
  long size() const { return count_pref1 + count_pref0; }
};

/// Smallest multiple of 4 strictly above 1/gamma^2.
long choose_L(const Rational& gamma);

/// Voter counts of one town of the given kind.
VoterBlock block_for(TownKind kind, const Rational& gamma);

/// One block per town, L = choose_L(gamma); voters numbered by town id,
/// preference-1 voters first within a town. k = clauses + non-clause towns / 2
/// and m = 2 clauses. Throws std::logic_error on an odd non-clause count.
RedistrictingInstance populate(const TownLayout& layout, const Rational& gamma);

/// Preference-1 voters over all voters (0 for an empty instance).
Rational popular_vote_share(const RedistrictingInstance& inst);

/// Builds sites from plain voter locations: equal points share a site.
RedistrictingInstance make_instance(long k, long m, const Rational& gamma, const Rational& d,
                                    const std::vector<Point2>& loc, const std::vector<int>& pref);

}  // namespace redist
