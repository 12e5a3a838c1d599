#pragma once

// Solvers for reduced instances: the polynomial legal solver, the search over
// cycle matchings for a fair districting, the assignment decoders, and an
// exhaustive search for tiny instances.

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "redist/populate.hpp"
#include "redist/sat.hpp"
#include "redist/towns.hpp"
#include "redist/verify.hpp"

namespace redist {

struct NotCycles : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Malformed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClauseGadget {
  int big = -1;
  int small = -1;
  std::vector<std::pair<int, int>> pairs;  // adjacent clause-adjacent towns reached by the small town
};

/// Cycles of the graph on clause-adjacent and edge towns with an edge
/// between towns at distance at most eta. Each cycle starts at its smallest
/// town id and continues to that town's smaller-id neighbour; cycles are
/// ordered by first town.
struct CycleStructure {
  std::vector<std::vector<int>> cycles;
  std::vector<ClauseGadget> clauses;  // ordered by big town id
};

/// Reads only town kinds, locations and eta. Throws NotCycles when some
/// component is not an even cycle.
CycleStructure derive_cycles(const TownLayout& layout);

/// Town-level districting: district per town, all in [0, k).
using TownDistricting = std::vector<int>;

/// Expands a town-level districting to voters via inst.town_of.
Districting expand(const RedistrictingInstance& inst, const TownDistricting& towns, long k);

/// Big towns with their small towns; every cycle split by the matching that
/// contains the edge from its first town to its second.
Districting solve_legal(const RedistrictingInstance& inst, const TownLayout& layout);

struct StructuredStats {
  long combinations = 0;  // matching choices examined
  long verified = 0;      // choices that reached full_report
};

/// Tries both matchings of every cycle (2^cycles choices, cycle 0 in the
/// lowest bit, matching 0 first). Small towns join the first matched pair
/// of their clause. A choice is fully verified only if every clause has a
/// matched pair, since otherwise fewer than m districts can hold a
/// preference-1 majority. Throws LimitExceeded above `limit` cycles.
std::optional<Districting> solve_fair_structured(const RedistrictingInstance& inst, const TownLayout& layout,
                                                 int limit = 24, StructuredStats* stats = nullptr);

/// Reads each variable's value off its cycle: a clause-adjacent pair shares a
/// district exactly when its literal is true. Throws Malformed when a cycle
/// is not split by one of its two matchings, a town is split, or two pairs of
/// one variable disagree. Variables without towns read as false.
Assignment districting_to_assignment(const RedistrictingInstance& inst, const TownLayout& layout,
                                     const Districting& dist);

/// The inverse encoding. A small town joins the lowest-numbered pair of its
/// clause whose literal is true, and stays with its big town otherwise.
Districting assignment_to_districting(const RedistrictingInstance& inst, const TownLayout& layout, const Assignment& a);

struct NaiveLimits {
  long max_voters = 12;  // enumerate voters up to this many
  long max_sites = 10;   // otherwise enumerate distinct locations
  long max_k = 5;
};

/// First districting (in restricted-growth order) that full_report certifies
/// legal and fair. Above max_voters the search moves whole sites, which loses
/// nothing: a site split between districts always violates (F2).
std::optional<Districting> solve_fair_naive(const RedistrictingInstance& inst, const NaiveLimits& limits = {});

}  // namespace redist
