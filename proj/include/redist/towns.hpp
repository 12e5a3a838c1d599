#pragma once

// Town placement on top of a deformed embedding: big and small clause towns,
// six clause-adjacent towns per clause, and edge towns walked along both
// sides of every chain.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "redist/deform.hpp"
#include "redist/params.hpp"
#include "redist/sat.hpp"

namespace redist {

enum class TownKind { BigClause = 0, SmallClause = 1, ClauseAdjacent = 2, Edge = 3 };

std::string to_string(TownKind k);
TownKind parse_town_kind(const std::string& s);

struct Town {
  TownKind kind = TownKind::Edge;
  Point2 loc;
  int owner = 0;  // clause index for clause and clause-adjacent towns, variable index for edge towns
  int index = 0;  // clause-adjacent: table index j; edge: position within the owner's cycle
};

struct TownLayout {
  ReductionParams params;
  std::vector<Town> towns;  // id = position
  // Per variable: clause-adjacent and edge towns in cyclic order.
  std::vector<std::vector<int>> cycles;
  // Per clause and approach direction 0, 2pi/3, 4pi/3: the clause-adjacent
  // towns just clockwise and just counterclockwise of the approaching chain.
  std::vector<std::array<std::pair<int, int>, 3>> clause_pairs;
  // Per clause and pair: the variable reaching it and whether it appears negated.
  std::vector<std::array<Literal, 3>> pair_literal;
  int num_vars = 0;
  int num_clauses = 0;

  std::size_t count(TownKind k) const;
};

/// Table indices of the clause-adjacent towns per approach direction,
/// clockwise side first.
inline constexpr int kAdjacentIndex[3][2] = {{1700, 100}, {500, 700}, {1100, 1300}};

struct WalkStuck : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Big, small and clause-adjacent towns for every clause.
TownLayout place_clause_towns(const PolyEmbedding& pe, const Cnf3& f, const ReductionParams& prm);

struct WalkStats {
  long steps = 0;
  long fill = 0;
  long rejected_exact = 0;
  long backtracks = 0;
};

/// Seeds, greedy walks and straight fills for every variable. Throws WalkStuck
/// when some walk cannot continue, which means eta is too large.
WalkStats place_edge_towns(const PolyEmbedding& pe, const Cnf3& f, TownLayout& layout);

/// Renumbers towns canonically by (kind, owner, index).
void canonicalize(TownLayout& layout);

std::string dump_layout(const TownLayout& layout);
std::string params_line(const ReductionParams& prm);

}  // namespace redist
