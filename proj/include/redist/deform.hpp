#pragma once

// Local re-routing of the grid drawing: clause edges are bent so they reach
// the clause vertex along 0, 2pi/3 and 4pi/3, variable edges that leave their
// vertex too close together are fanned out, and sharp corners are cut.

#include <string>
#include <vector>

#include "redist/embed.hpp"
#include "redist/exactgeo.hpp"

namespace redist {

struct Chain {
  int var = 0;     // variable index
  int clause = 0;  // clause index (0-based)
  int target = 0;  // approach direction at the clause: 0, 1, 2 for 0, 2pi/3, 4pi/3
  std::vector<Point2> pts;  // from the variable vertex to the clause vertex
};

struct PolyEmbedding {
  int num_vars = 0;
  int num_clauses = 0;
  std::vector<Point2> vertex;  // variables then clauses
  std::vector<Chain> chains;   // one per incidence edge
  Rational delta1;  // smallest of local_delta1
  std::vector<Rational> local_delta1;  // per vertex, halved at clauses with a pre-bent chain
  // Per vertex: gap between the rings fanned-out edges are routed on, or
  // local_delta1 where nothing was fanned out.
  std::vector<Rational> ring_spacing;
  Rational delta2;
  std::vector<int> prebent;  // chains whose clause end was pre-bent
  std::vector<int> fanned;   // variables whose edges were fanned out
  std::vector<int> approach_case;  // per clause: 1, 2 or 3

  const Point2& clause_vertex(int c) const { return vertex[num_vars + c]; }
};

/// Direction of the final approach segment for target k (k = 0, 1, 2), scaled
/// so that its infinity norm is 1: (1,0) and (-1/sqrt3, +-1) rounded.
Point2 approach_direction(int k, int digits);

struct DeformOptions {
  int digits = 24;             // decimals of every new chain vertex
  double fan_threshold_deg = 70;  // fan out variable edges closer than this
  double chamfer_deg = 75;     // cut corners sharper than this
  // delta1 at a vertex as a fraction of its infinity-norm clearance.
  double clause_factor = 0.675;
  double variable_factor = 0.25;
};

PolyEmbedding deform_clause_edges(const GridEmbedding& e, const IncidenceGraph& g, const DeformOptions& opt = {});

/// (D1) and (D2) with the given delta, plus crossing freedom between chains.
/// Returns one line per violation.
std::vector<std::string> check_D1_D2(const PolyEmbedding& pe, const Rational& delta);

/// Length of the shortest final segment into a clause vertex, rounded down to
/// 9 significant decimals. Edge-town walks need about 100 eta of it.
Rational shortest_approach(const PolyEmbedding& pe);

/// Number of polyline segments over all chains.
std::size_t segment_count(const PolyEmbedding& pe);

}  // namespace redist
