#pragma once

// Straight-line integer grid drawings of planar graphs.

#include <string>
#include <utility>
#include <vector>

#include "redist/exactgeo.hpp"
#include "redist/planarity.hpp"
#include "redist/sat.hpp"

namespace redist {

struct GridEmbedding {
  std::vector<Point2> coords;              // integer points, one per vertex
  std::vector<std::pair<int, int>> edges;  // the graph's own edges
  std::vector<std::pair<int, int>> audit_edges;  // augmentation edges, not drawn
  long grid_side = 0;

  Segment segment(std::size_t e) const { return {coords[edges[e].first], coords[edges[e].second]}; }
};

/// Shift-method drawing: augment to a maximal planar graph, canonical order,
/// place, then drop the augmentation edges. Graphs with fewer than 3 vertices
/// are placed by hand. The grid side is 2N.
GridEmbedding grid_embed(const IncidenceGraph& g, const RotationSystem& rot);

/// Refines the grid by 4 and moves vertices one at a time while the drawing
/// stays plane and spread_score drops. Deterministic; the result is shifted
/// to nonnegative integer coordinates with a matching grid side.
GridEmbedding spread_embedding(const GridEmbedding& e, const IncidenceGraph& g, int max_rounds = 40);

/// Total edge length over the smallest clause clearance (infinity norm),
/// halved for clauses with an edge close to a direction the deformation
/// avoids. Lower is better: edge-town counts grow with it.
double spread_score(const GridEmbedding& e, const IncidenceGraph& g);

/// Violations of the grid bound, vertex distinctness and crossing freedom.
/// Empty means valid.
std::vector<std::string> validate_embedding(const GridEmbedding& e);

struct MinFeatures {
  Rational min_sin_sq;   // over pairs of segments sharing an endpoint
  Rational min_dist_sq;  // over non-incident vertex/segment and segment/segment pairs
};

MinFeatures min_features(const GridEmbedding& e);

std::string dump_embedding(const GridEmbedding& e);

}  // namespace redist
