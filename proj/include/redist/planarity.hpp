#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "redist/sat.hpp"

namespace redist {

/// Per-vertex cyclic order of neighbours.
using RotationSystem = std::vector<std::vector<int>>;

struct NotPlanar {
  std::vector<std::pair<int, int>> witness;  // Kuratowski subgraph edges
};

/// Planar embedding of g, or a Kuratowski witness. A rotation supplied in g
/// is validated instead of recomputed; an invalid one is reported as
/// std::invalid_argument.
std::variant<RotationSystem, NotPlanar> check_planarity(const IncidenceGraph& g);

/// Number of faces traced by the rotation system, per connected component.
/// Throws std::invalid_argument when the rotation does not match g's edges.
std::vector<int> faces_per_component(const IncidenceGraph& g, const RotationSystem& rot);

/// V - E + F == 2 on every connected component.
bool rotation_is_planar(const IncidenceGraph& g, const RotationSystem& rot);

}  // namespace redist
