#pragma once

// Seeded random planar 3-CNF formulas for test corpora.

#include <cstdint>
#include <stdexcept>

#include "redist/sat.hpp"

namespace redist {

/// Clauses are drawn one at a time (three distinct variables, random signs);
/// a clause that would make the incidence graph non-planar is redrawn.
/// Identical on every platform for a given seed. Throws std::invalid_argument
/// for vars < 3 or clauses < 1, and std::runtime_error if some clause cannot
/// be placed in 1000 draws.
Cnf3 random_planar_cnf(std::uint64_t seed, int vars, int clauses);

}  // namespace redist
