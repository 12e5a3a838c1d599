#pragma once

#include <vector>

#include "redist/exactgeo.hpp"

namespace redist {

/// Unit directions (cos 2 pi j/t, sin 2 pi j/t), j = 0..t-1, each coordinate
/// rounded to `digits` decimals and nudged so the norm never exceeds 1.
std::vector<Point2> unit_circle_table(int t, int digits);

/// z_j = eta * unit_j with the unit table at p+20 decimals. Every entry's
/// squared norm is verified to lie in [(0.99 eta)^2, eta^2]; z_t is z_0.
std::vector<Point2> build_z_table(const Rational& eta, int p, int t = 1800);

}  // namespace redist
