#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "redist/towns.hpp"

namespace redist {

struct ValidationReport {
  // Violation count per check (a) .. (i).
  std::array<long, 9> failures{};
  std::vector<std::string> messages;  // capped, see max_messages

  bool ok() const;
  bool ok(char check) const { return failures[check - 'a'] == 0; }
  std::string summary() const;
};

/// Exact checks of the geometric facts the correctness argument uses:
/// (a) edge towns have exactly two towns within eta + eps, both in
///     [0.99 eta, eta];
/// (b) clause-adjacent towns reach only their clause's big and small towns,
///     their partner and one edge town;
/// (c) small towns reach exactly their big town and the six clause-adjacent towns;
/// (d) big towns reach exactly their small town and the six clause-adjacent towns;
/// (e) three towns pairwise within eta + eps only inside {big, small, one pair};
/// (f) cycles are even and consecutive towns are within eta;
/// (g) edge-town runs between clause-adjacent towns have the literal parity;
/// (h) towns of different clauses or variables are apart unless designated;
/// (i) the number of non-clause towns is even.
ValidationReport validate_reduction(const TownLayout& layout, std::size_t max_messages = 50);

/// Multiplies every coordinate by d/(eta+eps); eta and eps scale alike.
TownLayout scale_to_d(const TownLayout& layout, const Rational& d);

/// Pairs of towns at positive distance at most eta + eps, found exactly.
std::vector<std::pair<int, int>> reach_pairs(const TownLayout& layout);

}  // namespace redist
