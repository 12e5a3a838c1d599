#pragma once

// Exact checks of (F1) population balance, (F2) disjoint hulls, (F3) diameter
// and (F4) preference-1 majorities. Works on any instance.

#include <string>
#include <utility>
#include <vector>

#include "redist/populate.hpp"

namespace redist {

struct Districting {
  long k = 0;
  std::vector<int> assignment;  // per voter, district in [0, k)
};

struct F1Entry {
  int district = 0;
  long size = 0;
  bool pass = false;
};

struct F1Report {
  Rational lower, upper;  // (1 -+ gamma) n / k
  std::vector<F1Entry> districts;
  long failures() const;
};

struct F3Violation {
  int district = 0;
  long voter_a = 0, voter_b = 0;
  Rational sq_dist;
};

struct LegalityReport {
  F1Report f1;
  std::vector<std::pair<int, int>> f2;  // districts whose closed hulls meet
  std::vector<F3Violation> f3;          // one per offending district
  long majority = 0;                    // districts with a strict preference-1 majority
  long m = 0;
  bool is_legal = false;
  bool is_fair = false;

  /// One line per fact: verdicts first, then each violation.
  std::string to_text() const;
};

/// Throws std::invalid_argument if the districting does not fit the instance.
void check_districting(const RedistrictingInstance& inst, const Districting& dist);

F1Report check_F1(const RedistrictingInstance& inst, const Districting& dist);
std::vector<std::pair<int, int>> check_F2(const RedistrictingInstance& inst, const Districting& dist);
/// The farthest pair of each district whose diameter exceeds d.
std::vector<F3Violation> check_F3(const RedistrictingInstance& inst, const Districting& dist, const Rational& d);
/// (majority count, count >= m).
std::pair<long, bool> check_F4(const RedistrictingInstance& inst, const Districting& dist, long m);

LegalityReport full_report(const RedistrictingInstance& inst, const Districting& dist);

/// Distinct sites of each district, sorted. A site split across districts
/// appears in each of them.
std::vector<std::vector<int>> district_sites(const RedistrictingInstance& inst, const Districting& dist);

}  // namespace redist
