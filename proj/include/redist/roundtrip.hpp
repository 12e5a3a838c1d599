#pragma once

// Satisfiability of a formula decided twice: by brute force, and by reducing
// it and searching the reduced instance for a fair districting.

#include <optional>
#include <string>

#include "redist/pipeline.hpp"
#include "redist/sat.hpp"

namespace redist {

enum class Verdict { AgreeSat, AgreeUnsat, Disagree };

std::string to_string(Verdict v);

struct RoundtripResult {
  Verdict verdict = Verdict::Disagree;
  std::optional<Assignment> brute;    // lexicographically smallest solution
  std::optional<Assignment> decoded;  // read off the fair districting, if one was found
  bool decoded_satisfies = false;
  long towns = 0;
  long voters = 0;
  int cycles = 0;
  int attempts = 0;
  double seconds = 0;
  std::string note;  // why the verdict is Disagree
};

/// A found districting counts only if its decoded assignment satisfies f.
/// Propagates NotPlanarError and InfeasibleEta from the reduction.
RoundtripResult roundtrip(const Cnf3& f, const ReduceOptions& opt = {}, int cycle_limit = 24);

/// Same, on a reduction already at hand (r.formula is the formula). The
/// reported seconds exclude the reduction.
RoundtripResult roundtrip(const Reduction& r, const Rational& gamma, int cycle_limit = 24);

}  // namespace redist
