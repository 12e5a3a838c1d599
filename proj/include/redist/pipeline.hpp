#pragma once

// End-to-end reduction: formula -> planar drawing -> deformed chains -> towns.

#include <optional>
#include <stdexcept>
#include <string>

#include "redist/deform.hpp"
#include "redist/embed.hpp"
#include "redist/params.hpp"
#include "redist/sat.hpp"
#include "redist/towns.hpp"
#include "redist/validate.hpp"

namespace redist {

struct NotPlanarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No eta above the search floor produced a valid layout.
struct InfeasibleEta : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReduceOptions {
  Rational gamma = Rational(1, 4);
  std::optional<Rational> d;    // unset: keep the native scale d = eta + eps
  Mode mode = Mode::Adaptive;
  std::optional<Rational> eta;  // fixed eta instead of the search
  bool spread = true;           // run spread_embedding on the grid drawing
};

struct Reduction {
  Cnf3 formula;
  IncidenceGraph graph;
  GridEmbedding grid;
  PolyEmbedding poly;
  TownLayout layout;
  ValidationReport report;
  int attempts = 0;  // eta values tried
};

/// Largest eta the edge-town walks are expected to manage: 1/104 of the
/// shortest clause approach (the walk ends within 100 eta of its target) and
/// a quarter of every variable's ring spacing.
Rational eta_upper_bound(const PolyEmbedding& pe);

/// Initial parameters for a drawing. Adaptive mode starts eta at
/// eta_upper_bound; paper-exact mode uses the fixed formulas in N.
ReductionParams compute_params(const PolyEmbedding& pe, long N, const Rational& gamma, const Rational& d, Mode mode);

/// Full reduction. In adaptive mode eta is halved after every failed
/// attempt down to delta/200; below that InfeasibleEta is thrown. Throws
/// NotPlanarError for non-planar incidence graphs.
Reduction reduce(const Cnf3& f, const ReduceOptions& opt = {});

/// Multiplies every point and length of the drawing by s.
PolyEmbedding scale_poly(const PolyEmbedding& pe, const Rational& s);

}  // namespace redist
