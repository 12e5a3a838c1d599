#include "redist/pipeline.hpp"

#include <variant>

#include "redist/planarity.hpp"

namespace redist {

Rational eta_upper_bound(const PolyEmbedding& pe) {
  Rational bound = shortest_approach(pe) / 104;
  std::vector<bool> used(pe.num_vars, false);
  for (const auto& ch : pe.chains) used[ch.var] = true;
  for (int x = 0; x < pe.num_vars; ++x)
    if (used[x] && pe.ring_spacing[x] / 4 < bound) bound = pe.ring_spacing[x] / 4;
  return bound;
}

ReductionParams compute_params(const PolyEmbedding& pe, long N, const Rational& gamma, const Rational& d, Mode mode) {
  if (mode == Mode::PaperExact) return paper_exact_params(N, gamma, d);
  ReductionParams prm = adaptive_params(N, gamma, d, pe.delta1, pe.delta2);
  if (pe.num_clauses > 0) set_eta(prm, eta_upper_bound(pe));
  return prm;
}

PolyEmbedding scale_poly(const PolyEmbedding& pe, const Rational& s) {
  PolyEmbedding out = pe;
  for (auto& v : out.vertex) v = s * v;
  for (auto& c : out.chains)
    for (auto& p : c.pts) p = s * p;
  out.delta1 *= s;
  for (auto& r : out.local_delta1) r *= s;
  for (auto& r : out.ring_spacing) r *= s;
  return out;
}

namespace {

bool attempt(Reduction& r, const ReductionParams& prm) {
  ++r.attempts;
  TownLayout layout = place_clause_towns(r.poly, r.formula, prm);
  try {
    place_edge_towns(r.poly, r.formula, layout);
  } catch (const WalkStuck&) {
    return false;
  }
  canonicalize(layout);
  ValidationReport rep = validate_reduction(layout);
  const bool ok = rep.ok();
  r.layout = std::move(layout);
  r.report = std::move(rep);
  return ok;
}

}  // namespace

Reduction reduce(const Cnf3& f, const ReduceOptions& opt) {
  Reduction r;
  r.formula = f;
  r.graph = build_incidence_graph(f);
  auto planar = check_planarity(r.graph);
  if (std::holds_alternative<NotPlanar>(planar)) throw NotPlanarError("incidence graph is not planar");
  r.grid = grid_embed(r.graph, std::get<RotationSystem>(planar));
  if (opt.spread) r.grid = spread_embedding(r.grid, r.graph);
  r.poly = deform_clause_edges(r.grid, r.graph);

  const long N = r.graph.num_vertices();
  ReductionParams prm = compute_params(r.poly, N, opt.gamma, Rational(1), opt.mode);
  if (opt.eta) set_eta(prm, *opt.eta);
  if (!check_D1_D2(r.poly, prm.delta).empty()) throw std::logic_error("deformed drawing violates (D1)/(D2)");

  const Rational floor = prm.delta / 200;
  bool ok = attempt(r, prm);
  while (!ok && opt.mode == Mode::Adaptive && !opt.eta) {
    const Rational next = prm.eta / 2;
    if (next < floor)
      throw InfeasibleEta("no eta above delta/200 gives a valid layout; paper-exact mode is the fallback but is "
                          "far too large to place at desk scale");
    set_eta(prm, next);
    ok = attempt(r, prm);
  }
  if (!ok) throw InfeasibleEta("layout fails validation at eta = " + to_string(prm.eta) + ": " + r.report.summary());

  r.layout.params.d = r.layout.params.eta + r.layout.params.eps;
  if (opt.d) r.layout = scale_to_d(r.layout, *opt.d);
  return r;
}

}  // namespace redist
