#include "redist/roundtrip.hpp"

#include <chrono>

#include "redist/populate.hpp"
#include "redist/solve.hpp"

namespace redist {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::AgreeSat:
      return "AGREE(sat)";
    case Verdict::AgreeUnsat:
      return "AGREE(unsat)";
    case Verdict::Disagree:
      return "DISAGREE";
  }
  return "?";
}

RoundtripResult roundtrip(const Cnf3& f, const ReduceOptions& opt, int cycle_limit) {
  const auto t0 = std::chrono::steady_clock::now();
  RoundtripResult out = roundtrip(reduce(f, opt), opt.gamma, cycle_limit);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

RoundtripResult roundtrip(const Reduction& r, const Rational& gamma, int cycle_limit) {
  const auto t0 = std::chrono::steady_clock::now();
  const Cnf3& f = r.formula;
  RoundtripResult out;
  out.brute = brute_force_sat(f);

  const RedistrictingInstance inst = populate(r.layout, gamma);
  out.towns = static_cast<long>(r.layout.towns.size());
  out.voters = inst.n;
  out.attempts = r.attempts;
  for (const auto& c : r.layout.cycles) out.cycles += !c.empty();

  const auto fair = solve_fair_structured(inst, r.layout, cycle_limit);
  if (fair) {
    out.decoded = districting_to_assignment(inst, r.layout, *fair);
    out.decoded_satisfies = evaluate(f, *out.decoded);
  }
  if (out.brute && fair && out.decoded_satisfies)
    out.verdict = Verdict::AgreeSat;
  else if (!out.brute && !fair)
    out.verdict = Verdict::AgreeUnsat;
  else if (fair && !out.decoded_satisfies)
    out.note = "fair districting decodes to a non-satisfying assignment";
  else if (fair)
    out.note = "fair districting found for an unsatisfiable formula";
  else
    out.note = "no fair districting for a satisfiable formula";
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace redist
