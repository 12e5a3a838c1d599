#include "redist/gen.hpp"

#include <algorithm>
#include <random>
#include <variant>

#include "redist/planarity.hpp"

namespace redist {

Cnf3 random_planar_cnf(std::uint64_t seed, int vars, int clauses) {
  if (vars < 3 || clauses < 1) throw std::invalid_argument("need at least 3 variables and 1 clause");
  // Raw engine output only; distribution classes differ between standard libraries.
  std::mt19937_64 rng(seed);
  auto below = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  Cnf3 f;
  f.num_vars = vars;
  for (int c = 0; c < clauses; ++c) {
    bool placed = false;
    for (int draw = 0; draw < 1000 && !placed; ++draw) {
      Clause cl;
      int picked = 0;
      while (picked < 3) {
        const int v = below(vars);
        if (std::any_of(cl.begin(), cl.begin() + picked, [&](const Literal& l) { return l.variable == v; })) continue;
        cl[picked++] = {v, (rng() & 1) != 0};
      }
      f.clauses.push_back(cl);
      if (std::holds_alternative<RotationSystem>(check_planarity(build_incidence_graph(f))))
        placed = true;
      else
        f.clauses.pop_back();
    }
    if (!placed) throw std::runtime_error("no planar clause found after 1000 draws");
  }
  return f;
}

}  // namespace redist
