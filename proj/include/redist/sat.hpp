#pragma once

// Planar 3-CNF formulas, DIMACS I/O, the clause-variable incidence graph and a
// brute-force satisfiability oracle.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace redist {

struct Literal {
  int variable = 0;  // 0-based
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct Cnf3 {
  int num_vars = 0;
  std::vector<Clause> clauses;
  // Optional rotation system from "c rot" lines, keyed by vertex index
  // (variables 0..V-1, then clauses V..V+C-1).
  std::vector<std::vector<int>> rotation;
};

using Assignment = std::vector<bool>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Cnf3 parse_cnf(const std::string& text);
std::string serialize_cnf(const Cnf3& f);

bool evaluate(const Cnf3& f, const Assignment& a);

/// Lexicographically smallest satisfying assignment (false < true, x1 most
/// significant), or nullopt when unsatisfiable.
std::optional<Assignment> brute_force_sat(const Cnf3& f, int var_limit = 24);

/// Undirected graph on vertices 0..n-1 with an optional rotation system
/// (per-vertex counterclockwise neighbour order).
struct IncidenceGraph {
  int num_vars = 0;
  int num_clauses = 0;
  std::vector<std::pair<int, int>> edges;  // (u, v) with u < v
  std::vector<std::vector<int>> rotation;  // empty when absent

  int num_vertices() const { return num_vars + num_clauses; }
  bool is_clause(int v) const { return v >= num_vars; }
  std::vector<std::vector<int>> adjacency() const;
};

/// Vertices 0..V-1 are variables and V..V+C-1 are clauses; edge (x, c) for
/// every literal of x in c. Carries f.rotation when present.
IncidenceGraph build_incidence_graph(const Cnf3& f);

/// Raw graph wrapper, for inputs that are not incidence graphs.
IncidenceGraph make_graph(int num_vertices, std::vector<std::pair<int, int>> edges);

std::string vertex_name(const IncidenceGraph& g, int v);

}  // namespace redist
