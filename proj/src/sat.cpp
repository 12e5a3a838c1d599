#include "redist/sat.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

namespace redist {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

// "v3" -> 2, "c1" -> V + 0.
int parse_vertex_id(const std::string& tok, int num_vars, int num_clauses, int line) {
  if (tok.size() < 2 || (tok[0] != 'v' && tok[0] != 'c')) fail(line, "bad vertex id '" + tok + "'");
  int idx = 0;
  try {
    std::size_t used = 0;
    idx = std::stoi(tok.substr(1), &used);
    if (used != tok.size() - 1) throw std::invalid_argument(tok);
  } catch (const std::exception&) {
    fail(line, "bad vertex id '" + tok + "'");
  }
  if (tok[0] == 'v') {
    if (idx < 1 || idx > num_vars) fail(line, "variable id out of range: " + tok);
    return idx - 1;
  }
  if (idx < 1 || idx > num_clauses) fail(line, "clause id out of range: " + tok);
  return num_vars + idx - 1;
}

}  // namespace

Cnf3 parse_cnf(const std::string& text) {
  Cnf3 f;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  int declared_clauses = 0;
  std::vector<std::pair<int, std::vector<std::string>>> rot_lines;
  std::vector<long> pending;
  int pending_line = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") {
      std::string kw;
      if (ls >> kw && kw == "rot") {
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) fail(line_no, "empty rot line");
        rot_lines.emplace_back(line_no, std::move(toks));
      }
      continue;
    }
    if (first == "p") {
      std::string fmt;
      if (have_header) fail(line_no, "duplicate header");
      if (!(ls >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf")
        fail(line_no, "malformed header, expected 'p cnf V C'");
      if (f.num_vars < 1 || declared_clauses < 1) fail(line_no, "header counts must be positive");
      std::string extra;
      if (ls >> extra) fail(line_no, "trailing tokens in header");
      have_header = true;
      continue;
    }
    if (!have_header) fail(line_no, "clause before header");
    ls.clear();
    ls.str(raw);
    for (std::string tok; ls >> tok;) {
      long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail(line_no, "bad literal '" + tok + "'");
      }
      if (pending.empty()) pending_line = line_no;
      if (lit != 0) {
        if (lit > f.num_vars || -lit > f.num_vars) fail(line_no, "literal out of range: " + tok);
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3)
        fail(pending_line, "clause has " + std::to_string(pending.size()) + " literals, expected 3");
      Clause c;
      for (int i = 0; i < 3; ++i) c[i] = {static_cast<int>(std::labs(pending[i])) - 1, pending[i] < 0};
      if (c[0].variable == c[1].variable || c[0].variable == c[2].variable ||
          c[1].variable == c[2].variable)
        fail(pending_line, "repeated variable in clause");
      f.clauses.push_back(c);
      pending.clear();
    }
  }
  if (!have_header) fail(line_no, "missing header");
  if (!pending.empty()) fail(pending_line, "unterminated clause");
  if (static_cast<int>(f.clauses.size()) != declared_clauses)
    fail(line_no, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                      std::to_string(f.clauses.size()));

  if (!rot_lines.empty()) {
    const int C = static_cast<int>(f.clauses.size());
    f.rotation.assign(f.num_vars + C, {});
    std::vector<bool> seen(f.num_vars + C, false);
    for (auto& [ln, toks] : rot_lines) {
      int v = parse_vertex_id(toks[0], f.num_vars, C, ln);
      if (seen[v]) fail(ln, "duplicate rot line for " + toks[0]);
      seen[v] = true;
      for (std::size_t i = 1; i < toks.size(); ++i)
        f.rotation[v].push_back(parse_vertex_id(toks[i], f.num_vars, C, ln));
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      fail(line_no, "rotation system must list every vertex");
  }
  return f;
}

std::string serialize_cnf(const Cnf3& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (const auto& l : c) out << (l.negated ? -(l.variable + 1) : l.variable + 1) << ' ';
    out << "0\n";
  }
  if (!f.rotation.empty()) {
    IncidenceGraph g;
    g.num_vars = f.num_vars;
    g.num_clauses = static_cast<int>(f.clauses.size());
    for (std::size_t v = 0; v < f.rotation.size(); ++v) {
      out << "c rot " << vertex_name(g, static_cast<int>(v));
      for (int w : f.rotation[v]) out << ' ' << vertex_name(g, w);
      out << '\n';
    }
  }
  return out.str();
}

bool evaluate(const Cnf3& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.num_vars) throw std::invalid_argument("assignment length mismatch");
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return a[l.variable] != l.negated; });
  });
}

std::optional<Assignment> brute_force_sat(const Cnf3& f, int var_limit) {
  if (f.num_vars > var_limit) throw std::invalid_argument("too many variables for brute force");
  const int V = f.num_vars;
  // Per clause: mask of variables involved and the bit pattern that falsifies it.
  // Variable i maps to bit V-1-i so that counting up enumerates lexicographically.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> falsify;
  for (const auto& c : f.clauses) {
    std::uint32_t mask = 0, bad = 0;
    for (const auto& l : c) {
      const std::uint32_t bit = 1u << (V - 1 - l.variable);
      mask |= bit;
      if (l.negated) bad |= bit;
    }
    falsify.emplace_back(mask, bad);
  }
  const std::uint64_t total = 1ull << V;
  for (std::uint64_t x = 0; x < total; ++x) {
    const auto bits = static_cast<std::uint32_t>(x);
    bool ok = true;
    for (const auto& [mask, bad] : falsify) {
      if ((bits & mask) == bad) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Assignment a(V);
    for (int i = 0; i < V; ++i) a[i] = (bits >> (V - 1 - i)) & 1u;
    return a;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> IncidenceGraph::adjacency() const {
  std::vector<std::vector<int>> adj(num_vertices());
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

IncidenceGraph build_incidence_graph(const Cnf3& f) {
  IncidenceGraph g;
  g.num_vars = f.num_vars;
  g.num_clauses = static_cast<int>(f.clauses.size());
  for (int c = 0; c < g.num_clauses; ++c)
    for (const auto& l : f.clauses[c]) g.edges.emplace_back(l.variable, f.num_vars + c);
  std::sort(g.edges.begin(), g.edges.end());
  g.rotation = f.rotation;
  return g;
}

IncidenceGraph make_graph(int num_vertices, std::vector<std::pair<int, int>> edges) {
  IncidenceGraph g;
  g.num_vars = num_vertices;
  std::set<std::pair<int, int>> uniq;
  for (auto [u, v] : edges) {
    if (u == v || u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
      throw std::invalid_argument("bad edge");
    uniq.emplace(std::min(u, v), std::max(u, v));
  }
  g.edges.assign(uniq.begin(), uniq.end());
  return g;
}

std::string vertex_name(const IncidenceGraph& g, int v) {
  if (g.is_clause(v)) return "c" + std::to_string(v - g.num_vars + 1);
  return "v" + std::to_string(v + 1);
}

}  // namespace redist
