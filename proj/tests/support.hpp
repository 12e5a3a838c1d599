#pragma once

#include <algorithm>
#include <array>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "redist/io.hpp"
#include "redist/sat.hpp"
#include "redist/towns.hpp"

namespace testsupport {

inline const char* kSample = "p cnf 4 2\n-1 2 -4 0\n-2 -4 -3 0\n";

inline std::string data_path(const std::string& rel) { return std::string(REDIST_DATA_DIR) + "/" + rel; }

inline redist::Cnf3 corpus_formula(const std::string& name) {
  return redist::parse_cnf(redist::read_file(data_path("corpus/" + name)));
}

// Sorted .cnf file names in the corpus whose name starts with prefix.
inline std::vector<std::string> corpus_names(const std::string& prefix = "") {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(data_path("corpus"))) {
    const auto name = e.path().filename().string();
    if (e.path().extension() == ".cnf" && name.rfind(prefix, 0) == 0) out.push_back(name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Edge-town counts of the runs between clause-adjacent towns of different
// clauses, walking a variable's cycle once.
inline std::vector<int> runs_between_clauses(const redist::TownLayout& L, const std::vector<int>& cycle) {
  using redist::TownKind;
  std::vector<int> runs;
  const int n = static_cast<int>(cycle.size());
  int start = 0;
  while (L.towns[cycle[start]].kind != TownKind::ClauseAdjacent) ++start;
  int prev = cycle[start], count = 0;
  for (int k = 1; k <= n; ++k) {
    const int id = cycle[(start + k) % n];
    if (L.towns[id].kind == TownKind::Edge) {
      ++count;
      continue;
    }
    if (L.towns[id].owner != L.towns[prev].owner || count > 0) runs.push_back(count);
    prev = id;
    count = 0;
  }
  return runs;
}

// Random planar graph on n >= 3 vertices: a stacked triangulation shuffled by
// random edge flips, then each edge kept with probability keep.
inline std::vector<std::pair<int, int>> random_planar_edges(std::mt19937_64& rng, int n, double keep) {
  using Tri = std::array<int, 3>;
  std::vector<Tri> tris = {{0, 1, 2}, {0, 2, 1}};  // both sides of the first triangle
  for (int v = 3; v < n; ++v) {
    const std::size_t t = rng() % tris.size();
    const Tri f = tris[t];
    tris[t] = {f[0], f[1], v};
    tris.push_back({f[1], f[2], v});
    tris.push_back({f[2], f[0], v});
  }
  auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::set<std::pair<int, int>> edges;
  for (const auto& t : tris)
    for (int i = 0; i < 3; ++i) edges.insert(key(t[i], t[(i + 1) % 3]));
  for (int flip = 0; flip < 4 * n; ++flip) {
    const std::size_t t1 = rng() % tris.size();
    const int i = static_cast<int>(rng() % 3);
    const int a = tris[t1][i], b = tris[t1][(i + 1) % 3], c = tris[t1][(i + 2) % 3];
    // The other triangle holds the directed edge b -> a.
    std::size_t t2 = tris.size();
    int d = -1;
    for (std::size_t s = 0; s < tris.size() && t2 == tris.size(); ++s)
      for (int j = 0; j < 3; ++j)
        if (tris[s][j] == b && tris[s][(j + 1) % 3] == a) {
          t2 = s;
          d = tris[s][(j + 2) % 3];
        }
    if (t2 == tris.size() || c == d || edges.count(key(c, d))) continue;
    edges.erase(key(a, b));
    edges.insert(key(c, d));
    tris[t1] = {c, a, d};
    tris[t2] = {d, b, c};
  }
  std::vector<std::pair<int, int>> out;
  std::uniform_real_distribution<double> u(0, 1);
  for (const auto& e : edges)
    if (u(rng) < keep) out.push_back(e);
  return out;
}

}  // namespace testsupport
