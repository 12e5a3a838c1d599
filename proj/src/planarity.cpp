#include "redist/planarity.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <map>
#include <stdexcept>

namespace redist {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                     boost::property<boost::edge_index_t, int>>;

std::vector<int> component_ids(const IncidenceGraph& g, int& count) {
  const auto adj = g.adjacency();
  std::vector<int> comp(g.num_vertices(), -1);
  count = 0;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return comp;
}

}  // namespace

std::vector<int> faces_per_component(const IncidenceGraph& g, const RotationSystem& rot) {
  const int n = g.num_vertices();
  if (static_cast<int>(rot.size()) != n) throw std::invalid_argument("rotation size mismatch");
  const auto adj = g.adjacency();
  // Position of each neighbour in the vertex's rotation.
  std::vector<std::map<int, int>> pos(n);
  for (int v = 0; v < n; ++v) {
    auto sorted = rot[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != adj[v]) throw std::invalid_argument("rotation does not match edges at vertex " + std::to_string(v));
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) pos[v][rot[v][i]] = i;
  }
  int ncomp = 0;
  const auto comp = component_ids(g, ncomp);
  std::vector<int> faces(ncomp, 0);
  std::map<std::pair<int, int>, bool> used;
  for (int u = 0; u < n; ++u) {
    if (rot[u].empty()) {
      faces[comp[u]] = 1;
      continue;
    }
    for (int v : rot[u]) {
      if (used[{u, v}]) continue;
      // Walk the face to the left of dart u->v.
      int a = u, b = v;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        const auto& r = rot[b];
        const int i = pos[b].at(a);
        const int c = r[(i + r.size() - 1) % r.size()];
        a = b;
        b = c;
      }
      ++faces[comp[u]];
    }
  }
  return faces;
}

bool rotation_is_planar(const IncidenceGraph& g, const RotationSystem& rot) {
  const auto faces = faces_per_component(g, rot);
  int ncomp = 0;
  const auto comp = component_ids(g, ncomp);
  std::vector<long> verts(ncomp, 0), edges(ncomp, 0);
  for (int v = 0; v < g.num_vertices(); ++v) ++verts[comp[v]];
  for (auto [u, v] : g.edges) ++edges[comp[u]];
  for (int c = 0; c < ncomp; ++c)
    if (verts[c] - edges[c] + faces[c] != 2) return false;
  return true;
}

std::variant<RotationSystem, NotPlanar> check_planarity(const IncidenceGraph& g) {
  if (!g.rotation.empty()) {
    if (!rotation_is_planar(g, g.rotation)) throw std::invalid_argument("supplied rotation system is not planar");
    return g.rotation;
  }
  const int n = g.num_vertices();
  BGraph bg(n);
  for (auto [u, v] : g.edges) boost::add_edge(u, v, bg);
  int idx = 0;
  for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei) boost::put(boost::edge_index, bg, *ei, idx++);

  using Edge = boost::graph_traits<BGraph>::edge_descriptor;
  std::vector<std::vector<Edge>> embedding(n);
  std::vector<Edge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = boost::make_iterator_property_map(
          embedding.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (!planar) {
    NotPlanar np;
    for (const auto& e : kuratowski) {
      int a = static_cast<int>(boost::source(e, bg)), b = static_cast<int>(boost::target(e, bg));
      np.witness.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(np.witness.begin(), np.witness.end());
    return np;
  }
  RotationSystem rot(n);
  for (int v = 0; v < n; ++v)
    for (const auto& e : embedding[v]) {
      int a = static_cast<int>(boost::source(e, bg)), b = static_cast<int>(boost::target(e, bg));
      rot[v].push_back(a == v ? b : a);
    }
  return rot;
}

}  // namespace redist
