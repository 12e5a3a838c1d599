#include "redist/embed.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace redist {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;
using Embedding = std::vector<std::vector<BEdge>>;

void reindex_edges(BGraph& g) {
  int i = 0;
  for (auto [ei, ee] = boost::edges(g); ei != ee; ++ei) boost::put(boost::edge_index, g, *ei, i++);
}

Embedding planar_embed(BGraph& g) {
  reindex_edges(g);
  Embedding emb(boost::num_vertices(g));
  const bool ok = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = g,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, g)));
  if (!ok) throw std::logic_error("graph became non-planar during augmentation");
  return emb;
}

struct EdgeCollector {
  std::vector<std::pair<int, int>>* added;
  template <typename V>
  void visit_vertex_pair(V u, V v, BGraph& g) {
    boost::add_edge(u, v, g);
    added->emplace_back(std::min<int>(u, v), std::max<int>(u, v));
  }
};

}  // namespace

GridEmbedding grid_embed(const IncidenceGraph& ig, const RotationSystem&) {
  const int n = ig.num_vertices();
  GridEmbedding out;
  out.edges = ig.edges;
  out.grid_side = 2L * n;
  if (n < 3) {
    for (int v = 0; v < n; ++v) out.coords.push_back({Rational(v), Rational(0)});
    return out;
  }

  BGraph g(n);
  for (auto [u, v] : ig.edges) boost::add_edge(u, v, g);
  std::vector<std::pair<int, int>> added;
  EdgeCollector vis{&added};

  reindex_edges(g);
  boost::make_connected(g, boost::get(boost::vertex_index, g), vis);
  auto emb = planar_embed(g);
  boost::make_biconnected_planar(g, &emb[0], boost::get(boost::edge_index, g), vis);
  emb = planar_embed(g);
  boost::make_maximal_planar(g, &emb[0], boost::get(boost::vertex_index, g), boost::get(boost::edge_index, g), vis);
  emb = planar_embed(g);

  std::vector<boost::graph_traits<BGraph>::vertex_descriptor> order;
  boost::planar_canonical_ordering(g, &emb[0], std::back_inserter(order));

  struct Coord {
    std::size_t x, y;
  };
  std::vector<Coord> drawing(n);
  boost::chrobak_payne_straight_line_drawing(
      g, emb, order.begin(), order.end(),
      boost::make_iterator_property_map(drawing.begin(), boost::get(boost::vertex_index, g)));
  for (int v = 0; v < n; ++v)
    out.coords.push_back({Rational(static_cast<long>(drawing[v].x)), Rational(static_cast<long>(drawing[v].y))});

  std::set<std::pair<int, int>> own(ig.edges.begin(), ig.edges.end());
  std::set<std::pair<int, int>> audit;
  for (auto p : added)
    if (!own.count(p)) audit.insert(p);
  out.audit_edges.assign(audit.begin(), audit.end());
  return out;
}

std::vector<std::string> validate_embedding(const GridEmbedding& e) {
  std::vector<std::string> bad;
  const Rational hi(e.grid_side);
  for (std::size_t v = 0; v < e.coords.size(); ++v) {
    const auto& p = e.coords[v];
    if (p.x.get_den() != 1 || p.y.get_den() != 1)
      bad.push_back("vertex " + std::to_string(v) + " is not a grid point");
    if (p.x < 0 || p.y < 0 || p.x > hi || p.y > hi)
      bad.push_back("vertex " + std::to_string(v) + " outside grid bound " + std::to_string(e.grid_side));
  }
  for (std::size_t a = 0; a < e.coords.size(); ++a)
    for (std::size_t b = a + 1; b < e.coords.size(); ++b)
      if (e.coords[a] == e.coords[b])
        bad.push_back("vertices " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
  auto name = [&](std::size_t i) {
    return "(" + std::to_string(e.edges[i].first) + "," + std::to_string(e.edges[i].second) + ")";
  };
  for (std::size_t i = 0; i < e.edges.size(); ++i) {
    const Segment s = e.segment(i);
    for (std::size_t v = 0; v < e.coords.size(); ++v) {
      if (static_cast<int>(v) == e.edges[i].first || static_cast<int>(v) == e.edges[i].second) continue;
      if (on_segment(e.coords[v], s)) bad.push_back("vertex " + std::to_string(v) + " lies on edge " + name(i));
    }
    for (std::size_t j = i + 1; j < e.edges.size(); ++j) {
      if (segments_properly_intersect(s, e.segment(j)))
        bad.push_back("edges " + name(i) + " and " + name(j) + " cross");
    }
  }
  return bad;
}

MinFeatures min_features(const GridEmbedding& e) {
  MinFeatures f;
  bool have_sin = false, have_dist = false;
  auto take_sin = [&](const Rational& s) {
    if (s == 0) return;
    if (!have_sin || s < f.min_sin_sq) f.min_sin_sq = s;
    have_sin = true;
  };
  auto take_dist = [&](const Rational& d) {
    if (d == 0) return;
    if (!have_dist || d < f.min_dist_sq) f.min_dist_sq = d;
    have_dist = true;
  };
  const std::size_t m = e.edges.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto [a, b] = e.edges[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto [c, d] = e.edges[j];
      int shared = -1, oa = -1, ob = -1;
      if (a == c) shared = a, oa = b, ob = d;
      else if (a == d) shared = a, oa = b, ob = c;
      else if (b == c) shared = b, oa = a, ob = d;
      else if (b == d) shared = b, oa = a, ob = c;
      if (shared >= 0)
        take_sin(sin_sq_angle(e.coords[oa], e.coords[shared], e.coords[ob]));
      else
        take_dist(sq_dist_segments(e.segment(i), e.segment(j)));
    }
    for (std::size_t v = 0; v < e.coords.size(); ++v) {
      if (static_cast<int>(v) == a || static_cast<int>(v) == b) continue;
      take_dist(sq_dist_point_segment(e.coords[v], e.segment(i)));
    }
  }
  if (!have_sin) f.min_sin_sq = 1;
  if (!have_dist) f.min_dist_sq = Rational(e.grid_side) * e.grid_side;
  return f;
}

std::string dump_embedding(const GridEmbedding& e) {
  std::ostringstream out;
  for (std::size_t v = 0; v < e.coords.size(); ++v)
    out << "v " << v << ' ' << to_string(e.coords[v].x) << ' ' << to_string(e.coords[v].y) << '\n';
  for (auto [a, b] : e.edges) out << "e " << a << ' ' << b << '\n';
  return out.str();
}

}  // namespace redist
