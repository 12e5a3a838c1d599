#include "redist/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

namespace redist {

namespace {

const char* kind_color(TownKind k) {
  switch (k) {
    case TownKind::BigClause:
      return "#d01cc0";  // magenta
    case TownKind::SmallClause:
      return "#7b3fb5";  // violet
    case TownKind::ClauseAdjacent:
      return "#2a9d3a";  // green
    case TownKind::Edge:
      return "#2f5fd0";  // blue
  }
  return "#000000";
}

// Golden-angle hues keep neighbouring district indices apart.
std::string district_color(int d) {
  const double h = std::fmod(d * 137.508, 360.0);
  char buf[40];
  std::snprintf(buf, sizeof buf, "hsl(%.1f,70%%,60%%)", h);
  return buf;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const RedistrictingInstance& inst, const RenderOptions& opt) {
  const std::size_t S = inst.sites.size();
  std::vector<double> xs(S), ys(S);
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x, hi_x = -lo_x, hi_y = -lo_x;
  for (std::size_t s = 0; s < S; ++s) {
    xs[s] = inst.sites[s].x.get_d();
    ys[s] = inst.sites[s].y.get_d();
    lo_x = std::min(lo_x, xs[s]);
    hi_x = std::max(hi_x, xs[s]);
    lo_y = std::min(lo_y, ys[s]);
    hi_y = std::max(hi_y, ys[s]);
  }
  if (S == 0) lo_x = lo_y = 0, hi_x = hi_y = 1;
  double span = std::max(hi_x - lo_x, hi_y - lo_y);
  if (span <= 0) span = 1;
  const double pad = 0.05 * span;
  lo_x -= pad;
  lo_y -= pad;
  hi_x += pad;
  hi_y += pad;
  const double scale = opt.width / (hi_x - lo_x);
  const double height = (hi_y - lo_y) * scale;
  auto px = [&](double x) { return (x - lo_x) * scale; };
  auto py = [&](double y) { return (hi_y - y) * scale; };  // y up

  // Town kind per site, from the layout when its locations cover the sites.
  std::vector<const Town*> town_at(S, nullptr);
  if (opt.layout) {
    std::map<Point2, const Town*> by_loc;
    for (const auto& t : opt.layout->towns) by_loc.emplace(t.loc, &t);
    for (std::size_t s = 0; s < S; ++s) {
      auto it = by_loc.find(inst.sites[s]);
      if (it != by_loc.end()) town_at[s] = it->second;
    }
  }
  // Circle radius: a third of the closest-pair estimate (eta on reduced instances).
  double r = span / 300;
  if (opt.layout && opt.layout->params.eta > 0) r = opt.layout->params.eta.get_d() / 3;
  const double r_px = std::max(0.6, r * scale);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(opt.width) << "\" height=\"" << num(height)
     << "\" viewBox=\"0 0 " << num(opt.width) << " " << num(height) << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (opt.dist) {
    os << "<g id=\"districts\" fill-opacity=\"0.35\" stroke-width=\"1\">\n";
    const auto per = district_sites(inst, *opt.dist);
    for (int d = 0; d < static_cast<int>(per.size()); ++d) {
      const auto& sites = per[d];
      if (sites.empty()) continue;
      std::vector<Point2> pts;
      for (int s : sites) pts.push_back(inst.sites[s]);
      const auto hull = convex_hull(pts);
      const std::string col = district_color(d);
      if (hull.vertices.size() <= 2) {
        // Degenerate hull: draw a thick segment or dot so the district stays visible.
        const auto& a = hull.vertices.front();
        const auto& b = hull.vertices.back();
        os << "<line class=\"district\" data-district=\"" << d << "\" x1=\"" << num(px(a.x.get_d())) << "\" y1=\""
           << num(py(a.y.get_d())) << "\" x2=\"" << num(px(b.x.get_d())) << "\" y2=\"" << num(py(b.y.get_d()))
           << "\" stroke=\"" << col << "\" stroke-width=\"" << num(3 * r_px) << "\" stroke-linecap=\"round\"/>\n";
        continue;
      }
      os << "<polygon class=\"district\" data-district=\"" << d << "\" fill=\"" << col << "\" stroke=\"" << col
         << "\" points=\"";
      for (std::size_t i = 0; i < hull.vertices.size(); ++i)
        os << (i ? " " : "") << num(px(hull.vertices[i].x.get_d())) << "," << num(py(hull.vertices[i].y.get_d()));
      os << "\"/>\n";
    }
    os << "</g>\n";
  }

  std::vector<long> pref1(S, 0), count(S, 0);
  for (long i = 0; i < inst.n; ++i) {
    ++count[inst.site_of[i]];
    pref1[inst.site_of[i]] += inst.pref[i];
  }
  os << "<g id=\"towns\">\n";
  for (std::size_t s = 0; s < S; ++s) {
    const Town* t = town_at[s];
    const char* col = t ? kind_color(t->kind) : (2 * pref1[s] > count[s] ? "#c03030" : "#404040");
    double rad = r_px;
    if (t && t->kind == TownKind::BigClause) rad *= 2;
    os << "<circle class=\"town\" cx=\"" << num(px(xs[s])) << "\" cy=\"" << num(py(ys[s])) << "\" r=\"" << num(rad)
       << "\" fill=\"" << col << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace redist
