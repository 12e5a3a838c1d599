#include <doctest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <functional>
#include <map>
#include <sstream>

#include "redist/io.hpp"
#include "redist/pipeline.hpp"
#include "redist/solve.hpp"
#include "redist/svg.hpp"
#include "redist/validate.hpp"
#include "support.hpp"

using namespace redist;

namespace {

const Reduction& sample() {
  static const Reduction r = reduce(parse_cnf(testsupport::kSample));
  return r;
}

const RedistrictingInstance& sample_inst() {
  static const RedistrictingInstance inst = populate(sample().layout, make_rational(1, 4));
  return inst;
}

std::string inst_text(const RedistrictingInstance& inst, const ReductionParams* prm = nullptr) {
  std::ostringstream os;
  write_instance(os, inst, prm);
  return os.str();
}

template <class F>
std::string format_error(const std::string& text, F read) {
  std::istringstream is(text);
  try {
    read(is);
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

std::string inst_error(const std::string& text) {
  return format_error(text, [](std::istream& is) { read_instance(is); });
}
std::string dist_error(const std::string& text) {
  return format_error(text, [](std::istream& is) { read_districting(is); });
}

const char* kTiny =
    "REDIST 1\n"
    "params gamma=1/2 d=3\n"
    "instance n=3 k=2 m=1\n"
    "v 0 0 0 1\n"
    "v 1 1/2 -2 0\n"
    "v 2 0 0 1\n";

// Element counts by class, via an XML parser.
std::map<std::string, int> svg_classes(const std::string& svg) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream is(svg);
  pt::read_xml(is, tree);
  std::map<std::string, int> counts;
  std::function<void(const pt::ptree&)> walk = [&](const pt::ptree& node) {
    for (const auto& [tag, child] : node) {
      if (tag == "<xmlattr>") continue;
      if (auto cls = child.get_optional<std::string>("<xmlattr>.class")) ++counts[tag + "." + *cls];
      walk(child);
    }
  };
  walk(tree);
  return counts;
}

}  // namespace

TEST_CASE("tiny instance parses") {
  std::istringstream is(kTiny);
  const auto inst = read_instance(is);
  CHECK(inst.n == 3);
  CHECK(inst.k == 2);
  CHECK(inst.m == 1);
  CHECK(inst.gamma == make_rational(1, 2));
  CHECK(inst.d == 3);
  CHECK(inst.loc(1) == Point2{make_rational(1, 2), Rational(-2)});
  CHECK(inst.sites.size() == 2);
  CHECK(inst.site_of[0] == inst.site_of[2]);
  CHECK(inst.pref == std::vector<int>{1, 0, 1});
  // Voter lines may come in any order.
  std::istringstream shuffled(
      "REDIST 1\nparams gamma=1/2 d=3\ninstance n=3 k=2 m=1\n# comment\nv 2 0 0 1\nv 0 0.0 0 1\nv 1 0.5 -2 0\n");
  CHECK(inst_text(read_instance(shuffled)) == inst_text(inst));
}

TEST_CASE("instance errors carry line numbers") {
  const std::string head = "REDIST 1\nparams gamma=1/2 d=3\ninstance n=2 k=1 m=0\n";
  CHECK(inst_error(head + "v 0 0 0 1\nv 0 1 1 1\n").find("line 5") != std::string::npos);
  CHECK(inst_error(head + "v 0 0 0 1\nv 1 1/0 1 1\n").find("line 5") != std::string::npos);
  CHECK(inst_error(head + "v 0 0 0 1\nv 1 x 1 1\n").find("line 5") != std::string::npos);
  CHECK(inst_error(head + "v 0 0 0 1\nv 1 1 1 2\n").find("line 5") != std::string::npos);
  CHECK_FALSE(inst_error(head + "v 0 0 0 1\n").empty());  // truncated
  CHECK_FALSE(inst_error("REDIST 1\nparams gamma=1 d=3\ninstance n=0 k=1 m=0\n").empty());
  CHECK_FALSE(inst_error("REDIST 1\nparams gamma=1/2 d=0\ninstance n=0 k=1 m=0\n").empty());
  CHECK_FALSE(inst_error("REDIST 2\n").empty());
  CHECK_FALSE(inst_error("").empty());
}

TEST_CASE("reduced instance roundtrip") {
  const auto& inst = sample_inst();
  const std::string text = inst_text(inst, &sample().layout.params);
  CHECK(text.find("params ") != std::string::npos);
  std::istringstream is(text);
  auto back = read_instance(is);
  CHECK(back.n == inst.n);
  CHECK(back.k == inst.k);
  CHECK(back.m == inst.m);
  CHECK(back.gamma == inst.gamma);
  CHECK(back.d == inst.d);
  CHECK(back.pref == inst.pref);
  CHECK(back.sites == inst.sites);
  CHECK(back.site_of == inst.site_of);
  CHECK(inst_text(back, &sample().layout.params) == text);

  attach_provenance(back, sample().layout);
  CHECK(back.town_of == inst.town_of);
}

TEST_CASE("layout roundtrip") {
  const auto& L = sample().layout;
  std::ostringstream os;
  write_layout(os, L);
  std::istringstream is(os.str());
  const TownLayout back = read_layout(is);
  CHECK(dump_layout(back) == dump_layout(L));
  CHECK(back.cycles == L.cycles);
  CHECK(validate_reduction(back).ok());
  std::ostringstream again;
  write_layout(again, back);
  CHECK(again.str() == os.str());

  // Dropping a pair line is an error.
  std::string text = os.str();
  const auto at = text.find("\npair ");
  REQUIRE(at != std::string::npos);
  text.erase(at + 1, text.find('\n', at + 1) - at);
  std::istringstream broken(text);
  CHECK_THROWS_AS(read_layout(broken), FormatError);
}

TEST_CASE("provenance needs every location to be a town") {
  RedistrictingInstance inst = sample_inst();
  inst.site_of.clear();
  inst.town_of.clear();
  attach_provenance(inst, sample().layout);
  CHECK(inst.town_of == sample_inst().town_of);
  std::istringstream is(kTiny);
  auto tiny = read_instance(is);
  CHECK_THROWS_AS(attach_provenance(tiny, sample().layout), FormatError);
}

TEST_CASE("districting roundtrip and errors") {
  const Districting d{3, {0, 2, 1, 1}};
  std::ostringstream os;
  write_districting(os, d);
  std::istringstream is(os.str());
  const auto back = read_districting(is);
  CHECK(back.k == 3);
  CHECK(back.assignment == d.assignment);
  CHECK_FALSE(dist_error("").empty());
  CHECK_FALSE(dist_error("DIST 1 k=2\n0 0\n0 1\n").empty());   // duplicate voter
  CHECK_FALSE(dist_error("DIST 1 k=2\n0 0\n2 1\n").empty());   // gap at voter 1
  CHECK_FALSE(dist_error("DIST 1 k=2\n0 0\n1 2\n").empty());   // district out of range
  CHECK(dist_error("DIST 1 k=2\n0 0\n1 x\n").find("line 3") != std::string::npos);
}

TEST_CASE("svg rendering") {
  const auto& inst = sample_inst();
  const auto& L = sample().layout;
  const Districting dist = assignment_to_districting(inst, L, Assignment(4, false));
  RenderOptions opt;
  opt.layout = &L;
  opt.dist = &dist;
  const std::string svg = render_svg(inst, opt);
  CHECK(svg == render_svg(inst, opt));
  const auto counts = svg_classes(svg);
  CHECK(counts.at("circle.town") == static_cast<int>(L.towns.size()));
  int districts = 0;
  for (const auto& [key, c] : counts)
    if (key.size() > 9 && key.compare(key.size() - 9, 9, ".district") == 0) districts += c;
  CHECK(districts == inst.k);

  const auto bare = svg_classes(render_svg(inst));
  CHECK(bare.at("circle.town") == static_cast<int>(inst.sites.size()));
  CHECK(bare.count("polygon.district") == 0);
}
