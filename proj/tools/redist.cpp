// Command-line front end: reduce, verify, solve, roundtrip, render, gen.
// Exit codes: 0 success/found/agree, 1 negative answer, 2 input error.

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "redist/gen.hpp"
#include "redist/io.hpp"
#include "redist/pipeline.hpp"
#include "redist/populate.hpp"
#include "redist/roundtrip.hpp"
#include "redist/solve.hpp"
#include "redist/svg.hpp"
#include "redist/verify.hpp"

using namespace redist;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0, kNegative = 1, kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational positive_rational(const std::string& text, const char* what) {
  Rational r;
  try {
    r = parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
  if (r <= 0) throw InputError(std::string(what) + " must be positive");
  return r;
}

ReduceOptions reduce_options(const std::string& gamma, const std::string& d, const std::string& mode,
                             const std::string& eta) {
  ReduceOptions opt;
  opt.gamma = positive_rational(gamma, "--gamma");
  if (opt.gamma >= 1) throw InputError("--gamma must lie in (0,1)");
  if (!d.empty()) opt.d = positive_rational(d, "--d");
  try {
    opt.mode = parse_mode(mode);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (!eta.empty()) opt.eta = positive_rational(eta, "--eta");
  return opt;
}

Cnf3 load_cnf(const std::string& path) {
  try {
    return parse_cnf(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <class T, class F>
T load(const std::string& path, F reader) {
  std::istringstream in(read_file(path));
  try {
    return reader(in);
  } catch (const FormatError& e) {
    throw InputError(path + ": " + e.what());
  }
}

RedistrictingInstance load_instance(const std::string& path) { return load<RedistrictingInstance>(path, read_instance); }
Districting load_districting(const std::string& path) { return load<Districting>(path, read_districting); }
TownLayout load_layout(const std::string& path) { return load<TownLayout>(path, read_layout); }

template <class W, class V>
std::string to_text(W writer, const V& value) {
  std::ostringstream os;
  writer(os, value);
  return os.str();
}

int cmd_reduce(const std::string& cnf, const ReduceOptions& opt, const std::string& out) {
  const Cnf3 f = load_cnf(cnf);
  Reduction r;
  try {
    r = reduce(f, opt);
  } catch (const NotPlanarError& e) {
    throw InputError(cnf + ": " + e.what());
  } catch (const InfeasibleEta& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "hint: pass --eta to force a value or --mode paper-exact for the fixed parameters\n";
    return kNegative;
  }
  const RedistrictingInstance inst = populate(r.layout, opt.gamma);
  const auto& p = r.layout.params;
  std::ostringstream meta;
  meta << "N=" << p.N << "\ndelta=" << to_string(p.delta) << "\neta=" << to_string(p.eta)
       << "\neps=" << to_string(p.eps) << "\np=" << p.p << "\nL=" << choose_L(opt.gamma) << "\nn=" << inst.n
       << "\nk=" << inst.k << "\nm=" << inst.m << "\ntowns=" << r.layout.towns.size() << "\nmode=" << to_string(p.mode)
       << "\n";
  std::ostringstream ins;
  write_instance(ins, inst, &p);
  write_file(out + ".inst", ins.str());
  write_file(out + ".layout", to_text(write_layout, r.layout));
  write_file(out + ".meta", meta.str());
  std::cout << meta.str() << "wrote " << out << ".inst " << out << ".layout " << out << ".meta\n";
  return kOk;
}

int cmd_verify(const std::string& inst_path, const std::string& dist_path, bool json) {
  const auto inst = load_instance(inst_path);
  const auto dist = load_districting(dist_path);
  try {
    check_districting(inst, dist);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const LegalityReport rep = full_report(inst, dist);
  if (json) {
    nlohmann::json j;
    j["legal"] = rep.is_legal;
    j["fair"] = rep.is_fair;
    j["f1"]["lower"] = to_string(rep.f1.lower);
    j["f1"]["upper"] = to_string(rep.f1.upper);
    j["f1"]["failures"] = nlohmann::json::array();
    for (const auto& e : rep.f1.districts)
      if (!e.pass) j["f1"]["failures"].push_back({{"district", e.district}, {"size", e.size}});
    j["f2"] = nlohmann::json::array();
    for (const auto& [a, b] : rep.f2) j["f2"].push_back({a, b});
    j["f3"] = nlohmann::json::array();
    for (const auto& v : rep.f3)
      j["f3"].push_back({{"district", v.district},
                         {"voters", {v.voter_a, v.voter_b}},
                         {"sq_dist", to_string(v.sq_dist)}});
    j["f4"] = {{"majority", rep.majority}, {"m", rep.m}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.to_text();
  }
  return rep.is_legal && rep.is_fair ? kOk : kNegative;
}

int cmd_solve(const std::string& inst_path, const std::string& layout_path, const std::string& which, int limit,
              const std::string& out) {
  auto inst = load_instance(inst_path);
  std::optional<Districting> found;
  if (which == "naive") {
    NaiveLimits lim;
    if (limit > 0) lim.max_sites = limit;
    try {
      found = solve_fair_naive(inst, lim);
    } catch (const LimitExceeded& e) {
      throw InputError(e.what());
    }
  } else {
    if (layout_path.empty()) throw InputError("--layout is required for '" + which + "'");
    const TownLayout layout = load_layout(layout_path);
    try {
      attach_provenance(inst, layout);
      if (which == "legal")
        found = solve_legal(inst, layout);
      else
        found = solve_fair_structured(inst, layout, limit > 0 ? limit : 24);
    } catch (const FormatError& e) {
      throw InputError(e.what());
    } catch (const NotCycles& e) {
      throw InputError(std::string("layout is not a reduced instance: ") + e.what());
    } catch (const Malformed& e) {
      throw InputError(std::string("layout is not a reduced instance: ") + e.what());
    } catch (const LimitExceeded& e) {
      throw InputError(e.what());
    }
  }
  if (!found) {
    std::cout << "NONE\n";
    return kNegative;
  }
  const std::string text = to_text(write_districting, *found);
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  if (which == "legal") {
    const auto rep = full_report(inst, *found);
    std::cerr << "legal " << (rep.is_legal ? "yes" : "no") << ", fair " << (rep.is_fair ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_roundtrip(std::vector<std::string> cnfs, const std::string& corpus, const ReduceOptions& opt, int limit) {
  if (!corpus.empty()) {
    if (!fs::is_directory(corpus)) throw InputError(corpus + ": not a directory");
    std::vector<std::string> found;
    for (const auto& e : fs::directory_iterator(corpus))
      if (e.path().extension() == ".cnf") found.push_back(e.path().string());
    std::sort(found.begin(), found.end());
    cnfs.insert(cnfs.end(), found.begin(), found.end());
  }
  if (cnfs.empty()) throw InputError("no formulas given");
  int disagree = 0;
  double total = 0;
  for (const auto& path : cnfs) {
    const Cnf3 f = load_cnf(path);
    RoundtripResult r;
    try {
      r = roundtrip(f, opt, limit > 0 ? limit : 24);
    } catch (const NotPlanarError& e) {
      throw InputError(path + ": " + e.what());
    }
    total += r.seconds;
    disagree += r.verdict == Verdict::Disagree;
    std::cout << fs::path(path).filename().string() << " " << to_string(r.verdict) << " towns=" << r.towns
              << " voters=" << r.voters << " cycles=" << r.cycles << " seconds=" << r.seconds;
    if (!r.note.empty()) std::cout << " note=\"" << r.note << "\"";
    std::cout << "\n";
  }
  if (cnfs.size() > 1)
    std::cout << "total " << cnfs.size() << " disagree " << disagree << " seconds " << total << "\n";
  return disagree ? kNegative : kOk;
}

int cmd_render(const std::string& inst_path, const std::string& layout_path, const std::string& dist_path,
               const std::string& out) {
  const auto inst = load_instance(inst_path);
  RenderOptions ro;
  TownLayout layout;
  Districting dist;
  if (!layout_path.empty()) {
    layout = load_layout(layout_path);
    ro.layout = &layout;
  }
  if (!dist_path.empty()) {
    dist = load_districting(dist_path);
    try {
      check_districting(inst, dist);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    ro.dist = &dist;
  }
  const std::string svg = render_svg(inst, ro);
  if (out.empty())
    std::cout << svg;
  else
    write_file(out, svg);
  return kOk;
}

int cmd_gen(std::uint64_t seed, int vars, int clauses, const std::string& out) {
  if (vars < 3 || vars > 64 || clauses < 1 || clauses > 200) throw InputError("sizes out of range");
  const std::string text = serialize_cnf(random_planar_cnf(seed, vars, clauses));
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair redistricting instances from planar 3-SAT"};
  app.require_subcommand(1);

  std::string gamma = "1/4", d, mode = "adaptive", eta, out;
  std::uint64_t seed = 1;
  int limit = 0;

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a CNF file to an instance plus layout sidecar");
  std::string cnf;
  reduce_cmd->add_option("cnf", cnf, "DIMACS file")->required();
  auto add_params = [&](CLI::App* c) {
    c->add_option("--gamma", gamma, "population tolerance p/q in (0,1)");
    c->add_option("--d", d, "diameter bound p/q");
    c->add_option("--mode", mode, "adaptive or paper-exact");
    c->add_option("--eta", eta, "fixed eta p/q instead of the search");
  };
  add_params(reduce_cmd);
  reduce_cmd->add_option("-o", out, "output prefix")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a districting for legality and fairness");
  std::string inst_path, dist_path, layout_path;
  bool json = false;
  verify_cmd->add_option("instance", inst_path)->required();
  verify_cmd->add_option("districting", dist_path)->required();
  verify_cmd->add_flag("--json-style", json, "JSON report");

  auto* solve_cmd = app.add_subcommand("solve", "Search for a districting");
  std::string which = "fair";
  solve_cmd->add_option("instance", inst_path)->required();
  solve_cmd->add_option("--layout", layout_path, "layout sidecar (legal, fair)");
  solve_cmd->add_option("--which", which)->check(CLI::IsMember({"legal", "fair", "naive"}));
  solve_cmd->add_option("--limit", limit, "max cycles (fair) or max locations (naive)");
  solve_cmd->add_option("-o", out, "districting file (default stdout)");

  auto* rt_cmd = app.add_subcommand("roundtrip", "Compare brute-force SAT with the reduction");
  std::vector<std::string> cnfs;
  std::string corpus;
  rt_cmd->add_option("cnf", cnfs, "DIMACS files");
  rt_cmd->add_option("--corpus", corpus, "directory of .cnf files");
  rt_cmd->add_option("--limit", limit, "max cycles");
  add_params(rt_cmd);

  auto* render_cmd = app.add_subcommand("render", "Draw an instance as SVG");
  render_cmd->add_option("instance", inst_path)->required();
  render_cmd->add_option("--layout", layout_path, "layout sidecar for town colors");
  render_cmd->add_option("--dist", dist_path, "districting to draw as hulls");
  render_cmd->add_option("-o", out, "SVG file (default stdout)");

  auto* gen_cmd = app.add_subcommand("gen", "Random planar 3-CNF");
  int vars = 3, clauses = 1;
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--vars", vars);
  gen_cmd->add_option("--clauses", clauses);
  gen_cmd->add_option("-o", out, "CNF file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*reduce_cmd) return cmd_reduce(cnf, reduce_options(gamma, d, mode, eta), out);
    if (*verify_cmd) return cmd_verify(inst_path, dist_path, json);
    if (*solve_cmd) return cmd_solve(inst_path, layout_path, which, limit, out);
    if (*rt_cmd) return cmd_roundtrip(cnfs, corpus, reduce_options(gamma, d, mode, eta), limit);
    if (*render_cmd) return cmd_render(inst_path, layout_path, dist_path, out);
    if (*gen_cmd) return cmd_gen(seed, vars, clauses, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
