#include "redist/io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace redist {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::istream& is) : is_(is) {}

  // Next non-empty, non-comment line split into tokens; false at end.
  bool next(std::vector<std::string_view>& toks) {
    while (std::getline(is_, buf_)) {
      ++line_;
      toks = split(buf_);
      if (!toks.empty() && toks[0][0] != '#') return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("line " + std::to_string(line_) + ": " + what);
  }

  Rational rational(std::string_view s) const {
    try {
      return parse_rational(s);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  long integer(std::string_view s) const {
    long v = 0;
    std::size_t used = 0;
    try {
      v = std::stol(std::string(s), &used);
    } catch (const std::exception&) {
      fail("bad integer '" + std::string(s) + "'");
    }
    if (used != s.size()) fail("bad integer '" + std::string(s) + "'");
    return v;
  }

  std::map<std::string, std::string> keyvals(const std::vector<std::string_view>& toks, std::size_t from) const {
    std::map<std::string, std::string> kv;
    for (std::size_t i = from; i < toks.size(); ++i) {
      auto eq = toks[i].find('=');
      if (eq == std::string_view::npos) fail("expected key=value, got '" + std::string(toks[i]) + "'");
      kv[std::string(toks[i].substr(0, eq))] = std::string(toks[i].substr(eq + 1));
    }
    return kv;
  }

  std::string need(const std::map<std::string, std::string>& kv, const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end()) fail("missing " + key + "=");
    return it->second;
  }

 private:
  std::istream& is_;
  std::string buf_;
  long line_ = 0;
};

void read_header(Reader& r, std::vector<std::string_view>& toks, std::string_view magic) {
  if (!r.next(toks) || toks.size() < 2 || toks[0] != magic || toks[1] != "1")
    r.fail("expected header '" + std::string(magic) + " 1'");
}

std::string owner_token(const Town& t) {
  return (t.kind == TownKind::Edge ? "v" : "c") + std::to_string(t.owner + 1);
}

int parse_owner(const Reader& r, std::string_view s, char prefix) {
  if (s.size() < 2 || s[0] != prefix) r.fail("bad owner '" + std::string(s) + "'");
  const long v = r.integer(s.substr(1));
  if (v < 1) r.fail("bad owner '" + std::string(s) + "'");
  return static_cast<int>(v - 1);
}

}  // namespace

void write_instance(std::ostream& os, const RedistrictingInstance& inst, const ReductionParams* prm) {
  os << "REDIST 1\n";
  if (prm) {
    ReductionParams p = *prm;
    p.gamma = inst.gamma;
    p.d = inst.d;
    os << params_line(p) << "\n";
  } else {
    os << "params gamma=" << to_string(inst.gamma) << " d=" << to_string(inst.d) << "\n";
  }
  os << "instance n=" << inst.n << " k=" << inst.k << " m=" << inst.m << "\n";
  std::vector<std::string> site_text(inst.sites.size());
  for (std::size_t s = 0; s < inst.sites.size(); ++s)
    site_text[s] = to_string(inst.sites[s].x) + " " + to_string(inst.sites[s].y);
  for (long i = 0; i < inst.n; ++i) os << "v " << i << " " << site_text[inst.site_of[i]] << " " << inst.pref[i] << "\n";
}

RedistrictingInstance read_instance(std::istream& is) {
  Reader r(is);
  std::vector<std::string_view> toks;
  read_header(r, toks, "REDIST");
  RedistrictingInstance inst;
  bool have_params = false, have_sizes = false;
  std::vector<char> seen;
  std::unordered_map<std::string, int> site_id;
  std::string key;
  while (r.next(toks)) {
    if (toks[0] == "params") {
      auto kv = r.keyvals(toks, 1);
      inst.gamma = r.rational(r.need(kv, "gamma"));
      inst.d = r.rational(r.need(kv, "d"));
      if (inst.gamma <= 0 || inst.gamma >= 1) r.fail("gamma must lie in (0,1)");
      if (inst.d <= 0) r.fail("d must be positive");
      have_params = true;
    } else if (toks[0] == "instance") {
      auto kv = r.keyvals(toks, 1);
      inst.n = r.integer(r.need(kv, "n"));
      inst.k = r.integer(r.need(kv, "k"));
      inst.m = r.integer(r.need(kv, "m"));
      if (inst.n < 0 || inst.k < 1 || inst.m < 0) r.fail("bad instance sizes");
      inst.site_of.assign(inst.n, -1);
      inst.pref.assign(inst.n, 0);
      seen.assign(inst.n, 0);
      have_sizes = true;
    } else if (toks[0] == "v") {
      if (!have_sizes) r.fail("voter before instance line");
      if (toks.size() != 5) r.fail("voter line needs 'v id x y pref'");
      const long id = r.integer(toks[1]);
      if (id < 0 || id >= inst.n) r.fail("voter id out of range");
      if (seen[id]) r.fail("duplicate voter id " + std::to_string(id));
      seen[id] = 1;
      key.assign(toks[2]);
      key += ' ';
      key.append(toks[3]);
      auto [it, fresh] = site_id.try_emplace(key, static_cast<int>(inst.sites.size()));
      if (fresh) inst.sites.push_back({r.rational(toks[2]), r.rational(toks[3])});
      inst.site_of[id] = it->second;
      if (toks[4] != "0" && toks[4] != "1") r.fail("preference must be 0 or 1");
      inst.pref[id] = toks[4] == "1";
    } else if (toks[0] == "t") {
      continue;
    } else {
      r.fail("unknown record '" + std::string(toks[0]) + "'");
    }
  }
  if (!have_params) r.fail("missing params line");
  if (!have_sizes) r.fail("missing instance line");
  for (long i = 0; i < inst.n; ++i)
    if (!seen[i]) r.fail("voter " + std::to_string(i) + " missing");
  // Text keys differ for equal rationals written differently; merge them.
  std::map<Point2, int> canon;
  std::vector<int> remap(inst.sites.size());
  std::vector<Point2> sites;
  for (std::size_t s = 0; s < inst.sites.size(); ++s) {
    auto [it, fresh] = canon.try_emplace(inst.sites[s], static_cast<int>(sites.size()));
    if (fresh) sites.push_back(inst.sites[s]);
    remap[s] = it->second;
  }
  if (sites.size() != inst.sites.size()) {
    for (int& s : inst.site_of) s = remap[s];
    inst.sites = std::move(sites);
  }
  return inst;
}

void write_districting(std::ostream& os, const Districting& dist) {
  os << "DIST 1 k=" << dist.k << "\n";
  for (std::size_t i = 0; i < dist.assignment.size(); ++i) os << i << " " << dist.assignment[i] << "\n";
}

Districting read_districting(std::istream& is) {
  Reader r(is);
  std::vector<std::string_view> toks;
  if (!r.next(toks) || toks.size() != 3 || toks[0] != "DIST" || toks[1] != "1" || toks[2].substr(0, 2) != "k=")
    r.fail("expected header 'DIST 1 k=<int>'");
  Districting dist;
  dist.k = r.integer(toks[2].substr(2));
  if (dist.k < 1) r.fail("k must be positive");
  std::vector<int> assign;
  std::vector<char> seen;
  while (r.next(toks)) {
    if (toks.size() != 2) r.fail("expected '<voter> <district>'");
    const long v = r.integer(toks[0]);
    const long d = r.integer(toks[1]);
    if (v < 0) r.fail("negative voter id");
    if (d < 0 || d >= dist.k) r.fail("district out of range");
    if (static_cast<std::size_t>(v) >= assign.size()) {
      assign.resize(v + 1, -1);
      seen.resize(v + 1, 0);
    }
    if (seen[v]) r.fail("duplicate voter id " + std::to_string(v));
    seen[v] = 1;
    assign[v] = static_cast<int>(d);
  }
  for (std::size_t i = 0; i < assign.size(); ++i)
    if (!seen[i]) r.fail("voter " + std::to_string(i) + " missing");
  if (assign.empty()) r.fail("empty districting");
  dist.assignment = std::move(assign);
  return dist;
}

void write_layout(std::ostream& os, const TownLayout& layout) {
  const auto& p = layout.params;
  os << "LAYOUT 1\n" << params_line(p) << "\n";
  os << "meta N=" << p.N << " delta1=" << to_string(p.delta1) << " delta2=" << to_string(p.delta2) << " t=" << p.t
     << " vars=" << layout.num_vars << " clauses=" << layout.num_clauses << "\n";
  for (std::size_t id = 0; id < layout.towns.size(); ++id) {
    const auto& t = layout.towns[id];
    os << "t " << id << " " << to_string(t.kind) << " " << owner_token(t) << " " << to_string(t.loc.x) << " "
       << to_string(t.loc.y) << "\n";
  }
  for (std::size_t v = 0; v < layout.cycles.size(); ++v) {
    if (layout.cycles[v].empty()) continue;
    os << "cycle v" << v + 1;
    for (int id : layout.cycles[v]) os << " " << id;
    os << "\n";
  }
  for (std::size_t c = 0; c < layout.clause_pairs.size(); ++c)
    for (int dir = 0; dir < 3; ++dir) {
      const auto& pr = layout.clause_pairs[c][dir];
      const auto& lit = layout.pair_literal[c][dir];
      os << "pair c" << c + 1 << " " << dir << " " << pr.first << " " << pr.second << " "
         << (lit.negated ? "-" : "") << lit.variable + 1 << "\n";
    }
}

TownLayout read_layout(std::istream& is) {
  Reader r(is);
  std::vector<std::string_view> toks;
  read_header(r, toks, "LAYOUT");
  TownLayout L;
  bool have_params = false, have_meta = false;
  std::vector<std::vector<char>> pair_seen;
  while (r.next(toks)) {
    if (toks[0] == "params") {
      auto kv = r.keyvals(toks, 1);
      auto& p = L.params;
      p.gamma = r.rational(r.need(kv, "gamma"));
      p.d = r.rational(r.need(kv, "d"));
      p.eta = r.rational(r.need(kv, "eta"));
      p.eps = r.rational(r.need(kv, "eps"));
      p.delta = r.rational(r.need(kv, "delta"));
      p.p = static_cast<int>(r.integer(r.need(kv, "p")));
      try {
        p.mode = parse_mode(r.need(kv, "mode"));
      } catch (const std::invalid_argument& e) {
        r.fail(e.what());
      }
      have_params = true;
    } else if (toks[0] == "meta") {
      auto kv = r.keyvals(toks, 1);
      L.params.N = r.integer(r.need(kv, "N"));
      L.params.delta1 = r.rational(r.need(kv, "delta1"));
      L.params.delta2 = r.rational(r.need(kv, "delta2"));
      L.params.t = static_cast<int>(r.integer(r.need(kv, "t")));
      L.num_vars = static_cast<int>(r.integer(r.need(kv, "vars")));
      L.num_clauses = static_cast<int>(r.integer(r.need(kv, "clauses")));
      if (L.num_vars < 0 || L.num_clauses < 0) r.fail("negative sizes");
      L.cycles.assign(L.num_vars, {});
      L.clause_pairs.assign(L.num_clauses, {});
      L.pair_literal.assign(L.num_clauses, {});
      pair_seen.assign(L.num_clauses, std::vector<char>(3, 0));
      have_meta = true;
    } else if (toks[0] == "t") {
      if (!have_meta) r.fail("town before meta line");
      if (toks.size() != 6) r.fail("town line needs 't id kind owner x y'");
      if (r.integer(toks[1]) != static_cast<long>(L.towns.size())) r.fail("town ids must be consecutive from 0");
      Town t;
      try {
        t.kind = parse_town_kind(std::string(toks[2]));
      } catch (const std::invalid_argument& e) {
        r.fail(e.what());
      }
      const bool edge = t.kind == TownKind::Edge;
      t.owner = parse_owner(r, toks[3], edge ? 'v' : 'c');
      if (t.owner >= (edge ? L.num_vars : L.num_clauses)) r.fail("owner out of range");
      t.loc = {r.rational(toks[4]), r.rational(toks[5])};
      L.towns.push_back(t);
    } else if (toks[0] == "cycle") {
      if (toks.size() < 2) r.fail("cycle line needs a variable");
      const int v = parse_owner(r, toks[1], 'v');
      if (v >= L.num_vars) r.fail("variable out of range");
      if (!L.cycles[v].empty()) r.fail("duplicate cycle for variable");
      for (std::size_t i = 2; i < toks.size(); ++i) {
        const long id = r.integer(toks[i]);
        if (id < 0 || id >= static_cast<long>(L.towns.size())) r.fail("town id out of range");
        L.cycles[v].push_back(static_cast<int>(id));
      }
    } else if (toks[0] == "pair") {
      if (toks.size() != 6) r.fail("pair line needs 'pair clause dir a b literal'");
      const int c = parse_owner(r, toks[1], 'c');
      if (c >= L.num_clauses) r.fail("clause out of range");
      const long dir = r.integer(toks[2]);
      if (dir < 0 || dir > 2) r.fail("direction must be 0, 1 or 2");
      if (pair_seen[c][dir]) r.fail("duplicate pair");
      pair_seen[c][dir] = 1;
      const long a = r.integer(toks[3]), b = r.integer(toks[4]), lit = r.integer(toks[5]);
      const long T = static_cast<long>(L.towns.size());
      if (a < 0 || a >= T || b < 0 || b >= T) r.fail("town id out of range");
      if (lit == 0 || std::labs(lit) > L.num_vars) r.fail("literal out of range");
      L.clause_pairs[c][dir] = {static_cast<int>(a), static_cast<int>(b)};
      L.pair_literal[c][dir] = {static_cast<int>(std::labs(lit) - 1), lit < 0};
    } else {
      r.fail("unknown record '" + std::string(toks[0]) + "'");
    }
  }
  if (!have_params) r.fail("missing params line");
  if (!have_meta) r.fail("missing meta line");
  for (int c = 0; c < L.num_clauses; ++c)
    for (int dir = 0; dir < 3; ++dir)
      if (!pair_seen[c][dir]) r.fail("clause c" + std::to_string(c + 1) + " lacks pair " + std::to_string(dir));
  // Index within owner: cycle position for edge towns, file order otherwise.
  std::map<std::pair<int, int>, int> counter;
  for (auto& t : L.towns)
    if (t.kind != TownKind::Edge) t.index = counter[{static_cast<int>(t.kind), t.owner}]++;
  for (const auto& cyc : L.cycles)
    for (std::size_t k = 0; k < cyc.size(); ++k)
      if (L.towns[cyc[k]].kind == TownKind::Edge) L.towns[cyc[k]].index = static_cast<int>(k);
  return L;
}

void attach_provenance(RedistrictingInstance& inst, const TownLayout& layout) {
  std::map<Point2, int> town_at;
  for (std::size_t id = 0; id < layout.towns.size(); ++id)
    if (!town_at.emplace(layout.towns[id].loc, static_cast<int>(id)).second)
      throw FormatError("two towns share location of town " + std::to_string(id));
  std::vector<int> town_of_site(inst.sites.size());
  for (std::size_t s = 0; s < inst.sites.size(); ++s) {
    auto it = town_at.find(inst.sites[s]);
    if (it == town_at.end())
      throw FormatError("voter location (" + to_string(inst.sites[s].x) + ", " + to_string(inst.sites[s].y) +
                        ") holds no town of the layout");
    town_of_site[s] = it->second;
  }
  inst.town_of.resize(inst.n);
  for (long i = 0; i < inst.n; ++i) inst.town_of[i] = town_of_site[inst.site_of[i]];
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
  if (!out) throw FormatError("write failed: " + path);
}

}  // namespace redist
