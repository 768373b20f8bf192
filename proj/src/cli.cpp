#include "forcelab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "forcelab/braid.hpp"
#include "forcelab/catalog.hpp"
#include "forcelab/error.hpp"
#include "forcelab/garside.hpp"
#include "forcelab/graphmap.hpp"
#include "forcelab/graphmap_io.hpp"
#include "forcelab/horseshoe.hpp"
#include "forcelab/reduction.hpp"
#include "forcelab/symdyn.hpp"

namespace forcelab {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Context {
  std::istream& in;
  std::ostream& out;
  bool machine = false;
};

std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// `-` reads standard input.
std::string read_text(Context& ctx, const std::string& path) {
  if (path == "-") return slurp(ctx.in);
  std::ifstream file(path);
  if (!file) throw InvalidArgument("cannot open '" + path + "'");
  return slurp(file);
}

BraidWord read_braid(Context& ctx, const std::string& arg) {
  if (arg != "-") return parse_braid(arg);
  std::string line;
  while (std::getline(ctx.in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return parse_braid(line);
  }
  throw ParseError("no braid word on standard input");
}

GraphMap read_map(Context& ctx, const std::string& path) { return parse_graph_map(read_text(ctx, path)); }

// Files with peripheral loops are reduced first; peripheral-free files are taken as reduced.
ReducedGraphMap read_reduced(Context& ctx, const std::string& path) {
  GraphMap gm = read_map(ctx, path);
  for (const auto& e : gm.graph.edges()) {
    if (e.peripheral) return reduce(gm);
  }
  return ReducedGraphMap(std::move(gm));
}

void emit(Context& ctx, const json& j) { ctx.out << j.dump(2) << "\n"; }

json header(const std::string& command) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

std::string rational(const mpq_class& q) { return q.get_str(); }

int run_nf(Context& ctx, const std::string& word) {
  BraidWord w = read_braid(ctx, word);
  LeftNormalForm nf = normal_form(w);
  if (ctx.machine) {
    json j = header("nf");
    j["input"] = to_string(w);
    j["infimum"] = nf.infimum;
    j["supremum"] = nf.supremum();
    j["factors"] = json::array();
    for (const auto& f : nf.factors) j["factors"].push_back(f.images());
    j["normal_form"] = to_string(nf);
    j["word"] = to_string(nf.to_word());
    emit(ctx, j);
  } else {
    ctx.out << to_string(nf) << "\n" << to_string(nf.to_word()) << "\n";
  }
  return kOk;
}

int run_conjugacy(Context& ctx, const std::string& command, const std::string& a, const std::string& b, std::size_t budget,
                  bool modulo_center) {
  BraidWord u = read_braid(ctx, a);
  BraidWord v = read_braid(ctx, b);
  ConjugacyVerdict verdict = modulo_center ? braid_type_equal(u, v, budget) : conjugacy_test(u, v, budget);
  if (ctx.machine) {
    json j = header(command);
    j["outcome"] = to_string(verdict.outcome);
    j["witness"] = verdict.witness ? json(to_string(*verdict.witness)) : json(nullptr);
    j["effort"] = verdict.effort;
    emit(ctx, j);
  } else {
    ctx.out << to_string(verdict.outcome) << "\n";
    if (verdict.witness) ctx.out << "witness: " << to_string(*verdict.witness) << "\n";
  }
  return kOk;
}

int run_bh_check(Context& ctx, const std::string& path) {
  GraphMap gm = read_map(ctx, path);
  BhVerdict v = bh_verdict(gm);
  auto warnings = valence_warnings(gm);
  if (ctx.machine) {
    json j = header("bh-check");
    j["pseudo_anosov"] = v.pseudo_anosov;
    j["efficient"] = v.efficiency.efficient;
    j["irreducible"] = v.irreducible;
    if (v.dilatation) {
      j["minimal_polynomial"] = v.dilatation->minimal_polynomial().to_string();
      j["dilatation"] = v.dilatation->decimal(50);
    }
    j["reasons"] = v.reasons;
    j["warnings"] = warnings;
    emit(ctx, j);
  } else {
    if (v.pseudo_anosov) {
      ctx.out << "pseudo-Anosov, λ minimal poly " << v.dilatation->minimal_polynomial().to_string() << "\n";
      ctx.out << "λ = " << v.dilatation->decimal(50) << "\n";
    } else {
      ctx.out << "not certified pseudo-Anosov\n";
      for (const auto& r : v.reasons) ctx.out << "reason: " << r << "\n";
    }
    for (const auto& w : warnings) ctx.out << "warning: " << w << "\n";
  }
  return v.pseudo_anosov ? kOk : kFailed;
}

int run_reduce(Context& ctx, const std::string& path) {
  ReducedGraphMap r = reduce(read_map(ctx, path));
  if (ctx.machine) {
    json j = header("reduce");
    j["graph_map"] = write_graph_map(r.map());
    emit(ctx, j);
  } else {
    ctx.out << write_graph_map(r.map());
  }
  return kOk;
}

int run_xgraph(Context& ctx, const std::string& path) {
  TransitionGraph xi(read_reduced(ctx, path));
  IntMatrix a = xi.adjacency();
  if (ctx.machine) {
    json j = header("xgraph");
    j["vertices"] = json::array();
    for (int v = 0; v < xi.size(); ++v) j["vertices"].push_back(xi.name(v));
    j["arcs"] = json::array();
    for (int v = 0; v < xi.size(); ++v) {
      for (int w : xi.successors(v)) j["arcs"].push_back({xi.name(v), xi.name(w)});
    }
    j["adjacency"] = a;
    emit(ctx, j);
  } else {
    for (int v = 0; v < xi.size(); ++v) {
      for (int w : xi.successors(v)) ctx.out << xi.name(v) << " -> " << xi.name(w) << "\n";
    }
    ctx.out << "adjacency " << xi.size() << "\n";
    for (const auto& row : a) {
      for (std::size_t k = 0; k < row.size(); ++k) ctx.out << (k ? " " : "") << row[k];
      ctx.out << "\n";
    }
  }
  return kOk;
}

json orbit_json(const TransitionGraph& xi, const ExactOrbit& o) {
  json j;
  j["period"] = o.period;
  j["symbolic_period"] = o.symbolic_period;
  j["regular"] = o.regular;
  j["touches_vertex"] = o.touches_vertex;
  j["points"] = json::array();
  for (const auto& p : o.points) {
    json pt;
    pt["subedge"] = xi.name(p.subedge);
    pt["edge"] = xi.reduced().graph().edge(p.edge).name;
    pt["t"] = rational(p.t);
    j["points"].push_back(pt);
  }
  return j;
}

void print_orbit(std::ostream& out, const TransitionGraph& xi, const ExactOrbit& o) {
  out << "period " << o.period << ", symbolic period " << o.symbolic_period << ", "
      << (o.regular ? "regular" : "not regular") << "\n";
  for (std::size_t i = 0; i < o.points.size(); ++i) {
    const auto& p = o.points[i];
    out << i << " " << xi.name(p.subedge) << " " << xi.reduced().graph().edge(p.edge).name << " t=" << rational(p.t) << "\n";
  }
}

int run_cycles(Context& ctx, const std::string& path, int max_len) {
  TransitionGraph xi(read_reduced(ctx, path));
  if (max_len <= 0) max_len = 2 * xi.size();
  auto cycles = enumerate_cycles(xi, max_len);
  json j = header("cycles");
  j["max_len"] = max_len;
  j["cycles"] = json::array();
  for (const auto& c : cycles) {
    std::string line = c.to_string(xi);
    std::string status;
    json entry;
    entry["path"] = line;
    entry["length"] = c.length();
    try {
      ExactOrbit o = exact_orbit(xi, c);
      entry["period"] = o.period;
      entry["regular"] = o.regular;
      status = "period " + std::to_string(o.period) + (o.regular ? " regular" : " not-regular");
    } catch (const Inconsistency& e) {
      entry["error"] = e.what();
      status = std::string("no orbit: ") + e.what();
    }
    if (ctx.machine) {
      j["cycles"].push_back(entry);
    } else {
      ctx.out << c.length() << " " << line << " : " << status << "\n";
    }
  }
  if (ctx.machine) emit(ctx, j);
  return kOk;
}

// Commas inside parentheses belong to names such as e(q,1)^4.
std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  int depth = 0;
  auto flush = [&] {
    auto a = item.find_first_not_of(' ');
    auto b = item.find_last_not_of(' ');
    if (a == std::string::npos) throw ParseError("empty entry in path '" + text + "'");
    out.push_back(item.substr(a, b - a + 1));
    item.clear();
  };
  for (char c : text) {
    if (c == ',' && depth == 0) {
      flush();
      continue;
    }
    if (c == '(') ++depth;
    if (c == ')') --depth;
    item += c;
  }
  flush();
  return out;
}

int run_orbit(Context& ctx, const std::string& path, const std::string& names) {
  TransitionGraph xi(read_reduced(ctx, path));
  auto list = split_names(names);
  closed_path(xi, list);
  std::vector<int> walk;
  for (const auto& n : list) walk.push_back(*xi.find(n));
  ExactOrbit o = exact_orbit(xi, walk);
  if (ctx.machine) {
    json j = header("orbit");
    j["path"] = list;
    j["orbit"] = orbit_json(xi, o);
    emit(ctx, j);
  } else {
    print_orbit(ctx.out, xi, o);
  }
  return kOk;
}

int run_code2braid(Context& ctx, const std::string& code) {
  BraidWord w = braid_from_code(Code(code));
  if (ctx.machine) {
    json j = header("code2braid");
    j["code"] = code;
    j["braid"] = to_string(w);
    emit(ctx, j);
  } else {
    ctx.out << to_string(w) << "\n";
  }
  return kOk;
}

int run_code_orbit(Context& ctx, const std::string& code) {
  Code c(code);
  auto pts = orbit_coordinates(c);
  if (ctx.machine) {
    json j = header("code-orbit");
    j["code"] = code;
    j["points"] = json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      j["points"].push_back({{"symbol", std::string(1, code[i])}, {"x", rational(pts[i].x)}, {"y", rational(pts[i].y)}});
    }
    emit(ctx, j);
  } else {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      ctx.out << i << " " << code[i] << " " << rational(pts[i].x) << " " << rational(pts[i].y) << "\n";
    }
  }
  return kOk;
}

int run_table(Context& ctx, const std::string& family, int max) {
  Family f = parse_family(family);
  auto rows = dilatation_table(f, max, precision_from_env());
  ctx.out << (ctx.machine ? table_to_json(f, rows) : table_to_text(rows));
  return kOk;
}

int emit_report(Context& ctx, const VerificationReport& r) {
  ctx.out << (ctx.machine ? r.to_json() : r.to_text());
  return r.passed() ? kOk : kFailed;
}

std::vector<std::tuple<Family, int, int>> standard_catalog() {
  std::vector<std::tuple<Family, int, int>> out;
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) out.emplace_back(Family::beta, m, n);
  }
  for (int m = 1; m <= 4; ++m) {
    for (int n = m + 2; n <= m + 6; ++n) out.emplace_back(Family::sigma, m, n);
  }
  return out;
}

int run_catalog_build(Context& ctx, const std::string& dir) {
  namespace fs = std::filesystem;
  json j = header("catalog build");
  j["entries"] = json::array();
  bool ok = true;
  for (const auto& [f, m, n] : standard_catalog()) {
    CatalogEntry e = build_entry(f, m, n);
    fs::path path = fs::path(dir) / entry_file_name(f, m, n);
    fs::create_directories(path.parent_path());
    std::ofstream file(path);
    if (!file) throw InvalidArgument("cannot write '" + path.string() + "'");
    file << entry_file_text(e);
    ok = ok && e.passed();
    if (ctx.machine) {
      j["entries"].push_back({{"file", entry_file_name(f, m, n)}, {"passed", e.passed()}});
    } else {
      ctx.out << entry_file_name(f, m, n) << (e.passed() ? " ok" : " FAIL") << "\n";
    }
  }
  if (ctx.machine) emit(ctx, j);
  return ok ? kOk : kFailed;
}

int run_catalog_validate(Context& ctx, const std::vector<std::string>& paths) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      for (const auto& entry : fs::recursive_directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".gm") files.push_back(entry.path().string());
      }
    } else {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InvalidArgument("no catalog files found");
  VerificationReport report;
  report.title = "catalog validation";
  for (const auto& file : files) {
    auto key = parse_entry_file_name(file);
    if (!key) throw InvalidArgument("'" + file + "' is not named <family>/m<m>n<n>.gm");
    const auto [f, mn] = *key;
    CatalogEntry e;
    e.family = f;
    e.m = mn.first;
    e.n = mn.second;
    e.graph_map = read_graph_map_file(file);
    e.checks = validate_entry(e);
    InstanceResult inst;
    inst.instance = entry_file_name(f, e.m, e.n);
    inst.checks = e.checks;
    Check frozen;
    frozen.id = "table";
    frozen.description = "file equals the generated table";
    frozen.passed = e.graph_map == family_graph_map(f, e.m, e.n);
    inst.checks.push_back(frozen);
    report.instances.push_back(std::move(inst));
  }
  return emit_report(ctx, report);
}

}  // namespace

int precision_from_env() {
  const char* value = std::getenv("FORCELAB_PRECISION");
  if (!value || !*value) return 30;
  char* end = nullptr;
  long digits = std::strtol(value, &end, 10);
  if (*end != '\0' || digits < 1 || digits > 10000) {
    throw InvalidArgument(std::string("FORCELAB_PRECISION must be an integer in [1, 10000], got '") + value + "'");
  }
  return static_cast<int>(digits);
}

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out};
  CLI::App app{"Braid forcing toolkit: Garside conjugacy, graph-map certificates, orbits and horseshoe codes", "forcelab"};
  app.require_subcommand(1);
  app.add_flag("--json", ctx.machine, "Machine-readable output");
  app.fallthrough();
  std::function<int()> action;

  std::string word_a, word_b, path, code, family, names;
  std::size_t budget = 100000;
  int max_len = 0, max = 6, m_max = 6, n_max = 6, k_max = 5, code_len = 7;
  bool arc_c = false, arc_d = false;
  std::string dir = "catalog";
  std::vector<std::string> paths;

  auto* nf = app.add_subcommand("nf", "Left normal form of a braid word");
  nf->add_option("word", word_a, "Braid word, or - for stdin")->required();
  nf->callback([&] { action = [&] { return run_nf(ctx, word_a); }; });

  auto* conj = app.add_subcommand("conj", "Conjugacy test in the braid group");
  conj->add_option("u", word_a)->required();
  conj->add_option("v", word_b)->required();
  conj->add_option("--budget", budget, "Summit elements before giving up")->capture_default_str();
  conj->callback([&] { action = [&] { return run_conjugacy(ctx, "conj", word_a, word_b, budget, false); }; });

  auto* bteq = app.add_subcommand("bt-eq", "Braid type equality (conjugacy modulo the center)");
  bteq->add_option("u", word_a)->required();
  bteq->add_option("v", word_b)->required();
  bteq->add_option("--budget", budget, "Summit elements before giving up")->capture_default_str();
  bteq->callback([&] { action = [&] { return run_conjugacy(ctx, "bt-eq", word_a, word_b, budget, true); }; });

  auto* bh = app.add_subcommand("bh-check", "Pseudo-Anosov certificate of a graph map");
  bh->add_option("file", path)->required();
  bh->callback([&] { action = [&] { return run_bh_check(ctx, path); }; });

  auto* red = app.add_subcommand("reduce", "Collapse peripheral loops");
  red->add_option("file", path)->required();
  red->callback([&] { action = [&] { return run_reduce(ctx, path); }; });

  auto* xg = app.add_subcommand("xgraph", "Transition graph arcs and adjacency matrix");
  xg->add_option("file", path)->required();
  xg->callback([&] { action = [&] { return run_xgraph(ctx, path); }; });

  auto* cyc = app.add_subcommand("cycles", "Primitive closed paths of the transition graph");
  cyc->add_option("file", path)->required();
  cyc->add_option("--max-len", max_len, "Longest cycle (default twice the vertex count)");
  cyc->callback([&] { action = [&] { return run_cycles(ctx, path, max_len); }; });

  auto* orb = app.add_subcommand("orbit", "Exact periodic orbit along a closed path");
  orb->add_option("file", path)->required();
  orb->add_option("--path", names, "Comma-separated subedge names")->required();
  orb->callback([&] { action = [&] { return run_orbit(ctx, path, names); }; });

  auto* c2b = app.add_subcommand("code2braid", "Braid of a horseshoe periodic orbit");
  c2b->add_option("code", code)->required();
  c2b->callback([&] { action = [&] { return run_code2braid(ctx, code); }; });

  auto* corb = app.add_subcommand("code-orbit", "Exact coordinates of a horseshoe periodic orbit");
  corb->add_option("code", code)->required();
  corb->callback([&] { action = [&] { return run_code_orbit(ctx, code); }; });

  auto* table = app.add_subcommand("table", "Dilatation table of a family");
  table->add_option("family", family, "beta or sigma")->required()->check(CLI::IsMember({"beta", "sigma"}));
  table->add_option("--max", max, "Parameter range")->capture_default_str()->check(CLI::PositiveNumber);
  table->callback([&] { action = [&] { return run_table(ctx, family, max); }; });

  auto* verify = app.add_subcommand("verify", "Verify consequences of the forcing theorems");
  verify->require_subcommand(1);
  auto* thm1 = verify->add_subcommand("thm1", "Orbits C and D, monotonicity of dilatations");
  thm1->add_option("--m-max", m_max)->capture_default_str()->check(CLI::PositiveNumber);
  thm1->add_option("--n-max", n_max)->capture_default_str()->check(CLI::PositiveNumber);
  thm1->callback([&] { action = [&] { return emit_report(ctx, verify_theorem1(m_max, n_max)); }; });
  auto* thm2 = verify->add_subcommand("thm2", "Embedded shift, code lifts and horseshoe braid types");
  thm2->add_option("--k-max", k_max)->capture_default_str()->check(CLI::PositiveNumber);
  thm2->add_option("--code-len", code_len)->capture_default_str()->check(CLI::PositiveNumber);
  thm2->add_option("--budget", budget)->capture_default_str();
  thm2->callback([&] { action = [&] { return emit_report(ctx, verify_theorem2(k_max, code_len, budget)); }; });
  auto* cor3 = verify->add_subcommand("cor3", "beta(1,1) base case composed with both theorem reports");
  cor3->add_option("--m-max", m_max)->capture_default_str()->check(CLI::PositiveNumber);
  cor3->add_option("--n-max", n_max)->capture_default_str()->check(CLI::PositiveNumber);
  cor3->add_option("--code-len", code_len)->capture_default_str()->check(CLI::PositiveNumber);
  cor3->add_option("--budget", budget)->capture_default_str();
  cor3->callback([&] { action = [&] { return emit_report(ctx, verify_corollary3(m_max, n_max, code_len, budget)); }; });

  auto* cat = app.add_subcommand("catalog", "Family tables stored as graph-map files");
  cat->require_subcommand(1);
  auto* build = cat->add_subcommand("build", "Write the catalog files");
  build->add_option("--out", dir, "Output directory")->capture_default_str();
  build->callback([&] { action = [&] { return run_catalog_build(ctx, dir); }; });
  auto* validate = cat->add_subcommand("validate", "Check catalog files");
  validate->add_option("paths", paths, "Files or directories")->required();
  validate->callback([&] { action = [&] { return run_catalog_validate(ctx, paths); }; });
  auto* search = cat->add_subcommand("search", "Count completions of the beta tables");
  search->add_option("--max", max, "Parameter range")->capture_default_str()->check(CLI::PositiveNumber);
  search->add_flag("--arc-c", arc_c, "Require the arc of path C in the free image");
  search->add_flag("--arc-d", arc_d, "Require the arcs of path D in the free image");
  search->callback([&] { action = [&] { return emit_report(ctx, search_report(max, {arc_c, arc_d})); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  try {
    return action();
  } catch (const Inconsistency& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace forcelab
