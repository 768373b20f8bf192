#include "forcelab/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "forcelab/braid.hpp"
#include "forcelab/error.hpp"
#include "forcelab/garside.hpp"
#include "forcelab/graphmap_io.hpp"
#include "forcelab/horseshoe.hpp"
#include "forcelab/symdyn.hpp"

namespace forcelab {

namespace {

// Builds a reduced tree map from names; `~name` reverses an edge.
class TreeBuilder {
 public:
  void vertex(const std::string& name, bool puncture) { gm_.graph.add_vertex(name, puncture); }
  void edge(const std::string& name, const std::string& from, const std::string& to) {
    gm_.graph.add_edge(name, *gm_.graph.find_vertex(from), *gm_.graph.find_vertex(to));
  }
  void vmap(const std::string& v, const std::string& w) {
    gm_.vertex_image.resize(static_cast<std::size_t>(gm_.graph.vertex_count()), -1);
    gm_.vertex_image[static_cast<std::size_t>(*gm_.graph.find_vertex(v))] = *gm_.graph.find_vertex(w);
  }
  void emap(const std::string& e, const std::vector<std::string>& path) {
    gm_.edge_image.resize(static_cast<std::size_t>(gm_.graph.edge_count()));
    EdgePath out;
    for (const auto& token : path) {
      bool rev = token.front() == '~';
      auto idx = gm_.graph.find_edge(rev ? token.substr(1) : token);
      if (!idx) throw Inconsistency("table refers to unknown edge " + token);
      out.push_back({*idx, rev});
    }
    gm_.edge_image[static_cast<std::size_t>(*gm_.graph.find_edge(e))] = std::move(out);
  }
  ReducedGraphMap build() { return ReducedGraphMap(std::move(gm_)); }

 private:
  GraphMap gm_;
};

std::string num(int i) { return std::to_string(i); }
std::string q_edge(int i) { return "e(q," + num(i) + ")"; }
std::string p_edge(int j) { return "e(p," + num(j) + ")"; }
std::string inv(const std::string& e) { return "~" + e; }

std::string label(Family f, int m, int n) { return to_string(f) + "(" + num(m) + "," + num(n) + ")"; }

void require_range(Family f, int m, int n) {
  if (m < 1 || n < 1) throw InvalidArgument("family parameters must be positive");
  if (f == Family::sigma && n < m + 2) {
    throw InvalidArgument("sigma(" + num(m) + "," + num(n) + ") is not pseudo-Anosov; the family needs n >= m+2");
  }
}

Check make_check(std::string id, std::string description) {
  Check c;
  c.id = std::move(id);
  c.description = std::move(description);
  return c;
}

Check not_applicable(std::string id, std::string description) {
  Check c = make_check(std::move(id), std::move(description));
  c.applicable = false;
  c.passed = true;
  c.detail = "not applicable";
  return c;
}

std::string poly_and_value(const AlgebraicRadius& r) {
  return r.minimal_polynomial().to_string() + ", " + r.decimal(12);
}

// Perron root of the real block, or nullopt when the map is not certified.
std::optional<AlgebraicRadius> certified_dilatation(const GraphMap& gm) {
  auto v = bh_verdict(gm);
  if (!v.pseudo_anosov) return std::nullopt;
  return v.dilatation;
}

Check orbit_check(const std::string& id, const std::string& description, const TransitionGraph& xi,
                  const std::vector<std::string>& names, int expected_period, bool distinct) {
  Check c = make_check(id, description);
  try {
    ClosedPath path = closed_path(xi, names);
    if (distinct) {
      auto sorted = path.cycle();
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        c.detail = "path repeats a vertex";
        return c;
      }
    }
    std::vector<int> walk;
    for (const auto& name : names) walk.push_back(*xi.find(name));
    ExactOrbit orbit = exact_orbit(xi, walk);
    std::ostringstream d;
    d << "length " << walk.size() << ", period " << orbit.period << ", symbolic period " << orbit.symbolic_period
      << (orbit.regular ? ", regular" : ", not regular");
    c.detail = d.str();
    c.passed = orbit.regular && orbit.consistent() && orbit.period == expected_period &&
               static_cast<int>(walk.size()) == expected_period;
  } catch (const Error& e) {
    c.detail = e.what();
  }
  return c;
}

// Walks of exactly `len` edges from a to b that turn back only at punctures.
std::vector<EdgePath> tight_walks(const Graph& g, int a, int b, int len) {
  std::vector<EdgePath> out;
  EdgePath walk;
  std::function<void(int)> extend = [&](int at) {
    if (static_cast<int>(walk.size()) == len) {
      if (at == b) out.push_back(walk);
      return;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      for (bool rev : {false, true}) {
        OrientedEdge oe{e, rev};
        if (g.source(oe) != at) continue;
        if (!walk.empty() && walk.back().reverse() == oe && !g.vertex(at).puncture) continue;
        walk.push_back(oe);
        extend(g.target(oe));
        walk.pop_back();
      }
    }
  };
  extend(a);
  return out;
}

nlohmann::ordered_json check_json(const Check& c) {
  nlohmann::ordered_json j;
  j["id"] = c.id;
  j["description"] = c.description;
  j["applicable"] = c.applicable;
  j["passed"] = c.passed;
  j["detail"] = c.detail;
  return j;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

}  // namespace

std::string to_string(Family f) { return f == Family::beta ? "beta" : "sigma"; }

Family parse_family(const std::string& text) {
  if (text == "beta") return Family::beta;
  if (text == "sigma") return Family::sigma;
  throw ParseError("unknown family '" + text + "' (expected beta or sigma)");
}

ReducedGraphMap fig5_map() {
  TreeBuilder t;
  for (int i = 0; i < 3; ++i) t.vertex("v" + num(i), true);
  t.edge("e(0,1)", "v0", "v1");
  t.edge("e(1,2)", "v1", "v2");
  t.vmap("v0", "v2");
  t.vmap("v1", "v0");
  t.vmap("v2", "v1");
  t.emap("e(0,1)", {"~e(1,2)", "~e(0,1)"});
  t.emap("e(1,2)", {"e(0,1)", "e(1,2)", "~e(1,2)"});
  return t.build();
}

ReducedGraphMap beta_reduced(int m, int n) {
  require_range(Family::beta, m, n);
  const int s = m + n + 1;
  TreeBuilder t;
  for (int i = 0; i < s; ++i) t.vertex("v" + num(i), true);
  t.vertex("p", false);
  t.vertex("q", false);
  for (int i = 0; i <= n; ++i) t.edge(q_edge(i), "q", "v" + num(i));
  for (int j = n; j <= n + m; ++j) t.edge(p_edge(j), "p", "v" + num(j));
  for (int i = 0; i < s; ++i) t.vmap("v" + num(i), "v" + num((i + 1) % s));
  t.vmap("p", "p");
  t.vmap("q", "q");
  for (int i = 0; i < n; ++i) t.emap(q_edge(i), {q_edge(i + 1)});
  t.emap(q_edge(n), {q_edge(0), inv(q_edge(0)), q_edge(n), inv(p_edge(n)), p_edge(n + 1)});
  for (int j = n; j < n + m; ++j) t.emap(p_edge(j), {p_edge(j + 1)});
  t.emap(p_edge(n + m), {p_edge(n), inv(q_edge(n)), q_edge(0)});
  return t.build();
}

ReducedGraphMap sigma_reduced(int m, int n) {
  require_range(Family::sigma, m, n);
  const int l = n - m - 2;
  const int s = m + n + 1;
  auto y = [](int i) { return "y" + num(i); };
  auto chain = [&](int i) { return y(i) + "-" + y(i + 1); };
  const std::string link = y(l + 1) + "-" + y(l + m + 2);
  auto leg = [&](int j) { return "p-" + y(l + 1 + j); };
  auto outer = [&](int j) { return y(l + 1 + j) + "-" + y(l + m + 2 + j); };
  TreeBuilder t;
  t.vertex("p", false);
  for (int i = 0; i < s; ++i) t.vertex(y(i), true);
  for (int i = 0; i <= l; ++i) t.edge(chain(i), y(i), y(i + 1));
  t.edge(link, y(l + 1), y(l + m + 2));
  for (int j = 1; j <= m + 1; ++j) t.edge(leg(j), "p", y(l + 1 + j));
  for (int j = 1; j <= m; ++j) t.edge(outer(j), y(l + 1 + j), y(l + m + 2 + j));
  t.vmap("p", "p");
  for (int i = 0; i < s; ++i) t.vmap(y(i), y((i + 1) % s));
  for (int i = 0; i < l; ++i) t.emap(chain(i), {chain(i + 1)});
  t.emap(chain(l), {link, inv(leg(m + 1)), leg(1)});
  t.emap(link, {outer(1)});
  for (int j = 1; j < m; ++j) t.emap(outer(j), {outer(j + 1)});
  std::vector<std::string> back{inv(link)};
  for (int i = l; i >= 0; --i) back.push_back(inv(chain(i)));
  t.emap(outer(m), back);
  for (int j = 1; j <= m; ++j) t.emap(leg(j), {leg(j + 1)});
  t.emap(leg(m + 1), {leg(1), outer(1)});
  return t.build();
}

ReducedGraphMap family_reduced(Family f, int m, int n) { return f == Family::beta ? beta_reduced(m, n) : sigma_reduced(m, n); }

GraphMap family_graph_map(Family f, int m, int n) { return attach_peripheral_loops(family_reduced(f, m, n)); }

bool CatalogEntry::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return !c.applicable || c.passed; });
}

CatalogEntry build_entry(Family f, int m, int n) {
  CatalogEntry e;
  e.family = f;
  e.m = m;
  e.n = n;
  e.graph_map = family_graph_map(f, m, n);
  e.provenance = f == Family::beta
                     ? "parametric table g_{m,n}; the free detour in the image of e(q,n) fixed by reconstruct_search"
                     : "parametric table h_{m,n}; matches the tree map induced on the hull of the D_n orbit of g_{m,1}";
  e.checks = validate_entry(e);
  return e;
}

std::vector<Check> validate_entry(const CatalogEntry& e) {
  const bool beta = e.family == Family::beta;
  const int m = e.m;
  const int n = e.n;
  std::vector<Check> out;
  std::optional<ReducedGraphMap> reduced;
  std::optional<TransitionGraph> xi;
  std::string reduce_error;
  try {
    reduced.emplace(reduce(e.graph_map));
    xi.emplace(*reduced);
  } catch (const Error& err) {
    reduce_error = err.what();
  }

  // V1
  if (beta) {
    Check c = make_check("V1", "transition graph vertices follow the 5/3 subdivision pattern");
    if (xi) {
      std::vector<std::string> expected;
      for (int i = 0; i < n; ++i) expected.push_back(q_edge(i));
      for (int k = 1; k <= 5; ++k) expected.push_back(q_edge(n) + "^" + num(k));
      for (int j = n; j < n + m; ++j) expected.push_back(p_edge(j));
      for (int k = 1; k <= 3; ++k) expected.push_back(p_edge(n + m) + "^" + num(k));
      std::vector<std::string> actual;
      for (int v = 0; v < xi->size(); ++v) actual.push_back(xi->name(v));
      std::sort(expected.begin(), expected.end());
      std::sort(actual.begin(), actual.end());
      c.passed = expected == actual;
      c.detail = num(xi->size()) + " subedges" + (c.passed ? "" : ", expected " + num(static_cast<int>(expected.size())));
    } else {
      c.detail = reduce_error;
    }
    out.push_back(c);
  } else {
    out.push_back(not_applicable("V1", "transition graph vertices follow the 5/3 subdivision pattern"));
  }

  // V2
  std::optional<AlgebraicRadius> lambda;
  {
    Check c = make_check("V2", "Bestvina-Handel certificate (efficient, irreducible, lambda > 1)");
    try {
      auto v = bh_verdict(e.graph_map);
      c.passed = v.pseudo_anosov;
      if (v.pseudo_anosov) {
        lambda = v.dilatation;
        c.detail = "lambda: " + poly_and_value(*lambda);
      } else {
        for (const auto& r : v.reasons) c.detail += (c.detail.empty() ? "" : "; ") + r;
      }
    } catch (const Error& err) {
      c.detail = err.what();
    }
    out.push_back(c);
  }

  // V3
  if (beta) {
    Check c = make_check("V3", "lambda(m,n) = lambda(n,m) exactly");
    if (lambda) {
      auto mirror = certified_dilatation(family_graph_map(Family::beta, n, m));
      c.passed = mirror && mirror->minimal_polynomial() == lambda->minimal_polynomial() && compare(*mirror, *lambda) == 0;
      c.detail = mirror ? "lambda(n,m): " + poly_and_value(*mirror) : "mirror entry is not certified";
    } else {
      c.detail = "no certified dilatation";
    }
    out.push_back(c);
  } else {
    out.push_back(not_applicable("V3", "lambda(m,n) = lambda(n,m) exactly"));
  }

  // V4
  if (beta) {
    if (xi) {
      out.push_back(orbit_check("V4", "path C: distinct vertices, regular orbit of period m+n+2", *xi, path_C_names(m, n),
                                m + n + 2, true));
      for (int l = 0; l <= 2; ++l) {
        out.push_back(orbit_check("V4", "path D_{m+2+" + num(l) + "}: regular orbit of period 2m+3+" + num(l), *xi,
                                  path_D_names(m, n, l), 2 * m + 3 + l, false));
      }
    } else {
      Check c = make_check("V4", "paths C and D");
      c.detail = reduce_error;
      out.push_back(c);
    }
  } else {
    out.push_back(not_applicable("V4", "paths C and D"));
  }

  // V5
  {
    Check c = make_check("V5", "peripheral edges permuted in a single (m+n+1)-cycle");
    const Graph& g = e.graph_map.graph;
    std::vector<int> loops;
    for (int k = 0; k < g.edge_count(); ++k) {
      if (g.edge(k).peripheral) loops.push_back(k);
    }
    bool ok = static_cast<int>(loops.size()) == m + n + 1;
    std::vector<int> images;
    for (int k : loops) {
      const auto& img = e.graph_map.edge_image[static_cast<std::size_t>(k)];
      auto at = std::find(loops.begin(), loops.end(), img.size() == 1 ? img[0].edge : -1);
      if (at == loops.end()) {
        ok = false;
        break;
      }
      images.push_back(static_cast<int>(at - loops.begin()));
    }
    if (ok) {
      auto sorted = images;
      std::sort(sorted.begin(), sorted.end());
      ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && Permutation(images).is_single_cycle();
    }
    c.passed = ok;
    c.detail = num(static_cast<int>(loops.size())) + " peripheral loops";
    out.push_back(c);
  }

  // V6
  if (beta && m == 1 && n == 1) {
    Check c = make_check("V6", "lambda equals the three-puncture map's lambda");
    auto fig5 = spectral_radius(transition_matrix(fig5_map().map()));
    c.passed = lambda && compare(*lambda, fig5) == 0;
    c.detail = "reference " + poly_and_value(fig5);
    out.push_back(c);
  } else {
    out.push_back(not_applicable("V6", "lambda equals the three-puncture map's lambda"));
  }
  return out;
}

std::string entry_file_text(const CatalogEntry& e) {
  return "# " + label(e.family, e.m, e.n) + ": " + e.provenance + "\n" + write_graph_map(e.graph_map);
}

std::string entry_file_name(Family f, int m, int n) { return to_string(f) + "/m" + num(m) + "n" + num(n) + ".gm"; }

std::optional<std::pair<Family, std::pair<int, int>>> parse_entry_file_name(const std::string& path) {
  static const std::regex pattern(R"((?:^|.*/)(beta|sigma)/m([0-9]+)n([0-9]+)\.gm$)");
  std::smatch match;
  if (!std::regex_match(path, match, pattern)) return std::nullopt;
  return std::make_pair(parse_family(match[1]), std::make_pair(std::stoi(match[2]), std::stoi(match[3])));
}

SearchResult reconstruct_search(Family f, int m, int n, SearchConstraints constraints) {
  require_range(f, m, n);
  SearchResult result;
  auto keep = [&](const ReducedGraphMap& r) {
    CatalogEntry e;
    e.family = f;
    e.m = m;
    e.n = n;
    e.graph_map = attach_peripheral_loops(r);
    e.checks = validate_entry(e);
    if (e.passed()) result.completions.push_back(e.graph_map);
  };
  if (f == Family::sigma) {
    ReducedGraphMap g = beta_reduced(m, 1);
    TransitionGraph xi(g);
    std::vector<int> walk;
    for (const auto& name : path_D_names(m, 1, n - m - 2)) walk.push_back(*xi.find(name));
    result.candidates = 1;
    keep(induced_hull_map(xi, exact_orbit(xi, walk)));
    return result;
  }
  const ReducedGraphMap shape = beta_reduced(m, n);
  const Graph& g = shape.graph();
  const auto& vimage = shape.map().vertex_image;
  const int qn = *g.find_edge(q_edge(n));
  const int pn = *g.find_edge(p_edge(n));
  const int last = *g.find_edge(p_edge(n + m));
  std::vector<std::vector<EdgePath>> options;
  for (int e = 0; e < g.edge_count(); ++e) {
    const int len = e == qn ? 5 : e == last ? 3 : 1;
    auto walks = tight_walks(g, vimage[static_cast<std::size_t>(g.edge(e).from)], vimage[static_cast<std::size_t>(g.edge(e).to)], len);
    if (e == qn) {
      std::erase_if(walks, [&](const EdgePath& w) {
        return (constraints.arc_c && w[3].edge != pn) || (constraints.arc_d && w[2].edge != qn);
      });
    }
    options.push_back(std::move(walks));
  }
  std::vector<std::size_t> pick(options.size(), 0);
  for (const auto& o : options) {
    if (o.empty()) return result;
  }
  for (;;) {
    ++result.candidates;
    GraphMap gm = shape.map();
    for (std::size_t e = 0; e < options.size(); ++e) gm.edge_image[e] = options[e][pick[e]];
    try {
      keep(ReducedGraphMap(gm));
    } catch (const InvalidGraphMap&) {
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return result;
}

bool InstanceResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return !c.applicable || c.passed; });
}

bool VerificationReport::passed() const {
  return std::all_of(instances.begin(), instances.end(), [](const InstanceResult& i) { return i.passed(); });
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["title"] = title;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = params;
  j["passed"] = passed();
  j["instances"] = nlohmann::ordered_json::array();
  for (const auto& inst : instances) {
    nlohmann::ordered_json i;
    i["instance"] = inst.instance;
    i["passed"] = inst.passed();
    i["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : inst.checks) i["checks"].push_back(check_json(c));
    j["instances"].push_back(i);
  }
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << title;
  for (const auto& [k, v] : parameters) out << "  " << k << "=" << v;
  out << "\n";
  for (const auto& inst : instances) {
    for (const auto& c : inst.checks) {
      const char* status = !c.applicable ? "info" : c.passed ? "ok" : "FAIL";
      out << pad(inst.instance, 14) << pad(c.id, 9) << pad(status, 6) << c.description;
      if (!c.detail.empty()) out << " [" << c.detail << "]";
      out << "\n";
    }
  }
  out << (passed() ? "verdict: all checks passed" : "verdict: counterexample found") << "\n";
  return out.str();
}

VerificationReport verify_theorem1(int m_max, int n_max) {
  if (m_max < 1 || n_max < 1) throw InvalidArgument("ranges must be positive");
  VerificationReport report;
  report.title = "theorem 1 consequences";
  report.parameters = {{"m_max", m_max}, {"n_max", n_max}};
  std::map<std::tuple<Family, int, int>, std::optional<AlgebraicRadius>> cache;
  auto lambda = [&](Family f, int m, int n) -> const std::optional<AlgebraicRadius>& {
    auto key = std::make_tuple(f, m, n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, certified_dilatation(family_graph_map(f, m, n))).first;
    return it->second;
  };
  auto greater = [&](Family fa, int ma, int na, Family fb, int mb, int nb) {
    Check c = make_check("lambda", "lambda " + label(fa, ma, na) + " > lambda " + label(fb, mb, nb));
    const auto& a = lambda(fa, ma, na);
    const auto& b = lambda(fb, mb, nb);
    c.passed = a && b && compare(*a, *b) > 0;
    c.detail = a && b ? a->decimal(12) + " vs " + b->decimal(12) : "uncertified entry";
    return c;
  };

  for (int m = 1; m <= m_max; ++m) {
    for (int n = 1; n <= n_max; ++n) {
      InstanceResult inst;
      inst.instance = label(Family::beta, m, n);
      Check bh = make_check("BH", "pseudo-Anosov certificate");
      bh.passed = lambda(Family::beta, m, n).has_value();
      if (bh.passed) bh.detail = poly_and_value(*lambda(Family::beta, m, n));
      inst.checks.push_back(bh);
      TransitionGraph xi(beta_reduced(m, n));
      inst.checks.push_back(orbit_check("C", "path C, regular orbit of period m+n+2 (strands of beta(m+1,n))", xi,
                                        path_C_names(m, n), m + n + 2, true));
      for (int l = 0; l <= 2; ++l) {
        inst.checks.push_back(orbit_check("D" + num(l),
                                          "path D_{m+2+" + num(l) + "}, regular orbit of period 2m+3+" + num(l) +
                                              " (strands of sigma(m,m+2+" + num(l) + "))",
                                          xi, path_D_names(m, n, l), 2 * m + 3 + l, false));
      }
      if (m + 1 <= m_max) inst.checks.push_back(greater(Family::beta, m, n, Family::beta, m + 1, n));
      if (n + 1 <= n_max) inst.checks.push_back(greater(Family::beta, m, n, Family::beta, m, n + 1));
      for (int l = m + 2; l <= n_max; ++l) inst.checks.push_back(greater(Family::beta, m, n, Family::sigma, m, l));
      report.instances.push_back(std::move(inst));
    }
  }
  for (int m = 1; m <= m_max; ++m) {
    for (int n = m + 3; n <= n_max; ++n) {
      InstanceResult inst;
      inst.instance = label(Family::sigma, m, n);
      for (int l = m + 2; l < n; ++l) inst.checks.push_back(greater(Family::sigma, m, n, Family::sigma, m, l));
      report.instances.push_back(std::move(inst));
    }
  }
  return report;
}

VerificationReport verify_theorem2(int k_max, int code_len_max, std::size_t budget) {
  if (k_max < 1 || code_len_max < 1) throw InvalidArgument("ranges must be positive");
  VerificationReport report;
  report.title = "theorem 2 consequences";
  report.parameters = {{"k_max", k_max}, {"code_len", code_len_max}};
  const auto codes = primitive_codes(code_len_max);
  for (int k = 1; k <= k_max; ++k) {
    InstanceResult inst;
    inst.instance = label(Family::beta, 1, k);
    TransitionGraph xi(beta_reduced(1, k));
    ShiftWitness shift = detect_embedded_shift(xi, k);
    Check s = make_check("shift", "images of E_0 and E_1 cross each of E_0, E_1 exactly once");
    s.passed = shift.embedded;
    s.detail = shift.detail;
    inst.checks.push_back(s);
    Check lifts = make_check("codes", "lifted orbits of primitive codes are regular with period = code length");
    if (shift.embedded) {
      lifts.passed = true;
      for (const auto& code : codes) {
        try {
          auto lift = lift_code(xi, shift, code.word());
          if (!lift.orbit.regular || lift.orbit.period != code.length()) {
            lifts.passed = false;
            lifts.detail = "code " + code.word() + ": period " + num(lift.orbit.period) + (lift.orbit.regular ? "" : ", not regular");
            break;
          }
        } catch (const Error& err) {
          lifts.passed = false;
          lifts.detail = "code " + code.word() + ": " + err.what();
          break;
        }
      }
      if (lifts.passed) lifts.detail = num(static_cast<int>(codes.size())) + " codes up to length " + num(code_len_max);
    } else {
      lifts.detail = "no embedded shift";
    }
    inst.checks.push_back(lifts);
    report.instances.push_back(std::move(inst));
  }

  InstanceResult hs;
  hs.instance = "horseshoe";
  auto type_check = [&](const std::string& id, const std::string& description, const BraidWord& a, const BraidWord& b) {
    Check c = make_check(id, description);
    auto v = braid_type_equal(a, b, budget);
    c.passed = v.outcome == Outcome::equal;
    c.detail = to_string(v.outcome) + " after " + std::to_string(v.effort) + " nodes";
    return c;
  };
  if (code_len_max >= 5) {
    hs.checks.push_back(type_check("10010", "code 10010 has the braid type of s1 s2 s3 s4 s1 s2", braid_from_code(Code("10010")),
                                   parse_braid("B5: s1 s2 s3 s4 s1 s2")));
  }
  for (int m = 1; 2 * m + 3 <= code_len_max; ++m) {
    for (int n = m + 2; m + n + 1 <= code_len_max; ++n) {
      const Code code = sigma_code(m, n);
      hs.checks.push_back(type_check(code.word(), "code of " + label(Family::sigma, m, n) + " against sigma'(" + num(m) + "," + num(n) + ")",
                                     braid_from_code(code), make_sigma_prime(m, n)));
      Check alt = type_check(sigma_code_alternative(m, n).word(), "alternative code of " + label(Family::sigma, m, n) + " against sigma'(" + num(m) + "," + num(n) + "), informational",
                             braid_from_code(sigma_code_alternative(m, n)), make_sigma_prime(m, n));
      alt.applicable = false;
      hs.checks.push_back(alt);
    }
  }
  report.instances.push_back(std::move(hs));
  return report;
}

VerificationReport verify_corollary3(int m_max, int n_max, int code_len_max, std::size_t budget) {
  if (m_max < 1 || n_max < 1 || code_len_max < 1) throw InvalidArgument("ranges must be positive");
  VerificationReport report;
  report.title = "corollary 3 composition";
  report.parameters = {{"m_max", m_max}, {"n_max", n_max}, {"code_len", code_len_max}};

  InstanceResult base;
  base.instance = label(Family::beta, 1, 1);
  Check input = make_check("cited", "every pseudo-Anosov 3-braid type forces [s1 s2^-1]");
  input.applicable = false;
  input.detail = "external theorem, not checked; conclusions below are conditional on it";
  base.checks.push_back(input);
  Check word = make_check("word", "beta(1,1) equals s1 s2^-1 in B3");
  word.passed = equal_in_group(make_beta(1, 1), parse_braid("B3: s1 s2^-1"));
  word.detail = to_string(make_beta(1, 1));
  base.checks.push_back(word);
  auto l11 = certified_dilatation(family_graph_map(Family::beta, 1, 1));
  auto l3 = certified_dilatation(attach_peripheral_loops(fig5_map()));
  Check fig = make_check("lambda3", "dilatation of beta(1,1) equals that of the three-puncture map");
  fig.passed = l11 && l3 && compare(*l11, *l3) == 0;
  if (l11) fig.detail = poly_and_value(*l11);
  base.checks.push_back(fig);
  Check minimal = make_check("largest", "beta(1,1) has the largest dilatation in the beta range");
  minimal.passed = l11.has_value();
  for (int m = 1; m <= m_max && minimal.passed; ++m) {
    for (int n = 1; n <= n_max && minimal.passed; ++n) {
      if (m == 1 && n == 1) continue;
      auto l = certified_dilatation(family_graph_map(Family::beta, m, n));
      if (!l || compare(*l11, *l) <= 0) {
        minimal.passed = false;
        minimal.detail = "fails against " + label(Family::beta, m, n);
      }
    }
  }
  base.checks.push_back(minimal);
  report.instances.push_back(std::move(base));

  InstanceResult chain;
  chain.instance = "chain";
  auto summary = [](const std::string& id, const std::string& description, const VerificationReport& r) {
    Check c = make_check(id, description);
    c.passed = r.passed();
    std::size_t failed = std::count_if(r.instances.begin(), r.instances.end(), [](const InstanceResult& i) { return !i.passed(); });
    c.detail = std::to_string(r.instances.size() - failed) + " of " + std::to_string(r.instances.size()) + " instances passed";
    return c;
  };
  chain.checks.push_back(summary("thm1", "theorem 1 report over the same range passes",
                                 verify_theorem1(m_max, n_max)));
  chain.checks.push_back(summary("thm2", "theorem 2 report with k up to n_max passes",
                                 verify_theorem2(n_max, code_len_max, budget)));
  report.instances.push_back(std::move(chain));
  return report;
}

std::vector<DilatationRow> dilatation_table(Family f, int max, int digits) {
  if (max < 1) throw InvalidArgument("table range must be positive");
  std::vector<DilatationRow> rows;
  for (int m = 1; m <= max; ++m) {
    const int lo = f == Family::beta ? 1 : m + 2;
    const int hi = f == Family::beta ? max : m + max;
    for (int n = lo; n <= hi; ++n) {
      auto v = bh_verdict(family_graph_map(f, m, n));
      if (!v.pseudo_anosov) throw Inconsistency(label(f, m, n) + " is not certified pseudo-Anosov");
      rows.push_back({m, n, v.dilatation->minimal_polynomial().to_string(), v.dilatation->decimal(digits)});
    }
  }
  return rows;
}

std::string table_to_text(const std::vector<DilatationRow>& rows) {
  std::size_t width = 18;
  for (const auto& r : rows) width = std::max(width, r.minimal_polynomial.size() + 2);
  std::ostringstream out;
  out << pad("m", 4) << pad("n", 4) << pad("minimal polynomial", width) << "dilatation\n";
  for (const auto& r : rows) out << pad(num(r.m), 4) << pad(num(r.n), 4) << pad(r.minimal_polynomial, width) << r.decimal << "\n";
  return out.str();
}

std::string table_to_json(Family f, const std::vector<DilatationRow>& rows) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["family"] = to_string(f);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["m"] = r.m;
    row["n"] = r.n;
    row["minimal_polynomial"] = r.minimal_polynomial;
    row["dilatation"] = r.decimal;
    j["rows"].push_back(row);
  }
  return j.dump(2) + "\n";
}

VerificationReport search_report(int max, SearchConstraints constraints) {
  VerificationReport report;
  report.title = "reconstruction search";
  report.parameters = {{"max", max}, {"arc_c", constraints.arc_c ? 1 : 0}, {"arc_d", constraints.arc_d ? 1 : 0}};
  for (int m = 1; m <= max; ++m) {
    for (int n = 1; n <= max; ++n) {
      InstanceResult inst;
      inst.instance = label(Family::beta, m, n);
      auto result = reconstruct_search(Family::beta, m, n, constraints);
      const GraphMap shipped = family_graph_map(Family::beta, m, n);
      const bool included = std::find(result.completions.begin(), result.completions.end(), shipped) != result.completions.end();
      Check c = make_check("search", "completions passing V1-V6");
      c.passed = !result.completions.empty();
      c.detail = num(static_cast<int>(result.candidates)) + " candidates, " + num(static_cast<int>(result.completions.size())) +
                 " completions, shipped table " + (included ? "included" : "not found");
      inst.checks.push_back(c);
      report.instances.push_back(std::move(inst));
    }
  }
  return report;
}

}  // namespace forcelab
