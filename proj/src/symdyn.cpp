#include "forcelab/symdyn.hpp"

#include <algorithm>
#include <functional>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

std::vector<int> least_rotation(const std::vector<int>& w) {
  std::vector<int> best = w;
  std::vector<int> rot = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

// Strictly smaller than every proper rotation: canonical and primitive.
bool is_lyndon(const std::vector<int>& w) {
  std::vector<int> rot = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (!(w < rot)) return false;
  }
  return true;
}

int require_vertex(const TransitionGraph& xi, const std::string& name) {
  auto v = xi.find(name);
  if (!v) throw PathNotPresent("transition graph has no vertex " + name);
  return *v;
}

std::string q_edge(int i) { return "e(q," + std::to_string(i) + ")"; }
std::string p_edge(int j) { return "e(p," + std::to_string(j) + ")"; }

// A point of the reduced graph: vertex id, or edge with interior coordinate.
struct Location {
  int vertex = -1;
  int edge = -1;
  mpq_class t;
  bool operator==(const Location& o) const {
    if (vertex >= 0 || o.vertex >= 0) return vertex == o.vertex;
    return edge == o.edge && t == o.t;
  }
};

Location locate(const Graph& g, const OrbitPoint& p) {
  if (p.t == 0) return {g.edge(p.edge).from, -1, 0};
  if (p.t == 1) return {g.edge(p.edge).to, -1, 0};
  return {-1, p.edge, p.t};
}

}  // namespace

ClosedPath::ClosedPath(std::vector<int> cycle) : cycle_(least_rotation(cycle)) {}

int ClosedPath::primitive_period() const {
  const int s = length();
  for (int p = 1; p < s; ++p) {
    if (s % p != 0) continue;
    bool same = true;
    for (int i = 0; i < s && same; ++i) same = cycle_[static_cast<std::size_t>(i)] == cycle_[static_cast<std::size_t>((i + p) % s)];
    if (same) return p;
  }
  return s;
}

bool ClosedPath::contains(int v) const { return std::find(cycle_.begin(), cycle_.end(), v) != cycle_.end(); }

std::string ClosedPath::to_string(const TransitionGraph& xi) const {
  std::string out;
  for (int v : cycle_) {
    out += xi.name(v);
    out += " -> ";
  }
  if (!cycle_.empty()) out += xi.name(cycle_.front());
  return out;
}

ClosedPath closed_path(const TransitionGraph& xi, const std::vector<int>& vertices) {
  if (vertices.empty()) throw PathNotPresent("empty closed path");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int a = vertices[i];
    int b = vertices[(i + 1) % vertices.size()];
    if (a < 0 || a >= xi.size()) throw PathNotPresent("vertex index out of range");
    if (!xi.has_arc(a, b)) throw PathNotPresent("missing arc " + xi.name(a) + " -> " + xi.name(b));
  }
  return ClosedPath(vertices);
}

ClosedPath closed_path(const TransitionGraph& xi, const std::vector<std::string>& names) {
  std::vector<int> vs;
  for (const auto& n : names) vs.push_back(require_vertex(xi, n));
  return closed_path(xi, vs);
}

std::vector<ClosedPath> enumerate_cycles(const TransitionGraph& xi, int max_len) {
  if (max_len < 1) throw InvalidArgument("max_len must be positive");
  std::vector<ClosedPath> out;
  std::vector<int> walk;
  std::function<void(int)> extend = [&](int start) {
    for (int next : xi.successors(walk.back())) {
      if (next < start) continue;
      if (next == start && is_lyndon(walk)) out.push_back(ClosedPath(walk));
      if (static_cast<int>(walk.size()) == max_len) continue;
      walk.push_back(next);
      extend(start);
      walk.pop_back();
    }
  };
  for (int s = 0; s < xi.size(); ++s) {
    walk.assign(1, s);
    extend(s);
  }
  std::sort(out.begin(), out.end(), [](const ClosedPath& a, const ClosedPath& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.cycle() < b.cycle();
  });
  return out;
}

OrbitPoint apply_map(const TransitionGraph& xi, const OrbitPoint& p, int subedge) {
  const auto& s = xi.vertices().at(static_cast<std::size_t>(subedge));
  if (p.edge != s.parent) throw InvalidArgument("point is not on the parent of " + xi.name(subedge));
  mpq_class local = s.pieces * p.t - (s.position - 1);
  if (local < 0 || local > 1) throw InvalidArgument("point is not on subedge " + xi.name(subedge));
  OrientedEdge f = xi.image_of(subedge);
  OrbitPoint out;
  out.edge = f.edge;
  out.t = f.reversed ? mpq_class(1 - local) : local;
  return out;
}

ExactOrbit exact_orbit(const TransitionGraph& xi, const std::vector<int>& walk) {
  const std::size_t s = walk.size();
  if (s == 0) throw InvalidArgument("empty walk");
  for (std::size_t i = 0; i < s; ++i) {
    if (!xi.has_arc(walk[i], walk[(i + 1) % s])) {
      throw PathNotPresent("missing arc " + xi.name(walk[i]) + " -> " + xi.name(walk[(i + 1) % s]));
    }
  }
  // compose t -> a t + b along the walk
  mpq_class a = 1;
  mpq_class b = 0;
  for (int v : walk) {
    const auto& sub = xi.vertices()[static_cast<std::size_t>(v)];
    mpq_class ka = sub.pieces * a;
    mpq_class kb = sub.pieces * b - (sub.position - 1);
    if (xi.image_of(v).reversed) {
      ka = -ka;
      kb = 1 - kb;
    }
    a = ka;
    b = kb;
  }
  if (abs(a) == 1) throw Inconsistency("non-expanding composition along closed path");
  ExactOrbit orbit;
  OrbitPoint p;
  p.subedge = walk[0];
  p.edge = xi.vertices()[static_cast<std::size_t>(walk[0])].parent;
  p.t = b / (1 - a);
  for (std::size_t i = 0; i < s; ++i) {
    p.subedge = walk[i];
    orbit.points.push_back(p);
    OrbitPoint next = apply_map(xi, p, walk[i]);
    p = next;
  }
  if (!(p.edge == orbit.points[0].edge && p.t == orbit.points[0].t)) {
    throw Inconsistency("orbit does not close up");
  }
  const Graph& g = xi.reduced().graph();
  std::vector<Location> loc;
  for (const auto& q : orbit.points) loc.push_back(locate(g, q));
  orbit.period = static_cast<int>(s);
  for (std::size_t d = 1; d < s; ++d) {
    if (loc[d] == loc[0]) {
      orbit.period = static_cast<int>(d);
      break;
    }
  }
  orbit.symbolic_period = ClosedPath(walk).primitive_period();
  orbit.regular = true;
  for (const auto& l : loc) {
    if (l.vertex < 0) continue;
    orbit.touches_vertex = true;
    if (g.vertex(l.vertex).puncture || g.valence(l.vertex) != 2) orbit.regular = false;
  }
  return orbit;
}

ExactOrbit exact_orbit(const TransitionGraph& xi, const ClosedPath& path) { return exact_orbit(xi, path.cycle()); }

std::vector<std::string> path_C_names(int m, int n) {
  if (m < 1 || n < 1) throw InvalidArgument("path C needs m, n >= 1");
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(q_edge(i));
  out.push_back(q_edge(n) + "^4");
  for (int j = n; j < n + m; ++j) out.push_back(p_edge(j));
  out.push_back(p_edge(n + m) + "^3");
  return out;
}

std::vector<std::string> path_D_names(int m, int n, int l) {
  if (m < 1 || n < 1 || l < 0) throw InvalidArgument("path D needs m, n >= 1 and l >= 0");
  const std::string e0 = q_edge(n) + "^3";
  std::vector<std::string> out(static_cast<std::size_t>(l), e0);
  out.push_back(e0);
  out.push_back(q_edge(n) + "^5");
  for (int j = n + 1; j < n + m; ++j) out.push_back(p_edge(j));
  out.push_back(p_edge(n + m) + "^1");
  out.push_back(p_edge(n));
  for (int j = n + 1; j < n + m; ++j) out.push_back(p_edge(j));
  out.push_back(p_edge(n + m) + "^2");
  return out;
}

ClosedPath find_path_C(const TransitionGraph& xi, int m, int n) { return closed_path(xi, path_C_names(m, n)); }

ClosedPath find_path_D(const TransitionGraph& xi, int m, int n, int l) { return closed_path(xi, path_D_names(m, n, l)); }

int index_in(const TransitionGraph& xi, const ClosedPath& path, const std::string& name) {
  int v = require_vertex(xi, name);
  const auto& c = path.cycle();
  auto it = std::find(c.begin(), c.end(), v);
  if (it == c.end()) throw PathNotPresent(name + " is not on the path");
  return static_cast<int>(it - c.begin());
}

ShiftWitness detect_embedded_shift(const TransitionGraph& xi, int k) {
  if (k < 1) throw InvalidArgument("embedded shift needs k >= 1");
  ShiftWitness w;
  for (const auto& n : {p_edge(k + 1) + "^2", p_edge(k + 1) + "^1", p_edge(k)}) w.block[1].push_back(require_vertex(xi, n));
  for (const auto& n : {q_edge(k) + "^5", q_edge(k) + "^4", q_edge(k) + "^3"}) w.block[0].push_back(require_vertex(xi, n));
  w.embedded = true;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      // the image of E_a runs across E_b c times iff every subedge of E_b has c predecessors in E_a
      int common = -1;
      for (int t : w.block[b]) {
        int c = 0;
        for (int s : w.block[a]) c += xi.has_arc(s, t) ? 1 : 0;
        if (common < 0) common = c;
        if (c != common) common = -2;
        if (common == -2) break;
      }
      w.crossings[a][b] = common < 0 ? -1 : common;
      if (w.crossings[a][b] != 1) {
        w.embedded = false;
        if (w.detail.empty()) {
          w.detail = "image of E_" + std::to_string(a) + " does not cross E_" + std::to_string(b) + " exactly once";
        }
      }
    }
  }
  if (w.embedded) w.detail = "images of E_0 and E_1 each cross E_0 and E_1 once";
  return w;
}

CodeLift lift_code(const TransitionGraph& xi, const ShiftWitness& shift, const std::string& word) {
  if (!shift.embedded) throw InvalidArgument("no embedded shift to lift into");
  if (word.empty() || word.find_first_not_of("01") != std::string::npos) throw ParseError("code must be a nonempty binary word");
  const std::size_t s = word.size();
  auto block = [&](std::size_t i) -> const std::vector<int>& { return shift.block[word[i % s] - '0']; };
  auto predecessor = [&](int t, const std::vector<int>& from) {
    for (int v : from) {
      if (xi.has_arc(v, t)) return v;
    }
    throw Inconsistency("subedge " + xi.name(t) + " has no predecessor in its block");
  };
  // pull a subedge of E_{w_0} back once around the word; returns the whole chain
  auto pull_back = [&](int start) {
    std::vector<int> chain(s);
    int t = start;
    for (std::size_t i = s; i-- > 0;) {
      t = predecessor(t, block(i));
      chain[i] = t;
    }
    return chain;
  };
  for (int start : block(0)) {
    auto chain = pull_back(start);
    if (chain[0] == start) return {chain, exact_orbit(xi, chain)};
  }
  // the fixed point lies on the boundary shared by two subedges swapped by the pull-back
  for (int start : block(0)) {
    auto first = pull_back(start);
    auto second = pull_back(first[0]);
    if (second[0] != start) continue;
    std::vector<int> walk = second;
    walk.insert(walk.end(), first.begin(), first.end());
    return {walk, exact_orbit(xi, walk)};
  }
  throw Inconsistency("code " + word + " has no lift through the embedded shift");
}

}  // namespace forcelab

namespace forcelab {

namespace {

// The reduced tree cut at the orbit points.
struct CutTree {
  int old_vertices = 0;
  std::vector<std::string> names;
  std::vector<bool> orbit;
  // per old edge: vertices along it with their coordinates, ascending
  std::vector<std::vector<std::pair<mpq_class, int>>> along;
  std::vector<std::vector<int>> adj;
};

CutTree cut_tree(const Graph& g, const ExactOrbit& orbit) {
  CutTree c;
  c.old_vertices = g.vertex_count();
  for (const auto& v : g.vertices()) {
    c.names.push_back(v.name);
    c.orbit.push_back(false);
  }
  c.along.resize(static_cast<std::size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    c.along[static_cast<std::size_t>(e)].push_back({0, g.edge(e).from});
    c.along[static_cast<std::size_t>(e)].push_back({1, g.edge(e).to});
  }
  for (std::size_t i = 0; i < orbit.points.size(); ++i) {
    const auto& p = orbit.points[i];
    c.names.push_back("y" + std::to_string(i));
    c.orbit.push_back(true);
    c.along[static_cast<std::size_t>(p.edge)].push_back({p.t, static_cast<int>(c.names.size()) - 1});
  }
  c.adj.resize(c.names.size());
  for (auto& chain : c.along) {
    std::sort(chain.begin(), chain.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      c.adj[static_cast<std::size_t>(chain[i].second)].push_back(chain[i + 1].second);
      c.adj[static_cast<std::size_t>(chain[i + 1].second)].push_back(chain[i].second);
    }
  }
  return c;
}

void append_run(const CutTree& c, std::vector<int>& walk, int edge, const mpq_class& from, const mpq_class& to) {
  const auto& chain = c.along[static_cast<std::size_t>(edge)];
  std::vector<int> run;
  for (const auto& [s, v] : chain) {
    if ((from <= s && s <= to) || (to <= s && s <= from)) run.push_back(v);
  }
  if (to < from) std::reverse(run.begin(), run.end());
  for (int v : run) {
    if (walk.empty() || walk.back() != v) walk.push_back(v);
  }
}

// Image walk of the segment of old edge e between coordinates a and b.
std::vector<int> segment_image(const TransitionGraph& xi, const CutTree& c, int e, const mpq_class& a, const mpq_class& b) {
  const auto& image = xi.reduced().map().edge_image[static_cast<std::size_t>(e)];
  const int k = static_cast<int>(image.size());
  std::vector<mpq_class> params{a};
  for (int j = 1; j < k; ++j) {
    mpq_class t(j, k);
    if ((a < t && t < b) || (b < t && t < a)) params.push_back(t);
  }
  params.push_back(b);
  std::vector<int> walk;
  for (std::size_t i = 0; i + 1 < params.size(); ++i) {
    mpq_class mid = (params[i] + params[i + 1]) / 2;
    mpq_class scaled = mid * k;
    int piece = static_cast<int>(mpz_class(scaled.get_num() / scaled.get_den()).get_si());
    OrientedEdge f = image[static_cast<std::size_t>(piece)];
    auto local = [&](const mpq_class& t) {
      mpq_class s = k * t - piece;
      return f.reversed ? mpq_class(1 - s) : s;
    };
    append_run(c, walk, f.edge, local(params[i]), local(params[i + 1]));
  }
  return walk;
}

std::vector<int> tighten(const CutTree& c, const std::vector<int>& walk) {
  std::vector<int> out;
  for (int v : walk) {
    if (!out.empty() && out.back() == v) continue;
    if (out.size() >= 2 && out[out.size() - 2] == v && !c.orbit[static_cast<std::size_t>(out.back())]) {
      out.pop_back();
      continue;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

ReducedGraphMap induced_hull_map(const TransitionGraph& xi, const ExactOrbit& orbit) {
  if (!orbit.regular || orbit.touches_vertex) throw InvalidArgument("hull map needs an orbit avoiding all vertices");
  const Graph& g = xi.reduced().graph();
  CutTree c = cut_tree(g, orbit);
  const int total = static_cast<int>(c.names.size());
  const int s = static_cast<int>(orbit.points.size());

  // image of every cut-tree vertex
  std::vector<int> vimage(static_cast<std::size_t>(total));
  for (int v = 0; v < c.old_vertices; ++v) vimage[static_cast<std::size_t>(v)] = xi.reduced().map().vertex_image[static_cast<std::size_t>(v)];
  for (int i = 0; i < s; ++i) vimage[static_cast<std::size_t>(c.old_vertices + i)] = c.old_vertices + (i + 1) % s;

  // hull: prune non-orbit leaves
  std::vector<int> degree(static_cast<std::size_t>(total));
  std::vector<bool> alive(static_cast<std::size_t>(total), true);
  for (int v = 0; v < total; ++v) degree[static_cast<std::size_t>(v)] = static_cast<int>(c.adj[static_cast<std::size_t>(v)].size());
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < total; ++v) {
      if (alive[static_cast<std::size_t>(v)] && !c.orbit[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] <= 1) {
        alive[static_cast<std::size_t>(v)] = false;
        for (int w : c.adj[static_cast<std::size_t>(v)]) {
          if (alive[static_cast<std::size_t>(w)]) --degree[static_cast<std::size_t>(w)];
        }
        changed = true;
      }
    }
  }
  auto is_node = [&](int v) {
    return alive[static_cast<std::size_t>(v)] && (c.orbit[static_cast<std::size_t>(v)] || degree[static_cast<std::size_t>(v)] >= 3);
  };

  // hull edges as cut-tree chains between nodes
  std::vector<std::vector<int>> chains;
  for (int v = 0; v < total; ++v) {
    if (!is_node(v)) continue;
    for (int w : c.adj[static_cast<std::size_t>(v)]) {
      if (!alive[static_cast<std::size_t>(w)]) continue;
      std::vector<int> chain{v, w};
      while (!is_node(chain.back())) {
        int prev = chain[chain.size() - 2];
        for (int x : c.adj[static_cast<std::size_t>(chain.back())]) {
          if (x != prev && alive[static_cast<std::size_t>(x)]) {
            chain.push_back(x);
            break;
          }
        }
      }
      if (v < chain.back()) chains.push_back(chain);
    }
  }

  // locate the cut-tree edge between adjacent vertices a, b
  auto segment_walk = [&](int a, int b) {
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& chain = c.along[static_cast<std::size_t>(e)];
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (chain[i].second == a && chain[i + 1].second == b) return segment_image(xi, c, e, chain[i].first, chain[i + 1].first);
        if (chain[i].second == b && chain[i + 1].second == a) return segment_image(xi, c, e, chain[i + 1].first, chain[i].first);
      }
    }
    throw Inconsistency("cut-tree vertices are not adjacent");
  };

  std::vector<std::vector<int>> walks;
  for (const auto& chain : chains) {
    std::vector<int> walk;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      for (int v : segment_walk(chain[i], chain[i + 1])) {
        if (walk.empty() || walk.back() != v) walk.push_back(v);
      }
    }
    walks.push_back(tighten(c, walk));
  }

  // push branch vertices forward along the common prefix of their outgoing images
  std::vector<int> node_image(static_cast<std::size_t>(total), -1);
  std::vector<std::size_t> trim_front(walks.size(), 0);
  std::vector<std::size_t> trim_back(walks.size(), 0);
  for (int v = 0; v < total; ++v) {
    if (!is_node(v)) continue;
    if (c.orbit[static_cast<std::size_t>(v)]) {
      node_image[static_cast<std::size_t>(v)] = vimage[static_cast<std::size_t>(v)];
      continue;
    }
    std::vector<std::vector<int>> outgoing;
    for (std::size_t h = 0; h < chains.size(); ++h) {
      if (chains[h].front() == v) outgoing.push_back(walks[h]);
      if (chains[h].back() == v) outgoing.push_back(std::vector<int>(walks[h].rbegin(), walks[h].rend()));
    }
    std::size_t common = 0;
    for (;;) {
      bool same = true;
      for (const auto& w : outgoing) same = same && common + 1 < w.size() && w[common + 1] == outgoing[0][common + 1];
      if (!same) break;
      ++common;
    }
    node_image[static_cast<std::size_t>(v)] = outgoing[0][common];
    for (std::size_t h = 0; h < chains.size(); ++h) {
      if (chains[h].front() == v) trim_front[h] = common;
      if (chains[h].back() == v) trim_back[h] = common;
    }
  }

  GraphMap out;
  std::vector<int> id(static_cast<std::size_t>(total), -1);
  for (int v = 0; v < total; ++v) {
    if (is_node(v)) id[static_cast<std::size_t>(v)] = out.graph.add_vertex(c.names[static_cast<std::size_t>(v)], c.orbit[static_cast<std::size_t>(v)]);
  }
  for (const auto& chain : chains) {
    out.graph.add_edge(c.names[static_cast<std::size_t>(chain.front())] + "-" + c.names[static_cast<std::size_t>(chain.back())],
                       id[static_cast<std::size_t>(chain.front())], id[static_cast<std::size_t>(chain.back())]);
  }
  for (int v = 0; v < total; ++v) {
    if (!is_node(v)) continue;
    int img = node_image[static_cast<std::size_t>(v)];
    if (!is_node(img)) throw Inconsistency("vertex " + c.names[static_cast<std::size_t>(v)] + " maps off the hull vertices");
    out.vertex_image.push_back(id[static_cast<std::size_t>(img)]);
  }
  for (std::size_t h = 0; h < chains.size(); ++h) {
    const auto& w = walks[h];
    if (trim_front[h] + trim_back[h] + 1 >= w.size()) throw Inconsistency("hull edge collapses under the induced map");
    std::vector<int> core(w.begin() + static_cast<long>(trim_front[h]), w.end() - static_cast<long>(trim_back[h]));
    EdgePath path;
    std::size_t i = 0;
    while (i + 1 < core.size()) {
      if (!is_node(core[i])) throw Inconsistency("edge image leaves the hull");
      bool found = false;
      for (std::size_t e = 0; e < chains.size() && !found; ++e) {
        const auto& ch = chains[e];
        for (bool rev : {false, true}) {
          std::vector<int> seq = ch;
          if (rev) std::reverse(seq.begin(), seq.end());
          if (i + seq.size() <= core.size() && std::equal(seq.begin(), seq.end(), core.begin() + static_cast<long>(i))) {
            path.push_back({static_cast<int>(e), rev});
            i += seq.size() - 1;
            found = true;
            break;
          }
        }
      }
      if (!found) throw Inconsistency("edge image leaves the hull");
    }
    out.edge_image.push_back(std::move(path));
  }
  return ReducedGraphMap(std::move(out));
}

}  // namespace forcelab
