#include "forcelab/graphmap.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "forcelab/error.hpp"

namespace forcelab {

EdgePath reverse(const EdgePath& p) {
  EdgePath out;
  out.reserve(p.size());
  for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back(it->reverse());
  return out;
}

int Graph::add_vertex(std::string name, bool puncture) {
  if (find_vertex(name)) throw InvalidGraphMap("duplicate vertex '" + name + "'");
  vertices_.push_back({std::move(name), puncture});
  return vertex_count() - 1;
}

int Graph::add_edge(std::string name, int from, int to, bool peripheral) {
  if (find_edge(name)) throw InvalidGraphMap("duplicate edge '" + name + "'");
  if (from < 0 || from >= vertex_count() || to < 0 || to >= vertex_count()) {
    throw InvalidGraphMap("edge '" + name + "' has an unknown endpoint");
  }
  edges_.push_back({std::move(name), from, to, peripheral});
  return edge_count() - 1;
}

std::optional<int> Graph::find_vertex(const std::string& name) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertices_[static_cast<std::size_t>(v)].name == name) return v;
  }
  return std::nullopt;
}

std::optional<int> Graph::find_edge(const std::string& name) const {
  for (int e = 0; e < edge_count(); ++e) {
    if (edges_[static_cast<std::size_t>(e)].name == name) return e;
  }
  return std::nullopt;
}

int Graph::source(OrientedEdge e) const { return e.reversed ? edge(e.edge).to : edge(e.edge).from; }

int Graph::target(OrientedEdge e) const { return e.reversed ? edge(e.edge).from : edge(e.edge).to; }

int Graph::valence(int v) const {
  int count = 0;
  for (const auto& e : edges_) {
    if (e.from == v) ++count;
    if (e.to == v) ++count;
  }
  return count;
}

std::string Graph::label(OrientedEdge e) const { return (e.reversed ? "~" : "") + edge(e.edge).name; }

std::string Graph::label(const EdgePath& p) const {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += label(p[i]);
  }
  return out;
}

EdgePath GraphMap::image(OrientedEdge e) const {
  const EdgePath& fwd = edge_image.at(static_cast<std::size_t>(e.edge));
  return e.reversed ? reverse(fwd) : fwd;
}

EdgePath GraphMap::image(const EdgePath& p) const {
  EdgePath out;
  for (const auto& e : p) {
    auto img = image(e);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

GraphMap iterate(const GraphMap& gm, int k) {
  if (k < 1) throw InvalidArgument("iterate expects k >= 1");
  GraphMap out = gm;
  for (int step = 1; step < k; ++step) {
    for (std::size_t v = 0; v < out.vertex_image.size(); ++v) {
      out.vertex_image[v] = gm.vertex_image[static_cast<std::size_t>(out.vertex_image[v])];
    }
    for (auto& path : out.edge_image) path = gm.image(path);
  }
  return out;
}

std::vector<std::string> validate(const GraphMap& gm) {
  std::vector<std::string> issues;
  const Graph& g = gm.graph;
  if (static_cast<int>(gm.vertex_image.size()) != g.vertex_count()) {
    issues.push_back("vertex image table has the wrong size");
    return issues;
  }
  if (static_cast<int>(gm.edge_image.size()) != g.edge_count()) {
    issues.push_back("edge image table has the wrong size");
    return issues;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    int img = gm.vertex_image[static_cast<std::size_t>(v)];
    if (img < 0 || img >= g.vertex_count()) {
      issues.push_back("vertex " + g.vertex(v).name + " maps outside the graph");
      continue;
    }
    if (g.vertex(v).puncture && !g.vertex(img).puncture) {
      issues.push_back("puncture vertex " + g.vertex(v).name + " maps to a non-puncture vertex");
    }
  }
  std::vector<int> loops_at(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.peripheral) {
      if (edge.from != edge.to) issues.push_back("peripheral edge " + edge.name + " is not a loop");
      if (++loops_at[static_cast<std::size_t>(edge.from)] > 1) {
        issues.push_back("vertex " + g.vertex(edge.from).name + " carries more than one peripheral loop");
      }
    }
  }
  if (!issues.empty()) return issues;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const EdgePath& path = gm.edge_image[static_cast<std::size_t>(e)];
    if (path.empty()) {
      issues.push_back("edge " + edge.name + " has an empty image");
      continue;
    }
    bool bad_index = false;
    for (const auto& oe : path) {
      if (oe.edge < 0 || oe.edge >= g.edge_count()) bad_index = true;
    }
    if (bad_index) {
      issues.push_back("image of edge " + edge.name + " uses an unknown edge");
      continue;
    }
    bool continuous = g.source(path.front()) == gm.vertex_image[static_cast<std::size_t>(edge.from)] &&
                      g.target(path.back()) == gm.vertex_image[static_cast<std::size_t>(edge.to)];
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (g.target(path[i]) != g.source(path[i + 1])) continuous = false;
    }
    if (!continuous) issues.push_back("discontinuous path: image of edge " + edge.name);
    if (edge.peripheral) {
      for (const auto& oe : path) {
        if (!g.edge(oe.edge).peripheral) {
          issues.push_back("P not invariant: image of peripheral edge " + edge.name + " leaves P");
          break;
        }
      }
    }
  }
  return issues;
}

std::vector<std::string> valence_warnings(const GraphMap& gm) {
  std::vector<std::string> out;
  const Graph& g = gm.graph;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex(v).puncture) continue;
    bool has_loop = false;
    for (const auto& e : g.edges()) {
      if (e.peripheral && e.from == v) has_loop = true;
    }
    if (has_loop) continue;
    const int val = g.valence(v);
    if (val == 1 || val == 2) {
      out.push_back("vertex " + g.vertex(v).name + " has valence " + std::to_string(val));
    }
  }
  return out;
}

namespace {

void require_valid(const GraphMap& gm) {
  auto issues = validate(gm);
  if (!issues.empty()) throw InvalidGraphMap(issues.front());
}

Turn normalized(OrientedEdge a, OrientedEdge b) { return a <= b ? Turn{a, b} : Turn{b, a}; }

struct TurnLess {
  bool operator()(const Turn& x, const Turn& y) const {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

}  // namespace

EfficiencyReport check_efficient(const GraphMap& gm) {
  require_valid(gm);
  const Graph& g = gm.graph;
  auto dg = [&](OrientedEdge d) { return gm.image(d).front(); };

  struct Item {
    Turn turn;
    int edge;
    int depth;
  };
  std::set<Turn, TurnLess> seen;
  std::deque<Item> queue;
  for (int e = 0; e < g.edge_count(); ++e) {
    const EdgePath& path = gm.edge_image[static_cast<std::size_t>(e)];
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      Turn t = normalized(path[i].reverse(), path[i + 1]);
      if (seen.insert(t).second) queue.push_back({t, e, 1});
    }
  }
  EfficiencyReport report;
  while (!queue.empty()) {
    Item item = queue.front();
    queue.pop_front();
    if (item.turn.a == item.turn.b) {
      report.efficient = false;
      report.turn = item.turn;
      report.edge = item.edge;
      report.depth = item.depth;
      std::ostringstream w;
      w << "g^" << item.depth << "(" << g.edge(item.edge).name << ") backtracks at turn (" << g.label(item.turn.a)
        << ", " << g.label(item.turn.b) << ")";
      report.witness = w.str();
      return report;
    }
    Turn next = normalized(dg(item.turn.a), dg(item.turn.b));
    if (seen.insert(next).second) queue.push_back({next, item.edge, item.depth + 1});
  }
  return report;
}

IntMatrix transition_matrix(const GraphMap& gm) {
  const int n = gm.graph.edge_count();
  IntMatrix m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int j = 0; j < n; ++j) {
    for (const auto& oe : gm.edge_image[static_cast<std::size_t>(j)]) {
      ++m[static_cast<std::size_t>(oe.edge)][static_cast<std::size_t>(j)];
    }
  }
  return m;
}

namespace {

IntMatrix sub_block(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  IntMatrix out(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out[i][j] = m[static_cast<std::size_t>(rows[i])][static_cast<std::size_t>(cols[j])];
    }
  }
  return out;
}

}  // namespace

TransitionBlocks transition_blocks(const GraphMap& gm) {
  require_valid(gm);
  const Graph& g = gm.graph;
  const int n = g.edge_count();
  std::vector<int> cls(static_cast<std::size_t>(n), 2);
  for (int e = 0; e < n; ++e) {
    if (g.edge(e).peripheral) cls[static_cast<std::size_t>(e)] = 0;
  }
  // least fixpoint: non-peripheral edges whose image lies in P and preP
  for (bool changed = true; changed;) {
    changed = false;
    for (int e = 0; e < n; ++e) {
      if (cls[static_cast<std::size_t>(e)] != 2) continue;
      bool inside = true;
      for (const auto& oe : gm.edge_image[static_cast<std::size_t>(e)]) {
        if (cls[static_cast<std::size_t>(oe.edge)] == 2) inside = false;
      }
      if (inside) {
        cls[static_cast<std::size_t>(e)] = 1;
        changed = true;
      }
    }
  }
  TransitionBlocks b;
  for (int e = 0; e < n; ++e) {
    switch (cls[static_cast<std::size_t>(e)]) {
      case 0: b.peripheral.push_back(e); break;
      case 1: b.pre_peripheral.push_back(e); break;
      default: b.real.push_back(e); break;
    }
  }
  IntMatrix m = transition_matrix(gm);
  std::vector<int> order = b.peripheral;
  order.insert(order.end(), b.pre_peripheral.begin(), b.pre_peripheral.end());
  order.insert(order.end(), b.real.begin(), b.real.end());
  b.total = sub_block(m, order, order);
  b.P = sub_block(m, b.peripheral, b.peripheral);
  b.Z = sub_block(m, b.pre_peripheral, b.pre_peripheral);
  b.T = sub_block(m, b.real, b.real);
  b.A = sub_block(m, b.peripheral, b.pre_peripheral);
  b.B = sub_block(m, b.peripheral, b.real);
  b.C = sub_block(m, b.pre_peripheral, b.real);
  return b;
}

BhVerdict bh_verdict(const GraphMap& gm) {
  require_valid(gm);
  BhVerdict v;
  v.efficiency = check_efficient(gm);
  if (!v.efficiency.efficient) v.reasons.push_back("not efficient: " + v.efficiency.witness);
  auto blocks = transition_blocks(gm);
  if (blocks.real.empty()) {
    v.reasons.push_back("no real edges");
    return v;
  }
  v.irreducible = irreducible(blocks.T);
  if (!v.irreducible) v.reasons.push_back("real transition block is reducible");
  v.dilatation = spectral_radius(blocks.T);
  if (compare(*v.dilatation, mpq_class(1)) <= 0) {
    v.reasons.push_back("dilatation " + v.dilatation->decimal(6) + " is not greater than 1");
  }
  v.pseudo_anosov = v.reasons.empty();
  return v;
}

}  // namespace forcelab
