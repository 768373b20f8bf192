#include "forcelab/reduction.hpp"

#include <algorithm>

#include "forcelab/error.hpp"

namespace forcelab {

ReducedGraphMap::ReducedGraphMap(GraphMap gm) : map_(std::move(gm)) {
  auto issues = validate(map_);
  if (!issues.empty()) throw InvalidGraphMap(issues.front());
  const Graph& g = map_.graph;
  for (const auto& e : g.edges()) {
    if (e.peripheral) throw InvalidGraphMap("reduced graph has peripheral edge " + e.name);
  }
  if (g.edge_count() != g.vertex_count() - 1) throw InvalidGraphMap("reduced graph is not a tree");
  // connectivity by union-find
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) parent[static_cast<std::size_t>(v)] = v;
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (const auto& e : g.edges()) {
    int a = find(e.from);
    int b = find(e.to);
    if (a == b) throw InvalidGraphMap("reduced graph is not a tree");
    parent[static_cast<std::size_t>(a)] = b;
  }
}

std::vector<int> ReducedGraphMap::puncture_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < graph().vertex_count(); ++v) {
    if (graph().vertex(v).puncture) out.push_back(v);
  }
  return out;
}

ReducedGraphMap reduce(const GraphMap& gm) {
  auto issues = validate(gm);
  if (!issues.empty()) throw InvalidGraphMap(issues.front());
  const Graph& g = gm.graph;
  std::vector<bool> has_loop(static_cast<std::size_t>(g.vertex_count()), false);
  for (const auto& e : g.edges()) {
    if (e.peripheral) has_loop[static_cast<std::size_t>(e.from)] = true;
  }
  GraphMap out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    out.graph.add_vertex(g.vertex(v).name, g.vertex(v).puncture || has_loop[static_cast<std::size_t>(v)]);
  }
  std::vector<int> new_index(static_cast<std::size_t>(g.edge_count()), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.peripheral) continue;
    new_index[static_cast<std::size_t>(e)] = out.graph.add_edge(edge.name, edge.from, edge.to);
  }
  out.vertex_image = gm.vertex_image;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).peripheral) continue;
    EdgePath path;
    for (const auto& oe : gm.edge_image[static_cast<std::size_t>(e)]) {
      int idx = new_index[static_cast<std::size_t>(oe.edge)];
      if (idx >= 0) path.push_back({idx, oe.reversed});
    }
    if (path.empty()) {
      throw InvalidGraphMap("edge " + g.edge(e).name + " maps into the peripheral subgraph");
    }
    out.edge_image.push_back(std::move(path));
  }
  return ReducedGraphMap(std::move(out));
}

std::vector<SubdividedEdge> subdivide(const ReducedGraphMap& r) {
  std::vector<SubdividedEdge> out;
  const auto& images = r.map().edge_image;
  for (int e = 0; e < r.graph().edge_count(); ++e) {
    const int k = static_cast<int>(images[static_cast<std::size_t>(e)].size());
    for (int i = 1; i <= k; ++i) out.push_back({e, i, k});
  }
  return out;
}

std::string subedge_name(const Graph& g, const SubdividedEdge& s) {
  std::string name = g.edge(s.parent).name;
  if (s.pieces > 1) name += "^" + std::to_string(s.position);
  return name;
}

TransitionGraph::TransitionGraph(const ReducedGraphMap& r) : reduced_(r), vertices_(subdivide(r)) {
  const Graph& g = r.graph();
  first_piece_.assign(static_cast<std::size_t>(g.edge_count()), 0);
  for (int v = size() - 1; v >= 0; --v) {
    first_piece_[static_cast<std::size_t>(vertices_[static_cast<std::size_t>(v)].parent)] = v;
  }
  out_.resize(vertices_.size());
  for (int v = 0; v < size(); ++v) {
    const auto& s = vertices_[static_cast<std::size_t>(v)];
    OrientedEdge f = r.map().edge_image[static_cast<std::size_t>(s.parent)][static_cast<std::size_t>(s.position - 1)];
    image_.push_back(f);
    const int k = static_cast<int>(r.map().edge_image[static_cast<std::size_t>(f.edge)].size());
    for (int i = 0; i < k; ++i) out_[static_cast<std::size_t>(v)].push_back(first_piece_[static_cast<std::size_t>(f.edge)] + i);
  }
}

bool TransitionGraph::has_arc(int from, int to) const {
  const auto& succ = out_.at(static_cast<std::size_t>(from));
  return std::binary_search(succ.begin(), succ.end(), to);
}

std::optional<int> TransitionGraph::find(int edge, int position) const {
  if (edge < 0 || edge >= static_cast<int>(first_piece_.size())) return std::nullopt;
  int v = first_piece_[static_cast<std::size_t>(edge)];
  const auto& s = vertices_[static_cast<std::size_t>(v)];
  if (position < 1 || position > s.pieces) return std::nullopt;
  return v + position - 1;
}

std::optional<int> TransitionGraph::find(const std::string& name) const {
  for (int v = 0; v < size(); ++v) {
    if (this->name(v) == name) return v;
  }
  return std::nullopt;
}

std::string TransitionGraph::name(int v) const {
  return subedge_name(reduced_.graph(), vertices_.at(static_cast<std::size_t>(v)));
}

int TransitionGraph::arc_count() const {
  int n = 0;
  for (const auto& s : out_) n += static_cast<int>(s.size());
  return n;
}

IntMatrix TransitionGraph::adjacency() const {
  IntMatrix m(vertices_.size(), std::vector<std::int64_t>(vertices_.size(), 0));
  for (int v = 0; v < size(); ++v) {
    for (int w : out_[static_cast<std::size_t>(v)]) m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = 1;
  }
  return m;
}

}  // namespace forcelab

namespace forcelab {

GraphMap attach_peripheral_loops(const ReducedGraphMap& r) {
  const Graph& g = r.graph();
  GraphMap out;
  for (const auto& v : g.vertices()) out.graph.add_vertex(v.name);
  for (const auto& e : g.edges()) out.graph.add_edge(e.name, e.from, e.to);
  std::vector<int> loop(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex(v).puncture) loop[static_cast<std::size_t>(v)] = out.graph.add_edge("P" + g.vertex(v).name, v, v, true);
  }
  out.vertex_image = r.map().vertex_image;
  for (int e = 0; e < g.edge_count(); ++e) {
    const EdgePath& path = r.map().edge_image[static_cast<std::size_t>(e)];
    EdgePath full;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i > 0) {
        int v = g.source(path[i]);
        if (loop[static_cast<std::size_t>(v)] >= 0) full.push_back({loop[static_cast<std::size_t>(v)], false});
      }
      full.push_back(path[i]);
    }
    out.edge_image.push_back(std::move(full));
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (loop[static_cast<std::size_t>(v)] < 0) continue;
    int w = r.map().vertex_image[static_cast<std::size_t>(v)];
    out.edge_image.push_back({{loop[static_cast<std::size_t>(w)], false}});
  }
  return out;
}

}  // namespace forcelab
