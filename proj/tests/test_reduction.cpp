#include <algorithm>
#include <set>

#include "doctest.h"
#include "forcelab/catalog.hpp"
#include "forcelab/error.hpp"
#include "forcelab/reduction.hpp"
#include "forcelab/symdyn.hpp"

using namespace forcelab;

namespace {

std::set<std::pair<std::string, std::string>> arc_names(const TransitionGraph& xi) {
  std::set<std::pair<std::string, std::string>> out;
  for (int v = 0; v < xi.size(); ++v) {
    for (int w : xi.successors(v)) out.insert({xi.name(v), xi.name(w)});
  }
  return out;
}

// Same map with vertices listed in reverse order and every name prefixed.
ReducedGraphMap relabel(const ReducedGraphMap& r) {
  const Graph& g = r.graph();
  const int nv = g.vertex_count();
  GraphMap out;
  for (int v = nv - 1; v >= 0; --v) out.graph.add_vertex("r" + g.vertex(v).name, g.vertex(v).puncture);
  for (const auto& e : g.edges()) out.graph.add_edge("r" + e.name, nv - 1 - e.from, nv - 1 - e.to);
  out.vertex_image.resize(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    out.vertex_image[static_cast<std::size_t>(nv - 1 - v)] = nv - 1 - r.map().vertex_image[static_cast<std::size_t>(v)];
  }
  out.edge_image = r.map().edge_image;
  return ReducedGraphMap(out);
}

}  // namespace

TEST_CASE("reduce collapses peripheral loops") {
  ReducedGraphMap r = reduce(attach_peripheral_loops(fig5_map()));
  CHECK(r.map() == fig5_map().map());
  CHECK(r.puncture_vertices().size() == 3);
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      CHECK(reduce(family_graph_map(Family::beta, m, n)).map() == beta_reduced(m, n).map());
    }
  }
}

TEST_CASE("three-puncture subdivision") {
  ReducedGraphMap r = fig5_map();
  auto pieces = subdivide(r);
  REQUIRE(pieces.size() == 5);
  CHECK(pieces[0] == SubdividedEdge{0, 1, 2});
  CHECK(pieces[1] == SubdividedEdge{0, 2, 2});
  CHECK(pieces[2] == SubdividedEdge{1, 1, 3});
  CHECK(pieces[4] == SubdividedEdge{1, 3, 3});
  CHECK(subedge_name(r.graph(), pieces[1]) == "e(0,1)^2");
  TransitionGraph xi(r);
  // e(0,1) -> ~e(1,2) ~e(0,1) and e(1,2) -> e(0,1) e(1,2) ~e(1,2)
  std::set<std::pair<std::string, std::string>> expected{
      {"e(0,1)^1", "e(1,2)^1"}, {"e(0,1)^1", "e(1,2)^2"}, {"e(0,1)^1", "e(1,2)^3"},
      {"e(0,1)^2", "e(0,1)^1"}, {"e(0,1)^2", "e(0,1)^2"},
      {"e(1,2)^1", "e(0,1)^1"}, {"e(1,2)^1", "e(0,1)^2"},
      {"e(1,2)^2", "e(1,2)^1"}, {"e(1,2)^2", "e(1,2)^2"}, {"e(1,2)^2", "e(1,2)^3"},
      {"e(1,2)^3", "e(1,2)^1"}, {"e(1,2)^3", "e(1,2)^2"}, {"e(1,2)^3", "e(1,2)^3"}};
  CHECK(arc_names(xi) == expected);
  CHECK(xi.arc_count() == 13);
}

TEST_CASE("arcs out of a parent's pieces sum to its column in the transition matrix") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      ReducedGraphMap r = beta_reduced(m, n);
      TransitionGraph xi(r);
      IntMatrix t = transition_matrix(r.map());
      for (int e = 0; e < r.graph().edge_count(); ++e) {
        std::int64_t col = 0;
        for (const auto& row : t) col += row[static_cast<std::size_t>(e)];
        std::int64_t arcs = 0;
        for (int v = 0; v < xi.size(); ++v) {
          if (xi.vertices()[static_cast<std::size_t>(v)].parent == e) arcs += static_cast<std::int64_t>(xi.successors(v).size());
        }
        const auto pieces = static_cast<std::int64_t>(r.map().edge_image[static_cast<std::size_t>(e)].size());
        CHECK(col == pieces);
        std::int64_t expected = 0;
        for (const auto& oe : r.map().edge_image[static_cast<std::size_t>(e)]) {
          expected += static_cast<std::int64_t>(r.map().edge_image[static_cast<std::size_t>(oe.edge)].size());
        }
        CHECK(arcs == expected);
      }
    }
  }
}

TEST_CASE("transition graph contains the arcs of paths C and D") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      TransitionGraph xi(beta_reduced(m, n));
      CHECK_NOTHROW(closed_path(xi, path_C_names(m, n)));
      for (int l = 0; l <= 2; ++l) CHECK_NOTHROW(closed_path(xi, path_D_names(m, n, l)));
    }
  }
}

TEST_CASE("transition graph is invariant under relabeling") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      ReducedGraphMap r = beta_reduced(m, n);
      TransitionGraph a(r);
      TransitionGraph b(relabel(r));
      std::set<std::pair<std::string, std::string>> renamed;
      for (const auto& [x, y] : arc_names(a)) renamed.insert({"r" + x, "r" + y});
      CHECK(arc_names(b) == renamed);
    }
  }
}

TEST_CASE("reduced maps must be trees without peripheral edges") {
  CHECK_THROWS_AS(ReducedGraphMap(attach_peripheral_loops(fig5_map())), InvalidGraphMap);
}
