#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forcelab/spectral.hpp"

namespace forcelab {

struct Vertex {
  std::string name;
  /// Marks a puncture vertex of a reduced graph.
  bool puncture = false;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::string name;
  int from = 0;
  int to = 0;
  bool peripheral = false;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An edge traversed forwards (from -> to) or backwards.
struct OrientedEdge {
  int edge = 0;
  bool reversed = false;
  OrientedEdge reverse() const { return {edge, !reversed}; }
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
  friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

using EdgePath = std::vector<OrientedEdge>;
EdgePath reverse(const EdgePath& p);

class Graph {
 public:
  int add_vertex(std::string name, bool puncture = false);
  int add_edge(std::string name, int from, int to, bool peripheral = false);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Vertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

  std::optional<int> find_vertex(const std::string& name) const;
  std::optional<int> find_edge(const std::string& name) const;

  int source(OrientedEdge e) const;
  int target(OrientedEdge e) const;
  /// Number of edge ends at v (a loop counts twice).
  int valence(int v) const;
  /// `name` or `~name`.
  std::string label(OrientedEdge e) const;
  std::string label(const EdgePath& p) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// A graph map: vertex images and, for every edge in its forward
/// orientation, an edge path. Backward images are the reversed paths.
struct GraphMap {
  Graph graph;
  std::vector<int> vertex_image;
  std::vector<EdgePath> edge_image;

  EdgePath image(OrientedEdge e) const;
  /// Image of a path, concatenated without tightening.
  EdgePath image(const EdgePath& p) const;

  friend bool operator==(const GraphMap&, const GraphMap&) = default;
};

/// The k-fold composition (no tightening).
GraphMap iterate(const GraphMap& gm, int k);

/// Structural violations; empty iff gm is a valid graph map.
std::vector<std::string> validate(const GraphMap& gm);
/// Non-puncture vertices of valence 1 or 2 (tolerated, reported).
std::vector<std::string> valence_warnings(const GraphMap& gm);

/// A pair of directions (oriented edges) leaving the same vertex.
struct Turn {
  OrientedEdge a;
  OrientedEdge b;
  friend bool operator==(const Turn&, const Turn&) = default;
};

struct EfficiencyReport {
  bool efficient = true;
  /// On failure: a turn taken by the image of `edge`, which Dg^(depth-1)
  /// collapses, so g^depth(edge) backtracks.
  std::optional<Turn> turn;
  int edge = -1;
  int depth = 0;
  std::string witness;
};

/// (BH:1) for every iterate, decided by closing the turns taken by edge
/// images under the derivative map.
EfficiencyReport check_efficient(const GraphMap& gm);

/// Entry (i, j): number of times the image of edge j crosses edge i.
IntMatrix transition_matrix(const GraphMap& gm);

struct TransitionBlocks {
  std::vector<int> peripheral;
  std::vector<int> pre_peripheral;
  std::vector<int> real;
  /// Rows/columns ordered peripheral, pre-peripheral, real.
  IntMatrix total;
  IntMatrix P;
  IntMatrix Z;
  IntMatrix T;
  /// Coupling blocks: P x preP, P x real, preP x real.
  IntMatrix A;
  IntMatrix B;
  IntMatrix C;
};

TransitionBlocks transition_blocks(const GraphMap& gm);

struct BhVerdict {
  bool pseudo_anosov = false;
  std::optional<AlgebraicRadius> dilatation;
  EfficiencyReport efficiency;
  bool irreducible = false;
  std::vector<std::string> reasons;
};

/// Pseudo-Anosov certificate: efficient, irreducible real block, and
/// Perron root of the real block strictly above 1.
BhVerdict bh_verdict(const GraphMap& gm);

}  // namespace forcelab
