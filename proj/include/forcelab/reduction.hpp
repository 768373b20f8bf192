#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forcelab/graphmap.hpp"

namespace forcelab {

/// A graph map on a tree without peripheral edges; puncture vertices are
/// permuted among themselves.
class ReducedGraphMap {
 public:
  /// Throws InvalidGraphMap unless `gm` is valid, peripheral-free and a tree.
  explicit ReducedGraphMap(GraphMap gm);

  const GraphMap& map() const { return map_; }
  const Graph& graph() const { return map_.graph; }
  std::vector<int> puncture_vertices() const;

 private:
  GraphMap map_;
};

/// Collapses every peripheral loop to its (now puncture) vertex and deletes
/// peripheral traversals from edge images.
ReducedGraphMap reduce(const GraphMap& gm);

/// Piece `position` (1-based) of `pieces` equal parts of `parent`;
/// occupies [(position-1)/pieces, position/pieces] of the unit-parametrized edge.
struct SubdividedEdge {
  int parent = 0;
  int position = 1;
  int pieces = 1;
  friend bool operator==(const SubdividedEdge&, const SubdividedEdge&) = default;
};

/// Each edge is cut into as many pieces as its image has edges; an edge with
/// a one-edge image is its own single piece.
std::vector<SubdividedEdge> subdivide(const ReducedGraphMap& r);

/// `e(q,3)^4` for a piece of a subdivided edge, the bare name otherwise.
std::string subedge_name(const Graph& g, const SubdividedEdge& s);

class TransitionGraph {
 public:
  explicit TransitionGraph(const ReducedGraphMap& r);

  const std::vector<SubdividedEdge>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<int>& successors(int v) const { return out_[static_cast<std::size_t>(v)]; }
  bool has_arc(int from, int to) const;
  std::optional<int> find(int edge, int position) const;
  /// Look up by name as printed by subedge_name.
  std::optional<int> find(const std::string& name) const;
  std::string name(int v) const;
  /// The oriented edge that piece v maps onto.
  OrientedEdge image_of(int v) const { return image_[static_cast<std::size_t>(v)]; }
  int arc_count() const;
  IntMatrix adjacency() const;

  /// Same reduced map (kept for exact orbit computations).
  const ReducedGraphMap& reduced() const { return reduced_; }

 private:
  ReducedGraphMap reduced_;
  std::vector<SubdividedEdge> vertices_;
  std::vector<int> first_piece_;
  std::vector<std::vector<int>> out_;
  std::vector<OrientedEdge> image_;
};

}  // namespace forcelab

namespace forcelab {

/// Inverse of reduce: every puncture vertex v gets a peripheral loop `P<v>`
/// mapped to the loop at its image, and the loop is traversed forwards
/// wherever an edge image passes through or turns back at v.
GraphMap attach_peripheral_loops(const ReducedGraphMap& r);

}  // namespace forcelab
