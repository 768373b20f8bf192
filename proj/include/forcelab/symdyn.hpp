#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "forcelab/reduction.hpp"

namespace forcelab {

/// A closed path E_0 -> ... -> E_{s-1} -> E_0 in a transition graph, stored
/// in its lexicographically least rotation.
class ClosedPath {
 public:
  ClosedPath() = default;
  /// Rotates `cycle` into canonical position. Arcs are not checked here.
  explicit ClosedPath(std::vector<int> cycle);

  const std::vector<int>& cycle() const { return cycle_; }
  int length() const { return static_cast<int>(cycle_.size()); }
  /// Smallest p dividing the length with the cycle invariant under rotation by p.
  int primitive_period() const;
  bool primitive() const { return primitive_period() == length(); }
  bool contains(int v) const;
  std::string to_string(const TransitionGraph& xi) const;

  friend bool operator==(const ClosedPath&, const ClosedPath&) = default;
  friend auto operator<=>(const ClosedPath&, const ClosedPath&) = default;

 private:
  std::vector<int> cycle_;
};

/// Builds the closed path through the listed vertices; throws PathNotPresent
/// if an arc (including the wrap-around) is missing.
ClosedPath closed_path(const TransitionGraph& xi, const std::vector<int>& vertices);
ClosedPath closed_path(const TransitionGraph& xi, const std::vector<std::string>& names);

/// Primitive closed paths of length <= max_len, up to rotation, sorted by
/// length then lexicographically.
std::vector<ClosedPath> enumerate_cycles(const TransitionGraph& xi, int max_len);

struct OrbitPoint {
  /// Transition-graph vertex (subedge) carrying the point.
  int subedge = 0;
  /// Reduced-graph edge and exact coordinate in [0, 1] along it.
  int edge = 0;
  mpq_class t;
};

struct ExactOrbit {
  /// points[i] lies in path.cycle()[i]; the reduced map sends i to i+1.
  std::vector<OrbitPoint> points;
  /// Least period of the point under the reduced map.
  int period = 0;
  /// Primitive period of the closed path.
  int symbolic_period = 0;
  /// Some point sits on a vertex of the reduced graph.
  bool touches_vertex = false;
  /// No point is a puncture or a vertex of valence other than 2.
  bool regular = false;
  bool consistent() const { return period == symbolic_period; }
};

/// Image of a point under the piecewise-affine reduced map (which subedge
/// is used matters only at subdivision points).
OrbitPoint apply_map(const TransitionGraph& xi, const OrbitPoint& p, int subedge);

/// The periodic point whose itinerary follows the closed path, in exact
/// rationals. Throws Inconsistency if the composed map is not expanding.
ExactOrbit exact_orbit(const TransitionGraph& xi, const ClosedPath& path);

/// Named paths of the beta-family transition graph (m, n >= 1).
/// C: e(q,0) -> ... -> e(q,n-1) -> e(q,n)^4 -> e(p,n) -> ... -> e(p,n+m-1) -> e(p,n+m)^3.
std::vector<std::string> path_C_names(int m, int n);
/// D with l extra loops at E_0 = e(q,n)^3:
/// E_0^l E_0 E_1 ... E_m E_{m+1}^1 E_{m+2} E_2 ... E_m E_{m+1}^2, where E_1 = e(q,n)^5,
/// E_i = e(p,n+i-1) for 2 <= i <= m, E_{m+1}^j = e(p,n+m)^j and E_{m+2} = e(p,n).
std::vector<std::string> path_D_names(int m, int n, int l);
ClosedPath find_path_C(const TransitionGraph& xi, int m, int n);
ClosedPath find_path_D(const TransitionGraph& xi, int m, int n, int l);

/// Position of the subedge named `name` in the canonical cycle.
int index_in(const TransitionGraph& xi, const ClosedPath& path, const std::string& name);

struct ShiftWitness {
  bool embedded = false;
  /// Subedges making up E_0 and E_1.
  std::vector<int> block[2];
  /// crossings[a][b]: how often the image of E_a runs across E_b.
  int crossings[2][2] = {{0, 0}, {0, 0}};
  std::string detail;
};

/// Full 2-shift inside the reduced map of g_{1,k}, with
/// E_1 = ~e(p,k+1)^2 ~e(p,k+1)^1 e(p,k) and E_0 = ~e(q,k)^5 ~e(q,k)^4 ~e(q,k)^3.
ShiftWitness detect_embedded_shift(const TransitionGraph& xi, int k);

struct CodeLift {
  /// Closed path whose orbit has itinerary w in the blocks; its length is
  /// |w|, or 2|w| when the periodic point sits on a subedge boundary.
  std::vector<int> path;
  ExactOrbit orbit;
};

/// Periodic point of the reduced map following the cyclic binary word w
/// through the blocks E_0, E_1 of an embedded shift.
CodeLift lift_code(const TransitionGraph& xi, const ShiftWitness& shift, const std::string& word);

/// Exact orbit along a closed walk given in itinerary order (no rotation).
ExactOrbit exact_orbit(const TransitionGraph& xi, const std::vector<int>& walk);

/// Tree map induced on the convex hull of a regular periodic orbit. Orbit
/// point i becomes puncture `y<i>`; hull vertices of valence >= 3 keep their
/// names. Each hull edge maps to the retraction of its image into the hull,
/// tightened everywhere except at the orbit points, and branch vertices are
/// pushed forward along the common initial segment of their edge images.
ReducedGraphMap induced_hull_map(const TransitionGraph& xi, const ExactOrbit& orbit);

}  // namespace forcelab
