#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "forcelab/braid.hpp"

namespace forcelab {

/// A cyclic binary word naming a periodic orbit of the horseshoe.
class Code {
 public:
  /// Throws ParseError unless `word` is a nonempty string over {0,1}.
  explicit Code(std::string word);

  const std::string& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  /// Not a proper power of a shorter word.
  bool primitive() const;
  /// Lexicographically least rotation.
  std::string canonical() const;
  /// Starts at position k of this word.
  Code rotate(int k) const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  std::string word_;
};

/// All primitive codes of length <= max_len, one per rotation class
/// (canonical rotations), by length then lexicographically.
std::vector<Code> primitive_codes(int max_len);

struct PlanarPoint {
  mpq_class x;
  mpq_class y;
  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

/// The model horseshoe: (x, y) -> (3x, y/3), followed by rotation by pi
/// about (3/2, 1/2) when the stretched x is at least 2. Defined on the
/// strips V_0 = [0,1/3] x [0,1] and V_1 = [2/3,1] x [0,1].
PlanarPoint horseshoe_map(const PlanarPoint& p);

/// The periodic orbit with the given itinerary; point i lies in V_{w_i}.
/// Throws InvalidArgument for a non-primitive code.
std::vector<PlanarPoint> orbit_coordinates(const Code& c);

/// Kneading order on one-sided itineraries: compare at the first difference,
/// reversed when the common prefix has an odd number of 1s. Throws
/// InvalidArgument if the given prefixes agree.
bool unimodal_less(const std::string& a, const std::string& b);

/// Braid of the orbit under one period of the stretch-then-fold isotopy,
/// read off from the left-to-right order of the strands.
BraidWord braid_from_code(const Code& c);

/// 1 0^{n-1} 1 0^m, the code of sigma'_{m,n}; requires n >= m+2.
Code sigma_code(int m, int n);
/// 1 0^{n-1} 1 0^{m-1} 1, the alternative code; requires n >= m+2.
Code sigma_code_alternative(int m, int n);

}  // namespace forcelab
