#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "forcelab/braid.hpp"

namespace forcelab {

/// Delta^infimum * factors[0] * ... * factors[r-1], every factor a
/// permutation braid other than 1 and Delta, consecutive pairs left-weighted.
struct LeftNormalForm {
  int strands = 1;
  int infimum = 0;
  std::vector<Permutation> factors;

  int supremum() const { return infimum + static_cast<int>(factors.size()); }
  std::size_t canonical_length() const { return factors.size(); }
  BraidWord to_word() const;

  friend bool operator==(const LeftNormalForm&, const LeftNormalForm&) = default;
};

LeftNormalForm normal_form(const BraidWord& w);
bool equal_in_group(const BraidWord& u, const BraidWord& v);

/// Printable form, e.g. `D^2 . [1 0 2] . [0 2 1]` (factors as permutation images).
std::string to_string(const LeftNormalForm& nf);

/// Permutation braids as permutations: the braid in which each pair of
/// strands crosses at most once, positively.
namespace simple {
Permutation delta(int n);
Permutation generator(int n, int i);
/// Left complement: a * partial(a) = Delta.
Permutation partial(const Permutation& a);
/// Conjugation by Delta.
Permutation tau(const Permutation& a);
bool left_divides(const Permutation& a, const Permutation& b);
Permutation left_meet(const Permutation& a, const Permutation& b);
Permutation left_join(const Permutation& a, const Permutation& b);
/// a \ b = a^-1 (a v b).
Permutation remainder(const Permutation& a, const Permutation& b);
/// Positive word spelling the permutation braid.
std::vector<int> spell(const Permutation& a);
}  // namespace simple

enum class Outcome { equal, not_equal, unknown };
std::string to_string(Outcome o);

struct ConjugacyVerdict {
  Outcome outcome = Outcome::unknown;
  /// When equal: w with w^-1 u w = v (for braid_type_equal, modulo Delta^2).
  std::optional<BraidWord> witness;
  std::size_t effort = 0;
};

/// Decides conjugacy in B_n by closing the super summit set of u under
/// minimal simple conjugators. More than `budget` summit elements gives unknown.
ConjugacyVerdict conjugacy_test(const BraidWord& u, const BraidWord& v, std::size_t budget);

/// Conjugacy modulo the center <Delta^2>.
ConjugacyVerdict braid_type_equal(const BraidWord& u, const BraidWord& v, std::size_t budget);

}  // namespace forcelab
