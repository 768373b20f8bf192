#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace forcelab {

/// One Artin generator sigma_index^sign, index in [1, n-1].
struct Letter {
  int index = 1;
  int sign = 1;

  Letter inverse() const { return {index, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A permutation of {0..n-1}; images[j] is where position j goes.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator[](int j) const { return images_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& images() const { return images_; }

  /// First this, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  /// Cycle lengths in non-increasing order.
  std::vector<int> cycle_type() const;
  bool is_single_cycle() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// A word in the Artin generators of B_n. Stored exactly as written;
/// reduction is always explicit.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<Letter> letters = {});

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord inverse() const;
  BraidWord power(int k) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

BraidWord free_reduce(const BraidWord& w);
Permutation permutation_of(const BraidWord& w);
std::int64_t exponent_sum(const BraidWord& w);

/// Half twist Delta = s1 (s2 s1) ... (s_{n-1} ... s1).
BraidWord half_twist(int strands);
/// Delta^2, generator of the center; exponent sum n(n-1).
BraidWord full_twist(int strands);

/// beta_{m,n} = s1 ... sm s_{m+1}^-1 ... s_{m+n}^-1 on m+n+1 strands.
BraidWord make_beta(int m, int n);
/// xi = s_{m+n} ... s2 s1 s1 s2 ... s_{m+n}.
BraidWord make_xi(int m, int n);
/// sigma_{m,n} = beta_{m,n} xi, freely reduced.
BraidWord make_sigma(int m, int n);
/// Positive conjugate of sigma_{m,n} modulo the center. With d = s1 ... s_{m+n}:
/// d s1 ... s_{2m} when n >= m, d (s_{m-n-1} ... s1) s1 d when m > n.
/// (1,3) gives s1 s2 s3 s4 s1 s2.
BraidWord make_sigma_prime(int m, int n);

/// ASCII form `B<n>: s1 s2^-1 ...`; the identity prints as `B<n>:`.
std::string to_string(const BraidWord& w);
BraidWord parse_braid(std::string_view text);

}  // namespace forcelab
