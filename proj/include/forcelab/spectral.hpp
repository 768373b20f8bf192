#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "forcelab/polynomial.hpp"

namespace forcelab {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// det(xI - M), computed division-free (Berkowitz).
IntPoly characteristic_polynomial(const IntMatrix& m);

/// True iff the digraph of nonzero entries is strongly connected and every
/// entry becomes positive in some power M^k, k >= 1. A 1x1 zero is not irreducible.
bool irreducible(const IntMatrix& m);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// A real algebraic number given by its minimal polynomial and a rational
/// interval (lo, hi] isolating it among the roots of that polynomial.
class AlgebraicRadius {
 public:
  AlgebraicRadius(IntPoly char_poly, IntPoly minimal_poly, mpq_class lo, mpq_class hi);

  const IntPoly& char_poly() const { return char_poly_; }
  const IntPoly& minimal_polynomial() const { return minimal_; }
  const mpq_class& lo() const { return lo_; }
  const mpq_class& hi() const { return hi_; }

  /// Shrinks the isolating interval below `width`.
  void refine(const mpq_class& width);
  /// Correctly rounded decimal expansion with `digits` places after the point.
  std::string decimal(int digits) const;
  double approx() const;

  /// Exact three-way comparison.
  friend int compare(const AlgebraicRadius& a, const AlgebraicRadius& b);
  friend int compare(const AlgebraicRadius& a, const mpq_class& v);
  friend bool operator==(const AlgebraicRadius& a, const AlgebraicRadius& b) { return compare(a, b) == 0; }
  friend bool operator<(const AlgebraicRadius& a, const AlgebraicRadius& b) { return compare(a, b) < 0; }
  friend bool operator>(const AlgebraicRadius& a, const AlgebraicRadius& b) { return compare(a, b) > 0; }

 private:
  void bisect();
  IntPoly char_poly_;
  IntPoly minimal_;
  mpq_class lo_;
  mpq_class hi_;
  std::shared_ptr<const SturmSequence> sturm_;
};

/// Perron root of a square nonnegative integer matrix, exactly.
AlgebraicRadius spectral_radius(const IntMatrix& m);

struct PowerEstimate {
  double value = 0;
  double lower = 0;
  double upper = 0;
  int iterations = 0;
};

/// Floating-point Perron root of an irreducible nonnegative matrix by power
/// iteration on M + I, bracketed by Collatz-Wielandt bounds.
PowerEstimate power_iteration_radius(const IntMatrix& m, double tol = 1e-12, int max_iter = 200000);

}  // namespace forcelab
