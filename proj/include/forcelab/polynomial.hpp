#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace forcelab {

/// Polynomial with integer coefficients, stored lowest degree first with
/// no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  /// c * x^k
  static IntPoly monomial(const mpz_class& c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  mpz_class coeff(int i) const;
  mpz_class leading() const { return coeffs_.empty() ? mpz_class(0) : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  IntPoly derivative() const;
  mpq_class evaluate(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const;
  mpz_class content() const;
  /// Divides out the content and makes the leading coefficient positive.
  IntPoly primitive() const;

  /// Human form such as `x^2-3x+1`.
  std::string to_string(char var = 'x') const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// a / b when b divides a in Z[x], nullopt otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);
/// Greatest common divisor, primitive with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// Product of the distinct irreducible factors (primitive, positive leading coefficient).
IntPoly squarefree_part(const IntPoly& f);

/// Irreducible factors over Z of a monic squarefree polynomial
/// (Berlekamp modulo a small prime, Hensel lifting, factor recombination).
/// Sorted by degree, then coefficients.
std::vector<IntPoly> factor_squarefree_monic(const IntPoly& f);

/// Sturm sequence of a squarefree polynomial; counts distinct real roots.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p);
  /// Number of distinct real roots in the half-open interval (a, b].
  int count_roots(const mpq_class& a, const mpq_class& b) const;

 private:
  int variations(const mpq_class& x) const;
  std::vector<std::vector<mpq_class>> seq_;
};

/// Round x to `digits` places after the decimal point (half away from zero).
std::string round_decimal(const mpq_class& x, int digits);

}  // namespace forcelab
