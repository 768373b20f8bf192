#include <random>

#include "doctest.h"
#include "forcelab/error.hpp"
#include "forcelab/polynomial.hpp"
#include "forcelab/spectral.hpp"

using namespace forcelab;

namespace {

// Fraction-free Gaussian elimination (Bareiss) for det(x I - M) at integer x.
mpz_class bareiss_charpoly_at(const IntMatrix& m, long x) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? x : 0) - static_cast<long>(m[i][j]);
  }
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix random_matrix(std::mt19937& rng, int n, int max_entry, double density) {
  std::uniform_int_distribution<int> val(1, max_entry);
  std::bernoulli_distribution on(density);
  IntMatrix m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (auto& row : m) {
    for (auto& v : row) v = on(rng) ? val(rng) : 0;
  }
  return m;
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  IntPoly p{1, -3, 1};
  CHECK(p.to_string() == "x^2-3x+1");
  CHECK(IntPoly{-1, 0, 0, 1}.to_string() == "x^3-1");
  CHECK(IntPoly{0, 2}.to_string() == "2x");
  CHECK(IntPoly{}.to_string() == "0");
  CHECK((IntPoly{1, 1} * IntPoly{-1, 1}) == IntPoly{-1, 0, 1});
  CHECK(divide_exact(IntPoly{-1, 0, 1}, IntPoly{1, 1}) == IntPoly{-1, 1});
  CHECK_FALSE(divide_exact(IntPoly{1, 0, 1}, IntPoly{1, 1}).has_value());
  CHECK(gcd(IntPoly{-1, 0, 1}, IntPoly{1, 2, 1}) == IntPoly{1, 1});
  CHECK(squarefree_part(IntPoly{1, 2, 1} * IntPoly{0, 1}) == IntPoly{0, 1, 1});
  CHECK(p.sign_at(mpq_class(5, 2)) < 0);
  CHECK(p.sign_at(3) > 0);
}

TEST_CASE("Sturm counting") {
  // (x-1)(x-2)(x-3)
  IntPoly f = IntPoly{-1, 1} * IntPoly{-2, 1} * IntPoly{-3, 1};
  SturmSequence s(f);
  CHECK(s.count_roots(0, 10) == 3);
  CHECK(s.count_roots(1, 3) == 2);
  CHECK(s.count_roots(mpq_class(3, 2), mpq_class(5, 2)) == 1);
  SturmSequence g(IntPoly{1, 0, 1});
  CHECK(g.count_roots(-100, 100) == 0);
}

TEST_CASE("decimal rounding") {
  CHECK(round_decimal(mpq_class(1, 3), 4) == "0.3333");
  CHECK(round_decimal(mpq_class(2, 3), 4) == "0.6667");
  CHECK(round_decimal(mpq_class(5), 2) == "5.00");
  CHECK(round_decimal(mpq_class(-1, 8), 2) == "-0.13");
  CHECK(round_decimal(mpq_class(1, 1000), 2) == "0.00");
}

TEST_CASE("factorization over Z") {
  const IntPoly a{1, -3, 1};
  const IntPoly b{1, 0, 1};
  const IntPoly c{-1, -1, 0, 1};
  const IntPoly d{-2, 1};
  const IntPoly e{1, 1, 1, 1, 1};
  auto factors = factor_squarefree_monic(a * b * c * d * e);
  std::vector<IntPoly> expect{d, a, b, c, e};
  CHECK(factors == expect);
  CHECK(factor_squarefree_monic(IntPoly{-2, 0, 1}) == std::vector<IntPoly>{IntPoly{-2, 0, 1}});
  // x^4+1 splits modulo every prime but is irreducible over Z
  CHECK(factor_squarefree_monic(IntPoly{1, 0, 0, 0, 1}) == std::vector<IntPoly>{IntPoly{1, 0, 0, 0, 1}});
  // x^8 - 1
  auto cyc = factor_squarefree_monic(IntPoly{-1, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(cyc.size() == 4);
  CHECK_THROWS_AS(factor_squarefree_monic(IntPoly{1, 2}), InvalidArgument);

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int t = 0; t < 40; ++t) {
    IntPoly prod{1};
    for (int k = 0; k < 3; ++k) {
      std::vector<mpz_class> cs;
      const int deg = 1 + t % 4;
      for (int i = 0; i < deg; ++i) cs.emplace_back(coef(rng));
      cs.emplace_back(1);
      prod = prod * IntPoly(cs);
    }
    IntPoly sf = squarefree_part(prod);
    auto fs = factor_squarefree_monic(sf);
    IntPoly back{1};
    for (const auto& f : fs) {
      back = back * f;
      CHECK(f.is_monic());
    }
    CHECK(back == sf);
  }
}

TEST_CASE("characteristic polynomial against Bareiss determinants") {
  std::mt19937 rng(31);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 8;
    auto m = random_matrix(rng, n, 5, 0.5);
    auto cp = characteristic_polynomial(m);
    CHECK(cp.degree() == n);
    CHECK(cp.is_monic());
    for (long x = -3; x <= 3; ++x) CHECK(cp.evaluate(x) == bareiss_charpoly_at(m, x));
  }
}

TEST_CASE("irreducibility") {
  CHECK(irreducible({{1, 1}, {1, 2}}));
  CHECK_FALSE(irreducible({{1, 0}, {1, 1}}));
  CHECK(irreducible({{0, 1}, {1, 0}}));
  CHECK_FALSE(irreducible({{0}}));
  CHECK(irreducible({{2}}));
}

TEST_CASE("spectral radius") {
  auto golden = spectral_radius({{1, 1}, {1, 2}});
  CHECK(golden.minimal_polynomial() == IntPoly{1, -3, 1});
  // (3 + sqrt 5) / 2
  CHECK(golden.decimal(30) == "2.618033988749894848204586834366");
  CHECK(compare(golden, mpq_class(2)) > 0);
  CHECK(compare(golden, mpq_class(3)) < 0);

  auto one = spectral_radius({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(one.minimal_polynomial() == IntPoly{-1, 1});
  CHECK(compare(one, mpq_class(1)) == 0);
  CHECK(one.decimal(3) == "1.000");
  auto two = spectral_radius({{2}});
  CHECK(two.decimal(5) == "2.00000");
  CHECK(compare(two, one) > 0);

  // same Perron root, different matrices
  auto g2 = spectral_radius({{2, 1}, {1, 1}});
  CHECK(compare(golden, g2) == 0);
  auto silver = spectral_radius({{2, 1}, {1, 0}});
  CHECK(silver.minimal_polynomial() == IntPoly{-1, -2, 1});
  CHECK(compare(golden, silver) > 0);
}

TEST_CASE("exact and floating radii agree") {
  std::mt19937 rng(4242);
  int checked = 0;
  while (checked < 50) {
    const int n = 1 + static_cast<int>(rng() % 8);
    auto m = random_matrix(rng, n, 3, 0.4);
    if (!irreducible(m)) continue;
    auto exact = spectral_radius(m);
    auto approx = power_iteration_radius(m);
    CHECK(std::abs(exact.approx() - approx.value) <= 1e-6);
    CHECK(exact.char_poly().sign_at(exact.lo()) * exact.char_poly().sign_at(exact.hi()) <= 0);
    ++checked;
  }
}
