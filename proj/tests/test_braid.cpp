#include <random>

#include "doctest.h"
#include "forcelab/braid.hpp"
#include "forcelab/error.hpp"

using namespace forcelab;

namespace {

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<Letter> letters;
  for (int k = 0; k < len; ++k) letters.push_back({idx(rng), sgn(rng) ? 1 : -1});
  return BraidWord(n, std::move(letters));
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce(parse_braid("B3: s1 s1^-1")).empty());
  CHECK(free_reduce(parse_braid("B5: s1 s2 s2^-1 s3")) == parse_braid("B5: s1 s3"));
  CHECK(free_reduce(parse_braid("B3: s1 s2 s1")) == parse_braid("B3: s1 s2 s1"));
  CHECK(free_reduce(parse_braid("B4: s1 s2 s3 s3^-1 s2^-1 s1^-1")).empty());

  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    auto w = random_word(rng, 5, 20);
    auto r = free_reduce(w);
    CHECK(free_reduce(r) == r);
    CHECK(r.length() <= w.length());
    CHECK(permutation_of(r) == permutation_of(w));
    CHECK(exponent_sum(r) == exponent_sum(w));
  }
}

TEST_CASE("permutations") {
  CHECK(permutation_of(parse_braid("B3: s1")) == Permutation({1, 0, 2}));
  CHECK(permutation_of(BraidWord(4)) == Permutation::identity(4));
  // s1 then s2: strand 0 -> 1 -> 2, strand 1 -> 0, strand 2 -> 1
  CHECK(permutation_of(make_beta(1, 1)) == Permutation({2, 0, 1}));
  CHECK(permutation_of(make_beta(1, 1)).is_single_cycle());
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidArgument);

  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto u = random_word(rng, 6, 8);
    auto v = random_word(rng, 6, 8);
    CHECK(permutation_of(u * v) == permutation_of(u).then(permutation_of(v)));
  }
}

TEST_CASE("family words") {
  CHECK(make_beta(1, 1) == parse_braid("B3: s1 s2^-1"));
  CHECK(make_beta(1, 2) == parse_braid("B4: s1 s2^-1 s3^-1"));
  CHECK(make_beta(2, 3).strands() == 6);
  CHECK(make_xi(1, 1) == parse_braid("B3: s2 s1 s1 s2"));
  CHECK(make_xi(1, 3) == parse_braid("B5: s4 s3 s2 s1 s1 s2 s3 s4"));
  CHECK(make_sigma(1, 1) == parse_braid("B3: s1 s1 s1 s2"));
  CHECK(make_sigma(2, 4).strands() == 7);
  CHECK(make_sigma_prime(1, 3) == parse_braid("B5: s1 s2 s3 s4 s1 s2"));
  CHECK_THROWS_AS(make_beta(0, 2), InvalidArgument);

  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      CHECK(permutation_of(make_beta(m, n)).is_single_cycle());
      CHECK(make_sigma_prime(m, n).strands() == m + n + 1);
      CHECK(exponent_sum(make_xi(m, n)) == 2 * (m + n));
      CHECK(make_xi(m, n).length() == static_cast<std::size_t>(2 * (m + n)));
      CHECK(exponent_sum(make_sigma(m, n)) == exponent_sum(make_sigma_prime(m, n)));
    }
  }
}

TEST_CASE("exponent sum") {
  CHECK(exponent_sum(parse_braid("B3: s1 s2^-1")) == 0);
  CHECK(exponent_sum(parse_braid("B5: s1 s2 s3 s4 s1 s2")) == 6);
  CHECK(exponent_sum(full_twist(5)) == 20);
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    auto u = random_word(rng, 5, 10);
    auto w = random_word(rng, 5, 6);
    CHECK(exponent_sum(w.inverse() * u * w) == exponent_sum(u));
  }
}

TEST_CASE("text round trip") {
  for (const char* text : {"B3: s1 s2^-1", "B5: s1 s2 s3 s4 s1 s2", "B4:", "B1:"}) {
    CHECK(to_string(parse_braid(text)) == text);
  }
  CHECK(parse_braid("  B3:s1   s2^-1 ") == make_beta(1, 1));
  CHECK_THROWS_AS(parse_braid("B3: s3"), ParseError);
  CHECK_THROWS_AS(parse_braid("B3 s1"), ParseError);
  CHECK_THROWS_AS(parse_braid("B3: s1^2"), ParseError);
  CHECK_THROWS_AS(parse_braid("B3: t1"), ParseError);
}
