#include <random>

#include "doctest.h"
#include "forcelab/braid.hpp"
#include "forcelab/error.hpp"
#include "forcelab/garside.hpp"
#include "forcelab/horseshoe.hpp"

using namespace forcelab;

namespace {

std::string repeat_rotation(const std::string& w, std::size_t start, std::size_t len) {
  std::string out;
  for (std::size_t k = 0; k < len; ++k) out += w[(start + k) % w.size()];
  return out;
}

// Lyndon words of length L: (1/L) sum_{d | L} mu(d) 2^(L/d).
long necklaces(int len) {
  auto mu = [](int n) {
    int r = 1;
    for (int p = 2; p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        r = -r;
      }
    }
    return r;
  };
  long sum = 0;
  for (int d = 1; d <= len; ++d) {
    if (len % d == 0) sum += mu(d) * (1L << (len / d));
  }
  return sum / len;
}

}  // namespace

TEST_CASE("codes") {
  CHECK_THROWS_AS(Code(""), ParseError);
  CHECK_THROWS_AS(Code("102"), ParseError);
  CHECK(Code("0101").primitive() == false);
  CHECK(Code("10010").canonical() == "00101");
  CHECK(Code("10010").rotate(2).word() == "01010");
  for (int len = 1; len <= 10; ++len) {
    long count = 0;
    for (const auto& c : primitive_codes(10)) count += c.length() == len;
    CHECK(count == necklaces(len));
  }
}

TEST_CASE("orbit coordinates are exact periodic orbits in the right strips") {
  auto fixed = orbit_coordinates(Code("1"));
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0] == PlanarPoint{mpq_class(3, 4), mpq_class(3, 4)});
  CHECK(orbit_coordinates(Code("0"))[0] == PlanarPoint{0, 0});
  for (const auto& code : primitive_codes(8)) {
    auto pts = orbit_coordinates(code);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(horseshoe_map(pts[i]) == pts[(i + 1) % pts.size()]);
      if (code.word()[i] == '0') {
        CHECK(pts[i].x <= mpq_class(1, 3));
      } else {
        CHECK(pts[i].x >= mpq_class(2, 3));
      }
    }
  }
  CHECK_THROWS_AS(orbit_coordinates(Code("0101")), InvalidArgument);
}

TEST_CASE("horizontal order is the unimodal order of itineraries") {
  for (const auto& code : primitive_codes(7)) {
    auto pts = orbit_coordinates(code);
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const bool less = unimodal_less(repeat_rotation(code.word(), i, 3 * n), repeat_rotation(code.word(), j, 3 * n));
        CHECK(less == (pts[i].x < pts[j].x));
      }
    }
  }
  CHECK_THROWS_AS(unimodal_less("0101", "0101"), InvalidArgument);
}

TEST_CASE("code braids are single cycles") {
  for (const auto& code : primitive_codes(7)) {
    BraidWord b = braid_from_code(code);
    CHECK(b.strands() == code.length());
    if (code.length() > 1) CHECK(permutation_of(b).is_single_cycle());
  }
}

TEST_CASE("mirror calibration on 10010") {
  BraidWord b = braid_from_code(Code("10010"));
  BraidWord target = parse_braid("B5: s1 s2 s3 s4 s1 s2");
  CHECK(braid_type_equal(b, target, 100000).outcome == Outcome::equal);
  CHECK(braid_type_equal(b, target.inverse(), 100000).outcome == Outcome::not_equal);
}

TEST_CASE("braid type does not depend on the starting point of the code") {
  std::mt19937 rng(31337);
  auto codes = primitive_codes(8);
  std::uniform_int_distribution<std::size_t> pick(0, codes.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const Code& c = codes[pick(rng)];
    const int r = std::uniform_int_distribution<int>(0, c.length() - 1)(rng);
    CHECK(braid_type_equal(braid_from_code(c), braid_from_code(c.rotate(r)), 100000).outcome == Outcome::equal);
  }
}

TEST_CASE("sigma codes") {
  CHECK(sigma_code(1, 3).word() == "10010");
  CHECK(sigma_code_alternative(1, 3).word() == "10011");
  CHECK(sigma_code(2, 5).word() == "10000100");
  CHECK_THROWS_AS(sigma_code(2, 3), InvalidArgument);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 4}, {2, 5}}) {
    CHECK(braid_type_equal(braid_from_code(sigma_code(m, n)), make_sigma_prime(m, n), 100000).outcome == Outcome::equal);
  }
}
