#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "forcelab/catalog.hpp"
#include "forcelab/error.hpp"
#include "forcelab/horseshoe.hpp"
#include "forcelab/symdyn.hpp"

using namespace forcelab;

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  return n > 1 ? -result : result;
}

mpz_class trace_of_power(const IntMatrix& a, int d) {
  const std::size_t n = a.size();
  std::vector<std::vector<mpz_class>> p(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
  for (int k = 0; k < d; ++k) {
    std::vector<std::vector<mpz_class>> q(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (p[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) q[i][j] += p[i][l] * static_cast<long>(a[l][j]);
      }
    }
    p = std::move(q);
  }
  mpz_class t = 0;
  for (std::size_t i = 0; i < n; ++i) t += p[i][i];
  return t;
}

// Primitive cycles of length L up to rotation: (1/L) sum_{d | L} mu(L/d) tr(A^d).
mpz_class primitive_cycle_count(const IntMatrix& a, int len) {
  mpz_class sum = 0;
  for (int d = 1; d <= len; ++d) {
    if (len % d == 0) sum += mobius(len / d) * trace_of_power(a, d);
  }
  return sum / len;
}

}  // namespace

TEST_CASE("closed paths are stored in canonical rotation") {
  ClosedPath a({3, 1, 2});
  ClosedPath b({1, 2, 3});
  CHECK(a == b);
  CHECK(a.cycle() == std::vector<int>{1, 2, 3});
  CHECK(ClosedPath({1, 2, 1, 2}).primitive_period() == 2);
  CHECK_FALSE(ClosedPath({1, 2, 1, 2}).primitive());
  CHECK(ClosedPath({5}).primitive());
}

TEST_CASE("cycle enumeration matches the trace formula") {
  std::vector<ReducedGraphMap> maps{fig5_map(), beta_reduced(1, 2), beta_reduced(2, 1)};
  for (const auto& r : maps) {
    TransitionGraph xi(r);
    const int max_len = 8;
    auto cycles = enumerate_cycles(xi, max_len);
    std::map<int, long> by_length;
    for (const auto& c : cycles) {
      CHECK(c.primitive());
      ++by_length[c.length()];
    }
    for (int len = 1; len <= max_len; ++len) CHECK(mpz_class(by_length[len]) == primitive_cycle_count(xi.adjacency(), len));
    CHECK(std::is_sorted(cycles.begin(), cycles.end(), [](const ClosedPath& x, const ClosedPath& y) {
      return x.length() != y.length() ? x.length() < y.length() : x.cycle() < y.cycle();
    }));
  }
}

TEST_CASE("exact orbits follow their cycles and close up exactly") {
  TransitionGraph xi(beta_reduced(1, 2));
  for (const auto& c : enumerate_cycles(xi, 6)) {
    ExactOrbit o = exact_orbit(xi, c);
    REQUIRE(o.points.size() == c.cycle().size());
    for (std::size_t i = 0; i < o.points.size(); ++i) CHECK(o.points[i].subedge == c.cycle()[i]);
    OrbitPoint p = o.points[0];
    for (int k = 0; k < c.length(); ++k) p = apply_map(xi, p, c.cycle()[static_cast<std::size_t>(k)]);
    CHECK(p.edge == o.points[0].edge);
    CHECK(p.t == o.points[0].t);
    bool on_boundary = false;
    for (const auto& pt : o.points) {
      const auto& sub = xi.vertices()[static_cast<std::size_t>(pt.subedge)];
      const mpq_class scaled = sub.pieces * pt.t;
      on_boundary = on_boundary || (scaled.get_den() == 1 && scaled > 0 && scaled < sub.pieces);
    }
    if (o.regular && !o.touches_vertex && !on_boundary) CHECK(o.period == c.length());
  }
}

TEST_CASE("rotating a walk rotates its orbit") {
  TransitionGraph xi(beta_reduced(2, 3));
  std::vector<int> walk;
  for (const auto& n : path_D_names(2, 3, 1)) walk.push_back(*xi.find(n));
  ExactOrbit base = exact_orbit(xi, walk);
  for (std::size_t r = 1; r < walk.size(); ++r) {
    std::vector<int> rotated(walk.begin() + static_cast<long>(r), walk.end());
    rotated.insert(rotated.end(), walk.begin(), walk.begin() + static_cast<long>(r));
    ExactOrbit o = exact_orbit(xi, rotated);
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const auto& a = o.points[i];
      const auto& b = base.points[(i + r) % walk.size()];
      CHECK(a.edge == b.edge);
      CHECK(a.t == b.t);
    }
  }
}

TEST_CASE("paths C and D give regular orbits of the predicted periods") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      TransitionGraph xi(beta_reduced(m, n));
      ExactOrbit c = exact_orbit(xi, find_path_C(xi, m, n));
      CHECK(c.regular);
      CHECK(c.period == m + n + 2);
      for (int l = 0; l <= 2; ++l) {
        ExactOrbit d = exact_orbit(xi, find_path_D(xi, m, n, l));
        CHECK(d.regular);
        CHECK(d.period == 2 * m + 3 + l);
      }
    }
  }
  TransitionGraph xi(beta_reduced(1, 1));
  CHECK_THROWS_AS(closed_path(xi, std::vector<std::string>{"e(q,0)", "e(p,1)"}), PathNotPresent);
}

TEST_CASE("an orbit through a fixed vertex is not regular") {
  const int n = 3;
  TransitionGraph xi(beta_reduced(2, n));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e(q," + std::to_string(i) + ")");
  names.push_back("e(q," + std::to_string(n) + ")^1");
  ExactOrbit o = exact_orbit(xi, closed_path(xi, names));
  CHECK(o.touches_vertex);
  CHECK_FALSE(o.regular);
  CHECK(o.period == 1);
  CHECK(o.symbolic_period == n + 1);
  CHECK_FALSE(o.consistent());
}

TEST_CASE("embedded shift in g(1,k)") {
  for (int k = 1; k <= 5; ++k) {
    TransitionGraph xi(beta_reduced(1, k));
    ShiftWitness w = detect_embedded_shift(xi, k);
    CHECK(w.embedded);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) CHECK(w.crossings[a][b] == 1);
    }
    for (const auto& code : primitive_codes(6)) {
      CodeLift lift = lift_code(xi, w, code.word());
      CHECK(lift.orbit.regular);
      CHECK(lift.orbit.period == code.length());
      // a point on a subedge boundary is lifted along a doubled walk
      if (static_cast<int>(lift.path.size()) == code.length()) CHECK(lift.orbit.consistent());
    }
  }
}

TEST_CASE("the shift test rejects maps without the shift") {
  GraphMap gm = beta_reduced(1, 2).map();
  const Graph& g = gm.graph;
  auto e = [&](const std::string& name, bool rev) { return OrientedEdge{*g.find_edge(name), rev}; };
  gm.edge_image[static_cast<std::size_t>(*g.find_edge("e(q,2)"))] = {e("e(q,2)", false), e("e(p,2)", true), e("e(p,3)", false),
                                                                     e("e(p,3)", true), e("e(p,3)", false)};
  TransitionGraph xi{ReducedGraphMap(gm)};
  CHECK_FALSE(detect_embedded_shift(xi, 2).embedded);
}

TEST_CASE("distinct codes lift to distinct orbits") {
  TransitionGraph xi(beta_reduced(1, 2));
  ShiftWitness w = detect_embedded_shift(xi, 2);
  std::set<std::pair<int, std::string>> starts;
  std::size_t points = 0;
  for (const auto& code : primitive_codes(5)) {
    CodeLift lift = lift_code(xi, w, code.word());
    for (int i = 0; i < lift.orbit.period; ++i) {
      const auto& p = lift.orbit.points[static_cast<std::size_t>(i)];
      starts.insert({p.edge, p.t.get_str()});
    }
    points += static_cast<std::size_t>(lift.orbit.period);
  }
  CHECK(starts.size() == points);
}
