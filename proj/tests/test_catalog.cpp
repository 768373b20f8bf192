#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "forcelab/braid.hpp"
#include "forcelab/catalog.hpp"
#include "forcelab/error.hpp"
#include "forcelab/graphmap_io.hpp"
#include "forcelab/symdyn.hpp"
#include "free_group_oracle.hpp"

using namespace forcelab;

namespace {

std::vector<std::string> sorted_lines(const GraphMap& gm) {
  std::istringstream in(write_graph_map(gm));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraicRadius lambda_of(Family f, int m, int n) {
  auto v = bh_verdict(family_graph_map(f, m, n));
  REQUIRE(v.pseudo_anosov);
  return *v.dilatation;
}

bool failed(const CatalogEntry& e, const std::string& id) {
  for (const auto& c : e.checks) {
    if (c.id == id && c.applicable && !c.passed) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("every catalog entry passes its checks") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      CatalogEntry e = build_entry(Family::beta, m, n);
      CHECK_MESSAGE(e.passed(), "beta ", m, " ", n);
    }
  }
  for (int m = 1; m <= 4; ++m) {
    for (int n = m + 2; n <= m + 6; ++n) {
      CatalogEntry e = build_entry(Family::sigma, m, n);
      CHECK_MESSAGE(e.passed(), "sigma ", m, " ", n);
    }
  }
  CHECK_THROWS_AS(build_entry(Family::sigma, 2, 3), InvalidArgument);
  CHECK_THROWS_AS(build_entry(Family::beta, 0, 3), InvalidArgument);
}

TEST_CASE("the first entry has the golden-ratio-squared dilatation") {
  AlgebraicRadius l = lambda_of(Family::beta, 1, 1);
  CHECK(l.minimal_polynomial() == IntPoly{1, -3, 1});
  // (3 + sqrt 5) / 2 = 2.6180339887...
  CHECK(compare(l, mpq_class(26180339887, 10000000000)) > 0);
  CHECK(compare(l, mpq_class(26180339888, 10000000000)) < 0);
  auto rows = dilatation_table(Family::beta, 1, 30);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].minimal_polynomial == "x^2-3x+1");
  CHECK(rows[0].decimal == "2.618033988749894848204586834366");
}

TEST_CASE("dilatations agree with the free-group growth of the braids") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const double expected = oracle::growth_rate(make_beta(m, n));
      CHECK_MESSAGE(lambda_of(Family::beta, m, n).approx() == doctest::Approx(expected).epsilon(0.01), "beta ", m, " ", n);
    }
  }
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}}) {
    const double expected = oracle::growth_rate(make_sigma(m, n));
    CHECK_MESSAGE(lambda_of(Family::sigma, m, n).approx() == doctest::Approx(expected).epsilon(0.01), "sigma ", m, " ", n);
  }
}

TEST_CASE("sigma tables match the maps induced on orbit hulls") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = m + 2; n <= m + 4; ++n) {
      SearchResult derived = reconstruct_search(Family::sigma, m, n);
      REQUIRE(derived.completions.size() == 1);
      if (m >= 2) {
        CHECK(sorted_lines(derived.completions[0]) == sorted_lines(family_graph_map(Family::sigma, m, n)));
      } else {
        // for m = 1 the hull has no branch vertex in place of p
        auto v = bh_verdict(derived.completions[0]);
        REQUIRE(v.pseudo_anosov);
        AlgebraicRadius shipped = lambda_of(Family::sigma, m, n);
        CHECK(v.dilatation->minimal_polynomial() == shipped.minimal_polynomial());
        CHECK(compare(*v.dilatation, shipped) == 0);
      }
    }
  }
}

TEST_CASE("mutated entries fail validation") {
  CatalogEntry good = build_entry(Family::beta, 2, 3);
  REQUIRE(good.passed());

  CatalogEntry swapped = good;
  const Graph& g = swapped.graph_map.graph;
  std::vector<int> loops;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).peripheral) loops.push_back(e);
  }
  // loops at v0 and v1 exchange images: a 2-cycle and a 4-cycle
  std::swap(swapped.graph_map.edge_image[static_cast<std::size_t>(loops[0])],
            swapped.graph_map.edge_image[static_cast<std::size_t>(loops[1])]);
  swapped.checks = validate_entry(swapped);
  CHECK(failed(swapped, "V5"));

  CatalogEntry other = good;
  other.graph_map = family_graph_map(Family::beta, 3, 2);
  other.checks = validate_entry(other);
  CHECK(failed(other, "V1"));

  CatalogEntry sigma = build_entry(Family::sigma, 1, 3);
  sigma.graph_map = family_graph_map(Family::beta, 1, 2);
  sigma.checks = validate_entry(sigma);
  CHECK_FALSE(sigma.passed());
}

TEST_CASE("reconstruction search") {
  SearchResult first = reconstruct_search(Family::beta, 1, 1);
  REQUIRE_FALSE(first.completions.empty());
  for (const auto& c : first.completions) {
    auto v = bh_verdict(c);
    REQUIRE(v.pseudo_anosov);
    CHECK(v.dilatation->minimal_polynomial() == IntPoly{1, -3, 1});
  }
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      SearchResult r = reconstruct_search(Family::beta, m, n);
      CHECK(r.candidates >= r.completions.size());
      CHECK(std::find(r.completions.begin(), r.completions.end(), family_graph_map(Family::beta, m, n)) != r.completions.end());
      SearchResult pinned = reconstruct_search(Family::beta, m, n, {true, true});
      CHECK(pinned.candidates <= r.candidates);
      CHECK(pinned.completions.size() <= r.completions.size());
    }
  }
  auto report = search_report(3);
  CHECK(report.instances.size() == 9);
  CHECK(report.passed());
  CHECK(report.instances[0].checks[0].detail.find("completions") != std::string::npos);
}

TEST_CASE("catalog files are named and written deterministically") {
  CHECK(entry_file_name(Family::beta, 1, 2) == "beta/m1n2.gm");
  auto parsed = parse_entry_file_name("catalog/sigma/m2n10.gm");
  REQUIRE(parsed);
  CHECK(parsed->first == Family::sigma);
  CHECK(parsed->second == std::make_pair(2, 10));
  CHECK_FALSE(parse_entry_file_name("catalog/gamma/m2n10.gm"));
  CHECK(entry_file_text(build_entry(Family::beta, 2, 2)) == entry_file_text(build_entry(Family::beta, 2, 2)));
}

TEST_CASE("shipped catalog files equal the generated tables") {
  namespace fs = std::filesystem;
  const fs::path root = fs::path(FORCELAB_SOURCE_DIR) / "catalog";
  int count = 0;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.path().extension() != ".gm") continue;
    auto key = parse_entry_file_name(entry.path().string());
    REQUIRE(key);
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == entry_file_text(build_entry(key->first, key->second.first, key->second.second)));
    ++count;
  }
  CHECK(count == 36 + 20);
}

TEST_CASE("dilatation tables") {
  auto beta = dilatation_table(Family::beta, 4, 20);
  CHECK(beta.size() == 16);
  for (const auto& r : beta) {
    CHECK(r.decimal > std::string("1."));
    auto mirror = std::find_if(beta.begin(), beta.end(), [&](const DilatationRow& x) { return x.m == r.n && x.n == r.m; });
    REQUIRE(mirror != beta.end());
    CHECK(mirror->decimal == r.decimal);
    CHECK(mirror->minimal_polynomial == r.minimal_polynomial);
  }
  auto sigma = dilatation_table(Family::sigma, 2, 20);
  CHECK(sigma.size() == 2);
  CHECK(sigma.front().m == 1);
  CHECK(sigma.front().n == 3);
  auto j = nlohmann::json::parse(table_to_json(Family::sigma, sigma));
  CHECK(j["family"] == "sigma");
  CHECK(j["rows"].size() == 2);
  CHECK(table_to_text(sigma).find("x^4-x^3-x^2-x+1") != std::string::npos);
}

TEST_CASE("verification reports") {
  auto t1 = verify_theorem1(2, 3);
  CHECK(t1.passed());
  auto t2 = verify_theorem2(2, 6);
  CHECK(t2.passed());
  auto j = nlohmann::ordered_json::parse(t1.to_json());
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"schema", "title", "parameters", "passed", "instances"});
  CHECK(j["schema"] == 1);
  CHECK(j["parameters"]["m_max"] == 2);
  CHECK(t1.to_json() == verify_theorem1(2, 3).to_json());
  CHECK(t1.to_text().find("verdict: all checks passed") != std::string::npos);
}

TEST_CASE("corollary composition report") {
  auto r = verify_corollary3(2, 3, 6);
  CHECK(r.passed());
  REQUIRE(r.instances.size() == 2);
  const auto& base = r.instances[0].checks;
  REQUIRE(base.size() == 4);
  CHECK_FALSE(base[0].applicable);
  for (std::size_t i = 1; i < base.size(); ++i) CHECK(base[i].passed);
  CHECK(r.instances[1].checks[0].detail == std::to_string(verify_theorem1(2, 3).instances.size()) + " of " +
                                               std::to_string(verify_theorem1(2, 3).instances.size()) + " instances passed");
}
