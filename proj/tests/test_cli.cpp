#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "forcelab/catalog.hpp"
#include "forcelab/cli.hpp"
#include "forcelab/graphmap_io.hpp"

using namespace forcelab;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = dispatch(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

const std::string kCatalog = std::string(FORCELAB_SOURCE_DIR) + "/catalog";

}  // namespace

TEST_CASE("bh-check on the first catalog entry") {
  Run r = run({"bh-check", kCatalog + "/beta/m1n1.gm"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "pseudo-Anosov, λ minimal poly x^2-3x+1");
  CHECK(r.out.find("2.61803398874989484820458683436563811772030917980576") != std::string::npos);

  Run piped = run({"bh-check", "-"}, write_graph_map(family_graph_map(Family::beta, 1, 1)));
  CHECK(piped.code == 0);
  CHECK(first_line(piped.out) == first_line(r.out));
}

TEST_CASE("bh-check reports uncertified maps with exit code 1") {
  GraphMap gm = family_graph_map(Family::beta, 1, 1);
  gm.edge_image[0].push_back(gm.edge_image[0].back().reverse());
  gm.edge_image[0].push_back(gm.edge_image[0][gm.edge_image[0].size() - 2]);
  Run r = run({"bh-check", "-"}, write_graph_map(gm));
  CHECK(r.code == 1);
  CHECK(first_line(r.out) == "not certified pseudo-Anosov");
}

TEST_CASE("code2braid output feeds bt-eq") {
  Run braid = run({"code2braid", "10010"});
  REQUIRE(braid.code == 0);
  Run eq = run({"bt-eq", "-", "B5: s1 s2 s3 s4 s1 s2"}, braid.out);
  CHECK(eq.code == 0);
  CHECK(first_line(eq.out) == "equal");
  Run ne = run({"conj", "B3: s1", "B3: s1^-1"});
  CHECK(first_line(ne.out) == "not-equal");
}

TEST_CASE("verify subcommands") {
  Run t1 = run({"verify", "thm1", "--m-max", "2", "--n-max", "3"});
  CHECK(t1.code == 0);
  CHECK(t1.out.find("verdict: all checks passed") != std::string::npos);
  Run t2 = run({"--json", "verify", "thm2", "--k-max", "1", "--code-len", "5"});
  CHECK(t2.code == 0);
  auto j = nlohmann::json::parse(t2.out);
  CHECK(j["passed"] == true);
  CHECK(j["schema"] == 1);
}

TEST_CASE("usage errors exit with code 2 and name the flag") {
  Run r = run({"table", "beta", "--bogus"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--bogus") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"table", "gamma"}).code == 2);
  CHECK(run({"nf", "B3: s7"}).code == 2);
  CHECK(run({"bh-check", "/nonexistent.gm"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("precision comes from the environment") {
  setenv("FORCELAB_PRECISION", "10", 1);
  Run r = run({"table", "beta", "--max", "1"});
  CHECK(r.out.find("2.6180339887\n") != std::string::npos);
  setenv("FORCELAB_PRECISION", "ten", 1);
  CHECK(run({"table", "beta", "--max", "1"}).code == 2);
  unsetenv("FORCELAB_PRECISION");
  CHECK(run({"table", "beta", "--max", "1"}).out.find("2.618033988749894848204586834366") != std::string::npos);
}

TEST_CASE("graph subcommands") {
  const std::string text = write_graph_map(family_graph_map(Family::beta, 1, 1));
  Run reduced = run({"reduce", "-"}, text);
  CHECK(reduced.code == 0);
  CHECK(reduced.out == write_graph_map(beta_reduced(1, 1).map()));

  Run xg = run({"xgraph", "-"}, text);
  CHECK(xg.code == 0);
  CHECK(xg.out.find("e(q,1)^4 -> e(p,1)") != std::string::npos);
  CHECK(xg.out.find("adjacency 10") != std::string::npos);

  Run orbit = run({"orbit", "-", "--path", "e(q,0),e(q,1)^4,e(p,1),e(p,2)^3"}, text);
  CHECK(orbit.code == 0);
  CHECK(first_line(orbit.out) == "period 4, symbolic period 4, regular");

  Run missing = run({"orbit", "-", "--path", "e(q,0),e(p,1)"}, text);
  CHECK(missing.code == 2);

  Run cycles = run({"--json", "cycles", "-", "--max-len", "3"}, text);
  auto j = nlohmann::json::parse(cycles.out);
  CHECK(j["max_len"] == 3);
  CHECK(!j["cycles"].empty());
}

TEST_CASE("horseshoe subcommands") {
  Run orbit = run({"code-orbit", "1"});
  CHECK(orbit.out == "0 1 3/4 3/4\n");
  Run nf = run({"--json", "nf", "B3: s1 s2 s1"});
  auto j = nlohmann::json::parse(nf.out);
  CHECK(j["infimum"] == 1);
  CHECK(j["factors"].empty());
}

TEST_CASE("catalog subcommands") {
  Run v = run({"catalog", "validate", kCatalog});
  CHECK(v.code == 0);
  Run s = run({"catalog", "search", "--max", "2"});
  CHECK(s.code == 0);
  CHECK(s.out.find("beta(2,2)") != std::string::npos);
  CHECK(s.out.find("completions") != std::string::npos);
}
