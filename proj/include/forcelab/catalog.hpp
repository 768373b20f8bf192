#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forcelab/graphmap.hpp"
#include "forcelab/reduction.hpp"

namespace forcelab {

/// beta: maps g_{m,n} for beta_{m,n}; sigma: maps h_{m,n} for sigma'_{m,n}.
enum class Family { beta, sigma };

std::string to_string(Family f);
/// Throws ParseError for anything but "beta" or "sigma".
Family parse_family(const std::string& text);

/// The three-puncture line v0 - v1 - v2 with v0 -> v2 -> v1 -> v0,
/// e(0,1) -> e(2,1) e(1,0) and e(1,2) -> e(0,1) e(1,2) e(2,1).
ReducedGraphMap fig5_map();

/// Reduced tree of g_{m,n}: punctures v0..v_{m+n}, q joined to v0..vn,
/// p joined to vn..v_{n+m}, v_i -> v_{i+1}; e(q,n) has a five-edge image,
/// e(p,n+m) a three-edge image, every other edge moves to the next one.
ReducedGraphMap beta_reduced(int m, int n);
/// Reduced tree of h_{m,n} (n >= m+2): with l = n-m-2 and s = m+n+1
/// punctures y0..y_{s-1}, a chain y0 - ... - y_{l+1} - y_{l+m+2} and a star at
/// p with legs to y_{l+2}..y_{l+m+2}, each y_{l+1+j} (1 <= j <= m) carrying an
/// outer edge to y_{l+m+2+j}.
ReducedGraphMap sigma_reduced(int m, int n);
ReducedGraphMap family_reduced(Family f, int m, int n);
/// Full graph map with one peripheral loop per puncture.
GraphMap family_graph_map(Family f, int m, int n);

struct Check {
  std::string id;
  std::string description;
  /// Checks that do not apply, or are informational, never fail an entry.
  bool applicable = true;
  bool passed = false;
  std::string detail;
};

struct CatalogEntry {
  Family family = Family::beta;
  int m = 1;
  int n = 1;
  GraphMap graph_map;
  std::string provenance;
  std::vector<Check> checks;
  bool passed() const;
};

/// Instantiates the parametric table and validates it. Throws
/// InvalidArgument for parameters outside the family's range.
CatalogEntry build_entry(Family f, int m, int n);

/// V1 subdivision pattern of the transition graph, V2 BH certificate,
/// V3 lambda(m,n) = lambda(n,m), V4 paths C and D_{m+2+l} (l <= 2) with
/// regular orbits of the right periods, V5 peripheral edges permuted in a
/// single (m+n+1)-cycle, V6 beta(1,1) against the three-puncture map.
std::vector<Check> validate_entry(const CatalogEntry& e);

/// `beta/m1n2.gm`
/// Contents of the catalog file: a comment naming the entry and its
/// provenance, then the graph map in canonical text form.
std::string entry_file_text(const CatalogEntry& e);

std::string entry_file_name(Family f, int m, int n);
/// Inverse of entry_file_name on the trailing two path components.
std::optional<std::pair<Family, std::pair<int, int>>> parse_entry_file_name(const std::string& path);

struct SearchConstraints {
  /// Arc e(q,n)^4 -> e(p,n) used by path C.
  bool arc_c = false;
  /// Self-loop e(q,n)^3 -> e(q,n)^3 used by path D.
  bool arc_d = false;
};

struct SearchResult {
  long candidates = 0;
  std::vector<GraphMap> completions;
};

/// Beta: every assignment of tight-away-from-punctures image paths of length
/// <= 5 with the V1 subdivision pattern and the V5 vertex map, kept when it
/// passes validate_entry. Sigma: the tree map induced on the hull of the
/// D_{n} orbit of g_{m,1}, kept when it passes validate_entry.
SearchResult reconstruct_search(Family f, int m, int n, SearchConstraints constraints = {});

struct InstanceResult {
  std::string instance;
  std::vector<Check> checks;
  bool passed() const;
};

struct VerificationReport {
  std::string title;
  std::vector<std::pair<std::string, int>> parameters;
  std::vector<InstanceResult> instances;
  bool passed() const;
  /// Stable key order, schema version 1.
  std::string to_json() const;
  std::string to_text() const;
};

/// Theorem 1 consequences: path C and D orbits, and the exact dilatation
/// inequalities for 1 <= m <= m_max, 1 <= n <= n_max (sigma entries with
/// m+2 <= l <= n_max).
VerificationReport verify_theorem1(int m_max, int n_max);
/// Theorem 2 consequences: the embedded shift in g_{1,k}, regular lifts of
/// every primitive code up to code_len_max, and the horseshoe route for
/// sigma'_{m,n} with m+n+1 <= code_len_max.
VerificationReport verify_theorem2(int k_max, int code_len_max, std::size_t budget = 100000);
/// Corollary 3 as a composition: beta(1,1) = s1 s2^-1 with the three-puncture
/// dilatation, minimal over the beta range, and the two theorem reports.
/// The cited period-3 forcing result is listed as an unchecked input.
VerificationReport verify_corollary3(int m_max, int n_max, int code_len_max, std::size_t budget = 100000);

struct DilatationRow {
  int m = 1;
  int n = 1;
  std::string minimal_polynomial;
  std::string decimal;
};

/// beta: 1 <= m, n <= max; sigma: 1 <= m <= max, m+2 <= n <= m+max.
std::vector<DilatationRow> dilatation_table(Family f, int max, int digits = 30);
std::string table_to_text(const std::vector<DilatationRow>& rows);
std::string table_to_json(Family f, const std::vector<DilatationRow>& rows);

/// Completion counts of reconstruct_search for every 1 <= m, n <= max
/// (beta), and whether the shipped table is among the completions.
VerificationReport search_report(int max, SearchConstraints constraints = {});

}  // namespace forcelab
