#pragma once

// The chambers P in Z^{7,1} and Z^{13,1} bounded by the walls e_p (points)
// and e_l = e_0 - sum_{p in l} e_p (lines) of PG(2,q), their vertices, the
// closed-form vertex families and the point/line duality.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlat/coxdiag.hpp"
#include "hyperlat/lorentz.hpp"
#include "hyperlat/plane.hpp"

namespace hyperlat {

inline constexpr const char* kToolkitVersion = "hyperlat-0.1.0";

class GramRelationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Walls 0..N-1 are the point roots e_p, walls N..2N-1 the line roots e_l.
struct ChamberP {
  int n = 0;
  int q = 0;
  ProjectivePlane plane;
  std::vector<LatticeVector> walls;
  GramDiagram diagram;

  int points() const { return plane.size(); }
  LatticeVector point_root(int p) const { return walls[static_cast<std::size_t>(p)]; }
  LatticeVector line_root(int l) const { return walls[static_cast<std::size_t>(points() + l)]; }
  /// True when (x, w) <= 0 for every wall.
  bool contains(const LatticeVector& x) const;
};

/// n = 7 or 13, from the canonical plane. Throws GramRelationError if the
/// walls do not have the expected inner products.
ChamberP build_chamber(int n);
/// Chamber of an arbitrary (possibly corrupted) plane; the Gram relations
/// are checked against the plane's own incidences.
ChamberP build_chamber(const ProjectivePlane& plane);

/// Names of violated Gram relations (empty when all hold).
std::vector<std::string> gram_relation_violations(const ChamberP& c);

enum class VertexStatus { actual, ideal };

struct VertexCertificate {
  NodeSet subset = 0;
  LatticeVector vertex;
  VertexStatus status = VertexStatus::actual;
  std::string type_label;
};

struct VertexCatalog {
  std::vector<VertexCertificate> vertices;  // actual first, each part sorted by subset
  /// Candidate subsets discarded: kernel not one dimensional or a wall
  /// inequality violated.
  std::vector<NodeSet> anomalies;

  std::size_t count(VertexStatus s) const;
  std::optional<std::size_t> find(const LatticeVector& primitive_vertex) const;
};

VertexCatalog all_vertices(const ChamberP& c, int threads = 1);

/// Re-checks one certificate against the chamber: subset class and rank,
/// kernel orthogonality, primitivity, orientation and all wall inequalities.
bool verify_certificate(const ChamberP& c, const VertexCertificate& v);

struct CatalogFamily {
  std::string name;
  VertexStatus status = VertexStatus::actual;
  /// Name of the family exchanged with this one by the duality.
  std::string dual;
  std::vector<LatticeVector> members;  // primitive, sorted, distinct
};

/// Closed-form vertex families for n = 7 or n = 13.
std::vector<CatalogFamily> vertex_families(const ChamberP& c);

struct FamilyMatch {
  std::string name;
  std::size_t generated = 0;
  std::size_t matched = 0;
  std::vector<LatticeVector> unmatched;  // generated but not a computed vertex
  std::vector<std::string> type_labels;  // labels of the matched vertices
};

struct CatalogMatch {
  std::vector<FamilyMatch> families;
  /// Computed vertices not produced by any family.
  std::vector<LatticeVector> uncovered;
  bool complete() const;
};

CatalogMatch match_catalog(const VertexCatalog& computed, const std::vector<CatalogFamily>& families);

/// e_0 -> primitive v_L, e_p -> e_{pol(p)}.
IntMatrix duality_matrix(const ChamberP& c, const Polarity& pol);

struct DualityReport {
  bool form_scaled = false;     // A^T J A = q J
  bool square_scalar = false;   // A^2 = q I
  bool permutes_vertices = false;
  bool swaps_families = false;
  std::vector<std::string> problems;
};

DualityReport check_duality(const ChamberP& c, const Polarity& pol, const VertexCatalog& computed,
                            const std::vector<CatalogFamily>& families);

/// Value sets of one family of walls of the Gosset chamber on a vertex family.
struct ValueRow {
  std::string wall_family;
  std::vector<long> actual_values;
  std::vector<long> ideal_values;
};

struct ValueTable {
  std::vector<ValueRow> rows;
  std::vector<long> weyl_values;  // values on 3e_0 - e_1 - ... - e_7
};

/// Values of the four Gosset wall families on 3e_0 - 2e_p - sum_{q in l} e_q
/// and on 2e_0 - sum_{p not in l} e_p over all non-incident (p, l).
ValueTable value_table_n7(const ChamberP& c, std::span<const LatticeVector> gosset_walls);

/// Catalog cache, keyed by n, a hash of the walls and the toolkit version.
std::string catalog_cache_key(const ChamberP& c);
nlohmann::json catalog_to_json(const ChamberP& c, const VertexCatalog& cat);
/// Returns the catalog only if the key matches and every certificate
/// re-verifies.
std::optional<VertexCatalog> catalog_from_json(const ChamberP& c, const nlohmann::json& j);
/// Loads from `dir` when a valid cache exists, otherwise computes and writes.
VertexCatalog cached_vertices(const ChamberP& c, const std::optional<std::filesystem::path>& dir, int threads,
                              bool* from_cache = nullptr);

std::string status_name(VertexStatus s);

}  // namespace hyperlat
