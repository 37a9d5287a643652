#pragma once

// Simple roots of the reflection groups of Z^{7,1} and Z^{13,1}, the chamber
// D they bound, the Gosset chamber G for n = 7, and the reduction of
// vertices of P into D.

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlat/lorentz.hpp"
#include "hyperlat/polytope.hpp"

namespace hyperlat {

/// alpha_0 = e_0 - e_1 - e_2 - e_3, alpha_i = e_i - e_{i+1} (1 <= i < n),
/// alpha_n = e_n and, for n = 13, alpha_14 = 3e_0 - e_1 - ... - e_11.
struct SimpleRootSystem {
  int n = 0;
  std::vector<LatticeVector> roots;
};

SimpleRootSystem gamma_simple_roots(int n);
/// Deviations of the Gram matrix from the expected diagram: path 1..n with
/// node 0 on node 3 and, for n = 13, node 14 on node 11.
std::vector<std::string> diagram_violations(const SimpleRootSystem& s);

/// The 56 norm 1 roots e_p, e_0-e_p-e_q, 2e_0-sum e+e_p+e_q, 3e_0-sum e-e_p
/// of Z^{7,1}, in that order.
std::vector<LatticeVector> gosset_walls_n7();

bool in_D(const LatticeVector& x, int n);
bool in_G7(const LatticeVector& x);

/// Extremal rays of D for n = 7, where D is a simplex: the kernel vector of
/// all simple roots but one. Throws std::invalid_argument for other n.
std::vector<LatticeVector> chamber_D_extremals(int n);

/// Compact form of a vector x = x_0 e_0 - sum c_p e_p: x_0 followed by the
/// nonzero c_p with multiplicities, largest first, e.g. "42^31^4". Values
/// outside 0..9 are parenthesized: "(10)1^3".
struct SignatureString {
  Integer x0;
  std::vector<std::pair<Integer, int>> parts;  // (value, multiplicity), values descending

  static SignatureString of(const LatticeVector& x);
  std::string render() const;
  /// Inverse of render(). Multiplicities are read so that values strictly
  /// decrease and the multiplicities add up to at most `max_support`;
  /// throws std::invalid_argument when no reading or several readings exist.
  static SignatureString parse(const std::string& text, int max_support = 13);
  bool operator==(const SignatureString&) const = default;
};

struct ReductionStep {
  int index = 0;          // always 0: the sorting moves are not listed
  LatticeVector vector;   // after the reflection, re-sorted
  std::string signature;
};

struct ReductionTrace {
  LatticeVector start;
  LatticeVector endpoint;
  std::vector<ReductionStep> steps;
  std::set<int> indices_used;  // 0 plus the adjacent transpositions used by sorting
  bool endpoint_in_D = false;

  /// Signature of the start followed by the signature after every s_0.
  std::vector<std::string> chain() const;
};

class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sort coefficients descending (adjacent transpositions s_1..s_12), apply
/// s_0 while (x, alpha_0) > 0, repeat. n = 13 only.
ReductionTrace reduce_to_D(const LatticeVector& x);

struct TableRow {
  std::string type_label;
  std::string family;
  std::vector<std::string> chain;
};

/// The 18 reduction chains, one per vertex family, primal before dual.
const std::vector<TableRow>& expected_reduction_table();

struct InclusionCertificate {
  int n = 0;
  bool pass = false;
  std::size_t vertices_checked = 0;
  std::vector<std::string> failures;
  // n = 13
  std::vector<TableRow> table;
  std::vector<std::string> table_diff;
  std::set<int> indices_used;
  std::set<std::string> terminal_signatures;
  std::vector<nlohmann::json> per_vertex;  // filled only on request
  // n = 7
  std::size_t d_extremals_in_P = 0;
};

/// n = 7: every vertex lies in G and every extremal ray of D lies in P.
/// n = 13: every vertex reduces into D with indices in {0..12}; the chains
/// are tabulated by family and compared with expected_reduction_table().
InclusionCertificate verify_inclusion(const ChamberP& c, const VertexCatalog& cat,
                                      const std::vector<CatalogFamily>& families, bool per_vertex = false);

nlohmann::json to_json(const TableRow& r);
nlohmann::json to_json(const ReductionTrace& t);

}  // namespace hyperlat
