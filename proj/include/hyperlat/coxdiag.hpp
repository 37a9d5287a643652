#pragma once

// Gram diagrams of root systems: classification of node subsets, enumeration
// of maximal elliptic and parabolic subsets, the finite-volume criterion and
// orbit censuses under diagram symmetries.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlat/lorentz.hpp"
#include "hyperlat/perm_group.hpp"
#include "hyperlat/plane.hpp"

namespace hyperlat {

/// Subset of at most 64 diagram nodes.
using NodeSet = std::uint64_t;

std::vector<int> members(NodeSet s);
NodeSet make_set(std::span<const int> nodes);
inline int set_size(NodeSet s) { return __builtin_popcountll(s); }

class GramDiagram {
 public:
  GramDiagram() = default;
  /// Gram of the given roots; `dim` is taken from the vectors (n+1).
  static GramDiagram from_roots(std::vector<LatticeVector> roots);
  /// Abstract diagram with an explicit integral Gram matrix.
  static GramDiagram from_gram(IntMatrix gram, int dim);

  int size() const noexcept { return static_cast<int>(gram_.rows()); }
  int dim() const noexcept { return dim_; }
  /// Hyperbolic dimension n of a chamber in Z^{n,1}.
  int hyperbolic_dim() const noexcept { return dim_ - 1; }
  const IntMatrix& gram() const noexcept { return gram_; }
  const SymMatrix& sym() const noexcept { return sym_; }
  const std::vector<LatticeVector>& roots() const noexcept { return roots_; }
  const Integer& operator()(int i, int j) const {
    return gram_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  NodeSet neighbours(int i) const { return nbr_[static_cast<std::size_t>(i)]; }
  NodeSet all() const { return size() == 64 ? ~NodeSet{0} : ((NodeSet{1} << size()) - 1); }

  /// All off-diagonal entries are <= 0.
  bool is_acute() const;
  bool is_connected(NodeSet s) const;
  std::vector<NodeSet> components(NodeSet s) const;
  /// Plain graph on the nodes with an edge wherever the Gram entry is nonzero.
  Graph to_graph() const;

 private:
  void init();

  std::vector<LatticeVector> roots_;
  IntMatrix gram_;
  SymMatrix sym_;
  int dim_ = 0;
  std::vector<NodeSet> nbr_;
};

enum class Kind { elliptic, parabolic, lanner, other };
std::string kind_name(Kind k);

struct SubdiagramClass {
  Kind kind = Kind::other;
  int rank = 0;
  Inertia inertia;
  std::string type_label;
};

/// Component label: "A_k" for an induced path on k nodes, "D_4" for the
/// 4-node star, "other" otherwise.
std::string component_label(const GramDiagram& d, NodeSet component);
/// Multiset of component labels rendered as e.g. "4A_1+3A_3".
std::string type_label(const GramDiagram& d, NodeSet s);

SubdiagramClass classify(const GramDiagram& d, NodeSet s);

/// Connected subsets with positive definite Gram, sorted.
std::vector<NodeSet> connected_elliptic(const GramDiagram& d);
/// Connected parabolic subsets, sorted. Requires an acute diagram.
std::vector<NodeSet> connected_parabolic(const GramDiagram& d);

/// All elliptic subsets of the given rank, sorted. Work is split over
/// `threads` workers by the first component; the result does not depend on it.
std::vector<NodeSet> enum_max_elliptic(const GramDiagram& d, int target_rank, int threads = 1);
/// All parabolic subsets of the given rank, sorted. Requires an acute diagram.
std::vector<NodeSet> enum_max_parabolic(const GramDiagram& d, int target_rank, int threads = 1);

/// Lanner subsets (connected, not elliptic, every proper subset elliptic).
std::vector<NodeSet> lanner_subsets(const GramDiagram& d);

struct FiniteVolumeCertificate {
  bool pass = false;
  std::vector<NodeSet> lanner;
  std::size_t connected_parabolic = 0;
  std::size_t maximal_parabolic = 0;
  /// Each connected parabolic subset with a parabolic superset of rank n-1.
  std::vector<std::pair<NodeSet, NodeSet>> extensions;
  std::vector<NodeSet> unextended;
};

/// Vinberg's criterion for an acute chamber diagram.
FiniteVolumeCertificate vinberg_finite_volume(const GramDiagram& d, int threads = 1);

/// True when p preserves the diagram up to rescaling each root: Gram signs
/// and squared cosines are invariant.
bool is_diagram_automorphism(const GramDiagram& d, const Permutation& p);

NodeSet apply(const Permutation& p, NodeSet s);

struct CensusEntry {
  std::string type_label;
  std::size_t count = 0;
  std::size_t orbit_count = 0;
  std::vector<std::size_t> orbit_sizes;
  NodeSet sample = 0;
};

/// Orbits of the subsets under the generated group, grouped by type label.
/// Throws std::invalid_argument if a generator is not a diagram automorphism.
std::vector<CensusEntry> orbit_census(const GramDiagram& d, std::span<const NodeSet> subsets,
                                      std::span<const Permutation> generators);

nlohmann::json to_json(const CensusEntry& e);
nlohmann::json set_to_json(NodeSet s);

}  // namespace hyperlat
