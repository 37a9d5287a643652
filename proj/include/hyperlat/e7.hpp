#pragma once

// The E7 root system inside Z^{7,1} (orthogonal complement of
// v_7 = 3e_0 - e_1 - ... - e_7), the tetrahedral diagram T_10 with its
// octagon relations, and the extended diagram T_13 in Z^{6,1}.

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlat/coxdiag.hpp"
#include "hyperlat/lorentz.hpp"
#include "hyperlat/perm_group.hpp"
#include "hyperlat/plane.hpp"

namespace hyperlat {

struct RootSystemE7 {
  std::vector<LatticeVector> roots;   // the 126 roots, sorted
  std::vector<LatticeVector> simple;  // alpha_1..alpha_7 (index 0 holds alpha_1)

  /// Position of a root in `roots`, or -1.
  int index_of(const LatticeVector& r) const;
};

/// v_7 = 3e_0 - e_1 - ... - e_7.
LatticeVector weyl_vector_n7();

/// Exhaustive search over the box |x_i| <= 2, which contains every norm 2
/// vector orthogonal to v_7. Simple roots: alpha_i = e_i - e_{i+1} for
/// i = 1..6 and alpha_7 = e_0 - e_1 - e_2 - e_3, so that 1-2-3-4-5-6 is a
/// path with 7 attached to 3.
RootSystemE7 e7_roots();

/// alpha_0..alpha_9 of T_10: alpha_1..alpha_7 simple, alpha_0 the negative
/// highest root, alpha_8 and alpha_9 two further roots.
std::vector<LatticeVector> t10_vectors(const RootSystemE7& e7);

/// The tetrahedral graph T_10: Ẽ_7 path 0-1-2-3-4-5-6 with 7 on 3, plus
/// 8-0, 8-7, 8-6, 1-9, 9-5.
Graph t10_graph();

/// Gram pattern of the T_10 vectors: 2 on the diagonal, 0 off the graph,
/// -1 on edges except +1 on the returned pairs.
struct T10Pattern {
  bool pattern_holds = false;
  std::vector<std::pair<int, int>> positive_pairs;
  std::vector<std::string> violations;
};
T10Pattern t10_gram_pattern(std::span<const LatticeVector> vectors, const Graph& g);

/// Induced chordless 8-cycles of g, each listed in cyclic order starting at
/// its smallest node and continuing to the smaller neighbour.
std::vector<std::vector<int>> free_octagons(const Graph& g);

/// x -> x - 2 (x, alpha) alpha / (alpha, alpha) as an integer matrix.
IntMatrix reflection_matrix(const LatticeVector& alpha);
IntMatrix word_matrix(std::span<const LatticeVector> vectors, std::span<const int> word);

/// The three octagon relations, in the order of the omitted midpoint pairs
/// {0,4}, {2,6}, {7,9}.
const std::vector<std::vector<int>>& deflation_words();

struct DeflationResult {
  std::vector<int> word;
  bool identity = false;
  int order = 0;  // multiplicative order of the product (0 if above 64)
};

struct DeflationReport {
  /// The three products around the octagons, as words of length 8.
  std::vector<DeflationResult> relations;
  /// Every rotation and both directions around every octagon.
  bool all_rotations_identity = false;
  /// x_1 x_2 ... x_8 x_7 ... x_2 = 1 for every starting node x_1 of every
  /// octagon: the reflections in x_1 and in the sum of the other seven
  /// roots coincide.
  bool translation_form_identity = false;
  bool all_pass() const;
};

DeflationReport deflation_check(std::span<const LatticeVector> vectors, const std::vector<std::vector<int>>& octagons);

struct EliminatedWord {
  int generator = 0;
  std::vector<int> word;
  bool holds = false;
};
/// s_9, s_8, s_0 as words in s_1..s_7 obtained by solving the three octagon
/// words (read as relations) for s_9, then s_8, then s_0.
std::vector<EliminatedWord> word_elimination(std::span<const LatticeVector> vectors);
/// s_9, s_8, s_0 as conjugates w s_j w^-1 of simple reflections, with w a
/// word in s_1..s_7 carrying alpha_j to +-alpha_x.
std::vector<EliminatedWord> conjugation_words(const RootSystemE7& e7, std::span<const LatticeVector> vectors);

/// Action of the reflection in `alpha` on the listed roots.
Permutation root_permutation(const LatticeVector& alpha, const RootSystemE7& e7);

struct E7Orders {
  Integer simple_order;  // <s_1..s_7>
  Integer all_order;     // <s_0..s_9>
  bool faithful = false; // roots span the orthogonal complement of v_7
  bool matrices_agree = false;  // permutations are induced by the matrices
};
E7Orders e7_group_orders(const RootSystemE7& e7, std::span<const LatticeVector> vectors);

/// T_13 built from the Fano chamber: a point a, the three lines b_i through
/// it, and roots b_i + e_a projected to e_a^perp = Z^{6,1}.
struct T13Construction {
  std::vector<LatticeVector> roots;  // 13 roots in Z^{6,1}
  std::vector<std::string> names;
  GramDiagram diagram;
  std::vector<std::string> gram_violations;
  /// Plain graph: the I_14 edges among the 10 kept nodes plus b_i' edges.
  Graph graph{13};
};
T13Construction t13_construction();

struct SymmetryReport {
  Integer t10_order;
  Integer t13_order;
  bool octagons_invariant = false;
};
SymmetryReport s4_symmetry_check();

}  // namespace hyperlat
