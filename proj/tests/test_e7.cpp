#include <doctest.h>

#include <algorithm>
#include <set>

#include "hyperlat/coxdiag.hpp"
#include "hyperlat/e7.hpp"

using namespace hyperlat;

namespace {

const RootSystemE7& e7() {
  static const RootSystemE7 r = e7_roots();
  return r;
}

// Induced subgraphs on 8 nodes that are a single cycle.
std::set<std::set<int>> octagon_sets(const Graph& g) {
  std::set<std::set<int>> out;
  const int n = g.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != 8) continue;
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) nodes.push_back(i);
    bool two_regular = true;
    for (int u : nodes) {
      int d = 0;
      for (int v : nodes) d += g.adjacent(u, v);
      two_regular = two_regular && d == 2;
    }
    if (!two_regular) continue;
    // walk from the first node; a single cycle visits all eight
    int prev = -1, cur = nodes[0], steps = 0;
    do {
      int next = -1;
      for (int v : nodes)
        if (v != prev && g.adjacent(cur, v)) {
          next = v;
          break;
        }
      prev = cur;
      cur = next;
      ++steps;
    } while (cur != nodes[0]);
    if (steps == 8) out.insert(std::set<int>(nodes.begin(), nodes.end()));
  }
  return out;
}

int matrix_order(const IntMatrix& m) {
  const IntMatrix id = IntMatrix::identity(m.rows());
  IntMatrix p = m;
  for (int k = 1; k <= 64; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return 0;
}

}  // namespace

TEST_CASE("E7 roots match a box search") {
  const auto& r = e7();
  CHECK(r.roots.size() == 126);
  const LatticeVector v7 = weyl_vector_n7();
  std::set<LatticeVector> expected;
  LatticeVector x(7);
  // |x_i| <= 3 is wider than the box the library searches
  int total = 1;
  for (int i = 0; i < 8; ++i) total *= 7;
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (std::size_t i = 0; i <= 7; ++i) {
      x[i] = (c % 7) - 3;
      c /= 7;
    }
    if (norm(x) == 2 && inner(x, v7) == 0) expected.insert(x);
  }
  CHECK(std::set<LatticeVector>(r.roots.begin(), r.roots.end()) == expected);
  for (const auto& a : r.simple) CHECK(r.index_of(a) >= 0);
  CHECK(r.index_of(LatticeVector::basis(7, 1)) == -1);

  // the simple roots form E_7: 1-2-3-4-5-6 with 7 on 3
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) {
      const bool edge = (j == i + 1 && j < 6) || (i == 2 && j == 6);
      CHECK(inner(r.simple[i], r.simple[j]) == (edge ? -1 : 0));
    }
}

TEST_CASE("T_10 Gram pattern and octagons") {
  const auto v = t10_vectors(e7());
  CHECK(v.size() == 10);
  for (const auto& a : v) CHECK(e7().index_of(a) >= 0);
  const Graph g = t10_graph();
  const auto p = t10_gram_pattern(v, g);
  CHECK(p.pattern_holds);
  CHECK(p.positive_pairs == std::vector<std::pair<int, int>>{{5, 9}, {7, 8}});

  const auto octs = free_octagons(g);
  CHECK(octs.size() == 3);
  std::set<std::set<int>> found;
  for (const auto& o : octs) {
    CHECK(o.size() == 8);
    CHECK(o.front() == *std::min_element(o.begin(), o.end()));
    for (std::size_t i = 0; i < 8; ++i) CHECK(g.adjacent(o[i], o[(i + 1) % 8]));
    CHECK(o[1] < o[7]);
    found.insert(std::set<int>(o.begin(), o.end()));
  }
  CHECK(found == octagon_sets(g));
}

TEST_CASE("octagon products") {
  const auto v = t10_vectors(e7());
  const auto octs = free_octagons(t10_graph());
  const auto rep = deflation_check(v, octs);
  REQUIRE(rep.relations.size() == 3);
  for (const auto& r : rep.relations) {
    CHECK(r.word.size() == 8);
    CHECK(!r.identity);
    CHECK(r.order == 7);
    CHECK(matrix_order(word_matrix(v, r.word)) == 7);
  }
  CHECK(!rep.all_rotations_identity);
  CHECK(rep.translation_form_identity);
  CHECK(!rep.all_pass());

  // x_1 ... x_8 x_7 ... x_2 from every starting node, multiplied out here
  const IntMatrix id = IntMatrix::identity(8);
  for (const auto& o : octs)
    for (std::size_t k = 0; k < 8; ++k) {
      std::vector<int> word;
      for (std::size_t i = 0; i < 8; ++i) word.push_back(o[(k + i) % 8]);
      for (std::size_t i = 6; i >= 1; --i) word.push_back(o[(k + i) % 8]);
      IntMatrix m = id;
      for (int letter : word) m = m * reflection_matrix(v[static_cast<std::size_t>(letter)]);
      CHECK(m == id);
    }
}

TEST_CASE("eliminating s_9, s_8, s_0") {
  const auto v = t10_vectors(e7());
  const auto literal = word_elimination(v);
  CHECK(literal.size() == 3);
  for (const auto& w : literal) CHECK(!w.holds);

  const auto conj = conjugation_words(e7(), v);
  REQUIRE(conj.size() == 3);
  CHECK(conj[0].generator == 9);
  CHECK(conj[1].generator == 8);
  CHECK(conj[2].generator == 0);
  for (const auto& w : conj) {
    CHECK(w.holds);
    for (int letter : w.word) CHECK((letter >= 1 && letter <= 7));
    CHECK(word_matrix(v, w.word) == reflection_matrix(v[static_cast<std::size_t>(w.generator)]));
  }
}

TEST_CASE("group orders") {
  const auto v = t10_vectors(e7());
  const auto o = e7_group_orders(e7(), v);
  CHECK(o.simple_order == 2903040);
  CHECK(o.all_order == 2903040);
  CHECK(o.faithful);
  CHECK(o.matrices_agree);
  for (const auto& a : v) CHECK(root_permutation(a, e7()).inverse() == root_permutation(a, e7()));
}

TEST_CASE("T_13") {
  const auto t = t13_construction();
  CHECK(t.roots.size() == 13);
  CHECK(t.gram_violations.empty());
  for (const auto& r : t.roots) {
    CHECK(r.n() == 6);
    CHECK((norm(r) == 1 || norm(r) == 2));
  }
  for (std::size_t i = 0; i < 13; ++i)
    for (std::size_t j = 0; j < 13; ++j) {
      const Integer ip = inner(t.roots[i], t.roots[j]);
      CHECK(t.diagram.gram()(i, j) == ip);
      // acute, and adjacent exactly on the plain graph
      if (i != j) CHECK(ip <= 0);
      if (i != j) CHECK((ip != 0) == t.graph.adjacent(static_cast<int>(i), static_cast<int>(j)));
    }
  const auto fv = vinberg_finite_volume(t.diagram);
  CHECK(fv.pass);
  CHECK(fv.lanner.empty());
  CHECK(fv.unextended.empty());
}

TEST_CASE("tetrahedral symmetry") {
  const auto s = s4_symmetry_check();
  CHECK(s.t10_order == 24);
  CHECK(s.t13_order == 24);
  CHECK(s.octagons_invariant);
}
