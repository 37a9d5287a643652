#include "hyperlat/e7.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hyperlat {

int RootSystemE7::index_of(const LatticeVector& r) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), r);
  return it != roots.end() && *it == r ? static_cast<int>(it - roots.begin()) : -1;
}

LatticeVector weyl_vector_n7() { return LatticeVector{3, -1, -1, -1, -1, -1, -1, -1}; }

RootSystemE7 e7_roots() {
  // For x orthogonal to v_7 with norm 2: 3x_0 = -sum x_p and sum x_p^2 = 2 + x_0^2.
  // Cauchy-Schwarz gives 9x_0^2 <= 7(2 + x_0^2), so |x_0| <= 2, and then
  // x_p^2 <= 6 forces |x_p| <= 2.
  RootSystemE7 e7;
  std::array<int, 8> x{};
  const auto total = 5 * 5 * 5 * 5 * 5 * 5 * 5 * 5;
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (auto& xi : x) {
      xi = c % 5 - 2;
      c /= 5;
    }
    int sum = 0, sq = 0;
    for (int p = 1; p < 8; ++p) {
      sum += x[static_cast<std::size_t>(p)];
      sq += x[static_cast<std::size_t>(p)] * x[static_cast<std::size_t>(p)];
    }
    if (3 * x[0] != -sum || sq - x[0] * x[0] != 2) continue;
    e7.roots.push_back(LatticeVector{x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7]});
  }
  std::sort(e7.roots.begin(), e7.roots.end());
  for (int i = 1; i <= 6; ++i) {
    LatticeVector a(7);
    a[static_cast<std::size_t>(i)] = 1;
    a[static_cast<std::size_t>(i) + 1] = -1;
    e7.simple.push_back(a);
  }
  e7.simple.push_back(LatticeVector{1, -1, -1, -1, 0, 0, 0, 0});
  return e7;
}

std::vector<LatticeVector> t10_vectors(const RootSystemE7& e7) {
  auto combo = [&](std::array<long, 7> c) {
    LatticeVector v(7);
    for (std::size_t i = 0; i < 7; ++i) v += Integer(c[i]) * e7.simple[i];
    return v;
  };
  std::vector<LatticeVector> out(10);
  out[0] = -combo({2, 3, 4, 3, 2, 1, 2});
  for (std::size_t i = 1; i <= 7; ++i) out[i] = e7.simple[i - 1];
  out[8] = combo({1, 2, 3, 2, 1, 0, 2});
  out[9] = combo({0, 1, 2, 2, 2, 1, 1});
  return out;
}

Graph t10_graph() {
  Graph g(10);
  const int edges[][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7},
                          {8, 0}, {8, 7}, {8, 6}, {1, 9}, {9, 5}};
  for (const auto& e : edges) g.add_edge(e[0], e[1]);
  return g;
}

T10Pattern t10_gram_pattern(std::span<const LatticeVector> vectors, const Graph& g) {
  T10Pattern out;
  const int m = static_cast<int>(vectors.size());
  for (int x = 0; x < m; ++x) {
    if (norm(vectors[static_cast<std::size_t>(x)]) != 2)
      out.violations.push_back("alpha_" + std::to_string(x) + " does not have norm 2");
    for (int y = x + 1; y < m; ++y) {
      const Integer v = inner(vectors[static_cast<std::size_t>(x)], vectors[static_cast<std::size_t>(y)]);
      if (!g.adjacent(x, y)) {
        if (v != 0) out.violations.push_back("disconnected pair {" + std::to_string(x) + "," + std::to_string(y) + "}");
      } else if (v == 1) {
        out.positive_pairs.emplace_back(x, y);
      } else if (v != -1) {
        out.violations.push_back("connected pair {" + std::to_string(x) + "," + std::to_string(y) + "} has " +
                                 v.get_str());
      }
    }
  }
  out.pattern_holds = out.violations.empty();
  return out;
}

std::vector<std::vector<int>> free_octagons(const Graph& g) {
  std::vector<std::vector<int>> out;
  const int n = g.size();
  if (n < 8) return out;
  // All 8-subsets, by the bitmask of included nodes.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != 8) continue;
    bool two_regular = true;
    for (int v = 0; v < n && two_regular; ++v)
      if ((mask >> v) & 1u) two_regular = __builtin_popcountll(g.neighbours(v) & mask) == 2;
    if (!two_regular) continue;
    std::vector<int> cycle{__builtin_ctzll(mask)};
    std::uint64_t nb = g.neighbours(cycle[0]) & mask;
    int next = __builtin_ctzll(nb);
    int prev = cycle[0];
    while (next != cycle[0]) {
      cycle.push_back(next);
      const std::uint64_t cand = g.neighbours(next) & mask & ~(std::uint64_t{1} << prev);
      prev = next;
      next = __builtin_ctzll(cand);
    }
    if (cycle.size() == 8) out.push_back(cycle);
  }
  return out;
}

IntMatrix reflection_matrix(const LatticeVector& alpha) {
  const Integer a2 = norm(alpha);
  if (a2 == 0) throw ZeroNormRoot("reflection_matrix: zero norm root");
  const std::size_t d = alpha.size();
  IntMatrix m = IntMatrix::identity(d);
  for (std::size_t j = 0; j < d; ++j) {
    // Column j is the image of e_j.
    const LatticeVector img = reflect(alpha, LatticeVector::basis(alpha.n(), static_cast<int>(j)));
    for (std::size_t i = 0; i < d; ++i) m(i, j) = img[i];
  }
  return m;
}

IntMatrix word_matrix(std::span<const LatticeVector> vectors, std::span<const int> word) {
  IntMatrix m = IntMatrix::identity(vectors.front().size());
  for (int g : word) m = m * reflection_matrix(vectors[static_cast<std::size_t>(g)]);
  return m;
}

const std::vector<std::vector<int>>& deflation_words() {
  static const std::vector<std::vector<int>> words = {
      {1, 2, 3, 7, 8, 6, 5, 9}, {1, 9, 5, 4, 3, 7, 8, 0}, {1, 2, 3, 4, 5, 6, 8, 0}};
  return words;
}

bool DeflationReport::all_pass() const {
  return all_rotations_identity && !relations.empty() &&
         std::all_of(relations.begin(), relations.end(), [](const DeflationResult& r) { return r.identity; });
}

namespace {

int matrix_order(const IntMatrix& m, int limit = 64) {
  const IntMatrix id = IntMatrix::identity(m.rows());
  IntMatrix p = m;
  for (int k = 1; k <= limit; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return 0;
}

}  // namespace

DeflationReport deflation_check(std::span<const LatticeVector> vectors, const std::vector<std::vector<int>>& octagons) {
  DeflationReport rep;
  const IntMatrix id = IntMatrix::identity(vectors.front().size());
  for (const auto& w : deflation_words()) {
    const IntMatrix m = word_matrix(vectors, w);
    rep.relations.push_back({w, m == id, matrix_order(m)});
  }
  rep.all_rotations_identity = !octagons.empty();
  rep.translation_form_identity = !octagons.empty();
  for (const auto& cyc : octagons)
    for (int dir : {1, -1})
      for (std::size_t start = 0; start < cyc.size(); ++start) {
        std::vector<int> word;
        for (std::size_t k = 0; k < cyc.size(); ++k) {
          const std::size_t step = dir == 1 ? k : cyc.size() - k;
          word.push_back(cyc[(start + step) % cyc.size()]);
        }
        if (word_matrix(vectors, word) != id) rep.all_rotations_identity = false;
        std::vector<int> there_and_back = word;
        for (std::size_t k = word.size() - 2; k >= 1; --k) there_and_back.push_back(word[k]);
        if (word_matrix(vectors, there_and_back) != id) rep.translation_form_identity = false;
      }
  return rep;
}

std::vector<EliminatedWord> word_elimination(std::span<const LatticeVector> vectors) {
  // Third relation: s_8 s_0 = s_6 s_5 s_4 s_3 s_2 s_1.
  // Second relation with that substitution: s_1 s_9 s_5 s_4 s_3 s_7 (s_8 s_0) = 1,
  //   so s_9 = s_1 . reverse(s_5 s_4 s_3 s_7 s_6 s_5 s_4 s_3 s_2 s_1).
  // First relation: s_8 = s_7 s_3 s_2 s_1 s_9 s_5 s_6.
  // Third relation again: s_0 = s_8 s_6 s_5 s_4 s_3 s_2 s_1.
  auto rev = [](std::vector<int> w) {
    std::reverse(w.begin(), w.end());
    return w;
  };
  auto cat = [](std::initializer_list<std::vector<int>> parts) {
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  };
  auto reduce = [](std::vector<int> w) {
    // Cancel adjacent equal involutions.
    std::vector<int> out;
    for (int g : w) {
      if (!out.empty() && out.back() == g)
        out.pop_back();
      else
        out.push_back(g);
    }
    return out;
  };
  const std::vector<int> s80 = rev({1, 2, 3, 4, 5, 6});
  const std::vector<int> s9 = reduce(cat({{1}, rev(cat({{5, 4, 3, 7}, s80}))}));
  const std::vector<int> s8 = reduce(cat({rev({1, 2, 3, 7}), s9, rev({6, 5})}));
  const std::vector<int> s0 = reduce(cat({s8, s80}));

  std::vector<EliminatedWord> out;
  for (const auto& [gen, word] : {std::pair{9, s9}, std::pair{8, s8}, std::pair{0, s0}}) {
    const std::vector<int> single{gen};
    out.push_back({gen, word, word_matrix(vectors, word) == word_matrix(vectors, single)});
  }
  return out;
}

std::vector<EliminatedWord> conjugation_words(const RootSystemE7& e7, std::span<const LatticeVector> vectors) {
  // Breadth-first over the roots reachable from the simple roots; word[r]
  // lists w = s_{i_1} ... s_{i_k} with r = w(alpha_j).
  std::map<LatticeVector, std::pair<std::vector<int>, int>> reach;
  std::vector<LatticeVector> queue;
  for (int j = 1; j <= 7; ++j) {
    reach.emplace(vectors[static_cast<std::size_t>(j)], std::pair{std::vector<int>{}, j});
    queue.push_back(vectors[static_cast<std::size_t>(j)]);
  }
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int i = 1; i <= 7; ++i) {
      LatticeVector r = reflect(vectors[static_cast<std::size_t>(i)], queue[k]);
      if (reach.count(r)) continue;
      auto [w, j] = reach.at(queue[k]);
      w.insert(w.begin(), i);
      reach.emplace(r, std::pair{std::move(w), j});
      queue.push_back(std::move(r));
    }
  (void)e7;
  std::vector<EliminatedWord> out;
  for (int gen : {9, 8, 0}) {
    const LatticeVector& target = vectors[static_cast<std::size_t>(gen)];
    auto it = reach.find(target);
    if (it == reach.end()) it = reach.find(-target);
    EliminatedWord ew{gen, {}, false};
    if (it != reach.end()) {
      const auto& [w, j] = it->second;
      ew.word = w;
      ew.word.push_back(j);
      ew.word.insert(ew.word.end(), w.rbegin(), w.rend());
      const std::vector<int> single{gen};
      ew.holds = word_matrix(vectors, ew.word) == word_matrix(vectors, single);
    }
    out.push_back(std::move(ew));
  }
  return out;
}

Permutation root_permutation(const LatticeVector& alpha, const RootSystemE7& e7) {
  std::vector<int> img;
  img.reserve(e7.roots.size());
  for (const auto& r : e7.roots) {
    const int j = e7.index_of(reflect(alpha, r));
    if (j < 0) throw std::logic_error("root_permutation: reflection does not preserve the roots");
    img.push_back(j);
  }
  return Permutation(std::move(img));
}

E7Orders e7_group_orders(const RootSystemE7& e7, std::span<const LatticeVector> vectors) {
  E7Orders out;
  std::vector<Permutation> simple, all;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Permutation p = root_permutation(vectors[i], e7);
    if (i >= 1 && i <= 7) simple.push_back(p);
    all.push_back(std::move(p));
  }
  out.simple_order = PermGroup(e7.roots.size(), simple).order();
  out.all_order = PermGroup(e7.roots.size(), all).order();

  // Rank of the root matrix: a linear map fixing v_7 and all roots is the identity.
  std::vector<LatticeVector> rows = e7.roots;
  rows.push_back(weyl_vector_n7());
  IntMatrix m(rows.size(), 8);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = rows[i][j];
  IntMatrix gram = m.transpose() * m;  // 8x8, nonsingular iff rank 8
  out.faithful = gram.determinant() != 0;

  out.matrices_agree = true;
  for (const auto& v : vectors) {
    const IntMatrix r = reflection_matrix(v);
    const Permutation p = root_permutation(v, e7);
    for (std::size_t k = 0; k < e7.roots.size(); ++k)
      if (r.apply(e7.roots[k]) != e7.roots[static_cast<std::size_t>(p(static_cast<int>(k)))])
        out.matrices_agree = false;
  }
  return out;
}

T13Construction t13_construction() {
  const ProjectivePlane plane = build_plane(2);
  const int n = plane.size();
  auto point_root = [&](int p) { return LatticeVector::basis(n, p + 1); };
  auto line_root = [&](int l) {
    LatticeVector w = LatticeVector::basis(n, 0);
    for (int p : plane.points_on(l)) w[static_cast<std::size_t>(p) + 1] -= 1;
    return w;
  };

  const int a = 0;
  const auto b = plane.lines_through(a);
  int z = -1;
  for (int l = 0; l < n; ++l)
    if (!plane.incident(a, l)) {
      z = l;
      break;
    }
  std::array<int, 3> c{}, ai{}, d{};
  for (std::size_t i = 0; i < 3; ++i) {
    c[i] = plane.meet(z, b[i]);
    for (int p : plane.points_on(b[i]))
      if (p != a && p != c[i]) ai[i] = p;
    for (int l : plane.lines_through(c[i]))
      if (l != z && l != b[i]) d[i] = l;
  }

  // Drop coordinate a of vectors orthogonal to e_a.
  auto project = [&](const LatticeVector& v) {
    if (v[static_cast<std::size_t>(a) + 1] != 0) throw std::logic_error("t13_construction: vector not orthogonal to e_a");
    std::vector<Integer> coords;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (k != static_cast<std::size_t>(a) + 1) coords.push_back(v[k]);
    return LatticeVector(n - 1, std::move(coords));
  };

  T13Construction t;
  auto add = [&](const std::string& name, const LatticeVector& v) {
    t.names.push_back(name);
    t.roots.push_back(project(v));
  };
  add("z", line_root(z));
  for (std::size_t i = 0; i < 3; ++i) add("d_" + std::to_string(i + 1), line_root(d[i]));
  for (std::size_t i = 0; i < 3; ++i) add("c_" + std::to_string(i + 1), point_root(c[i]));
  for (std::size_t i = 0; i < 3; ++i) add("a_" + std::to_string(i + 1), point_root(ai[i]));
  for (std::size_t i = 0; i < 3; ++i) add("b_" + std::to_string(i + 1) + "'", line_root(b[i]) + point_root(a));
  t.diagram = GramDiagram::from_roots(t.roots);

  // Expected Gram from the plane: node kinds 0..3 lines, 4..9 points, 10..12 b'.
  auto plane_node = [&](int k) -> std::pair<bool, int> {
    if (k == 0) return {true, z};
    if (k <= 3) return {true, d[static_cast<std::size_t>(k - 1)]};
    if (k <= 6) return {false, c[static_cast<std::size_t>(k - 4)]};
    return {false, ai[static_cast<std::size_t>(k - 7)]};
  };
  auto expected = [&](int x, int y) -> long {
    if (x == y) return x <= 3 ? 2 : 1;
    if (x >= 10 && y >= 10) return -1;
    if (x >= 10 || y >= 10) {
      const int bi = (x >= 10 ? x : y) - 10;
      const int other = x >= 10 ? y : x;
      return (other == 4 + bi || other == 7 + bi) ? -1 : 0;
    }
    const auto [lx, ix] = plane_node(x);
    const auto [ly, iy] = plane_node(y);
    if (lx == ly) return 0;
    return lx ? (plane.incident(iy, ix) ? -1 : 0) : (plane.incident(ix, iy) ? -1 : 0);
  };
  for (int x = 0; x < 13; ++x)
    for (int y = x; y < 13; ++y) {
      const long e = expected(x, y);
      if (t.diagram(x, y) != e)
        t.gram_violations.push_back("(" + t.names[static_cast<std::size_t>(x)] + "," +
                                    t.names[static_cast<std::size_t>(y)] + ") = " + t.diagram(x, y).get_str() +
                                    ", expected " + std::to_string(e));
      if (x != y && e != 0) t.graph.add_edge(x, y);
    }
  return t;
}

SymmetryReport s4_symmetry_check() {
  SymmetryReport rep;
  const Graph g = t10_graph();
  const auto aut = graph_automorphism_group(g);
  rep.t10_order = aut.order;
  const auto octs = free_octagons(g);
  std::set<std::uint64_t> oct_sets;
  for (const auto& o : octs) {
    std::uint64_t m = 0;
    for (int v : o) m |= std::uint64_t{1} << v;
    oct_sets.insert(m);
  }
  rep.octagons_invariant = !octs.empty();
  for (const auto& gen : aut.generators)
    for (std::uint64_t m : oct_sets) {
      std::uint64_t img = 0;
      for (int v = 0; v < g.size(); ++v)
        if ((m >> v) & 1u) img |= std::uint64_t{1} << gen(v);
      if (!oct_sets.count(img)) rep.octagons_invariant = false;
    }
  rep.t13_order = graph_automorphism_group(t13_construction().graph).order;
  return rep;
}

}  // namespace hyperlat
