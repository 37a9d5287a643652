#include <doctest.h>

#include <map>
#include <set>

#include "hyperlat/coxdiag.hpp"
#include "hyperlat/polytope.hpp"
#include "oracles.hpp"

using namespace hyperlat;

namespace {

GramDiagram path(int k) {
  IntMatrix g(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    g(i, i) = 2;
    if (i + 1 < k) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return GramDiagram::from_gram(g, k + 1);
}

GramDiagram from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t n = rows.size();
  IntMatrix g(n, n);
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) g(i, j++) = v;
    ++i;
  }
  return GramDiagram::from_gram(g, static_cast<int>(n));
}

std::set<NodeSet> as_set(const std::vector<NodeSet>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("node sets") {
  const std::vector<int> nodes{0, 3, 5};
  const NodeSet s = make_set(nodes);
  CHECK(s == 0b101001);
  CHECK(members(s) == nodes);
  CHECK(set_size(s) == 3);
}

TEST_CASE("classification of small diagrams") {
  const auto a3 = path(3);
  const auto c = classify(a3, a3.all());
  CHECK(c.kind == Kind::elliptic);
  CHECK(c.rank == 3);
  CHECK(c.type_label == "A_3");

  const auto affine = from_rows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  CHECK(classify(affine, affine.all()).kind == Kind::parabolic);
  CHECK(classify(affine, affine.all()).rank == 2);

  // (3,4,4) triangle with mixed norms: every pair is finite, the whole is not
  const auto tri = from_rows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 1}});
  CHECK(classify(tri, tri.all()).kind == Kind::lanner);
  CHECK(lanner_subsets(tri) == std::vector<NodeSet>{tri.all()});
  CHECK(kind_name(Kind::other) == "indefinite-other");
  CHECK(kind_name(Kind::lanner) == "lanner");

  const auto star = from_rows({{2, -1, -1, -1}, {-1, 2, 0, 0}, {-1, 0, 2, 0}, {-1, 0, 0, 2}});
  CHECK(classify(star, star.all()).type_label == "D_4");
}

TEST_CASE("type labels order components") {
  const auto c = build_chamber(7);
  // the seven point walls are pairwise orthogonal
  CHECK(type_label(c.diagram, (NodeSet{1} << 7) - 1) == "7A_1");
  CHECK(type_label(c.diagram, 0) == "");
}

TEST_CASE("I_14 enumerations agree with exhaustive subset classification") {
  const auto c = build_chamber(7);
  const auto& d = c.diagram;
  const auto& g = d.gram();
  CHECK(d.is_acute());
  std::set<NodeSet> elliptic7, parabolic6, connected_par, connected_ell, lanner;
  for (NodeSet s = 1; s < (NodeSet{1} << 14); ++s) {
    const bool ell = oracle::elliptic(g, s);
    const bool conn = oracle::components(g, s).size() == 1;
    if (ell && set_size(s) == 7) elliptic7.insert(s);
    if (ell && conn) connected_ell.insert(s);
    if (oracle::parabolic(g, s)) {
      const int rank = set_size(s) - static_cast<int>(oracle::components(g, s).size());
      if (rank == 6) parabolic6.insert(s);
      if (conn) connected_par.insert(s);
    }
    if (conn && !ell) {
      bool minimal = true;
      for (int v : members(s))
        if (!oracle::elliptic(g, s & ~(NodeSet{1} << v))) minimal = false;
      if (minimal && !oracle::parabolic(g, s)) lanner.insert(s);
    }
  }
  CHECK(elliptic7.size() == 58);
  CHECK(parabolic6.size() == 14);
  CHECK(connected_par.size() == 42);
  CHECK(as_set(enum_max_elliptic(d, 7)) == elliptic7);
  CHECK(as_set(enum_max_elliptic(d, 7, 4)) == elliptic7);
  CHECK(as_set(enum_max_parabolic(d, 6)) == parabolic6);
  CHECK(as_set(connected_parabolic(d)) == connected_par);
  CHECK(as_set(connected_elliptic(d)) == connected_ell);
  CHECK(as_set(lanner_subsets(d)) == lanner);
  CHECK(lanner.empty());

  std::map<std::string, int> types;
  for (auto s : elliptic7) ++types[type_label(d, s)];
  CHECK(types == std::map<std::string, int>{{"7A_1", 2}, {"A_1+3A_2", 56}});
  for (auto s : parabolic6) CHECK(type_label(d, s) == "3A_3");

  const auto fv = vinberg_finite_volume(d);
  CHECK(fv.pass);
  CHECK(fv.maximal_parabolic == 14);
  CHECK(fv.connected_parabolic == 42);
  CHECK(fv.unextended.empty());
}

TEST_CASE("orbit census against brute-force orbits") {
  const auto c = build_chamber(7);
  const auto aut = graph_automorphism_group(incidence_graph(c.plane).graph);
  for (const auto& p : aut.generators) CHECK(is_diagram_automorphism(c.diagram, p));
  const auto subsets = enum_max_elliptic(c.diagram, 7);
  const auto census = orbit_census(c.diagram, subsets, aut.generators);

  // orbits by closure under the generators
  std::set<NodeSet> seen;
  std::map<std::string, std::size_t> orbits;
  for (auto s : subsets) {
    if (seen.count(s)) continue;
    ++orbits[type_label(c.diagram, s)];
    std::vector<NodeSet> queue{s};
    seen.insert(s);
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& p : aut.generators) {
        NodeSet t = 0;
        for (int v : members(queue[k])) t |= NodeSet{1} << p(v);
        if (seen.insert(t).second) queue.push_back(t);
      }
  }
  for (const auto& e : census) CHECK(e.orbit_count == orbits[e.type_label]);
  CHECK(census.size() == orbits.size());
  CHECK(orbit_census(c.diagram, {}, aut.generators).empty());

  const std::vector<int> bad{1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
  // swapping two points while fixing every line breaks incidences
  CHECK(!is_diagram_automorphism(c.diagram, Permutation(bad)));
}
