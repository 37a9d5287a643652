#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "hyperlat/polytope.hpp"

using namespace hyperlat;

namespace {

std::vector<std::pair<NodeSet, LatticeVector>> flatten(const VertexCatalog& cat) {
  std::vector<std::pair<NodeSet, LatticeVector>> out;
  for (const auto& v : cat.vertices) out.emplace_back(v.subset, v.vertex);
  return out;
}

const VertexCatalog& catalog13() {
  static const VertexCatalog cat = all_vertices(build_chamber(13));
  return cat;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("hyperlat-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("chamber walls and Gram relations") {
  const auto c7 = build_chamber(7);
  CHECK(c7.walls.size() == 14);
  std::set<long> entries;
  for (std::size_t i = 0; i < 14; ++i)
    for (std::size_t j = 0; j < 14; ++j) entries.insert(c7.diagram.gram()(i, j).get_si());
  CHECK(entries == std::set<long>{-1, 0, 1, 2});
  CHECK(gram_relation_violations(c7).empty());

  const auto c13 = build_chamber(13);
  CHECK(c13.walls.size() == 26);
  for (int l = 0; l < 13; ++l) {
    CHECK(norm(c13.line_root(l)) == 3);
    CHECK(c13.line_root(l)[0] == 1);
  }
  for (int p = 0; p < 13; ++p)
    for (int l = 0; l < 13; ++l) CHECK(inner(c13.point_root(p), c13.line_root(l)) == (c13.plane.incident(p, l) ? -1 : 0));
  CHECK_THROWS(build_chamber(5));
}

TEST_CASE("n = 7 vertices") {
  const auto c = build_chamber(7);
  const auto cat = all_vertices(c);
  CHECK(cat.count(VertexStatus::actual) == 58);
  CHECK(cat.count(VertexStatus::ideal) == 14);
  CHECK(cat.anomalies.empty());
  for (const auto& v : cat.vertices) {
    CHECK(verify_certificate(c, v));
    CHECK(c.contains(v.vertex));
    CHECK(v.vertex.is_primitive());
    CHECK(v.vertex[0] > 0);
    if (v.status == VertexStatus::actual) CHECK(norm(v.vertex) < 0);
    else CHECK(norm(v.vertex) == 0);
    for (int w : members(v.subset)) CHECK(inner(v.vertex, c.walls[static_cast<std::size_t>(w)]) == 0);
  }
  CHECK(cat.find(LatticeVector{3, -1, -1, -1, -1, -1, -1, -1}).has_value());
  CHECK(cat.find(LatticeVector{1, 0, 0, 0, 0, 0, 0, 0}).has_value());
  CHECK(flatten(all_vertices(c, 3)) == flatten(cat));

  auto tampered = cat.vertices.front();
  tampered.vertex[0] += 1;
  CHECK(!verify_certificate(c, tampered));
}

TEST_CASE("n = 7 closed-form families and duality") {
  const auto c = build_chamber(7);
  const auto cat = all_vertices(c);
  const auto fams = vertex_families(c);
  std::map<std::string, std::size_t> sizes;
  for (const auto& f : fams) sizes[f.name] = f.members.size();
  CHECK(sizes == std::map<std::string, std::size_t>{{"u_l", 7}, {"u_p", 7}, {"v_L", 1}, {"v_P", 1}, {"v_{l,p}", 28}, {"v_{p,l}", 28}});
  const auto m = match_catalog(cat, fams);
  CHECK(m.complete());

  // v_{p,l} = 2e_0 - sum of e_q over q off l and q != p
  for (int p = 0; p < 7; ++p)
    for (int l = 0; l < 7; ++l) {
      if (c.plane.incident(p, l)) continue;
      LatticeVector v = 2 * LatticeVector::basis(7, 0);
      for (int q = 0; q < 7; ++q)
        if (q != p && !c.plane.incident(q, l)) v -= LatticeVector::basis(7, q + 1);
      CHECK(cat.find(v).has_value());
    }

  const IntMatrix a = duality_matrix(c, standard_polarity(c.plane));
  const IntMatrix j = lorentz_form(7);
  IntMatrix two_j = j;
  for (std::size_t i = 0; i < 8; ++i) two_j(i, i) *= 2;
  CHECK(a.transpose() * j * a == two_j);
  const auto d = check_duality(c, standard_polarity(c.plane), cat, fams);
  CHECK(d.form_scaled);
  CHECK(d.square_scalar);
  CHECK(d.permutes_vertices);
  CHECK(d.swaps_families);
}

TEST_CASE("n = 13 catalog") {
  const auto c = build_chamber(13);
  const auto& cat = catalog13();
  CHECK(cat.count(VertexStatus::ideal) == 494);
  CHECK(cat.anomalies.empty());

  // general-position quadruples by a direct collinearity test
  const auto& pts = c.plane.points();
  auto collinear = [&](int a, int b, int e) {
    const auto &x = pts[a], &y = pts[b], &z = pts[e];
    const int det = x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) + x[2] * (y[0] * z[1] - y[1] * z[0]);
    return det % 3 == 0;
  };
  int quads = 0;
  for (int a = 0; a < 13; ++a)
    for (int b = a + 1; b < 13; ++b)
      for (int e = b + 1; e < 13; ++e)
        for (int f = e + 1; f < 13; ++f)
          if (!collinear(a, b, e) && !collinear(a, b, f) && !collinear(a, e, f) && !collinear(b, e, f)) {
            ++quads;
            LatticeVector u = 2 * LatticeVector::basis(13, 0);
            for (int p : {a, b, e, f}) u -= LatticeVector::basis(13, p + 1);
            CHECK(cat.find(u).has_value());
          }
  CHECK(quads == 234);
  for (int p = 0; p < 13; ++p) CHECK(cat.find(LatticeVector::basis(13, 0) - LatticeVector::basis(13, p + 1)).has_value());

  std::map<std::string, std::size_t> ideal_types;
  for (const auto& v : cat.vertices)
    if (v.status == VertexStatus::ideal) ++ideal_types[v.type_label];
  CHECK(ideal_types == std::map<std::string, std::size_t>{{"3A_5", 468}, {"4D_4", 26}});

  const auto fams = vertex_families(c);
  CHECK(fams.size() == 18);
  std::size_t actual = 0;
  for (const auto& f : fams)
    if (f.status == VertexStatus::actual) actual += f.members.size();
  CHECK(cat.count(VertexStatus::actual) == actual);
  CHECK(match_catalog(cat, fams).complete());

  const IntMatrix a = duality_matrix(c, standard_polarity(c.plane));
  LatticeVector col(13);
  for (std::size_t i = 0; i < 14; ++i) col[i] = a(i, 0);
  CHECK(col == LatticeVector{4, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1});
  const auto d = check_duality(c, standard_polarity(c.plane), cat, fams);
  CHECK(d.form_scaled);
  CHECK(d.permutes_vertices);
  CHECK(d.swaps_families);
}

TEST_CASE("vertex enumeration does not depend on the thread count") {
  const auto c = build_chamber(13);
  CHECK(flatten(all_vertices(c, 4)) == flatten(catalog13()));
}

TEST_CASE("catalog cache") {
  const auto c = build_chamber(7);
  const auto dir = scratch_dir("cache");
  bool hit = true;
  const auto first = cached_vertices(c, dir, 1, &hit);
  CHECK(!hit);
  const auto second = cached_vertices(c, dir, 1, &hit);
  CHECK(hit);
  CHECK(flatten(first) == flatten(second));
  CHECK(catalog_cache_key(c) != catalog_cache_key(build_chamber(13)));

  // a tampered vertex makes the cache stale
  const auto file = dir / ("vertices-" + catalog_cache_key(c) + ".json");
  nlohmann::json j;
  std::ifstream(file) >> j;
  CHECK(catalog_from_json(c, j).has_value());
  j["vertices"][0]["vertex"][0] = 99;
  CHECK(!catalog_from_json(c, j).has_value());
  std::ofstream(file) << j.dump();
  const auto third = cached_vertices(c, dir, 1, &hit);
  CHECK(!hit);
  CHECK(flatten(third) == flatten(first));
  std::filesystem::remove_all(dir);
}
