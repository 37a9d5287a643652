#include "hyperlat/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace hyperlat {

bool ChamberP::contains(const LatticeVector& x) const {
  return std::all_of(walls.begin(), walls.end(), [&](const LatticeVector& w) { return inner(x, w) <= 0; });
}

ChamberP build_chamber(const ProjectivePlane& plane) {
  ChamberP c;
  c.q = plane.order();
  c.n = plane.size();
  c.plane = plane;
  for (int p = 0; p < c.n; ++p) c.walls.push_back(LatticeVector::basis(c.n, p + 1));
  for (int l = 0; l < c.n; ++l) {
    LatticeVector w = LatticeVector::basis(c.n, 0);
    for (int p : plane.points_on(l)) w[static_cast<std::size_t>(p) + 1] -= 1;
    c.walls.push_back(std::move(w));
  }
  c.diagram = GramDiagram::from_roots(c.walls);
  return c;
}

ChamberP build_chamber(int n) {
  if (n != 7 && n != 13) throw std::invalid_argument("build_chamber: n must be 7 or 13");
  ChamberP c = build_chamber(build_plane(n == 7 ? 2 : 3));
  const auto bad = gram_relation_violations(c);
  if (!bad.empty()) throw GramRelationError("build_chamber: " + bad.front());
  return c;
}

std::vector<std::string> gram_relation_violations(const ChamberP& c) {
  std::vector<std::string> out;
  const int N = c.points();
  for (int i = 0; i < 2 * N; ++i)
    for (int j = i; j < 2 * N; ++j) {
      long expected = 0;
      if (i < N && j < N)
        expected = i == j ? 1 : 0;
      else if (i >= N && j >= N)
        expected = i == j ? c.q : 0;
      else
        expected = c.plane.incident(i, j - N) ? -1 : 0;
      if (c.diagram(i, j) != expected)
        out.push_back("wall pair (" + std::to_string(i) + "," + std::to_string(j) + ") has product " +
                      c.diagram(i, j).get_str() + ", expected " + std::to_string(expected));
    }
  return out;
}

std::string status_name(VertexStatus s) { return s == VertexStatus::actual ? "actual" : "ideal"; }

std::size_t VertexCatalog::count(VertexStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(vertices.begin(), vertices.end(), [s](const VertexCertificate& v) { return v.status == s; }));
}

std::optional<std::size_t> VertexCatalog::find(const LatticeVector& primitive_vertex) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].vertex == primitive_vertex) return i;
  return std::nullopt;
}

namespace {

std::vector<LatticeVector> rows_of(const ChamberP& c, NodeSet s) {
  std::vector<LatticeVector> rows;
  for (int v : members(s)) rows.push_back(c.walls[static_cast<std::size_t>(v)]);
  return rows;
}

std::optional<VertexCertificate> certify(const ChamberP& c, NodeSet s, VertexStatus status) {
  VertexCertificate cert;
  cert.subset = s;
  cert.status = status;
  cert.type_label = type_label(c.diagram, s);
  try {
    cert.vertex = solve_primitive_kernel(rows_of(c, s), c.n);
  } catch (const KernelDimensionError&) {
    return std::nullopt;
  }
  const Integer nv = norm(cert.vertex);
  if (status == VertexStatus::actual ? nv >= 0 : nv != 0) return std::nullopt;
  if (!c.contains(cert.vertex)) return std::nullopt;
  return cert;
}

void certify_all(const ChamberP& c, const std::vector<NodeSet>& subsets, VertexStatus status, int threads,
                 VertexCatalog& out) {
  std::vector<std::optional<VertexCertificate>> results(subsets.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < subsets.size();) results[i] = certify(c, subsets[i], status);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::set<LatticeVector> seen;
  for (const auto& v : out.vertices) seen.insert(v.vertex);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (!results[i]) {
      out.anomalies.push_back(subsets[i]);
      continue;
    }
    if (seen.insert(results[i]->vertex).second) out.vertices.push_back(std::move(*results[i]));
  }
}

}  // namespace

VertexCatalog all_vertices(const ChamberP& c, int threads) {
  VertexCatalog cat;
  certify_all(c, enum_max_elliptic(c.diagram, c.n, threads), VertexStatus::actual, threads, cat);
  certify_all(c, enum_max_parabolic(c.diagram, c.n - 1, threads), VertexStatus::ideal, threads, cat);
  return cat;
}

bool verify_certificate(const ChamberP& c, const VertexCertificate& v) {
  if (v.vertex.n() != c.n || !v.vertex.is_primitive() || v.vertex[0] <= 0) return false;
  if ((v.subset & ~c.diagram.all()) != 0 || v.subset == 0) return false;
  const SubdiagramClass cls = classify(c.diagram, v.subset);
  if (v.status == VertexStatus::actual) {
    if (cls.kind != Kind::elliptic || cls.rank != c.n || norm(v.vertex) >= 0) return false;
  } else {
    if (cls.kind != Kind::parabolic || cls.rank != c.n - 1 || norm(v.vertex) != 0) return false;
  }
  if (cls.type_label != v.type_label) return false;
  for (const auto& r : rows_of(c, v.subset))
    if (inner(r, v.vertex) != 0) return false;
  return c.contains(v.vertex);
}

namespace {

class VectorBuilder {
 public:
  VectorBuilder(int n, long x0) : v_(n) { v_[0] = x0; }
  VectorBuilder& sub(int point, long coef) {
    v_[static_cast<std::size_t>(point) + 1] -= coef;
    return *this;
  }
  template <class Range>
  VectorBuilder& sub_all(const Range& points, long coef) {
    for (int p : points) sub(p, coef);
    return *this;
  }
  LatticeVector done() const { return v_.primitive(); }

 private:
  LatticeVector v_;
};

// Points on exactly `k` of the given lines.
std::vector<int> points_on_exactly(const ProjectivePlane& pl, const std::vector<int>& lines, int k) {
  std::vector<int> out;
  for (int p = 0; p < pl.size(); ++p) {
    int hits = 0;
    for (int l : lines) hits += pl.incident(p, l);
    if (hits == k) out.push_back(p);
  }
  return out;
}

int other_point(const ProjectivePlane& pl, int line, std::initializer_list<int> avoid) {
  for (int p : pl.points_on(line))
    if (std::find(avoid.begin(), avoid.end(), p) == avoid.end()) return p;
  throw std::logic_error("other_point: no free point on the line");
}

struct FamilyBuilder {
  std::map<std::string, std::set<LatticeVector>> sets;
  void add(const std::string& name, const LatticeVector& v) { sets[name].insert(v); }
};

std::vector<CatalogFamily> finish(FamilyBuilder& b, const std::vector<std::tuple<std::string, VertexStatus, std::string>>& entries) {
  std::vector<CatalogFamily> out;
  for (const auto& [name, status, dual] : entries) {
    CatalogFamily f;
    f.name = name;
    f.status = status;
    f.dual = dual;
    const auto& s = b.sets[name];
    f.members.assign(s.begin(), s.end());
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<CatalogFamily> families_n7(const ChamberP& c) {
  const auto& pl = c.plane;
  const int n = c.n;
  FamilyBuilder b;
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) all[static_cast<std::size_t>(p)] = p;
  b.add("v_P", VectorBuilder(n, 1).done());
  b.add("v_L", VectorBuilder(n, 3).sub_all(all, 1).done());
  for (int l = 0; l < n; ++l) {
    const auto on = pl.points_on(l);
    std::vector<int> off;
    for (int p = 0; p < n; ++p)
      if (!pl.incident(p, l)) off.push_back(p);
    b.add("u_l", VectorBuilder(n, 2).sub_all(off, 1).done());
    for (int p : off) {
      VectorBuilder vpl(n, 2);
      for (int q : off)
        if (q != p) vpl.sub(q, 1);
      b.add("v_{p,l}", vpl.done());
      b.add("v_{l,p}", VectorBuilder(n, 3).sub(p, 2).sub_all(on, 1).done());
    }
  }
  for (int p = 0; p < n; ++p) b.add("u_p", VectorBuilder(n, 1).sub(p, 1).done());
  using enum VertexStatus;
  return finish(b, {{"v_P", actual, "v_L"},
                    {"v_L", actual, "v_P"},
                    {"v_{p,l}", actual, "v_{l,p}"},
                    {"v_{l,p}", actual, "v_{p,l}"},
                    {"u_p", ideal, "u_l"},
                    {"u_l", ideal, "u_p"}});
}

std::vector<CatalogFamily> families_n13(const ChamberP& c) {
  const auto& pl = c.plane;
  const int n = c.n;
  FamilyBuilder b;
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) all[static_cast<std::size_t>(p)] = p;

  b.add("v_P", VectorBuilder(n, 1).done());
  b.add("v_L", VectorBuilder(n, 4).sub_all(all, 1).done());
  for (int p = 0; p < n; ++p) b.add("u_p", VectorBuilder(n, 1).sub(p, 1).done());

  for (int l = 0; l < n; ++l) {
    const auto on = pl.points_on(l);
    std::vector<int> off;
    for (int p = 0; p < n; ++p)
      if (!pl.incident(p, l)) off.push_back(p);
    b.add("u_l", VectorBuilder(n, 3).sub_all(off, 1).done());
    for (int p : off) {
      VectorBuilder vpl(n, 3);
      for (int r : off)
        if (r != p) vpl.sub(r, 1);
      b.add("v_{p,l}", vpl.done());
      b.add("v_{l,p}", VectorBuilder(n, 4).sub(p, 3).sub_all(on, 1).done());
      for (int q : on) {
        VectorBuilder v(n, 3);
        v.sub(p, 2);
        for (int r : on)
          if (r != q) v.sub(r, 1);
        b.add("v_{p,q,l}", v.done());
      }
      // p off l; m any line through p.
      for (int m : pl.lines_through(p)) {
        VectorBuilder v(n, 7);
        for (int r : off)
          if (r != p) v.sub(r, 2);
        for (int r : pl.points_on(m))
          if (r != p) v.sub(r, 1);
        b.add("v_{l,m,p}", v.done());
      }
    }
  }

  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      for (int r = q + 1; r < n; ++r) {
        const int tri[] = {p, q, r};
        if (general_position(pl, tri)) b.add("v_pqr", VectorBuilder(n, 2).sub_all(tri, 1).done());
        // Lines p, q, r (as line indices) not through a common point.
        const std::vector<int> lines{p, q, r};
        if (points_on_exactly(pl, lines, 3).empty())
          b.add("v_lmn", VectorBuilder(n, 5)
                             .sub_all(points_on_exactly(pl, lines, 0), 2)
                             .sub_all(points_on_exactly(pl, lines, 1), 1)
                             .done());
      }

  // Four lines, no three concurrent.
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      for (int m = l + 1; m < n; ++m)
        for (int o = m + 1; o < n; ++o) {
          const std::vector<int> lines{k, l, m, o};
          if (!points_on_exactly(pl, lines, 3).empty() || !points_on_exactly(pl, lines, 4).empty()) continue;
          b.add("u_klmn", VectorBuilder(n, 4)
                              .sub_all(points_on_exactly(pl, lines, 0), 2)
                              .sub_all(points_on_exactly(pl, lines, 1), 1)
                              .done());
        }

  // Ordered quadrangles (p, q, r, s) with the auxiliary points of the
  // configuration: k is the fourth line through p, x, y, z its meets with
  // rs, qs, qr; h, i, j the diagonal points; u, v, w the fourth points of
  // pq, pr, ps.
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          if (p == q || p == r || p == s || q == r || q == s || r == s) continue;
          const int quad[] = {p, q, r, s};
          if (!general_position(pl, quad)) continue;
          if (p < q && q < r && r < s) b.add("u_pqrs", VectorBuilder(n, 2).sub_all(quad, 1).done());
          const int pq = pl.join(p, q), pr = pl.join(p, r), ps = pl.join(p, s);
          const int qr = pl.join(q, r), qs = pl.join(q, s), rs = pl.join(r, s);
          int k = -1;
          for (int t : pl.lines_through(p))
            if (t != pq && t != pr && t != ps) k = t;
          const int x = pl.meet(k, rs), y = pl.meet(k, qs), z = pl.meet(k, qr);
          const int h = pl.meet(pq, rs), i = pl.meet(pr, qs), j = pl.meet(ps, qr);
          const int u = other_point(pl, pq, {p, q, h});
          const int v = other_point(pl, pr, {p, r, i});
          const int w = other_point(pl, ps, {p, s, j});
          b.add("v_{p,qrs}", VectorBuilder(n, 4).sub(q, 2).sub(r, 2).sub(s, 2).sub(u, 1).sub(v, 1).sub(w, 1).done());
          b.add("v_{p,qr,s}",
                VectorBuilder(n, 5).sub(p, 3).sub(q, 2).sub(r, 2).sub(s, 2).sub(x, 1).sub(y, 1).done());
          b.add("v_{p,q,rs}", VectorBuilder(n, 3).sub(p, 2).sub(q, 1).sub(r, 1).sub(s, 1).sub(x, 1).done());
          b.add("v_{k,lmn}",
                VectorBuilder(n, 7).sub(p, 4).sub(q, 3).sub(r, 3).sub(s, 3).sub(x, 1).sub(y, 1).sub(z, 1).done());
          b.add("v_{k,lm,n}", VectorBuilder(n, 9)
                                  .sub(p, 5)
                                  .sub(r, 4)
                                  .sub(s, 4)
                                  .sub(q, 3)
                                  .sub(y, 2)
                                  .sub(z, 2)
                                  .sub(h, 1)
                                  .done());
          b.add("v_{k,l,mn}", VectorBuilder(n, 6)
                                  .sub(q, 3)
                                  .sub(r, 3)
                                  .sub(s, 2)
                                  .sub(u, 2)
                                  .sub(v, 2)
                                  .sub(w, 1)
                                  .sub(h, 1)
                                  .sub(i, 1)
                                  .done());
        }

  using enum VertexStatus;
  return finish(b, {{"v_P", actual, "v_L"},
                    {"v_L", actual, "v_P"},
                    {"v_pqr", actual, "v_lmn"},
                    {"v_lmn", actual, "v_pqr"},
                    {"v_{p,l}", actual, "v_{l,p}"},
                    {"v_{l,p}", actual, "v_{p,l}"},
                    {"v_{p,q,l}", actual, "v_{l,m,p}"},
                    {"v_{l,m,p}", actual, "v_{p,q,l}"},
                    {"v_{p,qrs}", actual, "v_{k,lmn}"},
                    {"v_{k,lmn}", actual, "v_{p,qrs}"},
                    {"v_{p,qr,s}", actual, "v_{k,lm,n}"},
                    {"v_{k,lm,n}", actual, "v_{p,qr,s}"},
                    {"v_{p,q,rs}", actual, "v_{k,l,mn}"},
                    {"v_{k,l,mn}", actual, "v_{p,q,rs}"},
                    {"u_p", ideal, "u_l"},
                    {"u_l", ideal, "u_p"},
                    {"u_pqrs", ideal, "u_klmn"},
                    {"u_klmn", ideal, "u_pqrs"}});
}

}  // namespace

std::vector<CatalogFamily> vertex_families(const ChamberP& c) {
  if (c.n == 7) return families_n7(c);
  if (c.n == 13) return families_n13(c);
  throw std::invalid_argument("vertex_families: n must be 7 or 13");
}

bool CatalogMatch::complete() const {
  if (!uncovered.empty()) return false;
  return std::all_of(families.begin(), families.end(),
                     [](const FamilyMatch& f) { return f.unmatched.empty() && f.generated > 0; });
}

CatalogMatch match_catalog(const VertexCatalog& computed, const std::vector<CatalogFamily>& families) {
  std::map<LatticeVector, std::size_t> index;
  for (std::size_t i = 0; i < computed.vertices.size(); ++i) index.emplace(computed.vertices[i].vertex, i);
  std::vector<bool> covered(computed.vertices.size(), false);
  CatalogMatch out;
  for (const auto& f : families) {
    FamilyMatch m;
    m.name = f.name;
    m.generated = f.members.size();
    std::set<std::string> labels;
    for (const auto& v : f.members) {
      auto it = index.find(v);
      if (it == index.end() || computed.vertices[it->second].status != f.status) {
        m.unmatched.push_back(v);
        continue;
      }
      ++m.matched;
      covered[it->second] = true;
      labels.insert(computed.vertices[it->second].type_label);
    }
    m.type_labels.assign(labels.begin(), labels.end());
    out.families.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < covered.size(); ++i)
    if (!covered[i]) out.uncovered.push_back(computed.vertices[i].vertex);
  return out;
}

IntMatrix duality_matrix(const ChamberP& c, const Polarity& pol) {
  const std::size_t d = static_cast<std::size_t>(c.n) + 1;
  IntMatrix a(d, d);
  // Column 0: the vertex orthogonal to all line roots.
  const LatticeVector vl = solve_primitive_kernel(std::span(c.walls).subspan(static_cast<std::size_t>(c.n)), c.n);
  for (std::size_t i = 0; i < d; ++i) a(i, 0) = vl[i];
  for (int p = 0; p < c.n; ++p) {
    const LatticeVector col = c.line_root(pol.point_to_line[static_cast<std::size_t>(p)]);
    for (std::size_t i = 0; i < d; ++i) a(i, static_cast<std::size_t>(p) + 1) = col[i];
  }
  return a;
}

DualityReport check_duality(const ChamberP& c, const Polarity& pol, const VertexCatalog& computed,
                            const std::vector<CatalogFamily>& families) {
  DualityReport r;
  const IntMatrix a = duality_matrix(c, pol);
  const IntMatrix j = lorentz_form(c.n);
  IntMatrix qj = j, qi = IntMatrix::identity(static_cast<std::size_t>(c.n) + 1);
  for (std::size_t x = 0; x < qj.rows(); ++x)
    for (std::size_t y = 0; y < qj.cols(); ++y) {
      qj(x, y) *= c.q;
      qi(x, y) *= c.q;
    }
  r.form_scaled = a.transpose() * j * a == qj;
  if (!r.form_scaled) r.problems.push_back("A^T J A differs from q J");
  r.square_scalar = a * a == qi;
  if (!r.square_scalar) r.problems.push_back("A^2 differs from q I");

  std::set<LatticeVector> images;
  r.permutes_vertices = true;
  for (const auto& v : computed.vertices) {
    const LatticeVector w = a.apply(v.vertex).primitive();
    auto idx = computed.find(w);
    if (!idx || computed.vertices[*idx].status != v.status) {
      r.permutes_vertices = false;
      r.problems.push_back("image of " + v.vertex.to_string() + " is not a vertex of the same kind");
    }
    images.insert(w);
  }
  if (images.size() != computed.vertices.size()) {
    r.permutes_vertices = false;
    r.problems.push_back("duality is not injective on vertices");
  }

  r.swaps_families = !families.empty();
  for (const auto& f : families) {
    auto dual = std::find_if(families.begin(), families.end(), [&](const CatalogFamily& g) { return g.name == f.dual; });
    if (dual == families.end()) {
      r.swaps_families = false;
      r.problems.push_back("family " + f.name + " has no dual family");
      continue;
    }
    std::set<LatticeVector> img;
    for (const auto& v : f.members) img.insert(a.apply(v).primitive());
    if (!std::equal(img.begin(), img.end(), dual->members.begin(), dual->members.end())) {
      r.swaps_families = false;
      r.problems.push_back("family " + f.name + " is not mapped onto " + f.dual);
    }
  }
  return r;
}

ValueTable value_table_n7(const ChamberP& c, std::span<const LatticeVector> gosset_walls) {
  if (c.n != 7) throw std::invalid_argument("value_table_n7: chamber must have n = 7");
  const auto fams = families_n7(c);
  auto members_of = [&](const std::string& name) {
    return std::find_if(fams.begin(), fams.end(), [&](const CatalogFamily& f) { return f.name == name; })->members;
  };
  const auto actual = members_of("v_{l,p}");
  const auto ideal = members_of("u_l");
  const auto weyl = members_of("v_L").front();

  // Wall families are recognized by e_0 coefficient and coordinate pattern.
  auto family_of = [](const LatticeVector& w) -> int {
    const long x0 = w[0].get_si();
    if (x0 == 0) return 0;
    if (x0 == 1) return 1;
    if (x0 == 2) return 2;
    return 3;
  };
  const char* names[] = {"e_p", "e_0-e_p-e_q", "2e_0-e_1-...-e_7+e_p+e_q", "3e_0-e_1-...-e_7-e_p"};
  std::set<long> act[4], ide[4], wv;
  for (const auto& w : gosset_walls) {
    const int f = family_of(w);
    for (const auto& v : actual) act[f].insert(inner(w, v).get_si());
    for (const auto& v : ideal) ide[f].insert(inner(w, v).get_si());
    wv.insert(inner(w, weyl).get_si());
  }
  ValueTable t;
  for (int f = 0; f < 4; ++f)
    t.rows.push_back({names[f], {act[f].begin(), act[f].end()}, {ide[f].begin(), ide[f].end()}});
  t.weyl_values.assign(wv.begin(), wv.end());
  return t;
}

std::string catalog_cache_key(const ChamberP& c) {
  // FNV-1a over the wall coordinates.
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& w : c.walls)
    for (char ch : w.to_string() + ";") {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ull;
    }
  std::ostringstream os;
  os << "n" << c.n << "-" << std::hex << h << "-" << kToolkitVersion;
  return os.str();
}

nlohmann::json catalog_to_json(const ChamberP& c, const VertexCatalog& cat) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : cat.vertices)
    verts.push_back({{"subset", set_to_json(v.subset)},
                     {"vertex", v.vertex},
                     {"status", status_name(v.status)},
                     {"type_label", v.type_label}});
  nlohmann::json anomalies = nlohmann::json::array();
  for (NodeSet s : cat.anomalies) anomalies.push_back(set_to_json(s));
  return {{"key", catalog_cache_key(c)}, {"n", c.n}, {"vertices", verts}, {"anomalies", anomalies}};
}

std::optional<VertexCatalog> catalog_from_json(const ChamberP& c, const nlohmann::json& j) {
  try {
    if (j.at("key").get<std::string>() != catalog_cache_key(c)) return std::nullopt;
    VertexCatalog cat;
    for (const auto& e : j.at("vertices")) {
      VertexCertificate v;
      v.subset = make_set(e.at("subset").get<std::vector<int>>());
      v.vertex = e.at("vertex").get<LatticeVector>();
      const auto st = e.at("status").get<std::string>();
      if (st != "actual" && st != "ideal") return std::nullopt;
      v.status = st == "actual" ? VertexStatus::actual : VertexStatus::ideal;
      v.type_label = e.at("type_label").get<std::string>();
      if (!verify_certificate(c, v)) return std::nullopt;
      cat.vertices.push_back(std::move(v));
    }
    for (const auto& a : j.at("anomalies")) cat.anomalies.push_back(make_set(a.get<std::vector<int>>()));
    return cat;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

VertexCatalog cached_vertices(const ChamberP& c, const std::optional<std::filesystem::path>& dir, int threads,
                              bool* from_cache) {
  if (from_cache) *from_cache = false;
  if (!dir) return all_vertices(c, threads);
  const auto path = *dir / ("vertices-" + catalog_cache_key(c) + ".json");
  if (std::ifstream in(path); in) {
    try {
      const auto j = nlohmann::json::parse(in);
      if (auto cat = catalog_from_json(c, j)) {
        if (from_cache) *from_cache = true;
        return *cat;
      }
    } catch (const std::exception&) {
    }
  }
  VertexCatalog cat = all_vertices(c, threads);
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  if (std::ofstream out(path); out) out << catalog_to_json(c, cat).dump() << "\n";
  return cat;
}

}  // namespace hyperlat
