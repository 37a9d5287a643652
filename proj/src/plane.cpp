#include "hyperlat/plane.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hyperlat {

ProjectivePlane::ProjectivePlane(int q, std::vector<Triple> points, std::vector<Triple> lines,
                                 std::vector<std::vector<bool>> incidence)
    : q_(q), points_(std::move(points)), lines_(std::move(lines)), incidence_(std::move(incidence)) {
  if (incidence_.size() != lines_.size())
    throw std::invalid_argument("ProjectivePlane: incidence rows must match the line count");
  for (const auto& row : incidence_)
    if (row.size() != points_.size())
      throw std::invalid_argument("ProjectivePlane: incidence columns must match the point count");
}

std::vector<int> ProjectivePlane::points_on(int line) const {
  std::vector<int> out;
  for (int p = 0; p < size(); ++p)
    if (incident(p, line)) out.push_back(p);
  return out;
}

std::vector<int> ProjectivePlane::lines_through(int point) const {
  std::vector<int> out;
  for (int l = 0; l < static_cast<int>(lines_.size()); ++l)
    if (incident(point, l)) out.push_back(l);
  return out;
}

int ProjectivePlane::join(int p, int q) const {
  for (int l = 0; l < static_cast<int>(lines_.size()); ++l)
    if (incident(p, l) && incident(q, l)) return l;
  return -1;
}

int ProjectivePlane::meet(int l, int m) const {
  for (int p = 0; p < size(); ++p)
    if (incident(p, l) && incident(p, m)) return p;
  return -1;
}

std::vector<std::string> ProjectivePlane::axiom_violations() const {
  std::vector<std::string> out;
  const int n = q_ * q_ + q_ + 1;
  if (size() != n || static_cast<int>(lines_.size()) != n) {
    out.push_back("expected " + std::to_string(n) + " points and lines");
    return out;
  }
  for (int l = 0; l < n; ++l)
    if (static_cast<int>(points_on(l).size()) != q_ + 1)
      out.push_back("line " + std::to_string(l) + " does not carry q+1 points");
  for (int p = 0; p < n; ++p)
    if (static_cast<int>(lines_through(p).size()) != q_ + 1)
      out.push_back("point " + std::to_string(p) + " is not on q+1 lines");
  for (int p = 0; p < n; ++p)
    for (int r = p + 1; r < n; ++r) {
      int common = 0;
      for (int l = 0; l < n; ++l) common += incident(p, l) && incident(r, l);
      if (common != 1)
        out.push_back("points " + std::to_string(p) + "," + std::to_string(r) + " share " +
                      std::to_string(common) + " lines");
    }
  return out;
}

ProjectivePlane build_plane(int q) {
  if (q != 2 && q != 3) throw std::invalid_argument("build_plane: only q = 2 and q = 3 are supported");
  std::vector<Triple> triples;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        Triple t{a, b, c};
        auto first = std::find_if(t.begin(), t.end(), [](int x) { return x != 0; });
        if (first != t.end() && *first == 1) triples.push_back(t);
      }
  std::sort(triples.begin(), triples.end());
  std::vector<std::vector<bool>> inc(triples.size(), std::vector<bool>(triples.size()));
  for (std::size_t l = 0; l < triples.size(); ++l)
    for (std::size_t p = 0; p < triples.size(); ++p) {
      int dot = 0;
      for (int k = 0; k < 3; ++k) dot += triples[l][static_cast<std::size_t>(k)] * triples[p][static_cast<std::size_t>(k)];
      inc[l][p] = dot % q == 0;
    }
  return ProjectivePlane(q, triples, triples, std::move(inc));
}

int Polarity::apply_node(int node) const {
  const int n = static_cast<int>(point_to_line.size());
  return node < n ? point_to_line[static_cast<std::size_t>(node)] + n
                  : line_to_point[static_cast<std::size_t>(node - n)];
}

bool Polarity::is_involution() const {
  const int n = static_cast<int>(point_to_line.size());
  for (int v = 0; v < 2 * n; ++v)
    if (apply_node(apply_node(v)) != v) return false;
  return true;
}

bool Polarity::is_incidence_compatible(const ProjectivePlane& plane) const {
  for (int p = 0; p < plane.size(); ++p)
    for (int l = 0; l < plane.size(); ++l) {
      const int dp = point_to_line[static_cast<std::size_t>(p)];
      const int dl = line_to_point[static_cast<std::size_t>(l)];
      if (plane.incident(p, l) != plane.incident(dl, dp)) return false;
    }
  return true;
}

Polarity standard_polarity(const ProjectivePlane& plane) {
  Polarity pol;
  const auto& pts = plane.points();
  const auto& lines = plane.lines();
  for (const auto& p : pts) {
    auto it = std::find(lines.begin(), lines.end(), p);
    if (it == lines.end()) throw std::logic_error("standard_polarity: no line with matching coordinates");
    pol.point_to_line.push_back(static_cast<int>(it - lines.begin()));
  }
  for (const auto& l : lines) {
    auto it = std::find(pts.begin(), pts.end(), l);
    if (it == pts.end()) throw std::logic_error("standard_polarity: no point with matching coordinates");
    pol.line_to_point.push_back(static_cast<int>(it - pts.begin()));
  }
  return pol;
}

bool general_position(const ProjectivePlane& plane, std::span<const int> points) {
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      for (std::size_t c = b + 1; c < points.size(); ++c) {
        const int l = plane.join(points[a], points[b]);
        if (l >= 0 && plane.incident(points[c], l)) return false;
      }
  return true;
}

Graph::Graph(int size)
    : size_(size), adj_(static_cast<std::size_t>(size), 0), labels_(static_cast<std::size_t>(size * size), 0),
      colours_(static_cast<std::size_t>(size), 0) {
  if (size < 0 || size > 64) throw std::invalid_argument("Graph: at most 64 nodes are supported");
}

void Graph::add_edge(int u, int v, int label) {
  if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
  if (label == 0) throw std::invalid_argument("Graph: edge label 0 is reserved for non-edges");
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  labels_[static_cast<std::size_t>(u * size_ + v)] = label;
  labels_[static_cast<std::size_t>(v * size_ + u)] = label;
}

int Graph::degree(int u) const { return std::popcount(adj_[static_cast<std::size_t>(u)]); }

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto a : adj_) twice += static_cast<std::size_t>(std::popcount(a));
  return twice / 2;
}

bool Graph::is_automorphism(const Permutation& p) const {
  if (static_cast<int>(p.degree()) != size_) return false;
  for (int u = 0; u < size_; ++u)
    for (int v = 0; v < size_; ++v)
      if (edge_label(u, v) != edge_label(p(u), p(v))) return false;
  return true;
}

IncidenceGraph incidence_graph(const ProjectivePlane& plane) {
  const int n = plane.size();
  IncidenceGraph ig{Graph(2 * n), n};
  for (int l = 0; l < n; ++l) {
    ig.graph.set_colour(n + l, 1);
    for (int p = 0; p < n; ++p)
      if (plane.incident(p, l)) ig.graph.add_edge(p, n + l);
  }
  return ig;
}

namespace {

// Colour refinement with canonical colour ids: isomorphic (graph, initial
// colouring) pairs produce identical outputs.
class Refiner {
 public:
  Refiner(const Graph& g, bool use_colours) : g_(g), use_colours_(use_colours) {}

  std::vector<int> refine(std::span<const int> individualized) const {
    const int n = g_.size();
    std::vector<int> col(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) col[static_cast<std::size_t>(u)] = use_colours_ ? g_.colour(u) : 0;
    int offset = *std::max_element(col.begin(), col.end()) + 1;
    for (std::size_t i = 0; i < individualized.size(); ++i)
      col[static_cast<std::size_t>(individualized[i])] = offset + static_cast<int>(i);
    normalize(col);
    std::size_t classes = count_classes(col);
    while (true) {
      std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
      for (int u = 0; u < n; ++u) {
        auto& s = sig[static_cast<std::size_t>(u)];
        s.push_back(col[static_cast<std::size_t>(u)]);
        std::vector<int> nb;
        for (int v = 0; v < n; ++v) {
          if (!g_.adjacent(u, v)) continue;
          const int label = use_colours_ ? g_.edge_label(u, v) : 1;
          nb.push_back(label * 4096 + col[static_cast<std::size_t>(v)]);
        }
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
      }
      std::map<std::vector<int>, int> ids;
      for (const auto& s : sig) ids.emplace(s, 0);
      int next = 0;
      for (auto& [key, id] : ids) id = next++;
      for (int u = 0; u < n; ++u) col[static_cast<std::size_t>(u)] = ids[sig[static_cast<std::size_t>(u)]];
      const std::size_t now = count_classes(col);
      if (now == classes) break;
      classes = now;
    }
    return col;
  }

 private:
  static void normalize(std::vector<int>& col) {
    std::vector<int> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto& c : col) c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
  }
  static std::size_t count_classes(const std::vector<int>& col) {
    std::vector<int> s = col;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  const Graph& g_;
  bool use_colours_;
};

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, bool use_colours) : g_(g), use_colours_(use_colours), refiner_(g, use_colours) {}

  // Automorphism mapping left[i] -> right[i] for all i, if one exists.
  std::optional<Permutation> find(const std::vector<int>& left, const std::vector<int>& right) {
    col_l_ = refiner_.refine(left);
    col_r_ = refiner_.refine(right);
    std::vector<int> hl = col_l_, hr = col_r_;
    std::sort(hl.begin(), hl.end());
    std::sort(hr.begin(), hr.end());
    if (hl != hr) return std::nullopt;

    const int n = g_.size();
    map_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(n), false);
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (!assign(left[i], right[i])) return std::nullopt;
    }
    order_ = search_order(left);
    if (!extend(0)) return std::nullopt;
    return Permutation(map_);
  }

 private:
  bool consistent(int u, int v) const {
    if (col_l_[static_cast<std::size_t>(u)] != col_r_[static_cast<std::size_t>(v)] || used_[static_cast<std::size_t>(v)]) return false;
    for (int w = 0; w < g_.size(); ++w) {
      const int fw = map_[static_cast<std::size_t>(w)];
      if (fw < 0) continue;
      if (label(u, w) != label(v, fw)) return false;
    }
    return true;
  }

  int label(int a, int b) const {
    if (!g_.adjacent(a, b)) return 0;
    return use_colours_ ? g_.edge_label(a, b) : 1;
  }

  bool assign(int u, int v) {
    if (map_[static_cast<std::size_t>(u)] == v) return true;
    if (map_[static_cast<std::size_t>(u)] != -1 || !consistent(u, v)) return false;
    map_[static_cast<std::size_t>(u)] = v;
    used_[static_cast<std::size_t>(v)] = true;
    return true;
  }

  // Breadth-first from the prescribed nodes so every later node has a mapped
  // neighbour whenever the graph is connected.
  std::vector<int> search_order(const std::vector<int>& seeds) const {
    const int n = g_.size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> queue;
    for (int s : seeds)
      if (!seen[static_cast<std::size_t>(s)]) {
        seen[static_cast<std::size_t>(s)] = true;
        queue.push_back(s);
      }
    std::vector<int> order;
    for (int start = 0; start <= n; ++start) {
      for (std::size_t k = 0; k < queue.size(); ++k) {
        const int u = queue[k];
        if (map_[static_cast<std::size_t>(u)] < 0) order.push_back(u);
        for (int v = 0; v < n; ++v)
          if (g_.adjacent(u, v) && !seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = true;
            queue.push_back(v);
          }
      }
      queue.clear();
      if (start < n && !seen[static_cast<std::size_t>(start)]) {
        seen[static_cast<std::size_t>(start)] = true;
        queue.push_back(start);
      }
    }
    return order;
  }

  bool extend(std::size_t k) {
    if (k == order_.size()) return true;
    const int u = order_[k];
    for (int v = 0; v < g_.size(); ++v) {
      if (!consistent(u, v)) continue;
      map_[static_cast<std::size_t>(u)] = v;
      used_[static_cast<std::size_t>(v)] = true;
      if (extend(k + 1)) return true;
      map_[static_cast<std::size_t>(u)] = -1;
      used_[static_cast<std::size_t>(v)] = false;
    }
    return false;
  }

  const Graph& g_;
  bool use_colours_;
  Refiner refiner_;
  std::vector<int> col_l_, col_r_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> order_;
};

}  // namespace

AutomorphismGroup graph_automorphism_group(const Graph& g, bool use_colours) {
  AutomorphismGroup out;
  Refiner refiner(g, use_colours);
  AutomorphismSearch search(g, use_colours);
  std::vector<int> prefix;
  Integer order = 1;

  while (true) {
    const std::vector<int> col = refiner.refine(prefix);
    // Smallest non-singleton cell, lowest colour first.
    std::map<int, std::vector<int>> cells;
    for (int u = 0; u < g.size(); ++u) cells[col[static_cast<std::size_t>(u)]].push_back(u);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : cells)
      if (members.size() > 1 && (!target || members.size() < target->size())) target = &members;
    if (!target) break;

    const int b = target->front();
    std::vector<Permutation> level_gens;
    std::vector<bool> in_orbit(static_cast<std::size_t>(g.size()), false);
    std::vector<int> orbit{b};
    in_orbit[static_cast<std::size_t>(b)] = true;
    auto close_orbit = [&]() {
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (const auto& s : level_gens) {
          const int y = s(orbit[k]);
          if (!in_orbit[static_cast<std::size_t>(y)]) {
            in_orbit[static_cast<std::size_t>(y)] = true;
            orbit.push_back(y);
          }
        }
    };
    for (int c : *target) {
      if (in_orbit[static_cast<std::size_t>(c)]) continue;
      std::vector<int> left = prefix, right = prefix;
      left.push_back(b);
      right.push_back(c);
      if (auto found = search.find(left, right)) {
        level_gens.push_back(*found);
        out.generators.push_back(*found);
        close_orbit();
      }
    }
    out.base.push_back(b);
    out.orbit_lengths.push_back(orbit.size());
    order *= static_cast<unsigned long>(orbit.size());
    prefix.push_back(b);
  }

  PermGroup group(static_cast<std::size_t>(g.size()),
                  out.generators.empty() ? std::vector<Permutation>{} : out.generators);
  const Integer chain_order = group.order();
  if (chain_order != order)
    throw std::logic_error("graph_automorphism_group: orbit product " + order.get_str() +
                           " disagrees with stabilizer chain order " + chain_order.get_str());
  out.order = order;
  return out;
}

nlohmann::json plane_to_json(const ProjectivePlane& plane) {
  nlohmann::json j;
  j["q"] = plane.order();
  j["points"] = plane.points();
  j["lines"] = plane.lines();
  nlohmann::json flags = nlohmann::json::array();
  for (int l = 0; l < static_cast<int>(plane.lines().size()); ++l)
    for (int p = 0; p < plane.size(); ++p)
      if (plane.incident(p, l)) flags.push_back({p, l});
  j["flags"] = std::move(flags);
  return j;
}

ProjectivePlane plane_from_json(const nlohmann::json& j) {
  const int q = j.at("q").get<int>();
  auto points = j.at("points").get<std::vector<Triple>>();
  auto lines = j.at("lines").get<std::vector<Triple>>();
  std::vector<std::vector<bool>> inc(lines.size(), std::vector<bool>(points.size(), false));
  for (const auto& f : j.at("flags")) {
    const auto p = f.at(0).get<std::size_t>();
    const auto l = f.at(1).get<std::size_t>();
    if (p >= points.size() || l >= lines.size()) throw std::invalid_argument("plane JSON: flag out of range");
    inc[l][p] = true;
  }
  return ProjectivePlane(q, std::move(points), std::move(lines), std::move(inc));
}

}  // namespace hyperlat
