#include "hyperlat/coxdiag.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace hyperlat {

std::vector<int> members(NodeSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(__builtin_ctzll(s));
    s &= s - 1;
  }
  return out;
}

NodeSet make_set(std::span<const int> nodes) {
  NodeSet s = 0;
  for (int v : nodes) s |= NodeSet{1} << v;
  return s;
}

GramDiagram GramDiagram::from_roots(std::vector<LatticeVector> roots) {
  if (roots.empty()) throw std::invalid_argument("GramDiagram: no roots");
  GramDiagram d;
  d.gram_ = gram_matrix(roots);
  d.dim_ = static_cast<int>(roots.front().size());
  d.roots_ = std::move(roots);
  d.init();
  return d;
}

GramDiagram GramDiagram::from_gram(IntMatrix gram, int dim) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("GramDiagram: Gram matrix is not square");
  GramDiagram d;
  d.gram_ = std::move(gram);
  d.dim_ = dim;
  d.init();
  return d;
}

void GramDiagram::init() {
  if (size() > 64) throw std::invalid_argument("GramDiagram: at most 64 nodes");
  sym_ = gram_.to_sym();
  if (!sym_.is_symmetric()) throw std::invalid_argument("GramDiagram: Gram matrix is not symmetric");
  nbr_.assign(static_cast<std::size_t>(size()), 0);
  for (int i = 0; i < size(); ++i) {
    if ((*this)(i, i) <= 0) throw std::invalid_argument("GramDiagram: diagonal entries must be positive");
    for (int j = 0; j < size(); ++j)
      if (i != j && (*this)(i, j) != 0) nbr_[static_cast<std::size_t>(i)] |= NodeSet{1} << j;
  }
}

bool GramDiagram::is_acute() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (i != j && (*this)(i, j) > 0) return false;
  return true;
}

std::vector<NodeSet> GramDiagram::components(NodeSet s) const {
  std::vector<NodeSet> out;
  NodeSet rest = s;
  while (rest) {
    NodeSet comp = rest & (~rest + 1);
    NodeSet frontier = comp;
    while (frontier) {
      const int v = __builtin_ctzll(frontier);
      frontier &= frontier - 1;
      const NodeSet fresh = neighbours(v) & s & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

bool GramDiagram::is_connected(NodeSet s) const { return s != 0 && components(s).size() == 1; }

Graph GramDiagram::to_graph() const {
  Graph g(size());
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if ((*this)(i, j) != 0) g.add_edge(i, j);
  return g;
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::elliptic: return "elliptic";
    case Kind::parabolic: return "parabolic";
    case Kind::lanner: return "lanner";
    case Kind::other: return "indefinite-other";
  }
  return "indefinite-other";
}

std::string component_label(const GramDiagram& d, NodeSet component) {
  const auto nodes = members(component);
  const int k = static_cast<int>(nodes.size());
  int edges = 0, max_deg = 0, leaves = 0;
  for (int v : nodes) {
    const int deg = set_size(d.neighbours(v) & component);
    edges += deg;
    max_deg = std::max(max_deg, deg);
    leaves += deg == 1;
  }
  edges /= 2;
  if (!d.is_connected(component)) return "other";
  if (edges == k - 1 && max_deg <= 2) return "A_" + std::to_string(k);
  if (k == 4 && edges == 3 && max_deg == 3 && leaves == 3) return "D_4";
  return "other";
}

std::string type_label(const GramDiagram& d, NodeSet s) {
  std::map<int, int> paths;
  int stars = 0, others = 0;
  for (NodeSet c : d.components(s)) {
    const std::string l = component_label(d, c);
    if (l.starts_with("A_"))
      ++paths[set_size(c)];
    else if (l == "D_4")
      ++stars;
    else
      ++others;
  }
  std::string out;
  auto add = [&out](int mult, const std::string& name) {
    if (mult == 0) return;
    if (!out.empty()) out += "+";
    if (mult > 1) out += std::to_string(mult);
    out += name;
  };
  for (const auto& [k, mult] : paths) add(mult, "A_" + std::to_string(k));
  add(stars, "D_4");
  add(others, "other");
  return out;
}

namespace {

Inertia inertia_of(const GramDiagram& d, NodeSet s) {
  const auto idx = members(s);
  return signature(d.sym().principal(idx));
}

bool is_elliptic(const GramDiagram& d, NodeSet s) {
  const Inertia in = inertia_of(d, s);
  return in.positive == set_size(s);
}

void require_acute(const GramDiagram& d, const char* where) {
  if (!d.is_acute())
    throw std::invalid_argument(std::string(where) + ": diagram has a positive off-diagonal Gram entry");
}

NodeSet neighbourhood(const GramDiagram& d, NodeSet s) {
  NodeSet out = 0;
  for (int v : members(s)) out |= d.neighbours(v);
  return out & ~s;
}

// Depth-first search over unions of pairwise disjoint, non-adjacent
// components. Components are sorted by their lowest node and each union is
// produced once, with components in increasing order of lowest node.
class ComponentUnionSearch {
 public:
  ComponentUnionSearch(const GramDiagram& d, std::vector<NodeSet> comps, int target, bool parabolic)
      : d_(d), comps_(std::move(comps)), target_(target), parabolic_(parabolic) {
    std::sort(comps_.begin(), comps_.end(), [](NodeSet a, NodeSet b) {
      const int la = __builtin_ctzll(a), lb = __builtin_ctzll(b);
      return la != lb ? la < lb : a < b;
    });
    closed_.reserve(comps_.size());
    for (NodeSet c : comps_) closed_.push_back(c | neighbourhood(d_, c));
  }

  std::vector<NodeSet> run(int threads) {
    std::vector<std::vector<NodeSet>> found(std::max(threads, 1));
    std::atomic<std::size_t> next{0};
    auto worker = [&](std::size_t slot) {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= comps_.size()) break;
        descend(i, comps_[i], closed_[i], weight(comps_[i]), found[slot]);
      }
    };
    if (threads <= 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker, static_cast<std::size_t>(t));
      for (auto& t : pool) t.join();
    }
    std::vector<NodeSet> out;
    for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  int weight(NodeSet c) const { return parabolic_ ? set_size(c) - 1 : set_size(c); }

  void descend(std::size_t last, NodeSet chosen, NodeSet blocked, int rank, std::vector<NodeSet>& out) const {
    if (rank == target_) {
      const SubdiagramClass cls = classify(d_, chosen);
      const Kind want = parabolic_ ? Kind::parabolic : Kind::elliptic;
      if (cls.kind == want && cls.rank == target_) out.push_back(chosen);
      return;
    }
    const int low = __builtin_ctzll(comps_[last]);
    const NodeSet above = low >= 63 ? 0 : (d_.all() & ~((NodeSet{2} << low) - 1));
    if (rank + set_size(above & ~blocked) < target_) return;
    for (std::size_t j = last + 1; j < comps_.size(); ++j) {
      const NodeSet c = comps_[j];
      if (c & blocked) continue;
      const int w = weight(c);
      if (rank + w > target_) continue;
      descend(j, chosen | c, blocked | closed_[j], rank + w, out);
    }
  }

  const GramDiagram& d_;
  std::vector<NodeSet> comps_;
  std::vector<NodeSet> closed_;
  int target_;
  bool parabolic_;
};

}  // namespace

SubdiagramClass classify(const GramDiagram& d, NodeSet s) {
  if (s == 0) throw std::invalid_argument("classify: empty subset");
  SubdiagramClass out;
  out.inertia = inertia_of(d, s);
  out.type_label = type_label(d, s);
  const int size = set_size(s);
  const Inertia& in = out.inertia;
  out.rank = in.positive + in.negative;
  if (in.positive == size) {
    out.kind = Kind::elliptic;
    return out;
  }
  if (in.negative == 0) {
    bool all_singular = true;
    for (NodeSet c : d.components(s))
      if (inertia_of(d, c).zero == 0) all_singular = false;
    out.kind = all_singular ? Kind::parabolic : Kind::other;
    return out;
  }
  if (d.is_connected(s)) {
    bool proper_elliptic = true;
    for (int v : members(s))
      if (!is_elliptic(d, s & ~(NodeSet{1} << v))) {
        proper_elliptic = false;
        break;
      }
    if (proper_elliptic) out.kind = Kind::lanner;
  }
  return out;
}

std::vector<NodeSet> connected_elliptic(const GramDiagram& d) {
  std::set<NodeSet> all;
  std::vector<NodeSet> layer;
  for (int v = 0; v < d.size(); ++v) {
    const NodeSet s = NodeSet{1} << v;
    if (is_elliptic(d, s)) layer.push_back(s);
  }
  all.insert(layer.begin(), layer.end());
  // Every connected set has a node whose removal keeps it connected, and
  // elliptic sets are closed under taking subsets.
  while (!layer.empty()) {
    std::set<NodeSet> next;
    for (NodeSet s : layer)
      for (int v : members(neighbourhood(d, s))) {
        const NodeSet t = s | (NodeSet{1} << v);
        if (all.count(t) || next.count(t)) continue;
        if (is_elliptic(d, t)) next.insert(t);
      }
    all.insert(next.begin(), next.end());
    layer.assign(next.begin(), next.end());
  }
  return {all.begin(), all.end()};
}

std::vector<NodeSet> connected_parabolic(const GramDiagram& d) {
  require_acute(d, "connected_parabolic");
  // In an acute diagram every proper subset of a connected parabolic set is
  // elliptic, so removing a non-cut node leaves a connected elliptic set.
  std::set<NodeSet> out;
  for (NodeSet s : connected_elliptic(d))
    for (int v : members(neighbourhood(d, s))) {
      const NodeSet t = s | (NodeSet{1} << v);
      if (out.count(t)) continue;
      if (classify(d, t).kind == Kind::parabolic) out.insert(t);
    }
  return {out.begin(), out.end()};
}

std::vector<NodeSet> enum_max_elliptic(const GramDiagram& d, int target_rank, int threads) {
  if (target_rank <= 0) return {};
  ComponentUnionSearch search(d, connected_elliptic(d), target_rank, false);
  return search.run(threads);
}

std::vector<NodeSet> enum_max_parabolic(const GramDiagram& d, int target_rank, int threads) {
  if (target_rank <= 0) return {};
  ComponentUnionSearch search(d, connected_parabolic(d), target_rank, true);
  return search.run(threads);
}

std::vector<NodeSet> lanner_subsets(const GramDiagram& d) {
  require_acute(d, "lanner_subsets");
  std::set<NodeSet> out, seen;
  for (NodeSet s : connected_elliptic(d))
    for (int v : members(neighbourhood(d, s))) {
      const NodeSet t = s | (NodeSet{1} << v);
      if (!seen.insert(t).second) continue;
      if (classify(d, t).kind == Kind::lanner) out.insert(t);
    }
  return {out.begin(), out.end()};
}

FiniteVolumeCertificate vinberg_finite_volume(const GramDiagram& d, int threads) {
  FiniteVolumeCertificate cert;
  cert.lanner = lanner_subsets(d);
  const auto connected = connected_parabolic(d);
  const auto maximal = enum_max_parabolic(d, d.hyperbolic_dim() - 1, threads);
  cert.connected_parabolic = connected.size();
  cert.maximal_parabolic = maximal.size();
  for (NodeSet c : connected) {
    auto it = std::find_if(maximal.begin(), maximal.end(), [c](NodeSet m) { return (m & c) == c; });
    if (it == maximal.end())
      cert.unextended.push_back(c);
    else
      cert.extensions.emplace_back(c, *it);
  }
  cert.pass = cert.lanner.empty() && cert.unextended.empty();
  return cert;
}

bool is_diagram_automorphism(const GramDiagram& d, const Permutation& p) {
  if (static_cast<int>(p.degree()) != d.size()) return false;
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j) {
      const Integer& a = d(i, j);
      const Integer& b = d(p(i), p(j));
      if (sgn(a) != sgn(b)) return false;
      if (a * a * d(p(i), p(i)) * d(p(j), p(j)) != b * b * d(i, i) * d(j, j)) return false;
    }
  return true;
}

NodeSet apply(const Permutation& p, NodeSet s) {
  NodeSet out = 0;
  for (int v : members(s)) out |= NodeSet{1} << p(v);
  return out;
}

std::vector<CensusEntry> orbit_census(const GramDiagram& d, std::span<const NodeSet> subsets,
                                      std::span<const Permutation> generators) {
  for (const auto& g : generators)
    if (!is_diagram_automorphism(d, g))
      throw std::invalid_argument("orbit_census: generator is not a diagram automorphism");
  std::map<NodeSet, std::size_t> index;
  for (std::size_t i = 0; i < subsets.size(); ++i) index.emplace(subsets[i], i);
  std::vector<std::size_t> parent(subsets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (const auto& g : generators) {
      auto it = index.find(apply(g, subsets[i]));
      if (it == index.end()) throw std::invalid_argument("orbit_census: subset list is not closed under the group");
      const std::size_t a = find(i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  std::map<std::string, CensusEntry> by_type;
  std::map<std::size_t, std::size_t> orbit_size;
  std::map<std::size_t, std::string> orbit_type;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const std::string label = type_label(d, subsets[i]);
    auto& e = by_type[label];
    if (e.count == 0 || subsets[i] < e.sample) e.sample = subsets[i];
    e.type_label = label;
    ++e.count;
    ++orbit_size[find(i)];
    orbit_type[find(i)] = label;
  }
  for (const auto& [root, size] : orbit_size) {
    auto& e = by_type[orbit_type[root]];
    ++e.orbit_count;
    e.orbit_sizes.push_back(size);
  }
  std::vector<CensusEntry> out;
  for (auto& [label, e] : by_type) {
    std::sort(e.orbit_sizes.begin(), e.orbit_sizes.end());
    out.push_back(std::move(e));
  }
  return out;
}

nlohmann::json set_to_json(NodeSet s) { return members(s); }

nlohmann::json to_json(const CensusEntry& e) {
  return {{"type_label", e.type_label},
          {"count", e.count},
          {"orbit_count", e.orbit_count},
          {"orbit_sizes", e.orbit_sizes},
          {"sample_subset", set_to_json(e.sample)}};
}

}  // namespace hyperlat
