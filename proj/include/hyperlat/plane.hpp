#pragma once

// Finite projective planes PG(2,q), q in {2,3}, their incidence graphs,
// polarities, and automorphism groups of small graphs.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlat/perm_group.hpp"

namespace hyperlat {

using Triple = std::array<int, 3>;

/// Points are normalized nonzero triples of F_q^3 (first nonzero entry 1),
/// lines are normalized functionals; both sorted lexicographically. Point p
/// lies on line l iff l . p = 0 mod q.
class ProjectivePlane {
 public:
  ProjectivePlane() = default;
  /// Assembles a plane from explicit data without validating the axioms;
  /// use axiom_violations() to check.
  ProjectivePlane(int q, std::vector<Triple> points, std::vector<Triple> lines,
                  std::vector<std::vector<bool>> incidence);

  int order() const noexcept { return q_; }
  int size() const noexcept { return static_cast<int>(points_.size()); }
  const std::vector<Triple>& points() const noexcept { return points_; }
  const std::vector<Triple>& lines() const noexcept { return lines_; }
  bool incident(int point, int line) const { return incidence_[static_cast<std::size_t>(line)][static_cast<std::size_t>(point)]; }

  std::vector<int> points_on(int line) const;
  std::vector<int> lines_through(int point) const;
  /// Unique line through two distinct points (-1 if the axioms fail).
  int join(int p, int q) const;
  /// Unique point on two distinct lines (-1 if the axioms fail).
  int meet(int l, int m) const;

  /// Human-readable descriptions of failed plane axioms; empty for a plane.
  std::vector<std::string> axiom_violations() const;

 private:
  int q_ = 0;
  std::vector<Triple> points_;
  std::vector<Triple> lines_;
  std::vector<std::vector<bool>> incidence_;  // [line][point]
};

ProjectivePlane build_plane(int q);

/// Bijection points <-> lines. Node convention: points are 0..N-1 and lines
/// are N..2N-1 (same as IncidenceGraph).
struct Polarity {
  std::vector<int> point_to_line;
  std::vector<int> line_to_point;

  int apply_node(int node) const;
  bool is_involution() const;
  bool is_incidence_compatible(const ProjectivePlane& plane) const;
};

/// p -> the line whose functional has the coordinates of p.
Polarity standard_polarity(const ProjectivePlane& plane);

bool general_position(const ProjectivePlane& plane, std::span<const int> points);

/// Simple undirected graph on at most 64 nodes, with optional edge labels and
/// node colours that automorphisms must preserve.
class Graph {
 public:
  explicit Graph(int size);

  int size() const noexcept { return size_; }
  void add_edge(int u, int v, int label = 1);
  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
  int edge_label(int u, int v) const { return labels_[static_cast<std::size_t>(u * size_ + v)]; }
  std::uint64_t neighbours(int u) const { return adj_[static_cast<std::size_t>(u)]; }
  int degree(int u) const;
  void set_colour(int u, int colour) { colours_[static_cast<std::size_t>(u)] = colour; }
  int colour(int u) const { return colours_[static_cast<std::size_t>(u)]; }
  std::size_t edge_count() const;

  bool is_automorphism(const Permutation& p) const;

 private:
  int size_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> labels_;
  std::vector<int> colours_;
};

/// Bipartite incidence graph with point nodes 0..N-1 (colour 0) and line
/// nodes N..2N-1 (colour 1).
struct IncidenceGraph {
  Graph graph;
  int points = 0;
  bool is_point(int node) const { return node < points; }
};

IncidenceGraph incidence_graph(const ProjectivePlane& plane);

struct AutomorphismGroup {
  std::vector<Permutation> generators;
  std::vector<int> base;
  std::vector<std::size_t> orbit_lengths;
  Integer order;  // product of orbit lengths, confirmed by Schreier-Sims
};

/// Automorphisms of g. Node colours and edge labels are respected only when
/// `use_colours` is set; the incidence-graph checks run colour blind so that
/// dualities are included.
AutomorphismGroup graph_automorphism_group(const Graph& g, bool use_colours = false);

nlohmann::json plane_to_json(const ProjectivePlane& plane);
/// Reads {q, points, lines, flags}; no axiom validation.
ProjectivePlane plane_from_json(const nlohmann::json& j);

}  // namespace hyperlat
