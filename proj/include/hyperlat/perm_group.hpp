#pragma once

// Permutation groups on {0, ..., degree-1} with a deterministic Schreier-Sims
// stabilizer chain.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hyperlat/lorentz.hpp"

namespace hyperlat {

/// Bijection of {0,...,m-1}. Products act on the right:
/// (g * h)(x) = h(g(x)), i.e. first g, then h.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return image_.size(); }
  int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& image() const noexcept { return image_; }

  bool is_identity() const;
  Permutation inverse() const;
  friend Permutation operator*(const Permutation& g, const Permutation& h);
  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& other) const { return image_ < other.image_; }

 private:
  std::vector<int> image_;
};

class PermGroup {
 public:
  /// Throws std::invalid_argument if a generator is not a bijection of the
  /// given degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  Integer order() const;
  bool contains(const Permutation& g) const;
  const std::vector<int>& base() const;
  /// Fundamental orbit lengths along the base.
  std::vector<std::size_t> orbit_lengths() const;
  /// Orbit of a point under the whole group.
  std::vector<int> orbit(int point) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> strong_gens;
    // transversal[x] maps base_point to x; empty when x is not in the orbit.
    std::vector<std::optional<Permutation>> transversal;
    std::vector<int> orbit;
  };

  void build() const;
  void recompute_orbit(Level& level) const;
  /// Sifts g from level `start`; returns residue and the level at which
  /// sifting stopped (== number of levels when it went all the way).
  std::pair<Permutation, std::size_t> strip(const Permutation& g, std::size_t start) const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  mutable bool built_ = false;
  mutable std::vector<Level> levels_;
  mutable std::vector<int> base_;
};

}  // namespace hyperlat
