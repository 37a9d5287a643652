#include "hyperlat/perm_group.hpp"

#include <algorithm>
#include <deque>

namespace hyperlat {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int x : image_) {
    if (x < 0 || static_cast<std::size_t>(x) >= image_.size() || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("Permutation: image is not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<int> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<int>(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("Permutation product: degree mismatch");
  Permutation out;
  out.image_.resize(g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) out.image_[i] = h.image_[static_cast<std::size_t>(g.image_[i])];
  return out;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw std::invalid_argument("PermGroup: generator has wrong degree");
}

void PermGroup::recompute_orbit(Level& level) const {
  level.transversal.assign(degree_, std::nullopt);
  level.orbit.clear();
  level.transversal[static_cast<std::size_t>(level.base_point)] = Permutation::identity(degree_);
  level.orbit.push_back(level.base_point);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const int x = level.orbit[k];
    for (const auto& s : level.strong_gens) {
      const int y = s(x);
      if (!level.transversal[static_cast<std::size_t>(y)]) {
        level.transversal[static_cast<std::size_t>(y)] = *level.transversal[static_cast<std::size_t>(x)] * s;
        level.orbit.push_back(y);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(const Permutation& g, std::size_t start) const {
  Permutation h = g;
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const int beta = h(levels_[i].base_point);
    const auto& u = levels_[i].transversal[static_cast<std::size_t>(beta)];
    if (!u) return {h, i};
    h = h * u->inverse();
  }
  return {h, levels_.size()};
}

void PermGroup::build() const {
  if (built_) return;
  levels_.clear();

  auto first_moved = [](const Permutation& p) {
    for (std::size_t x = 0; x < p.degree(); ++x)
      if (p(static_cast<int>(x)) != static_cast<int>(x)) return static_cast<int>(x);
    return -1;
  };

  // Initial base: extend until no generator fixes every base point.
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    bool fixes_all = std::all_of(levels_.begin(), levels_.end(),
                                 [&](const Level& l) { return g(l.base_point) == l.base_point; });
    if (fixes_all) {
      Level l;
      l.base_point = first_moved(g);
      levels_.push_back(std::move(l));
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : generators_) {
      if (g.is_identity()) continue;
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j)
        if (g(levels_[j].base_point) != levels_[j].base_point) fixes_prefix = false;
      if (fixes_prefix) levels_[i].strong_gens.push_back(g);
    }
    recompute_orbit(levels_[i]);
  }

  // Deterministic Schreier-Sims: process levels bottom-up, restarting at the
  // deepest level touched whenever a new strong generator is added.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool added = false;
    Level& level = levels_[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; !added && k < level.orbit.size(); ++k) {
      const int beta = level.orbit[k];
      const Permutation& u_beta = *level.transversal[static_cast<std::size_t>(beta)];
      for (std::size_t s = 0; !added && s < level.strong_gens.size(); ++s) {
        const Permutation& gen = level.strong_gens[s];
        const int image = gen(beta);
        Permutation schreier = u_beta * gen * level.transversal[static_cast<std::size_t>(image)]->inverse();
        auto [h, j] = strip(schreier, static_cast<std::size_t>(i) + 1);
        if (h.is_identity()) continue;
        // `level` may dangle after the push_back below; nothing reads it again.
        if (j == levels_.size()) {
          Level fresh;
          fresh.base_point = first_moved(h);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].strong_gens.push_back(h);
          recompute_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        added = true;
      }
    }
    if (!added) --i;
  }

  base_.clear();
  for (const auto& l : levels_) base_.push_back(l.base_point);
  built_ = true;
}

Integer PermGroup::order() const {
  build();
  Integer n = 1;
  for (const auto& l : levels_) n *= static_cast<unsigned long>(l.orbit.size());
  return n;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  build();
  auto [h, j] = strip(g, 0);
  return j == levels_.size() && h.is_identity();
}

const std::vector<int>& PermGroup::base() const {
  build();
  return base_;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  build();
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.orbit.size());
  return out;
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<bool> seen(degree_, false);
  std::vector<int> out{point};
  seen[static_cast<std::size_t>(point)] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : generators_) {
      int y = g(out[k]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperlat
