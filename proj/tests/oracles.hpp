#pragma once

// Independent reference computations shared by the tests. Nothing here calls
// the algorithms it is used to check.

#include <cmath>
#include <cstdint>
#include <vector>

#include "hyperlat/lorentz.hpp"

namespace oracle {

// Signs of the eigenvalues (cyclic Jacobi); fine for small integer matrices
// whose nonzero eigenvalues are well away from zero.
inline hyperlat::Inertia jacobi_inertia(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-22) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  hyperlat::Inertia out;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] > 1e-7) ++out.positive;
    else if (a[i][i] < -1e-7) ++out.negative;
    else ++out.zero;
  }
  return out;
}

inline hyperlat::Inertia principal_inertia(const hyperlat::IntMatrix& g, std::uint64_t subset) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < g.rows(); ++i)
    if ((subset >> i) & 1u) idx.push_back(i);
  std::vector<std::vector<double>> a(idx.size(), std::vector<double>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) a[i][j] = g(idx[i], idx[j]).get_d();
  return jacobi_inertia(a);
}

// Connected components of the subset in the graph "Gram entry nonzero".
inline std::vector<std::uint64_t> components(const hyperlat::IntMatrix& g, std::uint64_t subset) {
  std::vector<std::uint64_t> out;
  std::uint64_t left = subset;
  while (left) {
    std::uint64_t comp = left & (~left + 1), frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::size_t i = 0; i < g.rows(); ++i)
        if ((frontier >> i) & 1u)
          for (std::size_t j = 0; j < g.rows(); ++j)
            if (((left >> j) & 1u) && !((comp >> j) & 1u) && g(i, j) != 0) next |= std::uint64_t{1} << j;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

inline bool elliptic(const hyperlat::IntMatrix& g, std::uint64_t s) {
  const auto in = principal_inertia(g, s);
  return in.zero == 0 && in.negative == 0;
}

// Positive semidefinite, singular, with every component singular.
inline bool parabolic(const hyperlat::IntMatrix& g, std::uint64_t s) {
  if (s == 0) return false;
  for (auto c : components(g, s)) {
    const auto in = principal_inertia(g, c);
    if (in.negative != 0 || in.zero == 0) return false;
  }
  return true;
}

}  // namespace oracle
