#include <doctest.h>

#include <random>

#include "hyperlat/lorentz.hpp"
#include "oracles.hpp"

using namespace hyperlat;

namespace {

LatticeVector random_vector(std::mt19937_64& rng, int n, int bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  for (auto& x : c) x = d(rng);
  return LatticeVector(n, std::move(c));
}

// Roots of norm 1 and 2 whose reflections are integral on all of Z^{n,1}.
LatticeVector random_root(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> pick(1, n);
  const int kind = static_cast<int>(rng() % 3);
  if (kind == 0) return LatticeVector::basis(n, pick(rng));
  if (kind == 1) {
    int i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    return LatticeVector::basis(n, i) - LatticeVector::basis(n, j);
  }
  // e_0 - e_i - e_j - e_k with distinct i, j, k
  std::vector<int> idx{1};
  while (idx.size() < 3) {
    int c = pick(rng);
    if (std::find(idx.begin(), idx.end(), c) == idx.end()) idx.push_back(c);
  }
  LatticeVector r = LatticeVector::basis(n, 0);
  for (int i : idx) r -= LatticeVector::basis(n, i);
  return r;
}

}  // namespace

TEST_CASE("inner product uses -x0 y0 + sum xp yp") {
  const LatticeVector x{3, 1, 2, 0}, y{1, -1, 4, 7};
  CHECK(inner(x, y) == -3 - 1 + 8 + 0);
  CHECK(norm(LatticeVector::basis(3, 0)) == -1);
  CHECK(norm(LatticeVector{3, 1, 1, 1, 1, 1, 1, 1}) == 7 - 9);
  CHECK_THROWS_AS(inner(LatticeVector{1, 0}, LatticeVector{1, 0, 0}), DimensionMismatch);
}

TEST_CASE("reflections") {
  const LatticeVector e1 = LatticeVector::basis(3, 1);
  CHECK(reflect(e1, e1) == -e1);
  const LatticeVector a{1, 1, 1, 1};  // e_0 + e_1 + e_2 + e_3 read as coordinates, norm 2
  CHECK(norm(a) == 2);
  CHECK(reflect(a, a) == -a);
  CHECK_THROWS_AS(reflect(LatticeVector{1, 1, 0, 0}, e1), ZeroNormRoot);
  CHECK_THROWS_AS(reflect(LatticeVector{0, 1, 1, 1}, e1), NonIntegralReflection);
}

TEST_CASE("reflection is an isometric involution (property)") {
  std::mt19937_64 rng(20240607);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 11);
    const LatticeVector alpha = random_root(rng, n);
    const LatticeVector x = random_vector(rng, n, 9), y = random_vector(rng, n, 9);
    const LatticeVector sx = reflect(alpha, x), sy = reflect(alpha, y);
    CHECK(inner(sx, sy) == inner(x, y));
    CHECK(reflect(alpha, sx) == x);
    CHECK(reflect(alpha, alpha) == -alpha);
  }
}

TEST_CASE("primitive and content") {
  const LatticeVector v{-4, 2, 6, 0};
  CHECK(v.content() == 2);
  CHECK(v.primitive() == LatticeVector{2, -1, -3, 0});
  CHECK(LatticeVector{0, 0, -3}.primitive() == LatticeVector{0, 0, 1});
  CHECK(LatticeVector(3).is_zero());
}

TEST_CASE("signature examples") {
  CHECK(signature(lorentz_form(7).to_sym()) == Inertia{7, 0, 1});
  CHECK(signature(SymMatrix{{0, 1}, {1, 0}}) == Inertia{1, 0, 1});
  CHECK(signature(SymMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == Inertia{3, 0, 0});
  // affine A_2: one null direction
  CHECK(signature(SymMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}) == Inertia{2, 1, 0});
  CHECK(signature(SymMatrix{{0, 0}, {0, 0}}) == Inertia{0, 2, 0});
}

TEST_CASE("signature is a congruence invariant and matches eigenvalue signs (property)") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    IntMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = entry(rng);
    // unimodular P as a product of elementary operations
    IntMatrix p = IntMatrix::identity(n);
    for (int k = 0; k < 6; ++k) {
      IntMatrix e = IntMatrix::identity(n);
      const std::size_t i = rng() % n, j = rng() % n;
      if (i == j) e(i, i) = -1;
      else e(i, j) = entry(rng);
      p = p * e;
    }
    const Inertia base = signature(s.to_sym());
    CHECK(signature((p.transpose() * s * p).to_sym()) == base);
    CHECK(base.positive + base.zero + base.negative == static_cast<int>(n));

    std::vector<std::vector<double>> d(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = s(i, j).get_d();
    CHECK(oracle::jacobi_inertia(d) == base);
  }
}

TEST_CASE("determinant") {
  IntMatrix m(3, 3);
  long v[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = v[i][j];
  CHECK(m.determinant() == 4);
  CHECK(lorentz_form(13).determinant() == -1);
}

TEST_CASE("kernel solver") {
  // e_1, e_2, e_3 cut out the e_0 axis
  std::vector<LatticeVector> rows{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK(solve_primitive_kernel(rows, 3) == LatticeVector{1, 0, 0, 0});
  rows.pop_back();
  CHECK_THROWS_AS(solve_primitive_kernel(rows, 3), KernelDimensionError);
  try {
    solve_primitive_kernel(rows, 3);
  } catch (const KernelDimensionError& e) {
    CHECK(e.dimension() == 2);
  }
}

TEST_CASE("kernel solver postconditions (property)") {
  std::mt19937_64 rng(4242);
  int solved = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const std::size_t count = static_cast<std::size_t>(n) - (rng() % 3 == 0 ? 1 : 0);
    std::vector<LatticeVector> rows;
    for (std::size_t i = 0; i < count; ++i) rows.push_back(random_vector(rng, n, 4));
    try {
      const LatticeVector v = solve_primitive_kernel(rows, n);
      ++solved;
      for (const auto& r : rows) CHECK(inner(v, r) == 0);
      CHECK(v.is_primitive());
      CHECK(!v.is_zero());
      CHECK(v == v.primitive());
    } catch (const KernelDimensionError& e) {
      CHECK(e.dimension() != 1);
    }
  }
  CHECK(solved > 100);
}

TEST_CASE("json round trip") {
  const LatticeVector v{5, -2, 0, 123456789};
  nlohmann::json j = v;
  CHECK(j.get<LatticeVector>() == v);
  Integer big("123456789012345678901234567890");
  CHECK(integer_from_json(integer_to_json(big)) == big);
}
