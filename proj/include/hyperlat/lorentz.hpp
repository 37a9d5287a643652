#pragma once

// Exact arithmetic in the odd unimodular Lorentzian lattice Z^{n,1}.
//
// Coordinates are (x_0, x_1, ..., x_n) with (e_0,e_0) = -1, (e_p,e_q) = delta_pq
// and (e_0,e_p) = 0. Everything is arbitrary precision; there is no floating
// point anywhere in this module.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace hyperlat {

using Integer = mpz_class;
using Rational = mpq_class;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroNormRoot : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a reflection of a lattice vector leaves the lattice.
class NonIntegralReflection : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class KernelDimensionError : public std::runtime_error {
 public:
  KernelDimensionError(std::size_t dimension, const std::string& what)
      : std::runtime_error(what), dimension_(dimension) {}
  std::size_t dimension() const noexcept { return dimension_; }

 private:
  std::size_t dimension_;
};

/// Integer vector in Z^{n,1}; holds n+1 coordinates.
class LatticeVector {
 public:
  LatticeVector() = default;
  /// Zero vector of Z^{n,1}.
  explicit LatticeVector(int n);
  LatticeVector(int n, std::vector<Integer> coords);
  LatticeVector(std::initializer_list<long> coords);

  static LatticeVector basis(int n, int index);

  int n() const noexcept { return static_cast<int>(coords_.size()) - 1; }
  std::size_t size() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const noexcept { return coords_; }

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector& operator*=(const Integer& k);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& k, LatticeVector a) { return a *= k; }
  friend LatticeVector operator-(LatticeVector a) { return a *= Integer(-1); }

  bool operator==(const LatticeVector& other) const { return coords_ == other.coords_; }
  bool operator<(const LatticeVector& other) const;

  Integer content() const;  // gcd of the coordinates
  bool is_primitive() const { return content() == 1; }
  bool is_zero() const;
  /// Divide by the content and orient: x_0 > 0, or first nonzero coordinate
  /// positive when x_0 = 0.
  LatticeVector primitive() const;

  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

Integer inner(const LatticeVector& x, const LatticeVector& y);
inline Integer norm(const LatticeVector& x) { return inner(x, x); }

/// s_alpha(x) = x - 2 (x,alpha) alpha / (alpha,alpha).
LatticeVector reflect(const LatticeVector& alpha, const LatticeVector& x);

/// Unique primitive vector orthogonal (for the Lorentzian form) to every row,
/// oriented with x_0 > 0. Throws KernelDimensionError unless the orthogonal
/// complement is one dimensional.
LatticeVector solve_primitive_kernel(std::span<const LatticeVector> rows, int n);

/// Dense square symmetric matrix of rationals.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t size);
  SymMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t size() const noexcept { return size_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  /// Sets both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, const Rational& value);
  bool is_symmetric() const;

  SymMatrix principal(std::span<const int> indices) const;

 private:
  std::size_t size_ = 0;
  std::vector<Rational> entries_;
};

struct Inertia {
  int positive = 0;
  int zero = 0;
  int negative = 0;
  bool operator==(const Inertia&) const = default;
};

/// Sylvester inertia by exact congruence elimination.
Inertia signature(const SymMatrix& m);

/// Dense integer matrix, row major; used for Gram matrices and linear maps.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix& other) const = default;

  /// Matrix times column vector.
  LatticeVector apply(const LatticeVector& x) const;
  Integer determinant() const;  // Bareiss, square only
  SymMatrix to_sym() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// diag(-1, 1, ..., 1) of size n+1.
IntMatrix lorentz_form(int n);

/// Gram matrix of the given vectors.
IntMatrix gram_matrix(std::span<const LatticeVector> vectors);

nlohmann::json integer_to_json(const Integer& value);
Integer integer_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const LatticeVector& v);
void from_json(const nlohmann::json& j, LatticeVector& v);
void to_json(nlohmann::json& j, const IntMatrix& m);

}  // namespace hyperlat
