#pragma once

// Hermitian lattice over the Eisenstein integers E = Z[w] built from the
// incidence graph of PG(2,3): E^26 modulo the radical of the Gram pairing,
// its discriminant and signature, the real form fixed by the anti-linear
// involution sigma, and order three triflections.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlat/lorentz.hpp"
#include "hyperlat/plane.hpp"

namespace hyperlat {

/// a + b w with w^2 = -w - 1.
struct EisInt {
  Integer a;
  Integer b;

  EisInt() = default;
  EisInt(Integer a_, Integer b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
  EisInt(long a_) : a(a_), b(0) {}

  static EisInt omega() { return {0, 1}; }
  /// 1 + 2w, a square root of -3.
  static EisInt theta() { return {1, 2}; }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_unit() const;
  /// Rational integer (b == 0).
  bool is_rational() const { return b == 0; }
  EisInt conj() const { return {a - b, -b}; }
  /// a^2 - ab + b^2.
  Integer norm() const;

  EisInt& operator+=(const EisInt& o);
  EisInt& operator-=(const EisInt& o);
  EisInt& operator*=(const EisInt& o);
  friend EisInt operator+(EisInt x, const EisInt& y) { return x += y; }
  friend EisInt operator-(EisInt x, const EisInt& y) { return x -= y; }
  friend EisInt operator*(EisInt x, const EisInt& y) { return x *= y; }
  EisInt operator-() const { return {-a, -b}; }
  bool operator==(const EisInt& o) const { return a == o.a && b == o.b; }

  std::string to_string() const;
};

/// The six units 1, 1+w, w, -1, -1-w, -w.
const std::vector<EisInt>& eis_units();

/// The associate u*z whose argument lies in [0, pi/3), i.e. a - b > 0 and
/// b >= 0; zero maps to zero. `unit` receives u when non-null.
EisInt canonical_associate(const EisInt& z, EisInt* unit = nullptr);

struct EisDivMod {
  EisInt q;
  EisInt r;
};

/// a = q b + r with norm(r) < norm(b); q is the Eisenstein integer nearest
/// to a/b, ties broken by a fixed candidate order relative to the rounded
/// coordinates. Throws std::domain_error for b = 0.
EisDivMod eis_divmod(const EisInt& a, const EisInt& b);

/// Exact quotient; throws std::domain_error unless b divides a.
EisInt eis_exact_div(const EisInt& a, const EisInt& b);

using EisVector = std::vector<EisInt>;

class EisMatrix {
 public:
  EisMatrix() = default;
  EisMatrix(std::size_t rows, std::size_t cols);
  static EisMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const EisInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  EisInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  EisVector row(std::size_t i) const;
  EisMatrix conj_transpose() const;
  bool is_hermitian() const;
  friend EisMatrix operator*(const EisMatrix& x, const EisMatrix& y);
  bool operator==(const EisMatrix& other) const = default;

  /// Bareiss elimination with exact division in E. Square only.
  EisInt determinant() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<EisInt> data_;
};

/// Row Hermite normal form over E: row echelon, each pivot its canonical
/// associate, entries above a pivot reduced by eis_divmod, zero rows last.
/// Depends only on the row module.
EisMatrix hermite_normal_form(EisMatrix m);

/// x G y^* (linear in x, conjugate-linear in y).
EisInt hermitian(const EisVector& x, const EisMatrix& g, const EisVector& y);

/// Generators eps_0..eps_25: the 13 points then the 13 lines. Diagonal 3,
/// theta at (point, incident line), -theta at (line, incident point).
EisMatrix allcock_gram(const ProjectivePlane& plane);

class LatticeStructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// L = E^26 / K with K = {x : x G = 0}. Rows of [basis_lift; relations]
/// form a unimodular matrix, so the basis rows map to an E-basis of L and
/// the relation rows span K (saturated).
struct EisLattice {
  std::size_t point_count = 0;  // generators below this index are points
  EisMatrix gram;               // generator Gram G
  EisMatrix basis_lift;         // U, rank x generators
  EisMatrix relations;          // kernel rows, in Hermite normal form
  EisMatrix echelon;            // U G in Hermite normal form
  EisMatrix basis_gram;         // U G U^*

  std::size_t rank() const { return basis_lift.rows(); }
  /// Coordinates of the class of x in the basis; throws LatticeStructureError
  /// if x G is not in the span of the echelon rows.
  EisVector coordinates(const EisVector& x) const;
  /// x represents 0 in L.
  bool in_kernel(const EisVector& x) const;
  /// Lift of basis coordinates back to generator coordinates.
  EisVector lift(const EisVector& coords) const;
};

/// Throws LatticeStructureError when the rank is not `expected_rank` or the
/// basis Gram is singular.
EisLattice kernel_and_basis(const EisMatrix& g, std::size_t point_count, std::size_t expected_rank = 14);

/// 2 Re<x,y> on the Z-basis v_1..v_r, w v_1..w v_r of L.
IntMatrix realified_gram(const EisLattice& l);

struct DiscriminantSignature {
  Integer det;         // det of the basis Gram, a rational integer
  int positive = 0;    // complex signature
  int negative = 0;
  Inertia realified;   // inertia of realified_gram
};
DiscriminantSignature discriminant_and_signature(const EisLattice& l);

/// sigma(eps_p) = eps_p, sigma(eps_l) = -eps_l, conjugate-linear.
EisVector sigma(const EisLattice& l, const EisVector& x);

struct RealForm {
  bool preserves_kernel = false;
  bool anti_isometry = false;  // on all generator pairs
  bool involution = false;     // sigma^2 = 1 on the Z-basis of L
  IntMatrix sigma_z;           // action on Z^{2r}, row convention
  IntMatrix basis;             // Z-basis of the fixed module, rows in Z^{2r}
  std::size_t rank = 0;
  IntMatrix inner;             // <f_i, f_j>, all rational
  bool inner_real = false;     // every <f_i, f_j> has zero w-part
  bool inner_in_3z = false;
  IntMatrix gram;              // inner / 3
  Integer det;
  Inertia inertia;
  bool odd = false;
  bool eps_p_norm1 = false;       // eps_0 is fixed, of norm 1
  bool theta_eps_l_norm3 = false; // theta eps_13 is fixed, of norm 3
};
RealForm real_form(const EisLattice& l);

/// t(lam) = lam + (w - 1) <lam, eps> / <eps, eps> eps in generator
/// coordinates. Throws std::invalid_argument unless <eps, eps> = 3 and
/// std::domain_error when the coefficient is not in E.
EisVector triflection(const EisLattice& l, const EisVector& eps, const EisVector& lam);

struct TriflectionReport {
  int roots = 0;
  bool preserves_lattice = false;  // every coefficient exact
  bool eps_to_omega_eps = false;   // t(eps) = w eps
  bool preserves_form = false;     // on all generator pairs
  bool order_three = false;        // t^3 = 1 on all generators, modulo K
  std::vector<std::string> failures;
  bool pass() const { return preserves_lattice && eps_to_omega_eps && preserves_form && order_three; }
};
TriflectionReport triflection_check(const EisLattice& l);

/// Left kernel {z : z A = 0} over Z, saturated, rows in Hermite normal form.
IntMatrix integer_left_kernel(const IntMatrix& a);

nlohmann::json to_json(const EisInt& z);
EisInt eis_from_json(const nlohmann::json& j);
nlohmann::json to_json(const EisMatrix& m);

}  // namespace hyperlat
