#include "hyperlat/allcock.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace hyperlat {

bool EisInt::is_unit() const { return norm() == 1; }

Integer EisInt::norm() const { return a * a - a * b + b * b; }

EisInt& EisInt::operator+=(const EisInt& o) {
  a += o.a;
  b += o.b;
  return *this;
}

EisInt& EisInt::operator-=(const EisInt& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

EisInt& EisInt::operator*=(const EisInt& o) {
  // (a + bw)(c + dw) = ac + (ad + bc) w + bd w^2, w^2 = -1 - w
  const Integer bd = b * o.b;
  const Integer na = a * o.a - bd;
  const Integer nb = a * o.b + b * o.a - bd;
  a = na;
  b = nb;
  return *this;
}

std::string EisInt::to_string() const {
  if (b == 0) return a.get_str();
  std::string out;
  if (a != 0) out = a.get_str() + (b > 0 ? "+" : "-");
  else if (b < 0) out = "-";
  const Integer mag = abs(b);
  if (mag != 1) out += mag.get_str();
  return out + "w";
}

const std::vector<EisInt>& eis_units() {
  static const std::vector<EisInt> units{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
  return units;
}

EisInt canonical_associate(const EisInt& z, EisInt* unit) {
  if (z.is_zero()) {
    if (unit) *unit = EisInt(1);
    return z;
  }
  for (const auto& u : eis_units()) {
    EisInt c = u * z;
    if (c.a - c.b > 0 && c.b >= 0) {
      if (unit) *unit = u;
      return c;
    }
  }
  throw std::logic_error("canonical_associate: no associate in the sector");
}

namespace {

// Nearest integer to p / q (q > 0), halves rounded up.
Integer round_div(const Integer& p, const Integer& q) {
  Integer out;
  const Integer num = 2 * p + q;
  const Integer den = 2 * q;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace

EisDivMod eis_divmod(const EisInt& a, const EisInt& b) {
  if (b.is_zero()) throw std::domain_error("eis_divmod: division by zero");
  const EisInt num = a * b.conj();
  const Integer n = b.norm();
  const EisInt q0(round_div(num.a, n), round_div(num.b, n));
  static constexpr std::array<std::pair<int, int>, 9> offsets{
      {{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}}};
  EisDivMod best;
  Integer best_norm;
  bool have = false;
  for (auto [da, db] : offsets) {
    EisInt q(q0.a + da, q0.b + db);
    EisInt r = a - q * b;
    Integer rn = r.norm();
    if (!have || rn < best_norm) {
      best = {std::move(q), std::move(r)};
      best_norm = std::move(rn);
      have = true;
    }
  }
  return best;
}

EisInt eis_exact_div(const EisInt& a, const EisInt& b) {
  auto [q, r] = eis_divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("eis_exact_div: " + b.to_string() + " does not divide " + a.to_string());
  return q;
}

EisMatrix::EisMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

EisMatrix EisMatrix::identity(std::size_t n) {
  EisMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = EisInt(1);
  return m;
}

EisVector EisMatrix::row(std::size_t i) const {
  return EisVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

EisMatrix EisMatrix::conj_transpose() const {
  EisMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
  return t;
}

bool EisMatrix::is_hermitian() const { return rows_ == cols_ && *this == conj_transpose(); }

EisMatrix operator*(const EisMatrix& x, const EisMatrix& y) {
  if (x.cols_ != y.rows_) throw DimensionMismatch("EisMatrix product: inner dimensions differ");
  EisMatrix out(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const EisInt& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j)
        if (!y(k, j).is_zero()) out(i, j) += xik * y(k, j);
    }
  return out;
}

EisInt EisMatrix::determinant() const {
  if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return EisInt(1);
  EisMatrix m = *this;
  EisInt prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t i = k + 1;
      while (i < n && m(i, k).is_zero()) ++i;
      if (i == n) return EisInt(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(i, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = eis_exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  EisInt d = m(n - 1, n - 1);
  return negate ? -d : d;
}

EisMatrix hermite_normal_form(EisMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  auto axpy = [&](std::size_t target, const EisInt& factor, std::size_t source) {
    // row_target -= factor * row_source
    for (std::size_t j = 0; j < cols; ++j)
      if (!m(source, j).is_zero()) m(target, j) -= factor * m(source, j);
  };
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (!m(i, col).is_zero() && (best == rows || m(i, col).norm() < m(best, col).norm())) best = i;
      if (best == rows) break;
      if (best != r)
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(best, j));
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m(i, col).is_zero()) continue;
        axpy(i, eis_divmod(m(i, col), m(r, col)).q, r);
        if (!m(i, col).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (r >= rows || m(r, col).is_zero()) continue;
    EisInt unit;
    canonical_associate(m(r, col), &unit);
    for (std::size_t j = 0; j < cols; ++j) m(r, j) *= unit;
    for (std::size_t i = 0; i < r; ++i)
      if (!m(i, col).is_zero()) axpy(i, eis_divmod(m(i, col), m(r, col)).q, r);
    ++r;
  }
  return m;
}

EisInt hermitian(const EisVector& x, const EisMatrix& g, const EisVector& y) {
  if (x.size() != g.rows() || y.size() != g.cols()) throw DimensionMismatch("hermitian: vector length differs from Gram size");
  EisInt total;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    EisInt s;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero() && !g(i, j).is_zero()) s += g(i, j) * y[j].conj();
    total += x[i] * s;
  }
  return total;
}

EisMatrix allcock_gram(const ProjectivePlane& plane) {
  const std::size_t n = static_cast<std::size_t>(plane.size());
  EisMatrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) g(i, i) = EisInt(3);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t l = 0; l < n; ++l)
      if (plane.incident(static_cast<int>(p), static_cast<int>(l))) {
        g(p, n + l) = EisInt::theta();
        g(n + l, p) = EisInt::theta().conj();
      }
  return g;
}

namespace {

EisVector row_times(const EisVector& x, const EisMatrix& m) {
  EisVector out(m.cols());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out[j] += x[i] * m(i, j);
  }
  return out;
}

bool all_zero(const EisVector& v) {
  return std::all_of(v.begin(), v.end(), [](const EisInt& z) { return z.is_zero(); });
}

EisVector unit_vector(std::size_t n, std::size_t i, const EisInt& value = EisInt(1)) {
  EisVector v(n);
  v[i] = value;
  return v;
}

}  // namespace

EisVector EisLattice::coordinates(const EisVector& x) const {
  EisVector y = row_times(x, gram);
  EisVector c(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    std::size_t j = 0;
    while (echelon(k, j).is_zero()) ++j;
    auto [q, rem] = eis_divmod(y[j], echelon(k, j));
    if (!rem.is_zero()) throw LatticeStructureError("coordinates: vector not in the lattice");
    for (std::size_t t = j; t < echelon.cols(); ++t)
      if (!echelon(k, t).is_zero()) y[t] -= q * echelon(k, t);
    c[k] = std::move(q);
  }
  if (!all_zero(y)) throw LatticeStructureError("coordinates: vector not in the lattice");
  return c;
}

bool EisLattice::in_kernel(const EisVector& x) const { return all_zero(row_times(x, gram)); }

EisVector EisLattice::lift(const EisVector& coords) const { return row_times(coords, basis_lift); }

EisLattice kernel_and_basis(const EisMatrix& g, std::size_t point_count, std::size_t expected_rank) {
  if (!g.is_hermitian()) throw LatticeStructureError("kernel_and_basis: Gram matrix is not Hermitian");
  const std::size_t n = g.rows();
  EisMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = g(i, j);
    a(i, n + i) = EisInt(1);
  }
  const EisMatrix h = hermite_normal_form(std::move(a));
  std::size_t r = 0;
  while (r < n) {
    bool zero = true;
    for (std::size_t j = 0; j < n && zero; ++j) zero = h(r, j).is_zero();
    if (zero) break;
    ++r;
  }
  if (r != expected_rank)
    throw LatticeStructureError("kernel_and_basis: rank " + std::to_string(r) + ", expected " + std::to_string(expected_rank));

  EisLattice l;
  l.point_count = point_count;
  l.gram = g;
  l.basis_lift = EisMatrix(r, n);
  l.echelon = EisMatrix(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      l.echelon(i, j) = h(i, j);
      l.basis_lift(i, j) = h(i, n + j);
    }
  EisMatrix rel(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel(i - r, j) = h(i, n + j);
  l.relations = hermite_normal_form(std::move(rel));
  for (std::size_t i = 0; i < l.relations.rows(); ++i)
    if (!l.in_kernel(l.relations.row(i))) throw LatticeStructureError("kernel_and_basis: relation row does not pair to zero");
  l.basis_gram = l.basis_lift * g * l.basis_lift.conj_transpose();
  if (l.basis_gram.determinant().is_zero()) throw LatticeStructureError("kernel_and_basis: basis Gram is singular");
  return l;
}

namespace {

// 1 or w, the E-multiplier of the i-th Z-basis vector.
EisInt z_basis_scalar(std::size_t i, std::size_t r) { return i < r ? EisInt(1) : EisInt::omega(); }

}  // namespace

IntMatrix realified_gram(const EisLattice& l) {
  const std::size_t r = l.rank();
  IntMatrix s(2 * r, 2 * r);
  for (std::size_t i = 0; i < 2 * r; ++i)
    for (std::size_t j = 0; j < 2 * r; ++j) {
      const EisInt v = z_basis_scalar(i, r) * z_basis_scalar(j, r).conj() * l.basis_gram(i % r, j % r);
      s(i, j) = 2 * v.a - v.b;
    }
  return s;
}

DiscriminantSignature discriminant_and_signature(const EisLattice& l) {
  DiscriminantSignature out;
  const EisInt d = l.basis_gram.determinant();
  if (!d.is_rational()) throw LatticeStructureError("Hermitian determinant is not a rational integer");
  out.det = d.a;
  out.realified = signature(realified_gram(l).to_sym());
  out.positive = out.realified.positive / 2;
  out.negative = out.realified.negative / 2;
  return out;
}

EisVector sigma(const EisLattice& l, const EisVector& x) {
  EisVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = i < l.point_count ? x[i].conj() : -x[i].conj();
  return out;
}

namespace {

std::vector<Integer> to_z(const EisVector& c) {
  std::vector<Integer> z(2 * c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    z[k] = c[k].a;
    z[c.size() + k] = c[k].b;
  }
  return z;
}

EisVector from_z(const IntMatrix& m, std::size_t row, std::size_t r) {
  EisVector c(r);
  for (std::size_t k = 0; k < r; ++k) c[k] = EisInt(m(row, k), m(row, r + k));
  return c;
}

}  // namespace

RealForm real_form(const EisLattice& l) {
  RealForm out;
  const std::size_t n = l.gram.rows(), r = l.rank();

  out.preserves_kernel = true;
  for (std::size_t i = 0; i < l.relations.rows(); ++i)
    if (!l.in_kernel(sigma(l, l.relations.row(i)))) out.preserves_kernel = false;

  out.anti_isometry = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const EisInt lhs = hermitian(sigma(l, unit_vector(n, i)), l.gram, sigma(l, unit_vector(n, j)));
      if (!(lhs == l.gram(i, j).conj())) out.anti_isometry = false;
    }

  out.sigma_z = IntMatrix(2 * r, 2 * r);
  for (std::size_t i = 0; i < 2 * r; ++i) {
    EisVector c(r);
    c[i % r] = z_basis_scalar(i, r);
    const auto z = to_z(l.coordinates(sigma(l, l.lift(c))));
    for (std::size_t j = 0; j < 2 * r; ++j) out.sigma_z(i, j) = z[j];
  }
  out.involution = out.sigma_z * out.sigma_z == IntMatrix::identity(2 * r);

  IntMatrix shifted = out.sigma_z;
  for (std::size_t i = 0; i < 2 * r; ++i) shifted(i, i) -= 1;
  out.basis = integer_left_kernel(shifted);
  out.rank = out.basis.rows();

  const std::size_t m = out.rank;
  out.inner = IntMatrix(m, m);
  out.gram = IntMatrix(m, m);
  out.inner_real = out.inner_in_3z = true;
  std::vector<EisVector> coords;
  for (std::size_t i = 0; i < m; ++i) coords.push_back(from_z(out.basis, i, r));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const EisInt v = hermitian(coords[i], l.basis_gram, coords[j]);
      if (!v.is_rational()) out.inner_real = false;
      out.inner(i, j) = v.a;
      if (v.a % 3 != 0) out.inner_in_3z = false;
      out.gram(i, j) = v.a / 3;
    }
  if (m > 0 && out.inner_real && out.inner_in_3z) {
    out.det = out.gram.determinant();
    out.inertia = signature(out.gram.to_sym());
    for (std::size_t i = 0; i < m; ++i)
      if (out.gram(i, i) % 2 != 0) out.odd = true;
  }

  auto fixed_with_norm = [&](const EisVector& x, long expected) {
    const auto z = to_z(l.coordinates(x));
    for (std::size_t j = 0; j < 2 * r; ++j) {
      Integer s;
      for (std::size_t i = 0; i < 2 * r; ++i) s += z[i] * out.sigma_z(i, j);
      if (s != z[j]) return false;
    }
    return hermitian(x, l.gram, x) == EisInt(3 * expected);
  };
  if (l.point_count > 0 && l.point_count < n) {
    out.eps_p_norm1 = fixed_with_norm(unit_vector(n, 0), 1);
    out.theta_eps_l_norm3 = fixed_with_norm(unit_vector(n, l.point_count, EisInt::theta()), 3);
  }
  return out;
}

EisVector triflection(const EisLattice& l, const EisVector& eps, const EisVector& lam) {
  if (!(hermitian(eps, l.gram, eps) == EisInt(3))) throw std::invalid_argument("triflection: root must have norm 3");
  const EisInt coef = eis_exact_div((EisInt::omega() - EisInt(1)) * hermitian(lam, l.gram, eps), EisInt(3));
  EisVector out = lam;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!eps[i].is_zero()) out[i] += coef * eps[i];
  return out;
}

TriflectionReport triflection_check(const EisLattice& l) {
  TriflectionReport rep;
  const std::size_t n = l.gram.rows();
  rep.preserves_lattice = rep.eps_to_omega_eps = rep.preserves_form = rep.order_three = true;
  for (std::size_t e = 0; e < n; ++e) {
    ++rep.roots;
    const EisVector eps = unit_vector(n, e);
    const std::string tag = "t_" + std::to_string(e);
    EisMatrix images(n, n);
    try {
      for (std::size_t j = 0; j < n; ++j) {
        const EisVector t = triflection(l, eps, unit_vector(n, j));
        for (std::size_t k = 0; k < n; ++k) images(j, k) = t[k];
        const EisVector t3 = triflection(l, eps, triflection(l, eps, t));
        EisVector diff = t3;
        diff[j] -= EisInt(1);
        if (!l.in_kernel(diff)) {
          rep.order_three = false;
          rep.failures.push_back(tag + ": cube differs on generator " + std::to_string(j));
        }
      }
    } catch (const std::domain_error& ex) {
      rep.preserves_lattice = false;
      rep.failures.push_back(tag + ": " + ex.what());
      continue;
    }
    if (!(images.row(e) == unit_vector(n, e, EisInt::omega()))) {
      rep.eps_to_omega_eps = false;
      rep.failures.push_back(tag + ": image of the root is not w times the root");
    }
    if (!(images * l.gram * images.conj_transpose() == l.gram)) {
      rep.preserves_form = false;
      rep.failures.push_back(tag + ": form not preserved");
    }
  }
  return rep;
}

IntMatrix integer_left_kernel(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols(), width = cols + rows;
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(width));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j);
    m[i][cols + i] = 1;
  }
  auto axpy = [&](std::size_t target, const Integer& f, std::size_t source) {
    for (std::size_t j = 0; j < width; ++j)
      if (m[source][j] != 0) m[target][j] -= f * m[source][j];
  };
  auto hnf = [&]() {
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < rows; ++col) {
      for (;;) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i)
          if (m[i][col] != 0 && (best == rows || abs(m[i][col]) < abs(m[best][col]))) best = i;
        if (best == rows) break;
        std::swap(m[r], m[best]);
        bool clean = true;
        for (std::size_t i = r + 1; i < rows; ++i) {
          if (m[i][col] == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[r][col].get_mpz_t());
          axpy(i, q, r);
          if (m[i][col] != 0) clean = false;
        }
        if (clean) break;
      }
      if (r >= rows || m[r][col] == 0) continue;
      if (m[r][col] < 0)
        for (auto& x : m[r]) x = -x;
      for (std::size_t i = 0; i < r; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[r][col].get_mpz_t());
        if (q != 0) axpy(i, q, r);
      }
      ++r;
    }
  };
  hnf();
  // echelon form puts the rows with zero A-part last
  std::size_t r = 0;
  while (r < rows && std::any_of(m[r].begin(), m[r].begin() + static_cast<std::ptrdiff_t>(cols), [](const Integer& x) { return x != 0; })) ++r;
  IntMatrix out(rows - r, rows);
  for (std::size_t i = r; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j) out(i - r, j) = m[i][cols + j];
  return out;
}

nlohmann::json to_json(const EisInt& z) { return nlohmann::json::array({integer_to_json(z.a), integer_to_json(z.b)}); }

EisInt eis_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("EisInt JSON must be [a, b]");
  return {integer_from_json(j[0]), integer_from_json(j[1])};
}

nlohmann::json to_json(const EisMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace hyperlat
