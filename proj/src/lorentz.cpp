#include "hyperlat/lorentz.hpp"

#include <algorithm>
#include <sstream>

namespace hyperlat {

namespace {

void require_same_dimension(const LatticeVector& x, const LatticeVector& y, const char* where) {
  if (x.size() != y.size()) {
    std::ostringstream os;
    os << where << ": dimension mismatch (" << x.size() << " vs " << y.size() << " coordinates)";
    throw DimensionMismatch(os.str());
  }
}

}  // namespace

LatticeVector::LatticeVector(int n) : coords_(static_cast<std::size_t>(n) + 1, Integer(0)) {
  if (n < 0) throw std::invalid_argument("LatticeVector: negative dimension");
}

LatticeVector::LatticeVector(int n, std::vector<Integer> coords) : coords_(std::move(coords)) {
  if (n < 0 || coords_.size() != static_cast<std::size_t>(n) + 1)
    throw DimensionMismatch("LatticeVector: expected n+1 coordinates");
}

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  if (coords.size() == 0) throw std::invalid_argument("LatticeVector: empty coordinate list");
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::basis(int n, int index) {
  LatticeVector v(n);
  if (index < 0 || index > n) throw std::out_of_range("LatticeVector::basis: index out of range");
  v[static_cast<std::size_t>(index)] = 1;
  return v;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  require_same_dimension(*this, other, "operator+");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  require_same_dimension(*this, other, "operator-");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

bool LatticeVector::operator<(const LatticeVector& other) const {
  return std::lexicographical_compare(coords_.begin(), coords_.end(), other.coords_.begin(),
                                      other.coords_.end());
}

Integer LatticeVector::content() const {
  Integer g = 0;
  for (const auto& c : coords_) g = gcd(g, c);
  return g;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

LatticeVector LatticeVector::primitive() const {
  Integer g = content();
  if (g == 0) throw std::domain_error("primitive: zero vector");
  LatticeVector out = *this;
  for (auto& c : out.coords_) c /= g;
  auto first = std::find_if(out.coords_.begin(), out.coords_.end(),
                            [](const Integer& c) { return c != 0; });
  if (*first < 0) out *= Integer(-1);
  return out;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << coords_[i];
  os << ']';
  return os.str();
}

Integer inner(const LatticeVector& x, const LatticeVector& y) {
  require_same_dimension(x, y, "inner");
  Integer s = -x[0] * y[0];
  for (std::size_t i = 1; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

LatticeVector reflect(const LatticeVector& alpha, const LatticeVector& x) {
  require_same_dimension(alpha, x, "reflect");
  Integer a2 = norm(alpha);
  if (a2 == 0) throw ZeroNormRoot("reflect: root has norm zero");
  Integer num = 2 * inner(x, alpha);
  if (!mpz_divisible_p(num.get_mpz_t(), a2.get_mpz_t()))
    throw NonIntegralReflection("reflect: 2(x,alpha)/alpha^2 = " + num.get_str() + "/" +
                                a2.get_str() + " is not an integer");
  Integer k = num / a2;
  return x - k * alpha;
}

LatticeVector solve_primitive_kernel(std::span<const LatticeVector> rows, int n) {
  const std::size_t cols = static_cast<std::size_t>(n) + 1;
  // Row r of the system is J r, so that (v, r) = (J r) . v.
  std::vector<std::vector<Rational>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("solve_primitive_kernel: row dimension mismatch");
    std::vector<Rational> row(cols);
    row[0] = -r[0];
    for (std::size_t j = 1; j < cols; ++j) row[j] = r[j];
    a.push_back(std::move(row));
  }

  // Reduced row echelon form.
  std::vector<int> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    Rational inv = 1 / a[rank][c];
    for (auto& v : a[rank]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_of_col[c] = static_cast<int>(rank);
    ++rank;
  }

  const std::size_t kernel_dim = cols - rank;
  if (kernel_dim != 1) {
    throw KernelDimensionError(kernel_dim, "solve_primitive_kernel: kernel has dimension " +
                                               std::to_string(kernel_dim) + ", expected 1");
  }

  std::size_t free_col = 0;
  while (pivot_of_col[free_col] != -1) ++free_col;
  std::vector<Rational> sol(cols);
  sol[free_col] = 1;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) sol[c] = -a[static_cast<std::size_t>(pivot_of_col[c])][free_col];
  }

  Integer denom = 1;
  for (const auto& s : sol) denom = lcm(denom, s.get_den());
  std::vector<Integer> coords(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Rational scaled = sol[c] * denom;
    coords[c] = scaled.get_num();
  }
  return LatticeVector(n, std::move(coords)).primitive();
}

SymMatrix::SymMatrix(std::size_t size) : size_(size), entries_(size * size) {}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : size_(rows.size()), entries_(rows.size() * rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != size_) throw std::invalid_argument("SymMatrix: rows must be square");
    std::size_t j = 0;
    for (long v : row) entries_[i * size_ + j++] = v;
    ++i;
  }
  if (!is_symmetric()) throw std::invalid_argument("SymMatrix: input is not symmetric");
}

void SymMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  entries_[i * size_ + j] = value;
  entries_[j * size_ + i] = value;
}

bool SymMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = i + 1; j < size_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

SymMatrix SymMatrix::principal(std::span<const int> indices) const {
  SymMatrix out(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a; b < indices.size(); ++b)
      out.set(a, b, (*this)(static_cast<std::size_t>(indices[a]), static_cast<std::size_t>(indices[b])));
  return out;
}

Inertia signature(const SymMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("signature: matrix is not symmetric");
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;
  Inertia out;

  auto drop = [&live](std::size_t idx) { live.erase(std::find(live.begin(), live.end(), idx)); };

  while (!live.empty()) {
    auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return a[i][i] != 0; });
    if (diag != live.end()) {
      const std::size_t p = *diag;
      const Rational d = a[p][p];
      (d > 0 ? out.positive : out.negative) += 1;
      drop(p);
      for (std::size_t i : live) {
        if (a[i][p] == 0) continue;
        Rational f = a[i][p] / d;
        for (std::size_t j : live) a[i][j] -= f * a[p][j];
      }
      continue;
    }
    // All remaining diagonal entries vanish: look for a hyperbolic 2x2 pivot.
    std::size_t p = n, q = n;
    for (std::size_t i : live) {
      for (std::size_t j : live) {
        if (i != j && a[i][j] != 0) {
          p = i;
          q = j;
          break;
        }
      }
      if (p != n) break;
    }
    if (p == n) {
      out.zero += static_cast<int>(live.size());
      break;
    }
    // [[0,b],[b,0]] contributes one positive and one negative square.
    const Rational b = a[p][q];
    out.positive += 1;
    out.negative += 1;
    drop(p);
    drop(q);
    std::vector<std::vector<Rational>> next = a;
    for (std::size_t i : live)
      for (std::size_t j : live) next[i][j] = a[i][j] - (a[i][p] * a[q][j] + a[i][q] * a[p][j]) / b;
    a = std::move(next);
  }
  return out;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("IntMatrix multiply: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

LatticeVector IntMatrix::apply(const LatticeVector& x) const {
  if (cols_ != x.size() || rows_ == 0) throw DimensionMismatch("IntMatrix::apply: shape mismatch");
  std::vector<Integer> out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
  return LatticeVector(static_cast<int>(rows_) - 1, std::move(out));
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw DimensionMismatch("determinant: matrix is not square");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  std::vector<Integer> m = data_;
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return m[i * n + j]; };
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = t;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

SymMatrix IntMatrix::to_sym() const {
  if (rows_ != cols_) throw DimensionMismatch("to_sym: matrix is not square");
  SymMatrix s(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) throw std::invalid_argument("to_sym: matrix is not symmetric");
      s.set(i, j, Rational((*this)(i, j)));
    }
  return s;
}

IntMatrix lorentz_form(int n) {
  IntMatrix j = IntMatrix::identity(static_cast<std::size_t>(n) + 1);
  j(0, 0) = -1;
  return j;
}

IntMatrix gram_matrix(std::span<const LatticeVector> vectors) {
  IntMatrix g(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i; j < vectors.size(); ++j) {
      g(i, j) = inner(vectors[i], vectors[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

nlohmann::json integer_to_json(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("integer_from_json: expected integer or decimal string");
}

void to_json(nlohmann::json& j, const LatticeVector& v) {
  j = nlohmann::json::array();
  for (const auto& c : v.coords()) j.push_back(integer_to_json(c));
}

void from_json(const nlohmann::json& j, LatticeVector& v) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("LatticeVector JSON must be a nonempty array");
  std::vector<Integer> coords;
  for (const auto& c : j) coords.push_back(integer_from_json(c));
  const int n = static_cast<int>(coords.size()) - 1;
  v = LatticeVector(n, std::move(coords));
}

void to_json(nlohmann::json& j, const IntMatrix& m) {
  j = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_to_json(m(i, k)));
    j.push_back(std::move(row));
  }
}

}  // namespace hyperlat
