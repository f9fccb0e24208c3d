#include "lietriple/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "lietriple/errors.hpp"

namespace lietriple {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string body(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(body, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_integer(num)) throw InputError("malformed rational '" + std::string(text) + "'");
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_integer(num));
  } else {
    std::string_view den = text.substr(slash + 1);
    if (!valid_integer(den) || den[0] == '-' || den[0] == '+')
      throw InputError("malformed rational '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    q = Rational(parse_integer(num), d);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

void axpy(Vector& y, const Rational& a, const Vector& x) {
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += a * x[i];
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Rational& a, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = a * v[i];
  return r;
}

SparseVector to_sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.emplace_back(i, v[i]);
  return s;
}

std::optional<std::size_t> first_nonzero(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) return i;
  return std::nullopt;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_)
    throw InputError("matrix has " + std::to_string(cols_) + " columns, vector has " +
                     std::to_string(x.size()) + " entries");
  Vector y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(x[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (sgn((*this)(r, c)) != 0) y[r] += (*this)(r, c) * x[c];
  }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return lietriple::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw InputError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw InputError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& a) {
  for (auto& x : data_) x *= a;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw InputError("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                     " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Vector SparseMatrix::apply(const Vector& x) const {
  if (x.size() != cols_)
    throw InputError("operator has " + std::to_string(cols_) + " columns, vector has " +
                     std::to_string(x.size()) + " entries");
  Vector y(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r])
      if (sgn(x[c]) != 0) y[r] += v * x[c];
  return y;
}

Matrix SparseMatrix::dense() const {
  Matrix m(rows_.size(), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) m(r, c) = v;
  return m;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& b) const {
  if (cols_ != b.rows())
    throw InputError("cannot multiply operators of shapes " + std::to_string(rows()) + "x" +
                     std::to_string(cols_) + " and " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  SparseMatrix out(rows(), b.cols());
  Vector acc(b.cols());
  std::vector<char> touched(b.cols(), 0);
  std::vector<std::size_t> hit;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [k, a] : rows_[r])
      for (const auto& [c, v] : b.rows_[k]) {
        if (!touched[c]) {
          touched[c] = 1;
          hit.push_back(c);
        }
        acc[c] += a * v;
      }
    std::sort(hit.begin(), hit.end());
    SparseVector row;
    for (std::size_t c : hit) {
      if (sgn(acc[c]) != 0) row.emplace_back(c, acc[c]);
      acc[c] = 0;
      touched[c] = 0;
    }
    hit.clear();
    out.rows_[r] = std::move(row);
  }
  return out;
}

bool SparseMatrix::is_zero() const {
  for (const auto& r : rows_)
    for (const auto& e : r)
      if (sgn(e.second) != 0) return false;
  return true;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) s.rows_[r] = to_sparse(m.row(r));
  return s;
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    support.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(r, j)) != 0) {
        m(r, j) *= inv;
        support.push_back(j);
      }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j : support) m(i, j) -= f * m(r, j);
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

namespace {

// Incremental echelon basis of a row space; each stored row has a unit pivot
// and zeros in the pivot columns of the rows stored before it.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  bool insert(Vector v) {
    for (const auto& [col, idx] : pivots_) {
      if (sgn(v[col]) == 0) continue;
      Rational f = v[col];
      for (const auto& [j, x] : rows_[idx]) v[j] -= f * x;
    }
    auto lead = first_nonzero(v);
    if (!lead) return false;
    Rational inv = 1 / v[*lead];
    SparseVector row;
    for (std::size_t j = *lead; j < cols_; ++j)
      if (sgn(v[j]) != 0) row.emplace_back(j, v[j] * inv);
    pivots_.emplace(*lead, rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  std::size_t size() const { return rows_.size(); }
  std::vector<Vector> rows() const {
    std::vector<Vector> out;
    for (const auto& r : rows_) {
      Vector v(cols_);
      for (const auto& [j, x] : r) v[j] = x;
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::size_t cols_;
  std::map<std::size_t, std::size_t> pivots_;
  std::vector<SparseVector> rows_;
};

RowSpace row_space(const SparseMatrix& m) {
  RowSpace rs(m.cols());
  std::vector<std::size_t> order;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) order.push_back(r);
  // sparse rows first keeps the stored pivot rows short
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return m.row(a).size() < m.row(b).size(); });
  for (std::size_t r : order) {
    Vector v(m.cols());
    for (const auto& [c, x] : m.row(r)) v[c] = x;
    rs.insert(std::move(v));
    if (rs.size() == m.cols()) break;
  }
  return rs;
}

Subspace kernel_from_echelon(const Echelon& e, std::size_t cols) {
  Subspace k{cols, {}};
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = 1;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, f);
    k.basis.push_back(std::move(v));
  }
  return span(cols, k.basis);
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() > 4 * m.cols()) return rank(SparseMatrix::from_dense(m));
  return row_reduce(m).pivot_cols.size();
}

std::size_t rank(const SparseMatrix& m) { return row_space(m).size(); }

Subspace kernel_basis(const Matrix& m) {
  return kernel_from_echelon(row_reduce(m), m.cols());
}

Subspace kernel_basis(const SparseMatrix& m) {
  RowSpace rs = row_space(m);
  Matrix reduced = Matrix::from_rows(rs.rows(), m.cols());
  return kernel_from_echelon(row_reduce(reduced), m.cols());
}

std::optional<Vector> solve_in_image(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows())
    throw InputError("right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                     std::to_string(m.rows()) + " rows");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.reduced(r, m.cols());
  if (m.apply(x) != b) throw ConsistencyError("back-substitution check failed");
  return x;
}

std::optional<Vector> solve_in_image(const SparseMatrix& m, const Vector& b) {
  if (b.size() != m.rows())
    throw InputError("right-hand side has " + std::to_string(b.size()) + " entries, operator has " +
                     std::to_string(m.rows()) + " rows");
  RowSpace rs(m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector v(m.cols() + 1);
    for (const auto& [c, x] : m.row(r)) v[c] = x;
    v[m.cols()] = b[r];
    if (is_zero(v)) continue;
    rs.insert(std::move(v));
  }
  Matrix aug = Matrix::from_rows(rs.rows(), m.cols() + 1);
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.reduced(r, m.cols());
  if (m.apply(x) != b) throw ConsistencyError("back-substitution check failed");
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s{ambient_dim, {}};
  if (vectors.empty()) return s;
  Echelon e = row_reduce(Matrix::from_rows(vectors, ambient_dim));
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) s.basis.push_back(e.reduced.row(r));
  return s;
}

Subspace image_basis(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return span(m.rows(), cols);
}

Subspace image_basis(const SparseMatrix& m) { return image_basis(m.dense()); }

bool contains(const Subspace& s, const Vector& v) {
  if (v.size() != s.ambient_dim) throw InputError("vector length differs from ambient dimension");
  if (is_zero(v)) return true;
  if (s.basis.empty()) return false;
  std::vector<Vector> rows = s.basis;
  rows.push_back(v);
  return row_reduce(Matrix::from_rows(rows, s.ambient_dim)).pivot_cols.size() == s.dim();
}

bool is_contained(const Subspace& inner, const Subspace& outer) {
  if (inner.ambient_dim != outer.ambient_dim) throw InputError("subspaces in different ambient spaces");
  if (inner.basis.empty()) return true;
  std::vector<Vector> rows = outer.basis;
  rows.insert(rows.end(), inner.basis.begin(), inner.basis.end());
  return row_reduce(Matrix::from_rows(rows, outer.ambient_dim)).pivot_cols.size() == outer.dim();
}

std::size_t quotient_dim(const Subspace& z, const Subspace& b) {
  if (z.ambient_dim != b.ambient_dim)
    throw InputError("ambient dimensions differ: " + std::to_string(z.ambient_dim) + " vs " +
                     std::to_string(b.ambient_dim));
  if (!is_contained(b, z)) throw ConsistencyError("coboundary space is not contained in the cocycle space");
  return z.dim() - b.dim();
}

}  // namespace lietriple
