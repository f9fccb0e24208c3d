#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lietriple {

using Rational = mpq_class;
using Vector = std::vector<Rational>;
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
void axpy(Vector& y, const Rational& a, const Vector& x);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& a, const Vector& v);
SparseVector to_sparse(const Vector& v);
std::optional<std::size_t> first_nonzero(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Vector apply(const Vector& x) const;
  Matrix transpose() const;
  bool is_zero() const;
  Vector flatten() const { return data_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& a);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& a, Matrix m) { return m *= a; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

// Row-sparse matrix used for coboundary operators, whose dense form outgrows
// memory for dim T = 4.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const SparseVector& row(std::size_t r) const { return rows_[r]; }
  void set_row(std::size_t r, SparseVector entries) { rows_[r] = std::move(entries); }
  std::size_t nonzeros() const;

  Vector apply(const Vector& x) const;
  Matrix dense() const;
  SparseMatrix operator*(const SparseMatrix& b) const;
  bool is_zero() const;
  static SparseMatrix from_dense(const Matrix& m);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<SparseVector> rows_;
};

struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<Vector> basis;

  std::size_t dim() const { return basis.size(); }
  friend bool operator==(const Subspace&, const Subspace&) = default;
};

// Reduced row echelon form; pivot = first nonzero entry scanning rows in order.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
std::size_t rank(const SparseMatrix& m);
Subspace kernel_basis(const Matrix& m);
Subspace kernel_basis(const SparseMatrix& m);
std::optional<Vector> solve_in_image(const Matrix& m, const Vector& b);
std::optional<Vector> solve_in_image(const SparseMatrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
Subspace image_basis(const Matrix& m);
Subspace image_basis(const SparseMatrix& m);
bool contains(const Subspace& s, const Vector& v);
bool is_contained(const Subspace& inner, const Subspace& outer);
std::size_t quotient_dim(const Subspace& z, const Subspace& b);

}  // namespace lietriple
