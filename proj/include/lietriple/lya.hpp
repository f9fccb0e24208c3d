#pragma once

#include <cstddef>
#include <vector>

#include "lietriple/exactla.hpp"
#include "lietriple/report.hpp"
#include "lietriple/tensor.hpp"

namespace lietriple {

// binary(i,j,k): coefficient of e_k in [e_i,e_j]
// ternary(i,j,k,l): coefficient of e_l in [e_i,e_j,e_k]
class LYAlgebra {
 public:
  LYAlgebra() : LYAlgebra(0) {}
  explicit LYAlgebra(std::size_t dim);
  // Rejects tensors of the wrong shape and any violation of index skewness in
  // the first two slots.
  LYAlgebra(Tensor binary, Tensor ternary);
  static LYAlgebra unchecked(Tensor binary, Tensor ternary);

  std::size_t dim() const { return dim_; }
  const Tensor& binary() const { return binary_; }
  const Tensor& ternary() const { return ternary_; }

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector bracket(const Vector& x, const Vector& y, const Vector& z) const;
  const SparseVector& basis_bracket(std::size_t i, std::size_t j) const { return b2_[i * dim_ + j]; }
  const SparseVector& basis_bracket(std::size_t i, std::size_t j, std::size_t k) const {
    return b3_[(i * dim_ + j) * dim_ + k];
  }

  friend bool operator==(const LYAlgebra& a, const LYAlgebra& b) {
    return a.binary_ == b.binary_ && a.ternary_ == b.ternary_;
  }

 private:
  struct Unchecked {};
  LYAlgebra(Tensor binary, Tensor ternary, Unchecked);
  void cache();

  std::size_t dim_ = 0;
  Tensor binary_;
  Tensor ternary_;
  std::vector<SparseVector> b2_;
  std::vector<SparseVector> b3_;
};

class LieAlgebra {
 public:
  LieAlgebra() : LieAlgebra(0) {}
  explicit LieAlgebra(std::size_t dim);
  explicit LieAlgebra(Tensor bracket);  // skewness enforced

  std::size_t dim() const { return dim_; }
  const Tensor& structure() const { return bracket_; }
  Vector bracket(const Vector& x, const Vector& y) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.bracket_ == b.bracket_; }

 private:
  std::size_t dim_ = 0;
  Tensor bracket_;
};

// product(i,j,k): coefficient of e_k in e_i . e_j
class LeibnizAlgebra {
 public:
  LeibnizAlgebra() : LeibnizAlgebra(0) {}
  explicit LeibnizAlgebra(std::size_t dim);
  explicit LeibnizAlgebra(Tensor product);

  std::size_t dim() const { return dim_; }
  const Tensor& structure() const { return product_; }
  Vector product(const Vector& x, const Vector& y) const;

  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    return a.product_ == b.product_;
  }

 private:
  std::size_t dim_ = 0;
  Tensor product_;
};

// Coordinates with respect to a direct sum A (+) B of the ambient space.
class Splitting {
 public:
  Splitting(const Subspace& a, const Subspace& b);  // throws unless A (+) B is everything

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  Vector coords_a(const Vector& v) const;
  Vector coords_b(const Vector& v) const;
  Vector project_a(const Vector& v) const;
  Vector project_b(const Vector& v) const;
  Vector embed_a(const Vector& coords) const;
  Vector embed_b(const Vector& coords) const;

 private:
  std::size_t dim_a_ = 0;
  std::size_t dim_b_ = 0;
  Matrix basis_;   // columns: A basis then B basis
  Matrix coords_;  // inverse of basis_
};

struct ReductiveDecomposition {
  LieAlgebra lie;
  Subspace h;
  Subspace m;
};

AxiomReport verify_ly(const LYAlgebra& a, const CheckOptions& opt = {});
AxiomReport verify_lie(const LieAlgebra& g, const CheckOptions& opt = {});
AxiomReport verify_leibniz(const LeibnizAlgebra& l, const CheckOptions& opt = {});
AxiomReport verify_reductive(const ReductiveDecomposition& d, const CheckOptions& opt = {});

LYAlgebra lie_to_lya(const LieAlgebra& g);
LYAlgebra leibniz_to_lya(const LeibnizAlgebra& l);
LYAlgebra reductive_to_lya(const ReductiveDecomposition& d);
LeibnizAlgebra lie_as_leibniz(const LieAlgebra& g);
LeibnizAlgebra fundamental_leibniz(const LYAlgebra& a);
// ad(X)ad(Y) - ad(Y)ad(X) = ad(X o Y) on T, X, Y running over basis tensors
AxiomReport check_fundamental_action(const LYAlgebra& a, const CheckOptions& opt = {});
LYAlgebra omni_lie(std::size_t n);

AxiomReport check_homomorphism_lya(const LYAlgebra& source, const LYAlgebra& target, const Matrix& phi,
                                   const CheckOptions& opt = {});
AxiomReport check_homomorphism_leibniz(const LeibnizAlgebra& source, const LeibnizAlgebra& target,
                                       const Matrix& phi, const CheckOptions& opt = {});

// Basis change: columns of p are the new basis vectors in old coordinates.
LYAlgebra change_basis(const LYAlgebra& a, const Matrix& p);
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p);
LeibnizAlgebra change_basis(const LeibnizAlgebra& l, const Matrix& p);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b);

}  // namespace lietriple
