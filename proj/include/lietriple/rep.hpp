#pragma once

#include <cstddef>
#include <vector>

#include "lietriple/exactla.hpp"
#include "lietriple/lya.hpp"
#include "lietriple/report.hpp"

namespace lietriple {

// rho(e_i), D(e_i,e_j), theta(e_i,e_j) as module_dim x module_dim matrices.
// D and theta are kept on all ordered pairs; nothing is assumed about D(e_i,e_i).
class Representation {
 public:
  Representation() = default;
  Representation(std::size_t algebra_dim, std::size_t module_dim);
  Representation(std::size_t algebra_dim, std::size_t module_dim, std::vector<Matrix> rho, std::vector<Matrix> d,
                 std::vector<Matrix> theta);

  std::size_t algebra_dim() const { return n_; }
  std::size_t module_dim() const { return m_; }

  const Matrix& rho(std::size_t i) const { return rho_[i]; }
  const Matrix& D(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  const Matrix& theta(std::size_t i, std::size_t j) const { return theta_[i * n_ + j]; }
  Matrix& rho(std::size_t i) { return rho_[i]; }
  Matrix& D(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }
  Matrix& theta(std::size_t i, std::size_t j) { return theta_[i * n_ + j]; }

  Matrix rho(const Vector& x) const;
  Matrix D(const Vector& x, const Vector& y) const;
  Matrix theta(const Vector& x, const Vector& y) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.rho_ == b.rho_ && a.d_ == b.d_ && a.theta_ == b.theta_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Matrix> rho_;
  std::vector<Matrix> d_;
  std::vector<Matrix> theta_;
};

// An action of T on the LY algebra `target` through `rep`.
struct LYAction {
  Representation rep;
  LYAlgebra target;
};

AxiomReport verify_rep(const LYAlgebra& a, const Representation& r, const CheckOptions& opt = {});
// D(e_i,e_j) + D(e_j,e_i) = 0 on all pairs.
AxiomReport check_d_skew(const Representation& r, const CheckOptions& opt = {});

Representation adjoint_rep(const LYAlgebra& a);
Representation zero_rep(std::size_t algebra_dim, std::size_t module_dim);
// LY representation of lie_to_lya(g) from a Lie module given by rho(e_i):
// D(x,y) = rho([x,y]), theta(x,y) = rho(y) rho(x).
Representation lie_rep_to_lya_rep(const LieAlgebra& g, const std::vector<Matrix>& rho);
// p: new basis of T (columns), pv: new basis of V (columns).
Representation change_basis(const Representation& r, const Matrix& p, const Matrix& pv);

LYAlgebra semidirect(const LYAlgebra& t, const LYAction& action);
AxiomReport check_action(const LYAlgebra& t, const LYAction& action, const CheckOptions& opt = {});

}  // namespace lietriple
