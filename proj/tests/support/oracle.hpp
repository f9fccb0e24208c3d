#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lietriple/cochain.hpp"
#include "lietriple/lya.hpp"
#include "lietriple/rep.hpp"

// Pointwise evaluation of the coboundary formulas on dense multilinear maps.
// Nothing here touches the operator assembly in the library.
namespace oracle {

using lietriple::Rational;
using lietriple::Vector;

// values at every basis tuple (i_1..i_n), then target coordinate
struct Dense {
  std::size_t arity = 0, d = 0, m = 0;
  std::vector<Rational> data;

  Dense(std::size_t arity, std::size_t d, std::size_t m);
  Vector at(const std::vector<std::size_t>& ix) const;
  void set(const std::vector<std::size_t>& ix, const Vector& v);
  Vector eval(const std::vector<Vector>& args) const;
};

// The k-th basis cochain of the space, extended to all tuples by the skew pairs.
Dense basis_cochain(const lietriple::CochainSpace& sp, std::size_t k);
// Dense form of an arbitrary coefficient vector on the space.
Dense dense_of(const lietriple::CochainSpace& sp, const Vector& coeffs);
// Coefficients read off at canonical tuples.
Vector coefficients(const lietriple::CochainSpace& sp, const Dense& f);
// Empty when f is skew in every pair of the signature, else a description of the first violation.
std::string skew_violation(const lietriple::SkewSignature& sig, const Dense& f);

class Ctx {
 public:
  Ctx(const lietriple::LYAlgebra& a, const lietriple::Representation& r);
  std::size_t d, m;
  Vector e(std::size_t i) const;
  Vector br(const Vector& x, const Vector& y) const;
  Vector tr(const Vector& x, const Vector& y, const Vector& z) const;
  Vector R(const Vector& x, const Vector& v) const;
  Vector Dm(const Vector& x, const Vector& y, const Vector& v) const;
  Vector Th(const Vector& x, const Vector& y, const Vector& v) const;

 private:
  lietriple::Tensor b_, t_;
  const lietriple::Representation& r_;
};

// (l3, l4hat, l4tilde, l5)
std::vector<Dense> delta2(const Ctx& c, const Dense& nu, const Dense& om);
// the four components on (x1,x2,y1,y2,y3), (x1,x2,y1,y2,y3,z1), (x1,x2,y1,y2,z1,z2), (x1,...,z3)
std::vector<Dense> delta3(const Ctx& c, const Dense& l3, const Dense& l4h, const Dense& l4t, const Dense& l5);
// (-1)^n times the general (2n,2n+1) coboundary
std::vector<Dense> yamaguti(const Ctx& c, std::size_t n, const Dense& f, const Dense& g);

// Every column of the library operator against the formulas above, with the
// pointwise output also checked against the codomain skew pairs. Empty on agreement.
std::string check_yamaguti(std::size_t n, const lietriple::LYAlgebra& a, const lietriple::Representation& r);
std::string check_delta2(const lietriple::LYAlgebra& a, const lietriple::Representation& r);
std::string check_delta3(const lietriple::LYAlgebra& a, const lietriple::Representation& r);

// Whole operators rebuilt column by column from the pointwise formulas, same coordinates as the library.
lietriple::Matrix pointwise_delta2(const lietriple::LYAlgebra& a, const lietriple::Representation& r);
lietriple::Matrix pointwise_delta3(const lietriple::LYAlgebra& a, const lietriple::Representation& r);

}  // namespace oracle
