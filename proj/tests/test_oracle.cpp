#include <doctest.h>

#include "lietriple/cohomology.hpp"
#include "lietriple/families.hpp"
#include "oracle.hpp"

using namespace lietriple;

TEST_SUITE("oracle") {

TEST_CASE("dense cochains agree with the library evaluation") {
  Rng rng(4);
  CochainSpace sp(SkewSignature(4, {{0, 1}, {2, 3}}), 2, 2);
  Vector v(sp.dim());
  for (auto& x : v) x = random_rational(rng);
  Cochain c(sp, v);
  oracle::Dense f = oracle::dense_of(sp, v);
  CHECK(oracle::coefficients(sp, f) == v);
  CHECK(oracle::skew_violation(sp.signature(), f).empty());
  std::vector<Vector> args;
  for (int i = 0; i < 4; ++i) args.push_back(random_matrix(rng, 2, 1).column(0));
  CHECK(f.eval(args) == c.eval(args));
}

TEST_CASE("operators match the pointwise formulas on A2 and OMNI1") {
  for (const LYAlgebra& a : {lie_to_lya(affine2()), omni_lie(1)}) {
    Representation r = adjoint_rep(a);
    CHECK(oracle::check_yamaguti(1, a, r) == "");
    CHECK(oracle::check_yamaguti(2, a, r) == "");
    CHECK(oracle::check_delta2(a, r) == "");
    CHECK(oracle::check_delta3(a, r) == "");
  }
}

TEST_CASE("Delta2 and Y1 match on three-dimensional inputs") {
  for (const LYAlgebra& a : {lie_to_lya(so3()), leibniz_to_lya(nilpotent_leibniz(Matrix::from_rows({{1, 1}, {0, 0}}, 2)))}) {
    Representation r = adjoint_rep(a);
    CHECK(oracle::check_yamaguti(1, a, r) == "");
    CHECK(oracle::check_delta2(a, r) == "");
  }
}

TEST_CASE("cohomology from the pointwise operators") {
  LYAlgebra a = lie_to_lya(affine2());
  Representation r = adjoint_rep(a);
  CohomologyResult lib = h3445_dims(a, r);
  CohomologyResult pw = cohomology_from_operators(SparseMatrix::from_dense(oracle::pointwise_delta2(a, r)),
                                                  SparseMatrix::from_dense(oracle::pointwise_delta3(a, r)));
  CHECK(pw.dim_cocycles == lib.dim_cocycles);
  CHECK(pw.dim_coboundaries == lib.dim_coboundaries);
  CHECK(pw.dim_H == lib.dim_H);
  CHECK(pw.cocycle_basis == lib.cocycle_basis);
}

TEST_CASE("the oracle tells different algebras apart") {
  LYAlgebra a = lie_to_lya(affine2()), o = omni_lie(1);
  CHECK(delta2(o, adjoint_rep(o)).matrix.dense() != oracle::pointwise_delta2(a, adjoint_rep(a)));
  CHECK(delta2(a, adjoint_rep(a)).matrix.dense() == oracle::pointwise_delta2(a, adjoint_rep(a)));
}

}
