#include <doctest.h>

#include "lietriple/cohomology.hpp"
#include "lietriple/errors.hpp"
#include "lietriple/families.hpp"

using namespace lietriple;

TEST_SUITE("cohomology") {

TEST_CASE("A2 with its adjoint module") {
  LYAlgebra a = lie_to_lya(affine2());
  Representation r = adjoint_rep(a);
  CohomologyResult h = h3445_dims(a, r);
  CHECK(h.dim_cocycles == 9);
  CHECK(h.dim_coboundaries == 3);
  CHECK(h.dim_H == 6);
  CHECK(is_contained(h.coboundary_basis, h.cocycle_basis));
  CohomologyResult y = yamaguti_h_dims(2, a, r);
  CHECK(y.dim_cocycles == 4);
  CHECK(y.dim_coboundaries == 3);
  CHECK(y.dim_H == 1);
}

TEST_CASE("ABELIAN2 with a one-dimensional trivial module") {
  LYAlgebra a(2);
  Representation r = zero_rep(2, 1);
  CohomologyResult h = h3445_dims(a, r);
  CHECK(h.dim_cocycles == 9);
  CHECK(h.dim_coboundaries == 0);
  CohomologyResult y = yamaguti_h_dims(2, a, r);
  CHECK(y.dim_cocycles == 3);
  CHECK(y.dim_coboundaries == 0);
  CHECK(y.dim_H == 3);
}

TEST_CASE("cocycle and coboundary tests on quadruples") {
  LYAlgebra a = lie_to_lya(affine2());
  Representation r = adjoint_rep(a);
  CohomologyResult h = h3445_dims(a, r);
  for (const auto& z : h.cocycle_basis.basis) CHECK(is_cocycle_3445(CochainQuadruple::from_vector(2, 2, z), a, r).cocycle);
  for (const auto& b : h.coboundary_basis.basis) {
    auto pre = is_coboundary_3445(CochainQuadruple::from_vector(2, 2, b), a, r);
    REQUIRE(pre.has_value());
    CHECK(delta2(a, r).matrix.apply(pre->flatten()) == b);
  }
  CochainQuadruple bad = CochainQuadruple::zero(2, 2);
  bad.l3.coeffs()[0] = 1;
  CocycleVerdict v = is_cocycle_3445(bad, a, r);
  CHECK_FALSE(v.cocycle);
  REQUIRE(v.witness.has_value());
  CHECK_FALSE(is_zero(v.witness->defect));
  CHECK_FALSE(is_coboundary_3445(bad, a, r).has_value());
}

TEST_CASE("shape mismatches are input errors") {
  LYAlgebra a = lie_to_lya(affine2());
  CHECK_THROWS_AS(h3445_dims(a, zero_rep(3, 1)), InputError);
  CHECK_THROWS_AS(is_cocycle_3445(CochainQuadruple::zero(3, 1), a, adjoint_rep(a)), InputError);
}

TEST_CASE("operators that do not compose are rejected") {
  SparseMatrix prev = SparseMatrix::from_dense(Matrix::from_rows({{1}}, 1));
  SparseMatrix next = SparseMatrix::from_dense(Matrix::from_rows({{1}}, 1));
  CHECK_THROWS_AS(cohomology_from_operators(prev, next), ConsistencyError);
  CohomologyResult ok = cohomology_from_operators(SparseMatrix::from_dense(Matrix(1, 1)), next);
  CHECK(ok.dim_H == 0);
}

}
