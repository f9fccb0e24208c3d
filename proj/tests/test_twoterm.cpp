#include <doctest.h>

#include "lietriple/cohomology.hpp"
#include "lietriple/crossed.hpp"
#include "lietriple/errors.hpp"
#include "lietriple/families.hpp"
#include "lietriple/twoterm.hpp"

using namespace lietriple;

namespace {

CochainQuadruple a2_cocycle() {
  LYAlgebra a = lie_to_lya(affine2());
  Representation r = adjoint_rep(a);
  CohomologyResult h = h3445_dims(a, r);
  for (const auto& z : h.cocycle_basis.basis)
    if (!contains(h.coboundary_basis, z)) return CochainQuadruple::from_vector(2, 2, z);
  return CochainQuadruple::zero(2, 2);
}

}  // namespace

TEST_SUITE("twoterm") {

TEST_CASE("skeletal algebras from cocycles") {
  LYAlgebra a = lie_to_lya(affine2());
  Representation r = adjoint_rep(a);
  CochainQuadruple q = a2_cocycle();
  REQUIRE_FALSE(q.is_zero());
  TwoTermAlgebra t = skeletal_from_data(a, r, q);
  CHECK(t.is_skeletal());
  CHECK_FALSE(t.is_strict());
  CHECK(verify_two_term(t).passed());
  auto [a2, r2, q2] = data_from_skeletal(t);
  CHECK(a2 == a);
  CHECK(r2 == r);
  CHECK(q2 == q);
  CHECK(skeletal_from_data(a2, r2, q2) == t);
}

TEST_CASE("a non-cocycle gives a failing skeletal algebra") {
  LYAlgebra a = lie_to_lya(affine2());
  Representation r = adjoint_rep(a);
  CochainQuadruple q = a2_cocycle();
  q.l3.coeffs()[0] += 1;
  CHECK_THROWS_AS(skeletal_from_data(a, r, q), InvalidStructure);
  TwoTermAlgebra t = skeletal_from_data_unchecked(a, r, q);
  AxiomReport rep = verify_two_term(t);
  CHECK_FALSE(rep.passed());
  bool coherent = rep.passed("l3-coherence") && rep.passed("l4hat-coherence") && rep.passed("l4tilde-coherence") &&
                  rep.passed("l5-coherence");
  CHECK_FALSE(coherent);
}

TEST_CASE("graded brackets") {
  TwoTermAlgebra t = strict_from_crossed(identity_crossed(lie_to_lya(affine2())));
  Vector x = unit_vector(2, 0), y = unit_vector(2, 1);
  CHECK(t.bracket(t.even(x), t.even(y)).x == Vector{1, 0});
  CHECK(t.mixed(y, x) == Vector{-1, 0});
  CHECK(t.bracket(t.odd(x), t.odd(y)).u == Vector{0, 0});
  CHECK(t.d() == Matrix::identity(2));
  CHECK(t.is_strict());
}

TEST_CASE("identity homomorphisms and composition") {
  LYAlgebra a = lie_to_lya(affine2());
  Representation r = adjoint_rep(a);
  TwoTermAlgebra t = skeletal_from_data(a, r, a2_cocycle());
  TwoTermHomomorphism id = identity_homomorphism(t);
  CHECK(verify_homomorphism(t, t, id).passed());
  CHECK(compose_homomorphisms(id, id) == id);
  TwoTermHomomorphism wrong = id;
  wrong.phi0(0, 0) = 2;
  CHECK_FALSE(verify_homomorphism(t, t, wrong).passed());
}

TEST_CASE("scaling the cocycle is realized by a homomorphism") {
  LYAlgebra a = lie_to_lya(affine2());
  Representation r = adjoint_rep(a);
  CochainQuadruple q = a2_cocycle(), q2 = q;
  for (Cochain* c : {&q2.l3, &q2.l4hat, &q2.l4tilde, &q2.l5})
    for (auto& x : c->coeffs()) x *= 2;
  TwoTermAlgebra s = skeletal_from_data(a, r, q), s2 = skeletal_from_data(a, r, q2);
  TwoTermHomomorphism h = identity_homomorphism(s);
  h.phi1 = Rational(2) * h.phi1;
  CHECK(verify_homomorphism(s, s2, h).passed());
  CHECK_FALSE(verify_homomorphism(s, s2, identity_homomorphism(s)).passed());
}

TEST_CASE("constructor checks skewness") {
  TwoTermData d;
  d.v0_dim = 1;
  d.v1_dim = 1;
  d.d = Matrix(1, 1);
  d.b00 = Tensor({1, 1, 1});
  d.b00(0, 0, 0) = 1;
  d.b01 = Tensor({1, 1, 1});
  d.t000 = Tensor({1, 1, 1, 1});
  d.tD = Tensor({1, 1, 1, 1});
  d.tTheta = Tensor({1, 1, 1, 1});
  d.corr = CochainQuadruple::zero(1, 1);
  CHECK_THROWS_AS(TwoTermAlgebra{d}, InvalidStructure);
  d.b00(0, 0, 0) = 0;
  CHECK(verify_two_term(TwoTermAlgebra{d}).passed());
  d.d = Matrix(2, 1);
  CHECK_THROWS_AS(TwoTermAlgebra::unchecked(d), InputError);
}

TEST_CASE("both readings of the first coherence axiom agree on strict algebras") {
  TwoTermAlgebra t = strict_from_crossed(identity_crossed(omni_lie(1)));
  TwoTermCheckOptions lhs;
  lhs.e1 = E1Reading::cyclic_lhs;
  CHECK(verify_two_term(t).passed());
  CHECK(verify_two_term(t, lhs).passed());
}

}
