#pragma once

#include <cstddef>
#include <random>

#include "lietriple/crossed.hpp"
#include "lietriple/lya.hpp"
#include "lietriple/rep.hpp"

namespace lietriple {

// Named algebras, 0-based bases.
LieAlgebra abelian_lie(std::size_t n);
LieAlgebra affine2();      // [e1,e2] = e1
LieAlgebra so3();          // [e1,e2] = e3 and cyclic
LieAlgebra heisenberg3();  // [e1,e2] = e3
LeibnizAlgebra leib2();    // e1.e1 = e2
// e_i . e_j = c(i,j) e_n for i,j < n, everything else zero; c is (n-1)x(n-1).
LeibnizAlgebra nilpotent_leibniz(const Matrix& c);
ReductiveDecomposition so3_reductive();  // h = span(e3), m = span(e1,e2)

CrossedModuleLYA identity_crossed(const LYAlgebra& t);
// d = 0 into T acting on V through r, V abelian.
CrossedModuleLYA module_crossed(const LYAlgebra& t, const Representation& r);
LieCrossedModule identity_lie_crossed(const LieAlgebra& g);
LeibnizCrossedModule identity_leibniz_crossed(const LeibnizAlgebra& l);
ReductiveCrossedModule identity_reductive_crossed(const ReductiveDecomposition& d);

// 0 -> V -> V -0-> T -> T -> 0 with s = id and q = 0.
CrossedExtension split_extension(const LYAlgebra& t, const Representation& r);
// Free 2-step nilpotent crossed module over k^3 with the volume form as twist;
// T = ABELIAN3, M = k.
CrossedExtension heisenberg_extension();
// Columns of pt, ps, pv are the new bases of T, S, V.
CrossedExtension change_basis(const CrossedExtension& e, const Matrix& pt, const Matrix& ps, const Matrix& pv);

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, int bound = 3);
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound = 3);
Matrix random_invertible(Rng& rng, std::size_t n);

// Direct sums of abelian, affine, so(3) and Heisenberg pieces of total
// dimension in [lo, hi], in a random rational basis.
LieAlgebra random_lie(Rng& rng, std::size_t lo = 2, std::size_t hi = 4);
LeibnizAlgebra random_leibniz(Rng& rng, std::size_t lo = 2, std::size_t hi = 4);
ReductiveDecomposition random_reductive(Rng& rng);
LYAlgebra random_lya(Rng& rng, std::size_t lo = 2, std::size_t hi = 4);
LeibnizCrossedModule random_leibniz_crossed(Rng& rng);
ReductiveCrossedModule random_reductive_crossed(Rng& rng);
CrossedModuleLYA random_crossed(Rng& rng);
CrossedExtension random_extension(Rng& rng);

}  // namespace lietriple
