#pragma once

#include <cstddef>

#include "lietriple/cochain.hpp"
#include "lietriple/exactla.hpp"
#include "lietriple/lya.hpp"
#include "lietriple/rep.hpp"
#include "lietriple/report.hpp"
#include "lietriple/tensor.hpp"
#include "lietriple/twoterm.hpp"

namespace lietriple {

// boundary: V -> T, a t.dim() x v.dim() matrix; rep is the action of T on V.
struct CrossedModuleLYA {
  LYAlgebra t;
  LYAlgebra v;
  Representation rep;
  Matrix boundary;

  LYAction action() const { return {rep, v}; }
  friend bool operator==(const CrossedModuleLYA&, const CrossedModuleLYA&) = default;
};

AxiomReport verify_crossed_module(const CrossedModuleLYA& c, const CheckOptions& opt = {});

TwoTermAlgebra strict_from_crossed(const CrossedModuleLYA& c);
TwoTermAlgebra strict_from_crossed_unchecked(const CrossedModuleLYA& c);
// V brackets: [u,v] = rho(du)v, [u,v,w] = D(du,dv)w.
CrossedModuleLYA crossed_from_strict(const TwoTermAlgebra& t);
CrossedModuleLYA crossed_from_strict_unchecked(const TwoTermAlgebra& t);

// left(i,s,t): coefficient of f_t in e_i |> f_s; right(s,i,t): f_s <| e_i.
struct LeibnizCrossedModule {
  LeibnizAlgebra v;
  LeibnizAlgebra l;
  Tensor left;
  Tensor right;
  Matrix phi;

  friend bool operator==(const LeibnizCrossedModule&, const LeibnizCrossedModule&) = default;
};

// Action means the product on L (+) V built from |>, <| and both products is Leibniz.
AxiomReport verify_leibniz_crossed(const LeibnizCrossedModule& lc, const CheckOptions& opt = {});
CrossedModuleLYA crossed_from_leibniz(const LeibnizCrossedModule& lc);
CrossedModuleLYA crossed_from_leibniz_unchecked(const LeibnizCrossedModule& lc);

// action(i,s,t): coefficient of f_t in e_i |> f_s.
struct LieCrossedModule {
  LieAlgebra v;
  LieAlgebra g;
  Tensor action;
  Matrix phi;

  friend bool operator==(const LieCrossedModule&, const LieCrossedModule&) = default;
};

AxiomReport verify_lie_crossed(const LieCrossedModule& c, const CheckOptions& opt = {});
// u <| x = -(x |> u)
LeibnizCrossedModule as_leibniz_crossed(const LieCrossedModule& c);

struct ReductiveCrossedModule {
  LieCrossedModule lie;
  Subspace v1, v2;  // V = V1 (+) V2
  Subspace h, m;    // g = h (+) m

  friend bool operator==(const ReductiveCrossedModule&, const ReductiveCrossedModule&) = default;
};

AxiomReport verify_reductive_crossed(const ReductiveCrossedModule& rc, const CheckOptions& opt = {});
// T in m-coordinates, V in V2-coordinates, both as reductive_to_lya orders them.
CrossedModuleLYA crossed_from_reductive(const ReductiveCrossedModule& rc);

// 0 -> M -i-> V -d-> S -pi-> T -> 0 with c: V -> S.
// q is stored as a map S -> V; only its restriction to the image of d matters.
struct CrossedExtension {
  CrossedModuleLYA c;
  Matrix i;
  Matrix pi;
  LYAlgebra t;
  Matrix s;
  Matrix q;

  std::size_t m_dim() const { return i.cols(); }
  friend bool operator==(const CrossedExtension&, const CrossedExtension&) = default;
};

AxiomReport verify_extension(const CrossedExtension& e, const CheckOptions& opt = {});
// Sections only: pi s = id and d q = id on the image of d.
AxiomReport check_sections(const CrossedExtension& e, const Matrix& s, const Matrix& q,
                           const CheckOptions& opt = {});
// rho_M(x) = rho_V(s x) on M, likewise D and theta.
Representation induced_representation(const CrossedExtension& e);
// The induced operators do not move when s changes by d h, h running over elementary maps T -> V.
AxiomReport check_induced_well_defined(const CrossedExtension& e, const CheckOptions& opt = {});

CochainQuadruple extract_theta(const CrossedExtension& e);
CochainQuadruple extract_theta(const CrossedExtension& e, const Matrix& s, const Matrix& q);
bool section_independence(const CrossedExtension& e, const Matrix& s2, const Matrix& q2);

}  // namespace lietriple
