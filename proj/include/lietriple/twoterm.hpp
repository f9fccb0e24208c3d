#pragma once

#include <cstddef>
#include <tuple>

#include "lietriple/cochain.hpp"
#include "lietriple/exactla.hpp"
#include "lietriple/lya.hpp"
#include "lietriple/report.hpp"
#include "lietriple/rep.hpp"
#include "lietriple/tensor.hpp"

namespace lietriple {

// Tensor layouts (x,y in V0 basis e_i, u in V1 basis f_s):
//   d        v0 x v1 matrix
//   b00      [e_i,e_j]     (i,j,k)
//   b01      [e_i,f_s]     (i,s,t); [f_s,e_i] is its negative
//   t000     [e_i,e_j,e_k] (i,j,k,l)
//   tD       [e_i,e_j,f_s] (i,j,s,t)
//   tTheta   [f_s,e_i,e_j] (s,i,j,t); [e_i,f_s,e_j] is its negative
// Brackets with two or more V1 arguments vanish.
struct TwoTermData {
  std::size_t v0_dim = 0;
  std::size_t v1_dim = 0;
  Matrix d;
  Tensor b00, b01, t000, tD, tTheta;
  CochainQuadruple corr;
};

// An element of V0 (+) V1.
struct Graded {
  Vector x;
  Vector u;
};

class TwoTermAlgebra {
 public:
  TwoTermAlgebra() : TwoTermAlgebra(0, 0) {}
  TwoTermAlgebra(std::size_t v0_dim, std::size_t v1_dim);  // everything zero
  explicit TwoTermAlgebra(TwoTermData data);                // shapes and skewness enforced
  static TwoTermAlgebra unchecked(TwoTermData data);        // shapes only

  std::size_t v0_dim() const { return data_.v0_dim; }
  std::size_t v1_dim() const { return data_.v1_dim; }
  const TwoTermData& data() const { return data_; }
  const Matrix& d() const { return data_.d; }
  const CochainQuadruple& corr() const { return data_.corr; }
  bool is_skeletal() const { return data_.d.is_zero(); }
  bool is_strict() const { return data_.corr.is_zero(); }

  Graded even(const Vector& x) const { return {x, Vector(v1_dim())}; }
  Graded odd(const Vector& u) const { return {Vector(v0_dim()), u}; }
  Graded bracket(const Graded& a, const Graded& b) const;
  Graded bracket(const Graded& a, const Graded& b, const Graded& c) const;
  Vector mixed(const Vector& x, const Vector& u) const;                    // [x,u]
  Vector mixed_d(const Vector& x, const Vector& y, const Vector& u) const;  // [x,y,u]
  Vector mixed_theta(const Vector& u, const Vector& x, const Vector& y) const;  // [u,x,y]

  friend bool operator==(const TwoTermAlgebra& a, const TwoTermAlgebra& b);

 private:
  struct Unchecked {};
  TwoTermAlgebra(TwoTermData data, Unchecked);

  TwoTermData data_;
  LYAlgebra v0_;  // b00 and t000 as an unchecked LY pair, for fast brackets
};

// Graded-cyclic: l3 with d(u) in any slot equals the cyclic sum of the
// brackets with u in that slot. Cyclic-lhs: the l3 side is also summed
// over the three cyclic placements of d(u).
enum class E1Reading { graded_cyclic, cyclic_lhs };

struct TwoTermCheckOptions {
  CheckOptions check;
  E1Reading e1 = E1Reading::graded_cyclic;
};

AxiomReport verify_two_term(const TwoTermAlgebra& t, const TwoTermCheckOptions& opt = {});

struct TwoTermHomomorphism {
  Matrix phi0;  // V0 -> V0'
  Matrix phi1;  // V1 -> V1'
  Cochain phi2;  // arity 2 on V0 into V1', skew
  Cochain phi3;  // arity 3 on V0 into V1', skew in (1,2)

  friend bool operator==(const TwoTermHomomorphism&, const TwoTermHomomorphism&) = default;
};

TwoTermHomomorphism identity_homomorphism(const TwoTermAlgebra& t);
AxiomReport verify_homomorphism(const TwoTermAlgebra& src, const TwoTermAlgebra& dst, const TwoTermHomomorphism& h,
                                const CheckOptions& opt = {});
// First f, then g.
TwoTermHomomorphism compose_homomorphisms(const TwoTermHomomorphism& f, const TwoTermHomomorphism& g);

TwoTermAlgebra skeletal_from_data(const LYAlgebra& a, const Representation& r, const CochainQuadruple& q);
TwoTermAlgebra skeletal_from_data_unchecked(const LYAlgebra& a, const Representation& r, const CochainQuadruple& q);
std::tuple<LYAlgebra, Representation, CochainQuadruple> data_from_skeletal(const TwoTermAlgebra& t);

}  // namespace lietriple
