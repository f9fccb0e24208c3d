#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lietriple/cochain.hpp"

namespace lietriple {

struct CohomologyResult {
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t dim_H = 0;
  Subspace cocycle_basis;
  Subspace coboundary_basis;
};

// First nonzero output of an operator, located in its codomain.
struct CodomainWitness {
  std::size_t component = 0;
  std::vector<std::size_t> tuple;
  Vector defect;
};

struct CocycleVerdict {
  bool cocycle = true;
  std::optional<CodomainWitness> witness;
};

std::optional<CodomainWitness> first_nonzero_output(const OperatorMatrix& op, const Vector& image);

CocycleVerdict is_cocycle_3445(const CochainQuadruple& q, const LYAlgebra& a, const Representation& r);
std::optional<CochainPair> is_coboundary_3445(const CochainQuadruple& q, const LYAlgebra& a, const Representation& r);

// Z = ker(next), B = im(prev); throws ConsistencyError unless B is inside Z.
CohomologyResult cohomology_from_operators(const SparseMatrix& prev, const SparseMatrix& next);

CohomologyResult h3445_dims(const LYAlgebra& a, const Representation& r);
CohomologyResult yamaguti_h_dims(std::size_t n, const LYAlgebra& a, const Representation& r);

}  // namespace lietriple
