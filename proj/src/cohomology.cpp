#include "lietriple/cohomology.hpp"

#include "lietriple/errors.hpp"

namespace lietriple {

namespace {

void check_quadruple(const CochainQuadruple& q, const LYAlgebra& a, const Representation& r) {
  auto expect = quadruple_spaces(a.dim(), r.module_dim());
  const Cochain* cs[] = {&q.l3, &q.l4hat, &q.l4tilde, &q.l5};
  const char* names[] = {"l3", "l4hat", "l4tilde", "l5"};
  for (std::size_t i = 0; i < 4; ++i)
    if (!(cs[i]->space() == expect[i]))
      throw InputError(std::string(names[i]) + " does not live in " + to_string(expect[i].signature()) +
                       " with source dimension " + std::to_string(a.dim()) + " and target dimension " +
                       std::to_string(r.module_dim()));
}

}  // namespace

std::optional<CodomainWitness> first_nonzero_output(const OperatorMatrix& op, const Vector& image) {
  auto at = first_nonzero(image);
  if (!at) return std::nullopt;
  std::size_t idx = *at;
  for (std::size_t c = 0; c < op.codomain.size(); ++c) {
    const auto& sp = op.codomain[c];
    if (idx < sp.dim()) {
      std::size_t t = idx / sp.target_dim();
      std::size_t off = idx - idx % sp.target_dim();
      std::size_t base = *at - idx;
      Vector defect(image.begin() + base + off, image.begin() + base + off + sp.target_dim());
      return CodomainWitness{c, sp.tuple(t), defect};
    }
    idx -= sp.dim();
  }
  return std::nullopt;
}

CocycleVerdict is_cocycle_3445(const CochainQuadruple& q, const LYAlgebra& a, const Representation& r) {
  check_quadruple(q, a, r);
  OperatorMatrix d3 = delta3(a, r);
  auto w = first_nonzero_output(d3, d3.matrix.apply(q.flatten()));
  return {!w.has_value(), w};
}

std::optional<CochainPair> is_coboundary_3445(const CochainQuadruple& q, const LYAlgebra& a, const Representation& r) {
  check_quadruple(q, a, r);
  OperatorMatrix d2 = delta2(a, r);
  auto x = solve_in_image(d2.matrix, q.flatten());
  if (!x) return std::nullopt;
  if (d2.matrix.apply(*x) != q.flatten()) throw ConsistencyError("coboundary preimage does not reproduce the quadruple");
  return CochainPair::from_vector(a.dim(), r.module_dim(), *x);
}

CohomologyResult cohomology_from_operators(const SparseMatrix& prev, const SparseMatrix& next) {
  if (prev.rows() != next.cols())
    throw InputError("operators do not compose: " + std::to_string(prev.rows()) + " vs " + std::to_string(next.cols()));
  CohomologyResult res;
  res.cocycle_basis = kernel_basis(next);
  res.coboundary_basis = image_basis(prev);
  res.dim_cocycles = res.cocycle_basis.dim();
  res.dim_coboundaries = res.coboundary_basis.dim();
  res.dim_H = quotient_dim(res.cocycle_basis, res.coboundary_basis);
  return res;
}

CohomologyResult h3445_dims(const LYAlgebra& a, const Representation& r) {
  OperatorMatrix d2 = delta2(a, r);
  OperatorMatrix d3 = delta3(a, r);
  if (!(d3.matrix * d2.matrix).is_zero()) throw ConsistencyError("delta3 composed with delta2 is not zero");
  return cohomology_from_operators(d2.matrix, d3.matrix);
}

CohomologyResult yamaguti_h_dims(std::size_t n, const LYAlgebra& a, const Representation& r) {
  if (n < 2) throw InputError("Yamaguti cohomology is defined here for n >= 2");
  OperatorMatrix next = yamaguti_delta(n, a, r);
  OperatorMatrix prev = yamaguti_delta(n - 1, a, r);
  if (!(next.matrix * prev.matrix).is_zero()) throw ConsistencyError("delta composed with delta is not zero");
  return cohomology_from_operators(prev.matrix, next.matrix);
}

}  // namespace lietriple
