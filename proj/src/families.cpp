#include "lietriple/families.hpp"

#include <functional>
#include <utility>
#include <vector>

#include "lietriple/errors.hpp"

namespace lietriple {

namespace {

void set_skew(Tensor& b, std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  b(i, j, k) = c;
  b(j, i, k) = -c;
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))];
}

Matrix must_invert(const Matrix& p) {
  auto q = inverse(p);
  if (!q) throw InputError("basis change matrix is singular");
  return *q;
}

Subspace transform(const Subspace& s, const Matrix& q) {
  Subspace out{s.ambient_dim, {}};
  for (const auto& v : s.basis) out.basis.push_back(q.apply(v));
  return out;
}

Subspace remix(Rng& rng, const Subspace& s) {
  if (s.dim() == 0) return s;
  Matrix r = random_invertible(rng, s.dim());
  Subspace out{s.ambient_dim, {}};
  for (std::size_t a = 0; a < s.dim(); ++a) {
    Vector v = zero_vector(s.ambient_dim);
    for (std::size_t b = 0; b < s.dim(); ++b) axpy(v, r(a, b), s.basis[b]);
    out.basis.push_back(std::move(v));
  }
  return out;
}

Subspace coordinate_span(std::size_t n, std::size_t from, std::size_t to) {
  Subspace s{n, {}};
  for (std::size_t k = from; k < to; ++k) s.basis.push_back(unit_vector(n, k));
  return s;
}

LieAlgebra random_lie_sum(Rng& rng, std::size_t target) {
  LieAlgebra g(0);
  while (g.dim() < target) {
    std::size_t left = target - g.dim();
    std::vector<std::function<LieAlgebra()>> pieces{[] { return abelian_lie(1); }};
    if (left >= 2) pieces.push_back(affine2);
    if (left >= 3) {
      pieces.push_back(so3);
      pieces.push_back(heisenberg3);
    }
    g = direct_sum(g, pick(rng, pieces)());
  }
  return g;
}

}  // namespace

LieAlgebra abelian_lie(std::size_t n) { return LieAlgebra(n); }

LieAlgebra affine2() {
  Tensor b({2, 2, 2});
  set_skew(b, 0, 1, 0, 1);
  return LieAlgebra(std::move(b));
}

LieAlgebra so3() {
  Tensor b({3, 3, 3});
  set_skew(b, 0, 1, 2, 1);
  set_skew(b, 1, 2, 0, 1);
  set_skew(b, 2, 0, 1, 1);
  return LieAlgebra(std::move(b));
}

LieAlgebra heisenberg3() {
  Tensor b({3, 3, 3});
  set_skew(b, 0, 1, 2, 1);
  return LieAlgebra(std::move(b));
}

LeibnizAlgebra leib2() {
  Tensor p({2, 2, 2});
  p(0, 0, 1) = 1;
  return LeibnizAlgebra(std::move(p));
}

LeibnizAlgebra nilpotent_leibniz(const Matrix& c) {
  if (c.rows() != c.cols()) throw InputError("nilpotent Leibniz coefficients must be square");
  const std::size_t n = c.rows() + 1;
  Tensor p({n, n, n});
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) p(i, j, n - 1) = c(i, j);
  return LeibnizAlgebra(std::move(p));
}

ReductiveDecomposition so3_reductive() { return {so3(), coordinate_span(3, 2, 3), coordinate_span(3, 0, 2)}; }

CrossedModuleLYA identity_crossed(const LYAlgebra& t) {
  return {t, t, adjoint_rep(t), Matrix::identity(t.dim())};
}

CrossedModuleLYA module_crossed(const LYAlgebra& t, const Representation& r) {
  if (r.algebra_dim() != t.dim()) throw InputError("representation does not match the algebra");
  return {t, LYAlgebra(r.module_dim()), r, Matrix(t.dim(), r.module_dim())};
}

LieCrossedModule identity_lie_crossed(const LieAlgebra& g) {
  return {g, g, g.structure(), Matrix::identity(g.dim())};
}

LeibnizCrossedModule identity_leibniz_crossed(const LeibnizAlgebra& l) {
  return {l, l, l.structure(), l.structure(), Matrix::identity(l.dim())};
}

ReductiveCrossedModule identity_reductive_crossed(const ReductiveDecomposition& d) {
  return {identity_lie_crossed(d.lie), d.h, d.m, d.h, d.m};
}

CrossedExtension split_extension(const LYAlgebra& t, const Representation& r) {
  const std::size_t n = t.dim(), m = r.module_dim();
  return {module_crossed(t, r), Matrix::identity(m), Matrix::identity(n), t, Matrix::identity(n), Matrix(m, n)};
}

CrossedExtension heisenberg_extension() {
  Tensor g({6, 6, 6});
  set_skew(g, 0, 1, 3, 1);
  set_skew(g, 0, 2, 4, 1);
  set_skew(g, 1, 2, 5, 1);
  Tensor act({6, 4, 4});
  act(0, 2, 3) = 1;
  act(1, 1, 3) = -1;
  act(2, 0, 3) = 1;
  Matrix phi(6, 4);
  for (std::size_t k = 0; k < 3; ++k) phi(3 + k, k) = 1;
  LieCrossedModule lc{LieAlgebra(4), LieAlgebra(std::move(g)), std::move(act), std::move(phi)};
  Matrix pi(3, 6), s(6, 3), q(4, 6), i(4, 1);
  for (std::size_t k = 0; k < 3; ++k) {
    pi(k, k) = 1;
    s(k, k) = 1;
    q(k, 3 + k) = 1;
  }
  i(3, 0) = 1;
  return {crossed_from_leibniz(as_leibniz_crossed(lc)), i, pi, LYAlgebra(3), s, q};
}

CrossedExtension change_basis(const CrossedExtension& e, const Matrix& pt, const Matrix& ps, const Matrix& pv) {
  Matrix qt = must_invert(pt), qs = must_invert(ps), qv = must_invert(pv);
  CrossedModuleLYA c{change_basis(e.c.t, ps), change_basis(e.c.v, pv), change_basis(e.c.rep, ps, pv),
                     qs * e.c.boundary * pv};
  return {std::move(c), qv * e.i, qt * e.pi * ps, change_basis(e.t, pt), qs * e.s * pt, qv * e.q * ps};
}

Rational random_rational(Rng& rng, int bound) {
  Rational q(uniform(rng, -bound, bound), uniform(rng, 1, 2));
  q.canonicalize();
  return q;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng, bound);
  return m;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    Matrix m = random_matrix(rng, n, n, 2);
    if (rank(m) == n) return m;
  }
}

LieAlgebra random_lie(Rng& rng, std::size_t lo, std::size_t hi) {
  std::size_t n = static_cast<std::size_t>(uniform(rng, static_cast<int>(lo), static_cast<int>(hi)));
  return change_basis(random_lie_sum(rng, n), random_invertible(rng, n));
}

LeibnizAlgebra random_leibniz(Rng& rng, std::size_t lo, std::size_t hi) {
  std::size_t n = static_cast<std::size_t>(uniform(rng, static_cast<int>(lo), static_cast<int>(hi)));
  LeibnizAlgebra l;
  switch (uniform(rng, 0, 2)) {
    case 0:
      l = lie_as_leibniz(random_lie_sum(rng, n));
      break;
    case 1:
      l = nilpotent_leibniz(random_matrix(rng, n - 1, n - 1));
      break;
    default:
      l = n == 2 ? leib2() : direct_sum(leib2(), lie_as_leibniz(random_lie_sum(rng, n - 2)));
  }
  return change_basis(l, random_invertible(rng, n));
}

ReductiveDecomposition random_reductive(Rng& rng) {
  ReductiveDecomposition d;
  switch (uniform(rng, 0, 4)) {
    case 0:
      d = so3_reductive();
      break;
    case 1:
      d = {affine2(), coordinate_span(2, 1, 2), coordinate_span(2, 0, 1)};
      break;
    case 2:
      d = {heisenberg3(), coordinate_span(3, 2, 3), coordinate_span(3, 0, 2)};
      break;
    case 3: {
      LieAlgebra g = random_lie_sum(rng, static_cast<std::size_t>(uniform(rng, 2, 3)));
      d = {g, Subspace{g.dim(), {}}, coordinate_span(g.dim(), 0, g.dim())};
      break;
    }
    default: {
      LieAlgebra a = random_lie_sum(rng, static_cast<std::size_t>(uniform(rng, 1, 2)));
      LieAlgebra b = random_lie_sum(rng, 2);
      std::size_t n = a.dim() + b.dim();
      d = {direct_sum(a, b), coordinate_span(n, 0, a.dim()), coordinate_span(n, a.dim(), n)};
    }
  }
  const std::size_t n = d.lie.dim();
  Matrix p = random_invertible(rng, n), q = must_invert(p);
  return {change_basis(d.lie, p), remix(rng, transform(d.h, q)), remix(rng, transform(d.m, q))};
}

LYAlgebra random_lya(Rng& rng, std::size_t lo, std::size_t hi) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    LYAlgebra a;
    switch (uniform(rng, 0, 3)) {
      case 0:
        a = lie_to_lya(random_lie(rng, lo, hi));
        break;
      case 1:
        a = leibniz_to_lya(random_leibniz(rng, lo, hi));
        break;
      case 2:
        a = reductive_to_lya(random_reductive(rng));
        break;
      default:
        a = omni_lie(1);
        a = change_basis(a, random_invertible(rng, a.dim()));
    }
    if (a.dim() >= lo && a.dim() <= hi) return a;
  }
  return lie_to_lya(random_lie(rng, lo, hi));
}

LeibnizCrossedModule random_leibniz_crossed(Rng& rng) {
  switch (uniform(rng, 0, 2)) {
    case 0:
      return identity_leibniz_crossed(random_leibniz(rng, 2, 3));
    case 1: {
      // V is L with the zero product, acted on by multiplication; boundary zero.
      LeibnizAlgebra l = random_leibniz(rng, 2, 3);
      return {LeibnizAlgebra(l.dim()), l, l.structure(), l.structure(), Matrix(l.dim(), l.dim())};
    }
    default:
      return as_leibniz_crossed(identity_lie_crossed(random_lie(rng, 2, 3)));
  }
}

ReductiveCrossedModule random_reductive_crossed(Rng& rng) {
  ReductiveDecomposition d = random_reductive(rng);
  if (uniform(rng, 0, 1) == 0) return identity_reductive_crossed(d);
  const std::size_t n = d.lie.dim();
  return {{LieAlgebra(n), d.lie, d.lie.structure(), Matrix(n, n)}, d.h, d.m, d.h, d.m};
}

CrossedModuleLYA random_crossed(Rng& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0:
      return identity_crossed(random_lya(rng, 2, 3));
    case 1: {
      LYAlgebra t = random_lya(rng, 2, 3);
      return module_crossed(t, adjoint_rep(t));
    }
    case 2:
      return crossed_from_leibniz(random_leibniz_crossed(rng));
    default:
      return crossed_from_reductive(random_reductive_crossed(rng));
  }
}

CrossedExtension random_extension(Rng& rng) {
  CrossedExtension e;
  if (uniform(rng, 0, 1) == 0) {
    e = heisenberg_extension();
  } else {
    LYAlgebra t = random_lya(rng, 2, 3);
    e = split_extension(t, adjoint_rep(t));
  }
  e = change_basis(e, random_invertible(rng, e.t.dim()), random_invertible(rng, e.c.t.dim()),
                   random_invertible(rng, e.c.v.dim()));
  e.s = e.s + e.c.boundary * random_matrix(rng, e.c.v.dim(), e.t.dim());
  e.q = e.q + e.i * random_matrix(rng, e.m_dim(), e.c.t.dim());
  return e;
}

}  // namespace lietriple
