#include "lietriple/lya.hpp"

#include <optional>
#include <string>

#include "lietriple/errors.hpp"

namespace lietriple {

namespace {

std::string dim_str(std::size_t n) { return std::to_string(n); }

void require_shape(const Tensor& t, std::size_t rank, std::size_t n, const char* what) {
  if (t.rank() != rank) throw InputError(std::string(what) + " tensor must have rank " + dim_str(rank));
  for (std::size_t s : t.shape())
    if (s != n) throw InputError(std::string(what) + " tensor has inconsistent dimensions");
}

}  // namespace

LYAlgebra::LYAlgebra(std::size_t dim)
    : dim_(dim), binary_({dim, dim, dim}), ternary_({dim, dim, dim, dim}) {
  cache();
}

LYAlgebra::LYAlgebra(Tensor binary, Tensor ternary, Unchecked)
    : binary_(std::move(binary)), ternary_(std::move(ternary)) {
  if (binary_.rank() != 3) throw InputError("binary tensor must have rank 3");
  dim_ = binary_.shape()[0];
  require_shape(binary_, 3, dim_, "binary");
  require_shape(ternary_, 4, dim_, "ternary");
  cache();
}

LYAlgebra::LYAlgebra(Tensor binary, Tensor ternary)
    : LYAlgebra(std::move(binary), std::move(ternary), Unchecked{}) {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        if (binary_(i, j, k) != -binary_(j, i, k))
          throw InvalidStructure("binary bracket not skew at " + format_tuple({i, j, k}));
        for (std::size_t l = 0; l < dim_; ++l)
          if (ternary_(i, j, k, l) != -ternary_(j, i, k, l))
            throw InvalidStructure("ternary bracket not skew in its first two slots at " +
                                   format_tuple({i, j, k, l}));
      }
}

LYAlgebra LYAlgebra::unchecked(Tensor binary, Tensor ternary) {
  return LYAlgebra(std::move(binary), std::move(ternary), Unchecked{});
}

void LYAlgebra::cache() {
  b2_.assign(dim_ * dim_, {});
  b3_.assign(dim_ * dim_ * dim_, {});
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(binary_(i, j, k)) != 0) b2_[i * dim_ + j].emplace_back(k, binary_(i, j, k));
      for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t l = 0; l < dim_; ++l)
          if (sgn(ternary_(i, j, k, l)) != 0)
            b3_[(i * dim_ + j) * dim_ + k].emplace_back(l, ternary_(i, j, k, l));
    }
}

Vector LYAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational c = x[i] * y[j];
      for (const auto& [k, v] : basis_bracket(i, j)) r[k] += c * v;
    }
  }
  return r;
}

Vector LYAlgebra::bracket(const Vector& x, const Vector& y, const Vector& z) const {
  Vector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(z[k]) == 0) continue;
        Rational cc = c * z[k];
        for (const auto& [l, v] : basis_bracket(i, j, k)) r[l] += cc * v;
      }
    }
  }
  return r;
}

LieAlgebra::LieAlgebra(std::size_t dim) : dim_(dim), bracket_({dim, dim, dim}) {}

LieAlgebra::LieAlgebra(Tensor bracket) : bracket_(std::move(bracket)) {
  if (bracket_.rank() != 3) throw InputError("Lie bracket tensor must have rank 3");
  dim_ = bracket_.shape()[0];
  require_shape(bracket_, 3, dim_, "Lie bracket");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (bracket_(i, j, k) != -bracket_(j, i, k))
          throw InvalidStructure("Lie bracket not skew at " + format_tuple({i, j, k}));
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(bracket_(i, j, k)) != 0) r[k] += c * bracket_(i, j, k);
    }
  }
  return r;
}

LeibnizAlgebra::LeibnizAlgebra(std::size_t dim) : dim_(dim), product_({dim, dim, dim}) {}

LeibnizAlgebra::LeibnizAlgebra(Tensor product) : product_(std::move(product)) {
  if (product_.rank() != 3) throw InputError("Leibniz product tensor must have rank 3");
  dim_ = product_.shape()[0];
  require_shape(product_, 3, dim_, "Leibniz product");
}

Vector LeibnizAlgebra::product(const Vector& x, const Vector& y) const {
  Vector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(product_(i, j, k)) != 0) r[k] += c * product_(i, j, k);
    }
  }
  return r;
}

Splitting::Splitting(const Subspace& a, const Subspace& b) : dim_a_(a.dim()), dim_b_(b.dim()) {
  if (a.ambient_dim != b.ambient_dim) throw InputError("splitting summands live in different spaces");
  const std::size_t n = a.ambient_dim;
  if (dim_a_ + dim_b_ != n)
    throw InvalidStructure("summand dimensions " + dim_str(dim_a_) + " + " + dim_str(dim_b_) +
                           " do not add up to " + dim_str(n));
  std::vector<Vector> cols = a.basis;
  cols.insert(cols.end(), b.basis.begin(), b.basis.end());
  basis_ = Matrix::from_columns(cols, n);
  auto inv = inverse(basis_);
  if (!inv) throw InvalidStructure("summands intersect nontrivially");
  coords_ = *inv;
}

Vector Splitting::coords_a(const Vector& v) const {
  Vector c = coords_.apply(v);
  return Vector(c.begin(), c.begin() + dim_a_);
}

Vector Splitting::coords_b(const Vector& v) const {
  Vector c = coords_.apply(v);
  return Vector(c.begin() + dim_a_, c.end());
}

Vector Splitting::embed_a(const Vector& coords) const {
  Vector full(dim_a_ + dim_b_);
  for (std::size_t i = 0; i < dim_a_; ++i) full[i] = coords[i];
  return basis_.apply(full);
}

Vector Splitting::embed_b(const Vector& coords) const {
  Vector full(dim_a_ + dim_b_);
  for (std::size_t i = 0; i < dim_b_; ++i) full[dim_a_ + i] = coords[i];
  return basis_.apply(full);
}

Vector Splitting::project_a(const Vector& v) const { return embed_a(coords_a(v)); }
Vector Splitting::project_b(const Vector& v) const { return embed_b(coords_b(v)); }

AxiomReport verify_ly(const LYAlgebra& a, const CheckOptions& opt) {
  const std::size_t n = a.dim();
  AxiomReport rep;
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  auto br = [&](const Vector& x, const Vector& y) { return a.bracket(x, y); };
  auto tr = [&](const Vector& x, const Vector& y, const Vector& z) { return a.bracket(x, y, z); };

  {
    auto& ent = rep.open("LY1");
    for_each_tuple(2, n, [&](const auto& t) {
      rep.record(ent, t, br(e(t[0]), e(t[1])) + br(e(t[1]), e(t[0])), opt);
    });
  }
  {
    auto& ent = rep.open("LY2");
    for_each_tuple(3, n, [&](const auto& t) {
      Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
      rep.record(ent, t, tr(x, y, z) + tr(y, x, z), opt);
    });
  }
  {
    auto& ent = rep.open("LY3");
    for_each_tuple(3, n, [&](const auto& t) {
      Vector x1 = e(t[0]), x2 = e(t[1]), x3 = e(t[2]);
      Vector s = br(br(x1, x2), x3) + br(br(x2, x3), x1) + br(br(x3, x1), x2);
      s = s + tr(x1, x2, x3) + tr(x2, x3, x1) + tr(x3, x1, x2);
      rep.record(ent, t, s, opt);
    });
  }
  {
    auto& ent = rep.open("LY4");
    for_each_tuple(4, n, [&](const auto& t) {
      Vector x1 = e(t[0]), x2 = e(t[1]), x3 = e(t[2]), y = e(t[3]);
      Vector s = tr(br(x1, x2), x3, y) + tr(br(x2, x3), x1, y) + tr(br(x3, x1), x2, y);
      rep.record(ent, t, s, opt);
    });
  }
  {
    auto& ent = rep.open("LY5");
    for_each_tuple(4, n, [&](const auto& t) {
      Vector x1 = e(t[0]), x2 = e(t[1]), y1 = e(t[2]), y2 = e(t[3]);
      Vector s = tr(x1, x2, br(y1, y2)) - br(tr(x1, x2, y1), y2) - br(y1, tr(x1, x2, y2));
      rep.record(ent, t, s, opt);
    });
  }
  {
    auto& ent = rep.open("LY6");
    for_each_tuple(5, n, [&](const auto& t) {
      Vector x1 = e(t[0]), x2 = e(t[1]), y1 = e(t[2]), y2 = e(t[3]), y3 = e(t[4]);
      Vector s = tr(x1, x2, tr(y1, y2, y3)) - tr(tr(x1, x2, y1), y2, y3) -
                 tr(y1, tr(x1, x2, y2), y3) - tr(y1, y2, tr(x1, x2, y3));
      rep.record(ent, t, s, opt);
    });
  }
  return rep;
}

AxiomReport verify_lie(const LieAlgebra& g, const CheckOptions& opt) {
  const std::size_t n = g.dim();
  AxiomReport rep;
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  {
    auto& ent = rep.open("skew");
    for_each_tuple(2, n, [&](const auto& t) {
      rep.record(ent, t, g.bracket(e(t[0]), e(t[1])) + g.bracket(e(t[1]), e(t[0])), opt);
    });
  }
  {
    auto& ent = rep.open("jacobi");
    for_each_tuple(3, n, [&](const auto& t) {
      Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
      Vector s = g.bracket(g.bracket(x, y), z) + g.bracket(g.bracket(y, z), x) + g.bracket(g.bracket(z, x), y);
      rep.record(ent, t, s, opt);
    });
  }
  return rep;
}

AxiomReport verify_leibniz(const LeibnizAlgebra& l, const CheckOptions& opt) {
  const std::size_t n = l.dim();
  AxiomReport rep;
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  auto& ent = rep.open("leibniz");
  for_each_tuple(3, n, [&](const auto& t) {
    Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
    Vector s = l.product(x, l.product(y, z)) - l.product(l.product(x, y), z) - l.product(y, l.product(x, z));
    rep.record(ent, t, s, opt);
  });
  return rep;
}

AxiomReport verify_reductive(const ReductiveDecomposition& d, const CheckOptions& opt) {
  AxiomReport rep;
  rep.absorb("lie", verify_lie(d.lie, opt));
  auto& ds = rep.open("direct-sum");
  if (d.h.ambient_dim != d.lie.dim() || d.m.ambient_dim != d.lie.dim())
    throw InputError("decomposition subspaces do not live in the Lie algebra");
  std::optional<Splitting> split;
  try {
    split.emplace(d.h, d.m);
  } catch (const InvalidStructure&) {
    rep.record(ds, {d.h.dim(), d.m.dim()}, Vector{1}, opt);
    return rep;
  }
  {
    auto& ent = rep.open("h-subalgebra");
    for_each_tuple(2, d.h.dim(), [&](const auto& t) {
      rep.record(ent, t, split->coords_b(d.lie.bracket(d.h.basis[t[0]], d.h.basis[t[1]])), opt);
    });
  }
  {
    auto& ent = rep.open("h-preserves-m");
    for (std::size_t i = 0; i < d.h.dim(); ++i)
      for (std::size_t j = 0; j < d.m.dim(); ++j)
        rep.record(ent, {i, j}, split->coords_a(d.lie.bracket(d.h.basis[i], d.m.basis[j])), opt);
  }
  return rep;
}

LYAlgebra lie_to_lya(const LieAlgebra& g) {
  AxiomReport r = verify_lie(g);
  if (!r.passed()) throw InvalidStructure("not a Lie algebra: " + failure_list(r));
  const std::size_t n = g.dim();
  Tensor b = g.structure();
  Tensor t({n, n, n, n});
  for_each_tuple(3, n, [&](const auto& ix) {
    Vector v = g.bracket(g.bracket(unit_vector(n, ix[0]), unit_vector(n, ix[1])), unit_vector(n, ix[2]));
    for (std::size_t l = 0; l < n; ++l) t(ix[0], ix[1], ix[2], l) = v[l];
  });
  return LYAlgebra(std::move(b), std::move(t));
}

LYAlgebra leibniz_to_lya(const LeibnizAlgebra& l) {
  AxiomReport r = verify_leibniz(l);
  if (!r.passed()) throw InvalidStructure("not a Leibniz algebra: " + failure_list(r));
  const std::size_t n = l.dim();
  Tensor b({n, n, n});
  Tensor t({n, n, n, n});
  for_each_tuple(2, n, [&](const auto& ix) {
    Vector x = unit_vector(n, ix[0]), y = unit_vector(n, ix[1]);
    Vector c = l.product(x, y) - l.product(y, x);
    Vector xy = l.product(x, y);
    for (std::size_t k = 0; k < n; ++k) {
      b(ix[0], ix[1], k) = c[k];
      Vector v = l.product(xy, unit_vector(n, k));
      for (std::size_t m = 0; m < n; ++m) t(ix[0], ix[1], k, m) = -v[m];
    }
  });
  return LYAlgebra(std::move(b), std::move(t));
}

LYAlgebra reductive_to_lya(const ReductiveDecomposition& d) {
  AxiomReport r = verify_reductive(d);
  if (!r.passed()) throw InvalidStructure("not a reductive decomposition: " + failure_list(r));
  Splitting split(d.h, d.m);
  const std::size_t n = d.m.dim();
  Tensor b({n, n, n});
  Tensor t({n, n, n, n});
  for_each_tuple(2, n, [&](const auto& ix) {
    Vector g = d.lie.bracket(d.m.basis[ix[0]], d.m.basis[ix[1]]);
    Vector bm = split.coords_b(g);
    Vector hpart = split.project_a(g);
    for (std::size_t k = 0; k < n; ++k) {
      b(ix[0], ix[1], k) = bm[k];
      Vector v = split.coords_b(d.lie.bracket(hpart, d.m.basis[k]));
      for (std::size_t m = 0; m < n; ++m) t(ix[0], ix[1], k, m) = v[m];
    }
  });
  return LYAlgebra(std::move(b), std::move(t));
}

LeibnizAlgebra lie_as_leibniz(const LieAlgebra& g) { return LeibnizAlgebra(g.structure()); }

LeibnizAlgebra fundamental_leibniz(const LYAlgebra& a) {
  AxiomReport r = verify_ly(a);
  if (!r.passed()) throw InvalidStructure("not a Lie-Yamaguti algebra: " + failure_list(r));
  const std::size_t d = a.dim();
  const std::size_t n = d * d;
  Tensor p({n, n, n});
  for_each_tuple(4, d, [&](const auto& ix) {
    std::size_t x = ix[0] * d + ix[1];
    std::size_t y = ix[2] * d + ix[3];
    for (const auto& [k, v] : a.basis_bracket(ix[0], ix[1], ix[2])) p(x, y, k * d + ix[3]) += v;
    for (const auto& [k, v] : a.basis_bracket(ix[0], ix[1], ix[3])) p(x, y, ix[2] * d + k) += v;
  });
  return LeibnizAlgebra(std::move(p));
}

AxiomReport check_fundamental_action(const LYAlgebra& a, const CheckOptions& opt) {
  const std::size_t d = a.dim();
  auto ad = [&](std::size_t i, std::size_t j) {
    Matrix m(d, d);
    for (std::size_t w = 0; w < d; ++w)
      for (const auto& [k, v] : a.basis_bracket(i, j, w)) m(k, w) = v;
    return m;
  };
  LeibnizAlgebra l = fundamental_leibniz(a);
  AxiomReport rep;
  auto& ent = rep.open("ad-homomorphism");
  for_each_tuple(4, d, [&](const auto& ix) {
    Matrix lhs = commutator(ad(ix[0], ix[1]), ad(ix[2], ix[3]));
    std::size_t x = ix[0] * d + ix[1];
    std::size_t y = ix[2] * d + ix[3];
    for (std::size_t k = 0; k < d * d; ++k) {
      const Rational& c = l.structure()(x, y, k);
      if (sgn(c) != 0) lhs -= c * ad(k / d, k % d);
    }
    rep.record(ent, ix, lhs.flatten(), opt);
  });
  return rep;
}

LYAlgebra omni_lie(std::size_t n) {
  if (n == 0) throw InputError("omni-Lie algebra needs n >= 1");
  const std::size_t dim = n * n + n;
  auto mat = [&](const Vector& v) {
    Matrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m(a, b) = v[a * n + b];
    return m;
  };
  auto vec = [&](const Vector& v) { return Vector(v.begin() + n * n, v.end()); };
  auto pack = [&](const Matrix& m, const Vector& x) {
    Vector v(dim);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) v[a * n + b] = m(a, b);
    for (std::size_t c = 0; c < n; ++c) v[n * n + c] = x[c];
    return v;
  };
  Tensor b({dim, dim, dim});
  Tensor t({dim, dim, dim, dim});
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Vector u = unit_vector(dim, i), w = unit_vector(dim, j);
      Matrix A = mat(u), B = mat(w);
      Vector x = vec(u), y = vec(w);
      Matrix AB = commutator(A, B);
      Vector br = pack(Rational(2) * AB, A.apply(y) - B.apply(x));
      for (std::size_t k = 0; k < dim; ++k) b(i, j, k) = br[k];
      for (std::size_t k = 0; k < dim; ++k) {
        Vector z3 = unit_vector(dim, k);
        Vector tr = pack(Rational(-1) * commutator(AB, mat(z3)), Rational(-1) * AB.apply(vec(z3)));
        for (std::size_t l = 0; l < dim; ++l) t(i, j, k, l) = tr[l];
      }
    }
  return LYAlgebra(std::move(b), std::move(t));
}

AxiomReport check_homomorphism_lya(const LYAlgebra& source, const LYAlgebra& target, const Matrix& phi,
                                   const CheckOptions& opt) {
  if (phi.rows() != target.dim() || phi.cols() != source.dim())
    throw InputError("map is " + dim_str(phi.rows()) + "x" + dim_str(phi.cols()) + ", expected " +
                     dim_str(target.dim()) + "x" + dim_str(source.dim()));
  const std::size_t n = source.dim();
  AxiomReport rep;
  {
    auto& ent = rep.open("binary");
    for_each_tuple(2, n, [&](const auto& t) {
      Vector x = unit_vector(n, t[0]), y = unit_vector(n, t[1]);
      rep.record(ent, t, phi.apply(source.bracket(x, y)) - target.bracket(phi.apply(x), phi.apply(y)), opt);
    });
  }
  {
    auto& ent = rep.open("ternary");
    for_each_tuple(3, n, [&](const auto& t) {
      Vector x = unit_vector(n, t[0]), y = unit_vector(n, t[1]), z = unit_vector(n, t[2]);
      rep.record(ent, t,
                 phi.apply(source.bracket(x, y, z)) - target.bracket(phi.apply(x), phi.apply(y), phi.apply(z)),
                 opt);
    });
  }
  return rep;
}

AxiomReport check_homomorphism_leibniz(const LeibnizAlgebra& source, const LeibnizAlgebra& target,
                                       const Matrix& phi, const CheckOptions& opt) {
  if (phi.rows() != target.dim() || phi.cols() != source.dim())
    throw InputError("map is " + dim_str(phi.rows()) + "x" + dim_str(phi.cols()) + ", expected " +
                     dim_str(target.dim()) + "x" + dim_str(source.dim()));
  const std::size_t n = source.dim();
  AxiomReport rep;
  auto& ent = rep.open("product");
  for_each_tuple(2, n, [&](const auto& t) {
    Vector x = unit_vector(n, t[0]), y = unit_vector(n, t[1]);
    rep.record(ent, t, phi.apply(source.product(x, y)) - target.product(phi.apply(x), phi.apply(y)), opt);
  });
  return rep;
}

namespace {

Matrix checked_inverse(const Matrix& p, std::size_t n) {
  if (p.rows() != n || p.cols() != n) throw InputError("basis change must be " + dim_str(n) + "x" + dim_str(n));
  auto q = inverse(p);
  if (!q) throw InputError("basis change matrix is singular");
  return *q;
}

}  // namespace

LYAlgebra change_basis(const LYAlgebra& a, const Matrix& p) {
  const std::size_t n = a.dim();
  Matrix q = checked_inverse(p, n);
  Tensor b({n, n, n});
  Tensor t({n, n, n, n});
  for_each_tuple(2, n, [&](const auto& ix) {
    Vector x = p.column(ix[0]), y = p.column(ix[1]);
    Vector v = q.apply(a.bracket(x, y));
    for (std::size_t k = 0; k < n; ++k) {
      b(ix[0], ix[1], k) = v[k];
      Vector w = q.apply(a.bracket(x, y, p.column(k)));
      for (std::size_t l = 0; l < n; ++l) t(ix[0], ix[1], k, l) = w[l];
    }
  });
  return LYAlgebra::unchecked(std::move(b), std::move(t));
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p) {
  const std::size_t n = g.dim();
  Matrix q = checked_inverse(p, n);
  Tensor b({n, n, n});
  for_each_tuple(2, n, [&](const auto& ix) {
    Vector v = q.apply(g.bracket(p.column(ix[0]), p.column(ix[1])));
    for (std::size_t k = 0; k < n; ++k) b(ix[0], ix[1], k) = v[k];
  });
  return LieAlgebra(std::move(b));
}

LeibnizAlgebra change_basis(const LeibnizAlgebra& l, const Matrix& p) {
  const std::size_t n = l.dim();
  Matrix q = checked_inverse(p, n);
  Tensor b({n, n, n});
  for_each_tuple(2, n, [&](const auto& ix) {
    Vector v = q.apply(l.product(p.column(ix[0]), p.column(ix[1])));
    for (std::size_t k = 0; k < n; ++k) b(ix[0], ix[1], k) = v[k];
  });
  return LeibnizAlgebra(std::move(b));
}

namespace {

Tensor sum_tensor3(const Tensor& a, const Tensor& b) {
  std::size_t n = a.shape()[0], m = b.shape()[0];
  Tensor t({n + m, n + m, n + m});
  for_each_tuple(3, n, [&](const auto& ix) { t(ix[0], ix[1], ix[2]) = a(ix[0], ix[1], ix[2]); });
  for_each_tuple(3, m, [&](const auto& ix) { t(n + ix[0], n + ix[1], n + ix[2]) = b(ix[0], ix[1], ix[2]); });
  return t;
}

}  // namespace

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  return LieAlgebra(sum_tensor3(a.structure(), b.structure()));
}

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  return LeibnizAlgebra(sum_tensor3(a.structure(), b.structure()));
}

}  // namespace lietriple
