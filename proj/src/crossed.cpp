#include "lietriple/crossed.hpp"

#include <optional>
#include <string>

#include "lietriple/cohomology.hpp"
#include "lietriple/errors.hpp"

namespace lietriple {

namespace {

std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

void require_shape(const Matrix& m, std::size_t r, std::size_t c, const char* what) {
  if (m.rows() != r || m.cols() != c)
    throw InputError(std::string(what) + " is " + dims(m.rows(), m.cols()) + ", expected " + dims(r, c));
}

void require_shape(const Tensor& t, std::vector<std::size_t> shape, const char* what) {
  if (t.shape() != shape) throw InputError(std::string(what) + " tensor has the wrong shape");
}

Vector concat(Vector a, const Vector& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Vector contract(const Tensor& t, const Vector& a, const Vector& b) {
  const std::size_t out = t.shape()[2];
  Vector r(out);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      Rational c = a[i] * b[j];
      for (std::size_t k = 0; k < out; ++k)
        if (sgn(t(i, j, k)) != 0) r[k] += c * t(i, j, k);
    }
  }
  return r;
}

void check_crossed_dims(const CrossedModuleLYA& c) {
  require_shape(c.boundary, c.t.dim(), c.v.dim(), "boundary");
  if (c.rep.algebra_dim() != c.t.dim() || c.rep.module_dim() != c.v.dim())
    throw InputError("action is " + dims(c.rep.algebra_dim(), c.rep.module_dim()) + ", expected " +
                     dims(c.t.dim(), c.v.dim()) + " (algebra x module)");
}

}  // namespace

AxiomReport verify_crossed_module(const CrossedModuleLYA& c, const CheckOptions& opt) {
  check_crossed_dims(c);
  const std::size_t n = c.t.dim(), m = c.v.dim();
  const Matrix& d = c.boundary;
  const Representation& r = c.rep;
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  auto f = [m](std::size_t s) { return unit_vector(m, s); };
  AxiomReport rep;
  rep.absorb("T", verify_ly(c.t, opt));
  rep.absorb("V", verify_ly(c.v, opt));
  rep.absorb("boundary-homomorphism", check_homomorphism_lya(c.v, c.t, d, opt));
  {
    // equivalent to the semidirect product with V abelian being LY, at a fraction of the cost
    AxiomReport action = verify_rep(c.t, r, opt);
    action.append(check_d_skew(r, opt));
    rep.absorb("action", action);
  }
  {
    auto& ent = rep.open("boundary-rho");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t s = 0; s < m; ++s)
        rep.record(ent, {i, s}, d.apply(r.rho(i).column(s)) - c.t.bracket(e(i), d.column(s)), opt);
  }
  {
    auto& ent = rep.open("boundary-D");
    for_each_tuple(2, n, [&](const auto& p) {
      for (std::size_t s = 0; s < m; ++s)
        rep.record(ent, {p[0], p[1], s},
                   d.apply(r.D(p[0], p[1]).column(s)) - c.t.bracket(e(p[0]), e(p[1]), d.column(s)), opt);
    });
  }
  {
    auto& ent = rep.open("boundary-theta");
    for_each_tuple(2, n, [&](const auto& p) {
      for (std::size_t s = 0; s < m; ++s)
        rep.record(ent, {p[0], p[1], s},
                   d.apply(r.theta(p[0], p[1]).column(s)) - c.t.bracket(d.column(s), e(p[0]), e(p[1])), opt);
    });
  }
  std::vector<Matrix> rho_d(m);
  for (std::size_t s = 0; s < m; ++s) rho_d[s] = r.rho(d.column(s));
  {
    auto& ent = rep.open("peiffer-binary");
    for_each_tuple(2, m, [&](const auto& p) {
      rep.record(ent, p, c.v.bracket(f(p[0]), f(p[1])) - rho_d[p[0]].column(p[1]), opt);
    });
  }
  {
    auto& dent = rep.open("peiffer-ternary-D");
    for_each_tuple(2, m, [&](const auto& p) {
      Matrix dd = r.D(d.column(p[0]), d.column(p[1]));
      for (std::size_t w = 0; w < m; ++w)
        rep.record(dent, {p[0], p[1], w}, c.v.bracket(f(p[0]), f(p[1]), f(w)) - dd.column(w), opt);
    });
    auto& tent = rep.open("peiffer-ternary-theta");
    for_each_tuple(2, m, [&](const auto& p) {
      Matrix th = r.theta(d.column(p[0]), d.column(p[1]));
      for (std::size_t u = 0; u < m; ++u)
        rep.record(tent, {u, p[0], p[1]}, c.v.bracket(f(u), f(p[0]), f(p[1])) - th.column(u), opt);
    });
  }
  {
    auto& ent = rep.open("D-theta-exchange");
    for (std::size_t i = 0; i < n; ++i)
      for_each_tuple(2, m, [&](const auto& p) {
        Vector lhs = r.D(e(i), d.column(p[0])).column(p[1]);
        Vector rhs = r.theta(e(i), d.column(p[1])).column(p[0]);
        rep.record(ent, {i, p[0], p[1]}, lhs + rhs, opt);
      });
  }
  return rep;
}

TwoTermAlgebra strict_from_crossed_unchecked(const CrossedModuleLYA& c) {
  check_crossed_dims(c);
  TwoTermData data = skeletal_from_data_unchecked(c.t, c.rep, CochainQuadruple::zero(c.t.dim(), c.v.dim())).data();
  data.d = c.boundary;
  return TwoTermAlgebra::unchecked(std::move(data));
}

TwoTermAlgebra strict_from_crossed(const CrossedModuleLYA& c) {
  AxiomReport r = verify_crossed_module(c);
  if (!r.passed()) throw InvalidStructure("not a crossed module: " + failure_list(r));
  return TwoTermAlgebra(strict_from_crossed_unchecked(c).data());
}

namespace {

CrossedModuleLYA crossed_from_strict_impl(const TwoTermAlgebra& t, bool checked) {
  if (!t.is_strict()) throw InputError("2-term algebra is not strict: correction maps are nonzero");
  const auto& data = t.data();
  const std::size_t n = t.v0_dim(), m = t.v1_dim();
  Representation r(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t u = 0; u < m; ++u) r.rho(i)(u, s) = data.b01(i, s, u);
  for_each_tuple(2, n, [&](const auto& p) {
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t u = 0; u < m; ++u) {
        r.D(p[0], p[1])(u, s) = data.tD(p[0], p[1], s, u);
        r.theta(p[0], p[1])(u, s) = data.tTheta(s, p[0], p[1], u);
      }
  });
  Tensor vb({m, m, m}), vt({m, m, m, m});
  for_each_tuple(2, m, [&](const auto& p) {
    Vector du = t.d().column(p[0]), dv = t.d().column(p[1]);
    Vector b = t.mixed(du, unit_vector(m, p[1]));
    for (std::size_t k = 0; k < m; ++k) {
      vb(p[0], p[1], k) = b[k];
      Vector w = t.mixed_d(du, dv, unit_vector(m, k));
      for (std::size_t l = 0; l < m; ++l) vt(p[0], p[1], k, l) = w[l];
    }
  });
  if (checked)
    return {LYAlgebra(data.b00, data.t000), LYAlgebra(std::move(vb), std::move(vt)), std::move(r), data.d};
  return {LYAlgebra::unchecked(data.b00, data.t000), LYAlgebra::unchecked(std::move(vb), std::move(vt)),
          std::move(r), data.d};
}

}  // namespace

CrossedModuleLYA crossed_from_strict_unchecked(const TwoTermAlgebra& t) { return crossed_from_strict_impl(t, false); }

CrossedModuleLYA crossed_from_strict(const TwoTermAlgebra& t) {
  if (!t.is_strict()) throw InputError("2-term algebra is not strict: correction maps are nonzero");
  AxiomReport r = verify_two_term(t);
  if (!r.passed()) throw InvalidStructure("not a 2-term algebra: " + failure_list(r));
  return crossed_from_strict_impl(t, true);
}

namespace {

void check_leibniz_dims(const LeibnizCrossedModule& lc) {
  const std::size_t n = lc.l.dim(), m = lc.v.dim();
  require_shape(lc.left, {n, m, m}, "left action");
  require_shape(lc.right, {m, n, m}, "right action");
  require_shape(lc.phi, n, m, "phi");
}

LeibnizAlgebra leibniz_sum(const LeibnizCrossedModule& lc) {
  const std::size_t n = lc.l.dim(), m = lc.v.dim(), d = n + m;
  Tensor p({d, d, d});
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Vector out;
      if (a < n && b < n) {
        out = concat(lc.l.product(unit_vector(n, a), unit_vector(n, b)), Vector(m));
      } else if (a < n) {
        out = concat(Vector(n), contract(lc.left, unit_vector(n, a), unit_vector(m, b - n)));
      } else if (b < n) {
        out = concat(Vector(n), contract(lc.right, unit_vector(m, a - n), unit_vector(n, b)));
      } else {
        out = concat(Vector(n), lc.v.product(unit_vector(m, a - n), unit_vector(m, b - n)));
      }
      for (std::size_t k = 0; k < d; ++k) p(a, b, k) = out[k];
    }
  return LeibnizAlgebra(std::move(p));
}

}  // namespace

AxiomReport verify_leibniz_crossed(const LeibnizCrossedModule& lc, const CheckOptions& opt) {
  check_leibniz_dims(lc);
  const std::size_t n = lc.l.dim(), m = lc.v.dim();
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  auto f = [m](std::size_t s) { return unit_vector(m, s); };
  AxiomReport rep;
  rep.absorb("V", verify_leibniz(lc.v, opt));
  rep.absorb("L", verify_leibniz(lc.l, opt));
  rep.absorb("phi-homomorphism", check_homomorphism_leibniz(lc.v, lc.l, lc.phi, opt));
  rep.absorb("action", verify_leibniz(leibniz_sum(lc), opt));
  {
    auto& ent = rep.open("L1");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t s = 0; s < m; ++s) {
        Vector a = lc.phi.apply(contract(lc.left, e(i), f(s))) - lc.l.product(e(i), lc.phi.column(s));
        Vector b = lc.phi.apply(contract(lc.right, f(s), e(i))) - lc.l.product(lc.phi.column(s), e(i));
        rep.record(ent, {i, s}, concat(a, b), opt);
      }
  }
  {
    auto& ent = rep.open("L2");
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t) {
        Vector uv = lc.v.product(f(s), f(t));
        Vector a = contract(lc.left, lc.phi.column(s), f(t)) - uv;
        Vector b = contract(lc.right, f(s), lc.phi.column(t)) - uv;
        rep.record(ent, {s, t}, concat(a, b), opt);
      }
  }
  return rep;
}

CrossedModuleLYA crossed_from_leibniz_unchecked(const LeibnizCrossedModule& lc) {
  check_leibniz_dims(lc);
  const std::size_t n = lc.l.dim(), m = lc.v.dim();
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  auto f = [m](std::size_t s) { return unit_vector(m, s); };
  Representation r(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < m; ++s) {
      Vector v = contract(lc.left, e(i), f(s)) - contract(lc.right, f(s), e(i));
      for (std::size_t u = 0; u < m; ++u) r.rho(i)(u, s) = v[u];
    }
  for_each_tuple(2, n, [&](const auto& p) {
    Vector xy = lc.l.product(e(p[0]), e(p[1]));
    for (std::size_t s = 0; s < m; ++s) {
      Vector dv = contract(lc.left, xy, f(s));
      Vector tv = contract(lc.right, contract(lc.right, f(s), e(p[0])), e(p[1]));
      for (std::size_t u = 0; u < m; ++u) {
        r.D(p[0], p[1])(u, s) = -dv[u];
        r.theta(p[0], p[1])(u, s) = -tv[u];
      }
    }
  });
  return {leibniz_to_lya(lc.l), leibniz_to_lya(lc.v), std::move(r), lc.phi};
}

CrossedModuleLYA crossed_from_leibniz(const LeibnizCrossedModule& lc) {
  AxiomReport r = verify_leibniz_crossed(lc);
  if (!r.passed()) throw InvalidStructure("not a Leibniz crossed module: " + failure_list(r));
  return crossed_from_leibniz_unchecked(lc);
}

namespace {

void check_lie_dims(const LieCrossedModule& c) {
  require_shape(c.action, {c.g.dim(), c.v.dim(), c.v.dim()}, "action");
  require_shape(c.phi, c.g.dim(), c.v.dim(), "phi");
}

LieAlgebra lie_sum(const LieCrossedModule& c) {
  const std::size_t n = c.g.dim(), m = c.v.dim(), d = n + m;
  Tensor b({d, d, d});
  auto act = [&](std::size_t i, std::size_t s) { return contract(c.action, unit_vector(n, i), unit_vector(m, s)); };
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t bb = 0; bb < d; ++bb) {
      Vector out;
      if (a < n && bb < n)
        out = concat(c.g.bracket(unit_vector(n, a), unit_vector(n, bb)), Vector(m));
      else if (a < n)
        out = concat(Vector(n), act(a, bb - n));
      else if (bb < n)
        out = concat(Vector(n), Rational(-1) * act(bb, a - n));
      else
        out = concat(Vector(n), c.v.bracket(unit_vector(m, a - n), unit_vector(m, bb - n)));
      for (std::size_t k = 0; k < d; ++k) b(a, bb, k) = out[k];
    }
  return LieAlgebra(std::move(b));
}

}  // namespace

AxiomReport verify_lie_crossed(const LieCrossedModule& c, const CheckOptions& opt) {
  check_lie_dims(c);
  const std::size_t n = c.g.dim(), m = c.v.dim();
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  auto f = [m](std::size_t s) { return unit_vector(m, s); };
  AxiomReport rep;
  rep.absorb("V", verify_lie(c.v, opt));
  rep.absorb("g", verify_lie(c.g, opt));
  {
    auto& ent = rep.open("phi-homomorphism");
    for_each_tuple(2, m, [&](const auto& p) {
      rep.record(ent, p,
                 c.phi.apply(c.v.bracket(f(p[0]), f(p[1]))) - c.g.bracket(c.phi.column(p[0]), c.phi.column(p[1])),
                 opt);
    });
  }
  rep.absorb("action", verify_lie(lie_sum(c), opt));
  {
    auto& ent = rep.open("C1");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t s = 0; s < m; ++s)
        rep.record(ent, {i, s}, c.phi.apply(contract(c.action, e(i), f(s))) - c.g.bracket(e(i), c.phi.column(s)),
                   opt);
  }
  {
    auto& ent = rep.open("C2");
    for_each_tuple(2, m, [&](const auto& p) {
      rep.record(ent, p, contract(c.action, c.phi.column(p[0]), f(p[1])) - c.v.bracket(f(p[0]), f(p[1])), opt);
    });
  }
  return rep;
}

LeibnizCrossedModule as_leibniz_crossed(const LieCrossedModule& c) {
  check_lie_dims(c);
  const std::size_t n = c.g.dim(), m = c.v.dim();
  Tensor right({m, n, m});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t) right(s, i, t) = -c.action(i, s, t);
  return {lie_as_leibniz(c.v), lie_as_leibniz(c.g), c.action, std::move(right), c.phi};
}

AxiomReport verify_reductive_crossed(const ReductiveCrossedModule& rc, const CheckOptions& opt) {
  const LieCrossedModule& c = rc.lie;
  AxiomReport rep;
  rep.absorb("lie-crossed", verify_lie_crossed(c, opt));
  AxiomReport gr = verify_reductive({c.g, rc.h, rc.m}, opt);
  AxiomReport vr = verify_reductive({c.v, rc.v1, rc.v2}, opt);
  rep.absorb("g-reductive", gr);
  rep.absorb("V-reductive", vr);
  if (!gr.passed("direct-sum") || !vr.passed("direct-sum")) return rep;
  Splitting gs(rc.h, rc.m), vs(rc.v1, rc.v2);
  {
    auto& ent = rep.open("phi-splitting");
    for (std::size_t s = 0; s < rc.v1.dim(); ++s) rep.record(ent, {s}, gs.coords_b(c.phi.apply(rc.v1.basis[s])), opt);
    for (std::size_t s = 0; s < rc.v2.dim(); ++s)
      rep.record(ent, {rc.v1.dim() + s}, gs.coords_a(c.phi.apply(rc.v2.basis[s])), opt);
  }
  auto act = [&](const Vector& x, const Vector& u) { return contract(c.action, x, u); };
  {
    auto& ent = rep.open("R1");
    for (std::size_t i = 0; i < rc.h.dim(); ++i)
      for (std::size_t s = 0; s < rc.v1.dim(); ++s)
        rep.record(ent, {i, s}, vs.coords_b(act(rc.h.basis[i], rc.v1.basis[s])), opt);
  }
  {
    auto& ent = rep.open("R2");
    for (std::size_t i = 0; i < rc.h.dim(); ++i)
      for (std::size_t s = 0; s < rc.v2.dim(); ++s)
        rep.record(ent, {i, s}, vs.coords_a(act(rc.h.basis[i], rc.v2.basis[s])), opt);
  }
  return rep;
}

CrossedModuleLYA crossed_from_reductive(const ReductiveCrossedModule& rc) {
  AxiomReport chk = verify_reductive_crossed(rc);
  if (!chk.passed()) throw InvalidStructure("not a reductive crossed module: " + failure_list(chk));
  const LieCrossedModule& c = rc.lie;
  Splitting gs(rc.h, rc.m), vs(rc.v1, rc.v2);
  const std::size_t n = rc.m.dim(), m = rc.v2.dim();
  auto act = [&](const Vector& x, const Vector& u) { return contract(c.action, x, u); };
  Matrix boundary(n, m);
  for (std::size_t s = 0; s < m; ++s) {
    Vector y = gs.coords_b(c.phi.apply(rc.v2.basis[s]));
    for (std::size_t k = 0; k < n; ++k) boundary(k, s) = y[k];
  }
  Representation r(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < m; ++s) {
      Vector v = vs.coords_b(act(rc.m.basis[i], rc.v2.basis[s]));
      for (std::size_t u = 0; u < m; ++u) r.rho(i)(u, s) = v[u];
    }
  for_each_tuple(2, n, [&](const auto& p) {
    const Vector &x = rc.m.basis[p[0]], &y = rc.m.basis[p[1]];
    Vector hxy = gs.project_a(c.g.bracket(x, y));
    for (std::size_t s = 0; s < m; ++s) {
      const Vector& u = rc.v2.basis[s];
      Vector dv = vs.coords_b(act(hxy, u));
      Vector tv = vs.coords_b(act(y, vs.project_a(act(x, u))));
      for (std::size_t k = 0; k < m; ++k) {
        r.D(p[0], p[1])(k, s) = dv[k];
        r.theta(p[0], p[1])(k, s) = tv[k];
      }
    }
  });
  return {reductive_to_lya({c.g, rc.h, rc.m}), reductive_to_lya({c.v, rc.v1, rc.v2}), std::move(r),
          std::move(boundary)};
}

namespace {

void check_extension_dims(const CrossedExtension& e) {
  check_crossed_dims(e.c);
  const std::size_t v = e.c.v.dim(), s = e.c.t.dim(), t = e.t.dim();
  require_shape(e.i, v, e.i.cols(), "i");
  require_shape(e.pi, t, s, "pi");
  require_shape(e.s, s, t, "s");
  require_shape(e.q, v, s, "q");
}

// Coordinates in M of a vector of V lying in i(M).
class MCoords {
 public:
  explicit MCoords(const Matrix& i) : i_(i) {}
  std::optional<Vector> operator()(const Vector& v) const { return solve_in_image(i_, v); }

 private:
  Matrix i_;
};

Representation induced_with(const CrossedExtension& e, const Matrix& s) {
  const std::size_t n = e.t.dim(), k = e.m_dim();
  const Representation& r = e.c.rep;
  MCoords coords(e.i);
  Representation out(n, k);
  auto fill = [&](Matrix& target, const Matrix& op, const char* what) {
    for (std::size_t a = 0; a < k; ++a) {
      auto c = coords(op.apply(e.i.column(a)));
      if (!c) throw ConsistencyError(std::string("induced ") + what + " leaves M");
      for (std::size_t b = 0; b < k; ++b) target(b, a) = (*c)[b];
    }
  };
  for (std::size_t x = 0; x < n; ++x) fill(out.rho(x), r.rho(s.column(x)), "rho");
  for_each_tuple(2, n, [&](const auto& p) {
    fill(out.D(p[0], p[1]), r.D(s.column(p[0]), s.column(p[1])), "D");
    fill(out.theta(p[0], p[1]), r.theta(s.column(p[0]), s.column(p[1])), "theta");
  });
  return out;
}

void record_rank(AxiomReport& rep, const std::string& label, std::size_t expected, std::size_t actual,
                 const CheckOptions& opt) {
  auto& ent = rep.open(label);
  rep.record(ent, {actual}, Vector{Rational(static_cast<long>(expected)) - Rational(static_cast<long>(actual))},
             opt);
}

}  // namespace

AxiomReport check_sections(const CrossedExtension& e, const Matrix& s, const Matrix& q, const CheckOptions& opt) {
  check_extension_dims(e);
  require_shape(s, e.c.t.dim(), e.t.dim(), "s");
  require_shape(q, e.c.v.dim(), e.c.t.dim(), "q");
  AxiomReport rep;
  {
    auto& ent = rep.open("section-s");
    for (std::size_t x = 0; x < e.t.dim(); ++x)
      rep.record(ent, {x}, e.pi.apply(s.column(x)) - unit_vector(e.t.dim(), x), opt);
  }
  {
    auto& ent = rep.open("section-q");
    Subspace im = image_basis(e.c.boundary);
    for (std::size_t k = 0; k < im.dim(); ++k)
      rep.record(ent, {k}, e.c.boundary.apply(q.apply(im.basis[k])) - im.basis[k], opt);
  }
  return rep;
}

AxiomReport verify_extension(const CrossedExtension& e, const CheckOptions& opt) {
  check_extension_dims(e);
  const std::size_t v = e.c.v.dim(), s = e.c.t.dim(), t = e.t.dim(), k = e.m_dim();
  AxiomReport rep;
  rep.absorb("crossed-module", verify_crossed_module(e.c, opt));
  rep.absorb("T", verify_ly(e.t, opt));
  rep.absorb("pi-homomorphism", check_homomorphism_lya(e.c.t, e.t, e.pi, opt));
  const std::size_t ri = rank(e.i), rd = rank(e.c.boundary), rp = rank(e.pi);
  record_rank(rep, "i-injective", k, ri, opt);
  {
    auto& ent = rep.open("exact-at-V");
    rep.record(ent, {}, (e.c.boundary * e.i).flatten(), opt);
    rep.record(ent, {rd}, Vector{Rational(static_cast<long>(v - rd)) - Rational(static_cast<long>(ri))}, opt);
  }
  {
    auto& ent = rep.open("exact-at-S");
    rep.record(ent, {}, (e.pi * e.c.boundary).flatten(), opt);
    rep.record(ent, {rp}, Vector{Rational(static_cast<long>(s - rp)) - Rational(static_cast<long>(rd))}, opt);
  }
  record_rank(rep, "pi-surjective", t, rp, opt);
  rep.append(check_sections(e, e.s, e.q, opt));
  if (!rep.passed()) return rep;
  rep.absorb("induced-well-defined", check_induced_well_defined(e, opt));
  if (!rep.passed()) return rep;
  rep.absorb("induced-representation", verify_rep(e.t, induced_with(e, e.s), opt));
  return rep;
}

Representation induced_representation(const CrossedExtension& e) {
  check_extension_dims(e);
  return induced_with(e, e.s);
}

AxiomReport check_induced_well_defined(const CrossedExtension& e, const CheckOptions& opt) {
  check_extension_dims(e);
  const std::size_t v = e.c.v.dim(), n = e.t.dim();
  Representation base = induced_with(e, e.s);
  AxiomReport rep;
  auto& ent = rep.open("section-shift");
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t x = 0; x < n; ++x) {
      Matrix s2 = e.s;
      Vector dh = e.c.boundary.column(a);
      for (std::size_t r = 0; r < s2.rows(); ++r) s2(r, x) += dh[r];
      Representation other = induced_with(e, s2);
      Vector defect;
      for (std::size_t i = 0; i < n; ++i) defect = concat(defect, (other.rho(i) - base.rho(i)).flatten());
      for_each_tuple(2, n, [&](const auto& p) {
        defect = concat(defect, (other.D(p[0], p[1]) - base.D(p[0], p[1])).flatten());
        defect = concat(defect, (other.theta(p[0], p[1]) - base.theta(p[0], p[1])).flatten());
      });
      rep.record(ent, {a, x}, defect, opt);
    }
  return rep;
}

CochainQuadruple extract_theta(const CrossedExtension& e) { return extract_theta(e, e.s, e.q); }

namespace {

void require_extension(const CrossedExtension& e) {
  AxiomReport ext = verify_extension(e);
  if (!ext.passed()) throw InvalidStructure("not a crossed module extension: " + failure_list(ext));
}

void require_sections(const CrossedExtension& e, const Matrix& s, const Matrix& q) {
  AxiomReport sec = check_sections(e, s, q);
  if (!sec.passed()) throw InvalidStructure("invalid sections: " + failure_list(sec));
}

CochainQuadruple theta_of_sections(const CrossedExtension& e, const Matrix& s, const Matrix& q);

}  // namespace

CochainQuadruple extract_theta(const CrossedExtension& e, const Matrix& s, const Matrix& q) {
  require_extension(e);
  require_sections(e, s, q);
  return theta_of_sections(e, s, q);
}

namespace {

CochainQuadruple theta_of_sections(const CrossedExtension& e, const Matrix& s, const Matrix& q) {
  const LYAlgebra& S = e.c.t;
  const LYAlgebra& T = e.t;
  const Representation& r = e.c.rep;
  const std::size_t n = T.dim(), m = e.c.v.dim(), k = e.m_dim();
  auto x = [n](std::size_t i) { return unit_vector(n, i); };

  std::vector<Vector> nu_b(n * n, Vector(m)), om_b(n * n * n, Vector(m));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      nu_b[a * n + b] = q.apply(S.bracket(s.column(a), s.column(b)) - s.apply(T.bracket(x(a), x(b))));
      for (std::size_t c = 0; c < n; ++c)
        om_b[(a * n + b) * n + c] =
            q.apply(S.bracket(s.column(a), s.column(b), s.column(c)) - s.apply(T.bracket(x(a), x(b), x(c))));
    }
  auto nu = [&](const Vector& a, const Vector& b) {
    Vector out(m);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(b[j]) != 0) axpy(out, a[i] * b[j], nu_b[i * n + j]);
    }
    return out;
  };
  auto om = [&](const Vector& a, const Vector& b, const Vector& c) {
    Vector out(m);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(b[j]) == 0) continue;
        for (std::size_t l = 0; l < n; ++l)
          if (sgn(c[l]) != 0) axpy(out, a[i] * b[j] * c[l], om_b[(i * n + j) * n + l]);
      }
    }
    return out;
  };
  std::vector<Matrix> rho(n), D(n * n), th(n * n);
  for (std::size_t a = 0; a < n; ++a) rho[a] = r.rho(s.column(a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      D[a * n + b] = r.D(s.column(a), s.column(b));
      th[a * n + b] = r.theta(s.column(a), s.column(b));
    }
  auto br = [&](std::size_t a, std::size_t b) { return T.bracket(x(a), x(b)); };
  auto tr = [&](std::size_t a, std::size_t b, std::size_t c) { return T.bracket(x(a), x(b), x(c)); };

  MCoords coords(e.i);
  auto to_m = [&](const Vector& v, const char* comp, const std::vector<std::size_t>& t) {
    auto c = coords(v);
    if (!c) throw ConsistencyError(std::string(comp) + " leaves M at " + format_tuple(t));
    return *c;
  };
  auto sp = quadruple_spaces(n, k);
  CochainQuadruple out;
  out.l3 = Cochain::from_values(sp[0], [&](const std::vector<std::size_t>& t) {
    Vector v(m);
    for (std::size_t c = 0; c < 3; ++c) {
      std::size_t a = t[c], b = t[(c + 1) % 3], d = t[(c + 2) % 3];
      v = v - om(x(a), x(b), x(d)) + rho[a].apply(nu(x(b), x(d))) - nu(br(a, b), x(d));
    }
    return to_m(v, "theta3", t);
  });
  out.l4hat = Cochain::from_values(sp[1], [&](const std::vector<std::size_t>& t) {
    Vector v(m);
    const std::size_t y = t[3];
    for (std::size_t c = 0; c < 3; ++c) {
      std::size_t a = t[c], b = t[(c + 1) % 3], d = t[(c + 2) % 3];
      v = v - th[a * n + y].apply(nu(x(b), x(d))) - om(br(a, b), x(d), x(y));
    }
    return to_m(v, "theta4hat", t);
  });
  out.l4tilde = Cochain::from_values(sp[2], [&](const std::vector<std::size_t>& t) {
    const std::size_t x1 = t[0], x2 = t[1], y1 = t[2], y2 = t[3];
    Vector v = om(x(x1), x(x2), br(y1, y2)) - rho[y1].apply(om(x(x1), x(x2), x(y2))) +
               rho[y2].apply(om(x(x1), x(x2), x(y1))) + D[x1 * n + x2].apply(nu(x(y1), x(y2))) -
               nu(tr(x1, x2, y1), x(y2)) - nu(x(y1), tr(x1, x2, y2));
    return to_m(v, "theta4tilde", t);
  });
  out.l5 = Cochain::from_values(sp[3], [&](const std::vector<std::size_t>& t) {
    const std::size_t x1 = t[0], x2 = t[1], y1 = t[2], y2 = t[3], y3 = t[4];
    Vector v = om(x(x1), x(x2), tr(y1, y2, y3)) - D[x1 * n + x2].apply(om(x(y1), x(y2), x(y3))) -
               om(tr(x1, x2, y1), x(y2), x(y3)) - om(x(y1), tr(x1, x2, y2), x(y3)) -
               om(x(y1), x(y2), tr(x1, x2, y3)) - th[y2 * n + y3].apply(om(x(x1), x(x2), x(y1))) +
               th[y1 * n + y3].apply(om(x(x1), x(x2), x(y2))) + D[y1 * n + y2].apply(om(x(x1), x(x2), x(y3)));
    return to_m(v, "theta5", t);
  });
  return out;
}

}  // namespace

bool section_independence(const CrossedExtension& e, const Matrix& s2, const Matrix& q2) {
  require_extension(e);
  require_sections(e, e.s, e.q);
  require_sections(e, s2, q2);
  CochainQuadruple a = theta_of_sections(e, e.s, e.q);
  CochainQuadruple b = theta_of_sections(e, s2, q2);
  const std::size_t n = e.t.dim(), k = e.m_dim();
  CochainQuadruple diff = CochainQuadruple::from_vector(n, k, a.flatten() - b.flatten());
  return is_coboundary_3445(diff, e.t, induced_representation(e)).has_value();
}

}  // namespace lietriple
