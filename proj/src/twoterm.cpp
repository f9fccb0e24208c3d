#include "lietriple/twoterm.hpp"

#include <functional>
#include <string>

#include "lietriple/cohomology.hpp"
#include "lietriple/errors.hpp"

namespace lietriple {

namespace {

void require(const Tensor& t, std::vector<std::size_t> shape, const char* what) {
  if (t.shape() != shape) throw InputError(std::string(what) + " tensor has the wrong shape");
}

void check_shapes(const TwoTermData& d) {
  const std::size_t a = d.v0_dim, b = d.v1_dim;
  if (d.d.rows() != a || d.d.cols() != b)
    throw InputError("d must be " + std::to_string(a) + "x" + std::to_string(b));
  require(d.b00, {a, a, a}, "b00");
  require(d.b01, {a, b, b}, "b01");
  require(d.t000, {a, a, a, a}, "t000");
  require(d.tD, {a, a, b, b}, "tD");
  require(d.tTheta, {b, a, a, b}, "tTheta");
  auto sp = quadruple_spaces(a, b);
  const Cochain* cs[] = {&d.corr.l3, &d.corr.l4hat, &d.corr.l4tilde, &d.corr.l5};
  const char* names[] = {"l3", "l4hat", "l4tilde", "l5"};
  for (std::size_t i = 0; i < 4; ++i)
    if (!(cs[i]->space() == sp[i])) throw InputError(std::string(names[i]) + " has the wrong cochain space");
}

Vector contract2(const Tensor& t, const Vector& a, const Vector& b, std::size_t out) {
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

Vector contract3(const Tensor& t, const Vector& a, const Vector& b, const Vector& c, std::size_t out) {
  Vector r(out);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        Rational w = a[i] * b[j] * c[k];
        for (std::size_t l = 0; l < out; ++l)
          if (sgn(t(i, j, k, l)) != 0) r[l] += w * t(i, j, k, l);
      }
    }
  }
  return r;
}

}  // namespace

TwoTermAlgebra::TwoTermAlgebra(std::size_t a, std::size_t b)
    : TwoTermAlgebra(TwoTermData{a, b, Matrix(a, b), Tensor({a, a, a}), Tensor({a, b, b}), Tensor({a, a, a, a}),
                                 Tensor({a, a, b, b}), Tensor({b, a, a, b}), CochainQuadruple::zero(a, b)},
                     Unchecked{}) {}

TwoTermAlgebra::TwoTermAlgebra(TwoTermData data, Unchecked) : data_(std::move(data)) {
  check_shapes(data_);
  v0_ = LYAlgebra::unchecked(data_.b00, data_.t000);
}

TwoTermAlgebra::TwoTermAlgebra(TwoTermData data) : TwoTermAlgebra(std::move(data), Unchecked{}) {
  const std::size_t a = v0_dim(), b = v1_dim();
  for_each_tuple(3, a, [&](const auto& t) {
    if (data_.b00(t[0], t[1], t[2]) != -data_.b00(t[1], t[0], t[2]))
      throw InvalidStructure("[x,y] not skew at " + format_tuple(t));
    for (std::size_t l = 0; l < a; ++l)
      if (data_.t000(t[0], t[1], t[2], l) != -data_.t000(t[1], t[0], t[2], l))
        throw InvalidStructure("[x,y,z] not skew in its first two slots at " + format_tuple(t));
  });
  for_each_tuple(2, a, [&](const auto& t) {
    for (std::size_t s = 0; s < b; ++s)
      for (std::size_t r = 0; r < b; ++r)
        if (data_.tD(t[0], t[1], s, r) != -data_.tD(t[1], t[0], s, r))
          throw InvalidStructure("[x,y,u] not skew in x,y at " + format_tuple({t[0], t[1], s}));
  });
}

TwoTermAlgebra TwoTermAlgebra::unchecked(TwoTermData data) { return TwoTermAlgebra(std::move(data), Unchecked{}); }

bool operator==(const TwoTermAlgebra& a, const TwoTermAlgebra& b) {
  const auto &x = a.data_, &y = b.data_;
  return x.v0_dim == y.v0_dim && x.v1_dim == y.v1_dim && x.d == y.d && x.b00 == y.b00 && x.b01 == y.b01 &&
         x.t000 == y.t000 && x.tD == y.tD && x.tTheta == y.tTheta && x.corr == y.corr;
}

Vector TwoTermAlgebra::mixed(const Vector& x, const Vector& u) const {
  return contract2(data_.b01, x, u, v1_dim());
}

Vector TwoTermAlgebra::mixed_d(const Vector& x, const Vector& y, const Vector& u) const {
  return contract3(data_.tD, x, y, u, v1_dim());
}

Vector TwoTermAlgebra::mixed_theta(const Vector& u, const Vector& x, const Vector& y) const {
  return contract3(data_.tTheta, u, x, y, v1_dim());
}

Graded TwoTermAlgebra::bracket(const Graded& a, const Graded& b) const {
  return {v0_.bracket(a.x, b.x), mixed(a.x, b.u) - mixed(b.x, a.u)};
}

Graded TwoTermAlgebra::bracket(const Graded& a, const Graded& b, const Graded& c) const {
  return {v0_.bracket(a.x, b.x, c.x), mixed_d(a.x, b.x, c.u) + mixed_theta(a.u, b.x, c.x) - mixed_theta(b.u, a.x, c.x)};
}

namespace {

// Right-hand sides of the homotopy conditions as functions of graded arguments.
using Rhs = std::function<Graded(const TwoTermAlgebra&, const std::vector<Graded>&)>;

Graded add(Graded a, const Graded& b) { return {a.x + b.x, a.u + b.u}; }
Graded sub(Graded a, const Graded& b) { return {a.x - b.x, a.u - b.u}; }

Graded rhs_l3(const TwoTermAlgebra& t, const std::vector<Graded>& g) {
  Graded s{Vector(t.v0_dim()), Vector(t.v1_dim())};
  for (std::size_t k = 0; k < 3; ++k) {
    const Graded &a = g[k], &b = g[(k + 1) % 3], &c = g[(k + 2) % 3];
    s = add(s, t.bracket(t.bracket(a, b), c));
    s = add(s, t.bracket(a, b, c));
  }
  return s;
}

Graded rhs_l4hat(const TwoTermAlgebra& t, const std::vector<Graded>& g) {
  Graded s{Vector(t.v0_dim()), Vector(t.v1_dim())};
  for (std::size_t k = 0; k < 3; ++k) s = add(s, t.bracket(t.bracket(g[k], g[(k + 1) % 3]), g[(k + 2) % 3], g[3]));
  return s;
}

Graded rhs_l4tilde(const TwoTermAlgebra& t, const std::vector<Graded>& g) {
  const Graded &x1 = g[0], &x2 = g[1], &y1 = g[2], &y2 = g[3];
  Graded s = t.bracket(t.bracket(x1, x2, y1), y2);
  s = add(s, t.bracket(y1, t.bracket(x1, x2, y2)));
  return sub(s, t.bracket(x1, x2, t.bracket(y1, y2)));
}

Graded rhs_l5(const TwoTermAlgebra& t, const std::vector<Graded>& g) {
  const Graded &x1 = g[0], &x2 = g[1], &y1 = g[2], &y2 = g[3], &y3 = g[4];
  Graded s = t.bracket(t.bracket(x1, x2, y1), y2, y3);
  s = add(s, t.bracket(y1, t.bracket(x1, x2, y2), y3));
  s = add(s, t.bracket(y1, y2, t.bracket(x1, x2, y3)));
  return sub(s, t.bracket(x1, x2, t.bracket(y1, y2, y3)));
}

void homotopy(AxiomReport& rep, const std::string& label, const TwoTermAlgebra& t, const Cochain& l, const Rhs& rhs,
              bool cyclic_lhs, const CheckOptions& opt) {
  const std::size_t a = t.v0_dim(), b = t.v1_dim(), n = l.space().arity();
  {
    auto& ent = rep.open(label);
    for_each_tuple(n, a, [&](const auto& tup) {
      std::vector<Vector> xs;
      std::vector<Graded> gs;
      for (std::size_t i : tup) {
        xs.push_back(unit_vector(a, i));
        gs.push_back(t.even(xs.back()));
      }
      rep.record(ent, tup, t.d().apply(l.eval(xs)) - rhs(t, gs).x, opt);
    });
  }
  auto& ent = rep.open(label + "-module");
  if (b == 0) return;
  for (std::size_t slot = 0; slot < n; ++slot) {
    if (cyclic_lhs && slot != n - 1) continue;
    for_each_tuple(n - 1, a, [&](const auto& rest) {
      for (std::size_t s = 0; s < b; ++s) {
        Vector u = unit_vector(b, s);
        std::vector<Vector> xs;
        std::vector<Graded> gs;
        std::vector<std::size_t> tup;
        for (std::size_t i = 0, r = 0; i < n; ++i) {
          if (i == slot) {
            xs.push_back(t.d().apply(u));
            gs.push_back(t.odd(u));
            tup.push_back(s);
          } else {
            xs.push_back(unit_vector(a, rest[r]));
            gs.push_back(t.even(xs.back()));
            tup.push_back(rest[r++]);
          }
        }
        Vector lhs = l.eval(xs);
        if (cyclic_lhs) {
          lhs = l.eval({xs[1], xs[2], xs[0]}) + l.eval({xs[2], xs[0], xs[1]}) + lhs;
        }
        tup.push_back(slot);
        rep.record(ent, tup, lhs - rhs(t, gs).u, opt);
      }
    });
  }
}

}  // namespace

AxiomReport verify_two_term(const TwoTermAlgebra& t, const TwoTermCheckOptions& options) {
  const CheckOptions& opt = options.check;
  const auto& D = t.data();
  const std::size_t a = t.v0_dim(), b = t.v1_dim();
  auto e = [a](std::size_t i) { return unit_vector(a, i); };
  auto f = [b](std::size_t s) { return unit_vector(b, s); };
  const Matrix& d = t.d();
  AxiomReport rep;
  {
    auto& ent = rep.open("binary-skew");
    for_each_tuple(2, a, [&](const auto& p) {
      Vector v(a);
      for (std::size_t k = 0; k < a; ++k) v[k] = D.b00(p[0], p[1], k) + D.b00(p[1], p[0], k);
      rep.record(ent, p, v, opt);
    });
  }
  {
    auto& ent = rep.open("ternary-skew");
    for_each_tuple(3, a, [&](const auto& p) {
      Vector v(a);
      for (std::size_t k = 0; k < a; ++k) v[k] = D.t000(p[0], p[1], p[2], k) + D.t000(p[1], p[0], p[2], k);
      rep.record(ent, p, v, opt);
    });
    for_each_tuple(2, a, [&](const auto& p) {
      for (std::size_t s = 0; s < b; ++s) {
        Vector v = t.mixed_d(e(p[0]), e(p[1]), f(s)) + t.mixed_d(e(p[1]), e(p[0]), f(s));
        rep.record(ent, {p[0], p[1], s}, v, opt);
      }
    });
  }
  {
    auto& ent = rep.open("d-equivariance-binary");
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t s = 0; s < b; ++s)
        rep.record(ent, {i, s}, d.apply(t.mixed(e(i), f(s))) - t.bracket(t.even(e(i)), t.even(d.column(s))).x, opt);
  }
  {
    auto& ent = rep.open("d-symmetry-binary");
    for_each_tuple(2, b, [&](const auto& p) {
      Vector v = t.mixed(d.column(p[0]), f(p[1])) + t.mixed(d.column(p[1]), f(p[0]));
      rep.record(ent, p, v, opt);
    });
  }
  {
    auto& ent = rep.open("d-equivariance-ternary");
    for_each_tuple(2, a, [&](const auto& p) {
      for (std::size_t s = 0; s < b; ++s) {
        Vector x = e(p[0]), y = e(p[1]), du = d.column(s);
        Vector v1 = d.apply(t.mixed_d(x, y, f(s))) - t.bracket(t.even(x), t.even(y), t.even(du)).x;
        Vector v2 = d.apply(t.mixed_theta(f(s), x, y)) - t.bracket(t.even(du), t.even(x), t.even(y)).x;
        v1.insert(v1.end(), v2.begin(), v2.end());
        rep.record(ent, {p[0], p[1], s}, v1, opt);
      }
    });
  }
  {
    auto& ent = rep.open("d-symmetry-ternary");
    for_each_tuple(2, b, [&](const auto& p) {
      for (std::size_t i = 0; i < a; ++i) {
        Vector u = f(p[0]), v = f(p[1]), x = e(i);
        Vector du = d.column(p[0]), dv = d.column(p[1]);
        Vector w1 = t.bracket(t.even(du), t.odd(v), t.even(x)).u - t.bracket(t.odd(u), t.even(dv), t.even(x)).u;
        Vector w2 = t.bracket(t.even(x), t.even(du), t.odd(v)).u - t.bracket(t.even(x), t.odd(u), t.even(dv)).u;
        w1.insert(w1.end(), w2.begin(), w2.end());
        rep.record(ent, {p[0], p[1], i}, w1, opt);
      }
    });
  }
  const auto& q = t.corr();
  homotopy(rep, "l3-homotopy", t, q.l3, rhs_l3, options.e1 == E1Reading::cyclic_lhs, opt);
  homotopy(rep, "l4hat-homotopy", t, q.l4hat, rhs_l4hat, false, opt);
  homotopy(rep, "l4tilde-homotopy", t, q.l4tilde, rhs_l4tilde, false, opt);
  homotopy(rep, "l5-homotopy", t, q.l5, rhs_l5, false, opt);

  auto odd = [&](const Vector& u) { return t.odd(u); };
  auto ev = [&](std::size_t i) { return t.even(e(i)); };
  auto br2 = [&](std::size_t i, std::size_t j) { return t.bracket(ev(i), ev(j)).x; };
  auto tr = [&](std::size_t i, std::size_t j, std::size_t k) { return t.bracket(ev(i), ev(j), ev(k)).x; };
  {
    auto& ent = rep.open("l3-coherence");
    for_each_tuple(5, a, [&](const auto& p) {
      std::size_t x1 = p[0], x2 = p[1], y1 = p[2], y2 = p[3], y3 = p[4];
      Vector X1 = e(x1), X2 = e(x2), Y1 = e(y1), Y2 = e(y2), Y3 = e(y3);
      Vector v = t.bracket(ev(x1), ev(x2), odd(q.l3.eval({Y1, Y2, Y3}))).u;
      v = v + q.l4tilde.eval({X1, X2, br2(y1, y2), Y3}) + q.l4tilde.eval({X1, X2, Y2, br2(y1, y3)});
      v = v + t.bracket(odd(q.l4tilde.eval({X1, X2, Y1, Y2})), ev(y3)).u;
      v = v + t.bracket(ev(y2), odd(q.l4tilde.eval({X1, X2, Y1, Y3}))).u;
      v = v + q.l5.eval({X1, X2, Y1, Y2, Y3}) + q.l5.eval({X1, X2, Y3, Y1, Y2});
      v = v - q.l4tilde.eval({X1, X2, Y1, br2(y2, y3)});
      v = v - t.bracket(ev(y1), odd(q.l4tilde.eval({X1, X2, Y2, Y3}))).u;
      v = v - q.l3.eval({tr(x1, x2, y1), Y2, Y3}) - q.l3.eval({Y1, tr(x1, x2, y2), Y3}) -
          q.l3.eval({Y1, Y2, tr(x1, x2, y3)});
      v = v - q.l5.eval({X1, X2, Y3, Y2, Y1});
      rep.record(ent, p, v, opt);
    });
  }
  {
    auto& ent = rep.open("l4hat-coherence");
    for_each_tuple(6, a, [&](const auto& p) {
      std::size_t x1 = p[0], x2 = p[1], y1 = p[2], y2 = p[3], y3 = p[4], z1 = p[5];
      Vector X1 = e(x1), X2 = e(x2), Y1 = e(y1), Y2 = e(y2), Y3 = e(y3), Z1 = e(z1);
      Vector v = t.bracket(ev(x1), ev(x2), odd(q.l4hat.eval({Y1, Y2, Y3, Z1}))).u;
      v = v + q.l5.eval({X1, X2, br2(y1, y2), Y3, Z1}) + q.l5.eval({X1, X2, Y2, br2(y1, y3), Z1});
      v = v + t.bracket(odd(q.l4tilde.eval({X1, X2, Y1, Y2})), ev(y3), ev(z1)).u;
      v = v + t.bracket(ev(y2), odd(q.l4tilde.eval({X1, X2, Y1, Y3})), ev(z1)).u;
      v = v - q.l5.eval({X1, X2, Y1, br2(y2, y3), Z1});
      v = v - q.l4hat.eval({tr(x1, x2, y1), Y2, Y3, Z1});
      v = v - t.bracket(ev(y1), odd(q.l4tilde.eval({X1, X2, Y2, Y3})), ev(z1)).u;
      v = v - q.l4hat.eval({Y1, Y2, Y3, tr(x1, x2, z1)}) - q.l4hat.eval({Y1, tr(x1, x2, y2), Y3, Z1}) -
          q.l4hat.eval({Y1, Y2, tr(x1, x2, y3), Z1});
      rep.record(ent, p, v, opt);
    });
  }
  {
    auto& ent = rep.open("l4tilde-coherence");
    for_each_tuple(6, a, [&](const auto& p) {
      std::size_t x1 = p[0], x2 = p[1], y1 = p[2], y2 = p[3], z1 = p[4], z2 = p[5];
      Vector X1 = e(x1), X2 = e(x2), Y1 = e(y1), Y2 = e(y2), Z1 = e(z1), Z2 = e(z2);
      Vector v = t.bracket(ev(x1), ev(x2), odd(q.l4tilde.eval({Y1, Y2, Z1, Z2}))).u;
      v = v + q.l4tilde.eval({X1, X2, tr(y1, y2, z1), Z2}) + q.l4tilde.eval({X1, X2, Z1, tr(y1, y2, z2)});
      v = v + t.bracket(odd(q.l5.eval({X1, X2, Y1, Y2, Z1})), ev(z2)).u;
      v = v + t.bracket(ev(z1), odd(q.l5.eval({X1, X2, Y1, Y2, Z2}))).u;
      v = v - q.l5.eval({X1, X2, Y1, Y2, br2(z1, z2)});
      v = v - t.bracket(ev(y1), ev(y2), odd(q.l4tilde.eval({X1, X2, Z1, Z2}))).u;
      v = v - q.l4tilde.eval({tr(x1, x2, y1), Y2, Z1, Z2}) - q.l4tilde.eval({Y1, tr(x1, x2, y2), Z1, Z2});
      v = v - q.l4tilde.eval({Y1, Y2, tr(x1, x2, z1), Z2}) - q.l4tilde.eval({Y1, Y2, Z1, tr(x1, x2, z2)});
      rep.record(ent, p, v, opt);
    });
  }
  {
    auto& ent = rep.open("l5-coherence");
    for_each_tuple(7, a, [&](const auto& p) {
      std::size_t x1 = p[0], x2 = p[1], y1 = p[2], y2 = p[3], z1 = p[4], z2 = p[5], z3 = p[6];
      Vector X1 = e(x1), X2 = e(x2), Y1 = e(y1), Y2 = e(y2), Z1 = e(z1), Z2 = e(z2), Z3 = e(z3);
      Vector v = t.bracket(odd(q.l5.eval({X1, X2, Y1, Y2, Z1})), ev(z2), ev(z3)).u;
      v = v + t.bracket(ev(z1), odd(q.l5.eval({X1, X2, Y1, Y2, Z2})), ev(z3)).u;
      v = v + t.bracket(ev(x1), ev(x2), odd(q.l5.eval({Y1, Y2, Z1, Z2, Z3}))).u;
      v = v + t.bracket(ev(z1), ev(z2), odd(q.l5.eval({X1, X2, Y1, Y2, Z3}))).u;
      v = v + q.l5.eval({X1, X2, tr(y1, y2, z1), Z2, Z3}) + q.l5.eval({X1, X2, Z1, tr(y1, y2, z2), Z3}) +
          q.l5.eval({X1, X2, Z1, Z2, tr(y1, y2, z3)});
      v = v - t.bracket(ev(y1), ev(y2), odd(q.l5.eval({X1, X2, Z1, Z2, Z3}))).u;
      v = v - q.l5.eval({tr(x1, x2, y1), Y2, Z1, Z2, Z3}) - q.l5.eval({Y1, tr(x1, x2, y2), Z1, Z2, Z3});
      v = v - q.l5.eval({Y1, Y2, tr(x1, x2, z1), Z2, Z3}) - q.l5.eval({Y1, Y2, Z1, tr(x1, x2, z2), Z3});
      v = v - q.l5.eval({X1, X2, Y1, Y2, tr(z1, z2, z3)}) - q.l5.eval({Y1, Y2, Z1, Z2, tr(x1, x2, z3)});
      rep.record(ent, p, v, opt);
    });
  }
  return rep;
}

TwoTermHomomorphism identity_homomorphism(const TwoTermAlgebra& t) {
  auto sp = pair_spaces(t.v0_dim(), t.v1_dim());
  return {Matrix::identity(t.v0_dim()), Matrix::identity(t.v1_dim()), Cochain(sp[0]), Cochain(sp[1])};
}

namespace {

void check_hom_dims(const TwoTermAlgebra& src, const TwoTermAlgebra& dst, const TwoTermHomomorphism& h) {
  auto dims = [](const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); };
  if (h.phi0.rows() != dst.v0_dim() || h.phi0.cols() != src.v0_dim())
    throw InputError("phi0 is " + dims(h.phi0) + ", expected " + std::to_string(dst.v0_dim()) + "x" +
                     std::to_string(src.v0_dim()));
  if (h.phi1.rows() != dst.v1_dim() || h.phi1.cols() != src.v1_dim())
    throw InputError("phi1 is " + dims(h.phi1) + ", expected " + std::to_string(dst.v1_dim()) + "x" +
                     std::to_string(src.v1_dim()));
  auto sp = pair_spaces(src.v0_dim(), dst.v1_dim());
  if (!(h.phi2.space() == sp[0])) throw InputError("phi2 must be a skew 2-cochain on V0 with values in V1'");
  if (!(h.phi3.space() == sp[1])) throw InputError("phi3 must be a 3-cochain on V0 skew in (1,2) with values in V1'");
}

}  // namespace

AxiomReport verify_homomorphism(const TwoTermAlgebra& src, const TwoTermAlgebra& dst, const TwoTermHomomorphism& h,
                                const CheckOptions& opt) {
  check_hom_dims(src, dst, h);
  const std::size_t a = src.v0_dim(), b = src.v1_dim();
  auto e = [a](std::size_t i) { return unit_vector(a, i); };
  auto f = [b](std::size_t s) { return unit_vector(b, s); };
  auto p0 = [&](const Vector& x) { return h.phi0.apply(x); };
  auto ev = [&](const TwoTermAlgebra& t, const Vector& x) { return t.even(x); };
  auto br = [&](const TwoTermAlgebra& t, const Vector& x, const Vector& y) {
    return t.bracket(ev(t, x), ev(t, y)).x;
  };
  auto tr = [&](const TwoTermAlgebra& t, const Vector& x, const Vector& y, const Vector& z) {
    return t.bracket(ev(t, x), ev(t, y), ev(t, z)).x;
  };
  // [phi0 x, v]' and friends with one odd argument in dst
  auto mix2 = [&](const Vector& x, const Vector& v) { return dst.mixed(p0(x), v); };
  AxiomReport rep;
  {
    auto& ent = rep.open("chain-map");
    rep.record(ent, {}, (h.phi0 * src.d() - dst.d() * h.phi1).flatten(), opt);
  }
  {
    auto& ent = rep.open("binary-defect");
    for_each_tuple(2, a, [&](const auto& p) {
      Vector x = e(p[0]), y = e(p[1]);
      Vector v = dst.d().apply(h.phi2.eval({x, y})) - p0(br(src, x, y)) + br(dst, p0(x), p0(y));
      rep.record(ent, p, v, opt);
    });
  }
  {
    auto& ent = rep.open("binary-module");
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t s = 0; s < b; ++s) {
        Vector v = h.phi2.eval({e(i), src.d().column(s)}) - h.phi1.apply(src.mixed(e(i), f(s))) +
                   mix2(e(i), h.phi1.column(s));
        rep.record(ent, {i, s}, v, opt);
      }
  }
  {
    auto& ent = rep.open("ternary-defect");
    for_each_tuple(3, a, [&](const auto& p) {
      Vector x = e(p[0]), y = e(p[1]), z = e(p[2]);
      Vector v = dst.d().apply(h.phi3.eval({x, y, z})) - p0(tr(src, x, y, z)) + tr(dst, p0(x), p0(y), p0(z));
      rep.record(ent, p, v, opt);
    });
  }
  {
    auto& ent = rep.open("ternary-module");
    for_each_tuple(2, a, [&](const auto& p) {
      for (std::size_t s = 0; s < b; ++s) {
        Vector x = e(p[0]), y = e(p[1]);
        Vector v = h.phi3.eval({x, y, src.d().column(s)}) - h.phi1.apply(src.mixed_d(x, y, f(s))) +
                   dst.mixed_d(p0(x), p0(y), h.phi1.column(s));
        rep.record(ent, {p[0], p[1], s}, v, opt);
      }
    });
  }
  auto odd = [&](const Vector& u) { return dst.odd(u); };
  {
    auto& ent = rep.open("l3-compatibility");
    for_each_tuple(3, a, [&](const auto& p) {
      Vector x1 = e(p[0]), x2 = e(p[1]), x3 = e(p[2]);
      auto F = [&](const Vector& x) { return dst.even(p0(x)); };
      Vector v = dst.bracket(odd(h.phi2.eval({x1, x2})), F(x3)).u + h.phi2.eval({br(src, x1, x2), x3}) +
                 h.phi1.apply(src.corr().l3.eval({x1, x2, x3}));
      v = v - dst.corr().l3.eval({p0(x1), p0(x2), p0(x3)}) - dst.bracket(F(x1), odd(h.phi2.eval({x2, x3}))).u -
          dst.bracket(odd(h.phi2.eval({x1, x3})), F(x2)).u - h.phi2.eval({x1, br(src, x2, x3)}) -
          h.phi2.eval({br(src, x1, x3), x2});
      rep.record(ent, p, v, opt);
    });
  }
  {
    auto& ent = rep.open("l5-compatibility");
    for_each_tuple(5, a, [&](const auto& p) {
      Vector x1 = e(p[0]), x2 = e(p[1]), x3 = e(p[2]), x4 = e(p[3]), x5 = e(p[4]);
      auto F = [&](const Vector& x) { return dst.even(p0(x)); };
      Vector v = dst.bracket(F(x1), F(x2), odd(h.phi3.eval({x3, x4, x5}))).u +
                 h.phi3.eval({x1, x2, tr(src, x3, x4, x5)}) +
                 h.phi1.apply(src.corr().l5.eval({x1, x2, x3, x4, x5}));
      v = v - dst.corr().l5.eval({p0(x1), p0(x2), p0(x3), p0(x4), p0(x5)});
      v = v - dst.bracket(odd(h.phi3.eval({x1, x2, x3})), F(x4), F(x5)).u;
      v = v - dst.bracket(F(x3), odd(h.phi3.eval({x1, x2, x4})), F(x5)).u;
      v = v - dst.bracket(F(x3), F(x4), odd(h.phi3.eval({x1, x2, x5}))).u;
      v = v - h.phi3.eval({tr(src, x1, x2, x3), x4, x5}) - h.phi3.eval({x3, tr(src, x1, x2, x4), x5}) -
          h.phi3.eval({x3, x4, tr(src, x1, x2, x5)});
      rep.record(ent, p, v, opt);
    });
  }
  return rep;
}

TwoTermHomomorphism compose_homomorphisms(const TwoTermHomomorphism& f, const TwoTermHomomorphism& g) {
  if (g.phi0.cols() != f.phi0.rows() || g.phi1.cols() != f.phi1.rows())
    throw InputError("homomorphisms do not compose: target of the first is not the source of the second");
  const std::size_t a = f.phi0.cols(), m = g.phi1.rows();
  auto sp = pair_spaces(a, m);
  auto p0 = [&](std::size_t i) { return f.phi0.column(i); };
  Cochain c2 = Cochain::from_values(sp[0], [&](const std::vector<std::size_t>& t) {
    return g.phi2.eval({p0(t[0]), p0(t[1])}) + g.phi1.apply(f.phi2.value(t));
  });
  Cochain c3 = Cochain::from_values(sp[1], [&](const std::vector<std::size_t>& t) {
    return g.phi3.eval({p0(t[0]), p0(t[1]), p0(t[2])}) + g.phi1.apply(f.phi3.value(t));
  });
  return {g.phi0 * f.phi0, g.phi1 * f.phi1, std::move(c2), std::move(c3)};
}

TwoTermAlgebra skeletal_from_data_unchecked(const LYAlgebra& a, const Representation& r, const CochainQuadruple& q) {
  if (r.algebra_dim() != a.dim()) throw InputError("representation does not match the algebra");
  const std::size_t n = a.dim(), m = r.module_dim();
  TwoTermData d{n, m, Matrix(n, m), a.binary(), Tensor({n, m, m}), a.ternary(), Tensor({n, n, m, m}),
                Tensor({m, n, n, m}), q};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t) d.b01(i, s, t) = r.rho(i)(t, s);
  for_each_tuple(2, n, [&](const auto& p) {
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t) {
        d.tD(p[0], p[1], s, t) = r.D(p[0], p[1])(t, s);
        d.tTheta(s, p[0], p[1], t) = r.theta(p[0], p[1])(t, s);
      }
  });
  return TwoTermAlgebra::unchecked(std::move(d));
}

TwoTermAlgebra skeletal_from_data(const LYAlgebra& a, const Representation& r, const CochainQuadruple& q) {
  AxiomReport ly = verify_ly(a);
  if (!ly.passed()) throw InvalidStructure("algebra fails " + ly.failed_labels().front());
  AxiomReport rp = verify_rep(a, r);
  if (!rp.passed()) throw InvalidStructure("representation fails " + rp.failed_labels().front());
  CocycleVerdict v = is_cocycle_3445(q, a, r);
  if (!v.cocycle)
    throw InvalidStructure("quadruple is not a (3,4,4,5)-cocycle: component " + std::to_string(v.witness->component + 1) +
                           " nonzero at " + format_tuple(v.witness->tuple));
  return TwoTermAlgebra(skeletal_from_data_unchecked(a, r, q).data());
}

std::tuple<LYAlgebra, Representation, CochainQuadruple> data_from_skeletal(const TwoTermAlgebra& t) {
  if (!t.is_skeletal()) throw InputError("algebra is not skeletal: d is nonzero");
  const auto& d = t.data();
  const std::size_t n = t.v0_dim(), m = t.v1_dim();
  Representation r(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t u = 0; u < m; ++u) r.rho(i)(u, s) = d.b01(i, s, u);
  for_each_tuple(2, n, [&](const auto& p) {
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t u = 0; u < m; ++u) {
        r.D(p[0], p[1])(u, s) = d.tD(p[0], p[1], s, u);
        r.theta(p[0], p[1])(u, s) = d.tTheta(s, p[0], p[1], u);
      }
  });
  return {LYAlgebra::unchecked(d.b00, d.t000), std::move(r), d.corr};
}

}  // namespace lietriple
