#include "oracle.hpp"

#include <functional>
#include <stdexcept>

namespace oracle {

using lietriple::for_each_tuple;
using lietriple::Tensor;

namespace {

std::size_t flat(const std::vector<std::size_t>& ix, std::size_t d) {
  std::size_t f = 0;
  for (auto i : ix) f = f * d + i;
  return f;
}

Vector zero(std::size_t n) { return Vector(n, Rational(0)); }

void add(Vector& acc, const Rational& s, const Vector& v) {
  for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += s * v[k];
}

using Fn = std::function<Vector(const std::vector<Vector>&)>;

Dense table(const Ctx& c, std::size_t n, const Fn& f) {
  Dense out(n, c.d, c.m);
  for_each_tuple(n, c.d, [&](const std::vector<std::size_t>& ix) {
    std::vector<Vector> args;
    for (auto i : ix) args.push_back(c.e(i));
    out.set(ix, f(args));
  });
  return out;
}

}  // namespace

Dense::Dense(std::size_t arity_, std::size_t d_, std::size_t m_) : arity(arity_), d(d_), m(m_) {
  std::size_t n = m;
  for (std::size_t k = 0; k < arity; ++k) n *= d;
  data.assign(n, Rational(0));
}

Vector Dense::at(const std::vector<std::size_t>& ix) const {
  std::size_t base = flat(ix, d) * m;
  return Vector(data.begin() + base, data.begin() + base + m);
}

void Dense::set(const std::vector<std::size_t>& ix, const Vector& v) {
  std::size_t base = flat(ix, d) * m;
  for (std::size_t s = 0; s < m; ++s) data[base + s] = v[s];
}

Vector Dense::eval(const std::vector<Vector>& args) const {
  Vector out = zero(m);
  for_each_tuple(arity, d, [&](const std::vector<std::size_t>& ix) {
    Rational w(1);
    for (std::size_t k = 0; k < arity && w != 0; ++k) w *= args[k][ix[k]];
    if (w == 0) return;
    add(out, w, at(ix));
  });
  return out;
}

Dense basis_cochain(const lietriple::CochainSpace& sp, std::size_t k) {
  Dense f(sp.arity(), sp.source_dim(), sp.target_dim());
  const std::size_t m = sp.target_dim();
  std::vector<std::size_t> canon = sp.tuple(k / m);
  const auto& pairs = sp.signature().pairs;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::vector<std::size_t> ix = canon;
    int sign = 1;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (mask >> p & 1) {
        std::swap(ix[pairs[p].first], ix[pairs[p].second]);
        sign = -sign;
      }
    Vector v = zero(m);
    v[k % m] = sign;
    f.set(ix, v);
  }
  return f;
}

Dense dense_of(const lietriple::CochainSpace& sp, const Vector& coeffs) {
  Dense f(sp.arity(), sp.source_dim(), sp.target_dim());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    Dense b = basis_cochain(sp, k);
    for (std::size_t j = 0; j < f.data.size(); ++j) f.data[j] += coeffs[k] * b.data[j];
  }
  return f;
}

Vector coefficients(const lietriple::CochainSpace& sp, const Dense& f) {
  Vector out;
  for (std::size_t t = 0; t < sp.tuple_count(); ++t) {
    Vector v = f.at(sp.tuple(t));
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::string skew_violation(const lietriple::SkewSignature& sig, const Dense& f) {
  std::string bad;
  for_each_tuple(f.arity, f.d, [&](const std::vector<std::size_t>& ix) {
    if (!bad.empty()) return;
    for (auto [p, q] : sig.pairs) {
      std::vector<std::size_t> sw = ix;
      std::swap(sw[p], sw[q]);
      Vector a = f.at(ix), b = f.at(sw);
      for (std::size_t s = 0; s < f.m; ++s)
        if (a[s] + b[s] != 0) {
          bad = "pair (" + std::to_string(p) + "," + std::to_string(q) + ") at tuple starting " + std::to_string(ix[0]);
          return;
        }
    }
  });
  return bad;
}

Ctx::Ctx(const lietriple::LYAlgebra& a, const lietriple::Representation& r)
    : d(a.dim()), m(r.module_dim()), b_(a.binary()), t_(a.ternary()), r_(r) {}

Vector Ctx::e(std::size_t i) const {
  Vector v = zero(d);
  v[i] = 1;
  return v;
}

Vector Ctx::br(const Vector& x, const Vector& y) const {
  Vector out = zero(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (x[i] == 0 || y[j] == 0) continue;
      for (std::size_t k = 0; k < d; ++k) out[k] += x[i] * y[j] * b_(i, j, k);
    }
  return out;
}

Vector Ctx::tr(const Vector& x, const Vector& y, const Vector& z) const {
  Vector out = zero(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (x[i] == 0 || y[j] == 0 || z[k] == 0) continue;
        for (std::size_t l = 0; l < d; ++l) out[l] += x[i] * y[j] * z[k] * t_(i, j, k, l);
      }
  return out;
}

Vector Ctx::R(const Vector& x, const Vector& v) const {
  Vector out = zero(m);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    const auto& M = r_.rho(i);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) out[a] += x[i] * M(a, b) * v[b];
  }
  return out;
}

Vector Ctx::Dm(const Vector& x, const Vector& y, const Vector& v) const {
  Vector out = zero(m);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (x[i] == 0 || y[j] == 0) continue;
      const auto& M = r_.D(i, j);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) out[a] += x[i] * y[j] * M(a, b) * v[b];
    }
  return out;
}

Vector Ctx::Th(const Vector& x, const Vector& y, const Vector& v) const {
  Vector out = zero(m);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (x[i] == 0 || y[j] == 0) continue;
      const auto& M = r_.theta(i, j);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) out[a] += x[i] * y[j] * M(a, b) * v[b];
    }
  return out;
}

std::vector<Dense> delta2(const Ctx& c, const Dense& nu, const Dense& om) {
  auto N = [&](const Vector& a, const Vector& b) { return nu.eval({a, b}); };
  auto O = [&](const Vector& a, const Vector& b, const Vector& e) { return om.eval({a, b, e}); };
  auto l3 = [&](const std::vector<Vector>& x) {
    Vector s = zero(c.m);
    const Vector* cyc[3][3] = {{&x[0], &x[1], &x[2]}, {&x[1], &x[2], &x[0]}, {&x[2], &x[0], &x[1]}};
    for (auto& p : cyc) {
      const Vector &a = *p[0], &b = *p[1], &e = *p[2];
      add(s, -1, O(a, b, e));
      add(s, 1, c.R(a, N(b, e)));
      add(s, -1, N(c.br(a, b), e));
    }
    return s;
  };
  auto l4h = [&](const std::vector<Vector>& x) {
    Vector s = zero(c.m);
    const Vector& y1 = x[3];
    const Vector* cyc[3][3] = {{&x[0], &x[1], &x[2]}, {&x[1], &x[2], &x[0]}, {&x[2], &x[0], &x[1]}};
    for (auto& p : cyc) {
      const Vector &a = *p[0], &b = *p[1], &e = *p[2];
      add(s, -1, c.Th(a, y1, N(b, e)));
      add(s, -1, O(c.br(a, b), e, y1));
    }
    return s;
  };
  auto l4t = [&](const std::vector<Vector>& x) {
    const Vector &x1 = x[0], &x2 = x[1], &y1 = x[2], &y2 = x[3];
    Vector s = O(x1, x2, c.br(y1, y2));
    add(s, 1, c.R(y2, O(x1, x2, y1)));
    add(s, -1, c.R(y1, O(x1, x2, y2)));
    add(s, 1, c.Dm(x1, x2, N(y1, y2)));
    add(s, -1, N(c.tr(x1, x2, y1), y2));
    add(s, -1, N(y1, c.tr(x1, x2, y2)));
    return s;
  };
  auto l5 = [&](const std::vector<Vector>& x) {
    const Vector &x1 = x[0], &x2 = x[1], &y1 = x[2], &y2 = x[3], &y3 = x[4];
    Vector s = O(x1, x2, c.tr(y1, y2, y3));
    add(s, -1, O(c.tr(x1, x2, y1), y2, y3));
    add(s, -1, O(y1, c.tr(x1, x2, y2), y3));
    add(s, -1, O(y1, y2, c.tr(x1, x2, y3)));
    add(s, 1, c.Dm(x1, x2, O(y1, y2, y3)));
    add(s, -1, c.Th(y2, y3, O(x1, x2, y1)));
    add(s, 1, c.Th(y1, y3, O(x1, x2, y2)));
    add(s, -1, c.Dm(y1, y2, O(x1, x2, y3)));
    return s;
  };
  return {table(c, 3, l3), table(c, 4, l4h), table(c, 4, l4t), table(c, 5, l5)};
}

std::vector<Dense> delta3(const Ctx& c, const Dense& l3, const Dense& l4h, const Dense& l4t, const Dense& l5) {
  auto L3 = [&](const Vector& a, const Vector& b, const Vector& e) { return l3.eval({a, b, e}); };
  auto LH = [&](const Vector& a, const Vector& b, const Vector& e, const Vector& f) { return l4h.eval({a, b, e, f}); };
  auto LT = [&](const Vector& a, const Vector& b, const Vector& e, const Vector& f) { return l4t.eval({a, b, e, f}); };
  auto L5 = [&](const Vector& a, const Vector& b, const Vector& e, const Vector& f, const Vector& g) {
    return l5.eval({a, b, e, f, g});
  };
  auto ca = [&](const std::vector<Vector>& x) {
    const Vector &x1 = x[0], &x2 = x[1], &y1 = x[2], &y2 = x[3], &y3 = x[4];
    Vector s = c.Dm(x1, x2, L3(y1, y2, y3));
    add(s, -1, L3(c.tr(x1, x2, y1), y2, y3));
    add(s, -1, L3(y1, c.tr(x1, x2, y2), y3));
    add(s, -1, L3(y1, y2, c.tr(x1, x2, y3)));
    add(s, 1, LT(x1, x2, c.br(y1, y2), y3));
    add(s, 1, LT(x1, x2, y2, c.br(y1, y3)));
    add(s, -1, LT(x1, x2, y1, c.br(y2, y3)));
    add(s, -1, c.R(y1, LT(x1, x2, y2, y3)));
    add(s, 1, c.R(y2, LT(x1, x2, y1, y3)));
    add(s, -1, c.R(y3, LT(x1, x2, y1, y2)));
    add(s, 1, L5(x1, x2, y1, y2, y3));
    add(s, 1, L5(x1, x2, y2, y3, y1));
    add(s, 1, L5(x1, x2, y3, y1, y2));
    return s;
  };
  auto cb = [&](const std::vector<Vector>& x) {
    const Vector &x1 = x[0], &x2 = x[1], &y1 = x[2], &y2 = x[3], &y3 = x[4], &z1 = x[5];
    auto X = [&](const Vector& y) { return c.tr(x1, x2, y); };
    Vector s = c.Dm(x1, x2, LH(y1, y2, y3, z1));
    add(s, -1, LH(X(y1), y2, y3, z1));
    add(s, -1, LH(y1, X(y2), y3, z1));
    add(s, -1, LH(y1, y2, X(y3), z1));
    add(s, -1, LH(y1, y2, y3, X(z1)));
    add(s, 1, c.Th(y1, z1, LT(x1, x2, y2, y3)));
    add(s, 1, c.Th(y3, z1, LT(x1, x2, y1, y2)));
    add(s, -1, c.Th(y2, z1, LT(x1, x2, y1, y3)));
    add(s, 1, L5(x1, x2, c.br(y1, y2), y3, z1));
    add(s, 1, L5(x1, x2, y2, c.br(y1, y3), z1));
    add(s, -1, L5(x1, x2, y1, c.br(y2, y3), z1));
    return s;
  };
  auto cc = [&](const std::vector<Vector>& x) {
    const Vector &x1 = x[0], &x2 = x[1], &y1 = x[2], &y2 = x[3], &z1 = x[4], &z2 = x[5];
    auto X = [&](const Vector& y) { return c.tr(x1, x2, y); };
    auto Y = [&](const Vector& y) { return c.tr(y1, y2, y); };
    Vector s = c.Dm(x1, x2, LT(y1, y2, z1, z2));
    add(s, -1, c.Dm(y1, y2, LT(x1, x2, z1, z2)));
    add(s, 1, c.R(z1, L5(x1, x2, y1, y2, z2)));
    add(s, -1, c.R(z2, L5(x1, x2, y1, y2, z1)));
    add(s, -1, L5(x1, x2, y1, y2, c.br(z1, z2)));
    add(s, -1, LT(X(y1), y2, z1, z2));
    add(s, -1, LT(y1, X(y2), z1, z2));
    add(s, -1, LT(y1, y2, X(z1), z2));
    add(s, -1, LT(y1, y2, z1, X(z2)));
    add(s, 1, LT(x1, x2, Y(z1), z2));
    add(s, 1, LT(x1, x2, z1, Y(z2)));
    return s;
  };
  auto ce = [&](const std::vector<Vector>& x) {
    const Vector &x1 = x[0], &x2 = x[1], &y1 = x[2], &y2 = x[3], &z1 = x[4], &z2 = x[5], &z3 = x[6];
    auto X = [&](const Vector& y) { return c.tr(x1, x2, y); };
    auto Y = [&](const Vector& y) { return c.tr(y1, y2, y); };
    Vector s = c.Th(z2, z3, L5(x1, x2, y1, y2, z1));
    add(s, -1, c.Th(z1, z3, L5(x1, x2, y1, y2, z2)));
    add(s, 1, c.Dm(x1, x2, L5(y1, y2, z1, z2, z3)));
    add(s, -1, c.Dm(y1, y2, L5(x1, x2, z1, z2, z3)));
    add(s, 1, c.Dm(z1, z2, L5(x1, x2, y1, y2, z3)));
    add(s, -1, L5(X(y1), y2, z1, z2, z3));
    add(s, -1, L5(y1, X(y2), z1, z2, z3));
    add(s, -1, L5(y1, y2, X(z1), z2, z3));
    add(s, -1, L5(y1, y2, z1, X(z2), z3));
    add(s, -1, L5(y1, y2, z1, z2, X(z3)));
    add(s, 1, L5(x1, x2, Y(z1), z2, z3));
    add(s, 1, L5(x1, x2, z1, Y(z2), z3));
    add(s, 1, L5(x1, x2, z1, z2, Y(z3)));
    add(s, -1, L5(x1, x2, y1, y2, c.tr(z1, z2, z3)));
    return s;
  };
  return {table(c, 5, ca), table(c, 6, cb), table(c, 6, cc), table(c, 7, ce)};
}

std::vector<Dense> yamaguti(const Ctx& c, std::size_t n, const Dense& f, const Dense& g) {
  const Rational outer = n % 2 == 0 ? 1 : -1;
  auto sign = [](std::size_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); };
  // 1-based slot k pairs (2k-1, 2k) are 0-based (2k-2, 2k-1).
  auto drop_pair = [](const std::vector<Vector>& x, std::size_t k) {
    std::vector<Vector> y;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (i != 2 * k - 2 && i != 2 * k - 1) y.push_back(x[i]);
    return y;
  };
  auto dI = [&](const std::vector<Vector>& x) {
    const std::size_t N = 2 * n + 2;
    std::vector<Vector> head(x.begin(), x.begin() + 2 * n);
    auto with = [&](std::vector<Vector> h, const Vector& last) {
      h.push_back(last);
      return h;
    };
    Vector s = c.R(x[N - 2], g.eval(with(head, x[N - 1])));
    add(s, -1, c.R(x[N - 1], g.eval(with(head, x[N - 2]))));
    add(s, -1, g.eval(with(head, c.br(x[N - 2], x[N - 1]))));
    for (std::size_t k = 1; k <= n; ++k) {
      add(s, sign(n + k + 1), c.Dm(x[2 * k - 2], x[2 * k - 1], f.eval(drop_pair(x, k))));
      for (std::size_t j = 2 * k + 1; j <= N; ++j) {
        std::vector<Vector> y = x;
        y[j - 1] = c.tr(x[2 * k - 2], x[2 * k - 1], x[j - 1]);
        add(s, sign(n + k), f.eval(drop_pair(y, k)));
      }
    }
    for (auto& v : s) v *= outer;
    return s;
  };
  auto dII = [&](const std::vector<Vector>& x) {
    const std::size_t N = 2 * n + 3;
    std::vector<Vector> a(x.begin(), x.begin() + 2 * n + 1);
    std::vector<Vector> b(x.begin(), x.begin() + 2 * n);
    b.push_back(x[2 * n + 1]);
    Vector s = c.Th(x[N - 2], x[N - 1], g.eval(a));
    add(s, -1, c.Th(x[N - 3], x[N - 1], g.eval(b)));
    for (std::size_t k = 1; k <= n + 1; ++k) {
      add(s, sign(n + k + 1), c.Dm(x[2 * k - 2], x[2 * k - 1], g.eval(drop_pair(x, k))));
      for (std::size_t j = 2 * k + 1; j <= N; ++j) {
        std::vector<Vector> y = x;
        y[j - 1] = c.tr(x[2 * k - 2], x[2 * k - 1], x[j - 1]);
        add(s, sign(n + k), g.eval(drop_pair(y, k)));
      }
    }
    for (auto& v : s) v *= outer;
    return s;
  };
  return {table(c, 2 * n + 2, dI), table(c, 2 * n + 3, dII)};
}

namespace {

using Pointwise = std::function<std::vector<Dense>(const std::vector<Dense>&)>;

// Columns are images of domain basis cochains; a skew violation in the output is reported through bad.
lietriple::Matrix assemble(const std::vector<lietriple::CochainSpace>& domain,
                           const std::vector<lietriple::CochainSpace>& codomain, const Pointwise& pointwise,
                           std::string& bad) {
  std::vector<Vector> cols;
  for (std::size_t comp = 0; comp < domain.size(); ++comp) {
    for (std::size_t local = 0; local < domain[comp].dim(); ++local) {
      std::vector<Dense> in;
      for (std::size_t j = 0; j < domain.size(); ++j) {
        const auto& sp = domain[j];
        in.push_back(j == comp ? basis_cochain(sp, local) : Dense(sp.arity(), sp.source_dim(), sp.target_dim()));
      }
      std::vector<Dense> out = pointwise(in);
      Vector col;
      for (std::size_t j = 0; j < codomain.size(); ++j) {
        std::string v = skew_violation(codomain[j].signature(), out[j]);
        if (!v.empty() && bad.empty())
          bad = "pointwise output component " + std::to_string(j) + " leaves its codomain, " + v;
        Vector c = coefficients(codomain[j], out[j]);
        col.insert(col.end(), c.begin(), c.end());
      }
      cols.push_back(std::move(col));
    }
  }
  return lietriple::Matrix::from_columns(cols, lietriple::total_dim(codomain));
}

std::string compare(const lietriple::OperatorMatrix& op, const Pointwise& pointwise) {
  std::string bad;
  lietriple::Matrix m = assemble(op.domain, op.codomain, pointwise, bad);
  if (!bad.empty()) return op.label + ": " + bad;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    Vector unit(op.matrix.cols(), Rational(0));
    unit[k] = 1;
    if (op.matrix.apply(unit) != m.column(k))
      return op.label + ": column " + std::to_string(k) + " differs from the pointwise formula";
  }
  return "";
}

}  // namespace

std::string check_yamaguti(std::size_t n, const lietriple::LYAlgebra& a, const lietriple::Representation& r) {
  Ctx c(a, r);
  return compare(lietriple::yamaguti_delta(n, a, r),
                 [&](const std::vector<Dense>& in) { return yamaguti(c, n, in[0], in[1]); });
}

std::string check_delta2(const lietriple::LYAlgebra& a, const lietriple::Representation& r) {
  Ctx c(a, r);
  return compare(lietriple::delta2(a, r), [&](const std::vector<Dense>& in) { return delta2(c, in[0], in[1]); });
}

std::string check_delta3(const lietriple::LYAlgebra& a, const lietriple::Representation& r) {
  Ctx c(a, r);
  return compare(lietriple::delta3(a, r),
                 [&](const std::vector<Dense>& in) { return delta3(c, in[0], in[1], in[2], in[3]); });
}

lietriple::Matrix pointwise_delta2(const lietriple::LYAlgebra& a, const lietriple::Representation& r) {
  Ctx c(a, r);
  std::string bad;
  lietriple::Matrix m = assemble(lietriple::pair_spaces(a.dim(), r.module_dim()),
                                 lietriple::quadruple_spaces(a.dim(), r.module_dim()),
                                 [&](const std::vector<Dense>& in) { return delta2(c, in[0], in[1]); }, bad);
  if (!bad.empty()) throw std::runtime_error("delta2: " + bad);
  return m;
}

lietriple::Matrix pointwise_delta3(const lietriple::LYAlgebra& a, const lietriple::Representation& r) {
  Ctx c(a, r);
  std::string bad;
  lietriple::Matrix m = assemble(
      lietriple::quadruple_spaces(a.dim(), r.module_dim()), lietriple::delta3_codomain_spaces(a.dim(), r.module_dim()),
      [&](const std::vector<Dense>& in) { return delta3(c, in[0], in[1], in[2], in[3]); }, bad);
  if (!bad.empty()) throw std::runtime_error("delta3: " + bad);
  return m;
}

}  // namespace oracle
