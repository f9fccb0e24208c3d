#include "lietriple/rep.hpp"

#include <string>

#include "lietriple/errors.hpp"

namespace lietriple {

namespace {

void check_sizes(const std::vector<Matrix>& ms, std::size_t count, std::size_t m, const char* what) {
  if (ms.size() != count)
    throw InputError(std::string(what) + ": expected " + std::to_string(count) + " matrices, got " +
                     std::to_string(ms.size()));
  for (const auto& a : ms)
    if (a.rows() != m || a.cols() != m)
      throw InputError(std::string(what) + ": matrices must be " + std::to_string(m) + "x" + std::to_string(m));
}

void check_dims(const LYAlgebra& a, const Representation& r) {
  if (a.dim() != r.algebra_dim())
    throw InputError("representation is for a " + std::to_string(r.algebra_dim()) +
                     "-dimensional algebra, algebra has dimension " + std::to_string(a.dim()));
}

}  // namespace

Representation::Representation(std::size_t algebra_dim, std::size_t module_dim)
    : n_(algebra_dim),
      m_(module_dim),
      rho_(algebra_dim, Matrix(module_dim, module_dim)),
      d_(algebra_dim * algebra_dim, Matrix(module_dim, module_dim)),
      theta_(algebra_dim * algebra_dim, Matrix(module_dim, module_dim)) {}

Representation::Representation(std::size_t algebra_dim, std::size_t module_dim, std::vector<Matrix> rho,
                               std::vector<Matrix> d, std::vector<Matrix> theta)
    : n_(algebra_dim), m_(module_dim), rho_(std::move(rho)), d_(std::move(d)), theta_(std::move(theta)) {
  check_sizes(rho_, n_, m_, "rho");
  check_sizes(d_, n_ * n_, m_, "D");
  check_sizes(theta_, n_ * n_, m_, "theta");
}

Matrix Representation::rho(const Vector& x) const {
  Matrix r(m_, m_);
  for (std::size_t i = 0; i < n_; ++i)
    if (sgn(x[i]) != 0) r += x[i] * rho_[i];
  return r;
}

Matrix Representation::D(const Vector& x, const Vector& y) const {
  Matrix r(m_, m_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (sgn(y[j]) != 0) r += Rational(x[i] * y[j]) * d_[i * n_ + j];
  }
  return r;
}

Matrix Representation::theta(const Vector& x, const Vector& y) const {
  Matrix r(m_, m_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (sgn(y[j]) != 0) r += Rational(x[i] * y[j]) * theta_[i * n_ + j];
  }
  return r;
}

AxiomReport verify_rep(const LYAlgebra& a, const Representation& r, const CheckOptions& opt) {
  check_dims(a, r);
  const std::size_t n = a.dim();
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  auto br = [&](std::size_t i, std::size_t j) { return a.bracket(e(i), e(j)); };
  auto tr = [&](std::size_t i, std::size_t j, std::size_t k) { return a.bracket(e(i), e(j), e(k)); };
  AxiomReport rep;
  {
    auto& ent = rep.open("R31");
    for_each_tuple(2, n, [&](const auto& t) {
      std::size_t x1 = t[0], x2 = t[1];
      Matrix s = r.D(x1, x2) - r.theta(x2, x1) + r.theta(x1, x2) + r.rho(br(x1, x2)) -
                 commutator(r.rho(x1), r.rho(x2));
      rep.record(ent, t, s.flatten(), opt);
    });
  }
  {
    auto& ent = rep.open("R41");
    for_each_tuple(3, n, [&](const auto& t) {
      std::size_t x1 = t[0], x2 = t[1], x3 = t[2];
      Matrix s = r.D(br(x1, x2), e(x3)) + r.D(br(x2, x3), e(x1)) + r.D(br(x3, x1), e(x2));
      rep.record(ent, t, s.flatten(), opt);
    });
  }
  {
    auto& ent = rep.open("R42");
    for_each_tuple(3, n, [&](const auto& t) {
      std::size_t x1 = t[0], x2 = t[1], x3 = t[2];
      Matrix s = r.theta(br(x1, x2), e(x3)) - r.theta(x1, x3) * r.rho(x2) + r.theta(x2, x3) * r.rho(x1);
      rep.record(ent, t, s.flatten(), opt);
    });
  }
  {
    auto& ent = rep.open("R51");
    for_each_tuple(3, n, [&](const auto& t) {
      std::size_t x1 = t[0], x2 = t[1], x3 = t[2];
      Matrix s = commutator(r.D(x1, x2), r.rho(x3)) - r.rho(tr(x1, x2, x3));
      rep.record(ent, t, s.flatten(), opt);
    });
  }
  {
    auto& ent = rep.open("R52");
    for_each_tuple(3, n, [&](const auto& t) {
      std::size_t x1 = t[0], x2 = t[1], x3 = t[2];
      Matrix s = r.theta(e(x1), br(x2, x3)) - r.rho(x2) * r.theta(x1, x3) + r.rho(x3) * r.theta(x1, x2);
      rep.record(ent, t, s.flatten(), opt);
    });
  }
  {
    auto& ent = rep.open("R61");
    for_each_tuple(4, n, [&](const auto& t) {
      std::size_t x1 = t[0], x2 = t[1], y1 = t[2], y2 = t[3];
      Matrix s = commutator(r.D(x1, x2), r.theta(y1, y2)) - r.theta(tr(x1, x2, y1), e(y2)) -
                 r.theta(e(y1), tr(x1, x2, y2));
      rep.record(ent, t, s.flatten(), opt);
    });
  }
  {
    auto& ent = rep.open("R62");
    for_each_tuple(4, n, [&](const auto& t) {
      std::size_t x1 = t[0], y1 = t[1], y2 = t[2], y3 = t[3];
      Matrix s = r.theta(e(x1), tr(y1, y2, y3)) - r.theta(y2, y3) * r.theta(x1, y1) +
                 r.theta(y1, y3) * r.theta(x1, y2) - r.D(y1, y2) * r.theta(x1, y3);
      rep.record(ent, t, s.flatten(), opt);
    });
  }
  return rep;
}

AxiomReport check_d_skew(const Representation& r, const CheckOptions& opt) {
  AxiomReport rep;
  auto& ent = rep.open("D-skew");
  for_each_tuple(2, r.algebra_dim(), [&](const auto& t) {
    rep.record(ent, t, (r.D(t[0], t[1]) + r.D(t[1], t[0])).flatten(), opt);
  });
  return rep;
}

Representation adjoint_rep(const LYAlgebra& a) {
  AxiomReport chk = verify_ly(a);
  if (!chk.passed()) throw InvalidStructure("not a Lie-Yamaguti algebra: fails " + chk.failed_labels().front());
  const std::size_t n = a.dim();
  Representation r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s)
      for (const auto& [k, v] : a.basis_bracket(i, s)) r.rho(i)(k, s) = v;
  for_each_tuple(3, n, [&](const auto& t) {
    std::size_t i = t[0], j = t[1], s = t[2];
    for (const auto& [k, v] : a.basis_bracket(i, j, s)) r.D(i, j)(k, s) = v;
    for (const auto& [k, v] : a.basis_bracket(s, i, j)) r.theta(i, j)(k, s) = v;
  });
  return r;
}

Representation zero_rep(std::size_t algebra_dim, std::size_t module_dim) {
  return Representation(algebra_dim, module_dim);
}

Representation lie_rep_to_lya_rep(const LieAlgebra& g, const std::vector<Matrix>& rho) {
  const std::size_t n = g.dim();
  if (rho.size() != n) throw InputError("Lie module needs one matrix per basis vector");
  const std::size_t m = n == 0 ? 0 : rho.front().rows();
  check_sizes(rho, n, m, "rho");
  Representation r(n, m, rho, std::vector<Matrix>(n * n, Matrix(m, m)), std::vector<Matrix>(n * n, Matrix(m, m)));
  for_each_tuple(2, n, [&](const auto& t) {
    r.D(t[0], t[1]) = r.rho(g.bracket(unit_vector(n, t[0]), unit_vector(n, t[1])));
    r.theta(t[0], t[1]) = rho[t[1]] * rho[t[0]];
  });
  return r;
}

Representation change_basis(const Representation& r, const Matrix& p, const Matrix& pv) {
  const std::size_t n = r.algebra_dim(), m = r.module_dim();
  if (p.rows() != n || p.cols() != n || pv.rows() != m || pv.cols() != m)
    throw InputError("basis change matrices do not match the representation");
  auto qv = inverse(pv);
  if (!qv || !inverse(p)) throw InputError("basis change matrix is singular");
  Representation out(n, m);
  for (std::size_t a = 0; a < n; ++a) out.rho(a) = *qv * r.rho(p.column(a)) * pv;
  for_each_tuple(2, n, [&](const auto& t) {
    Vector x = p.column(t[0]), y = p.column(t[1]);
    out.D(t[0], t[1]) = *qv * r.D(x, y) * pv;
    out.theta(t[0], t[1]) = *qv * r.theta(x, y) * pv;
  });
  return out;
}

LYAlgebra semidirect(const LYAlgebra& t, const LYAction& action) {
  const Representation& r = action.rep;
  const LYAlgebra& v = action.target;
  check_dims(t, r);
  if (r.module_dim() != v.dim())
    throw InputError("action module has dimension " + std::to_string(r.module_dim()) + ", acted-on algebra " +
                     std::to_string(v.dim()));
  const std::size_t n = t.dim(), m = v.dim(), d = n + m;
  auto split = [&](const Vector& z) {
    return std::pair{Vector(z.begin(), z.begin() + n), Vector(z.begin() + n, z.end())};
  };
  auto join = [&](const Vector& x, const Vector& u) {
    Vector z(x);
    z.insert(z.end(), u.begin(), u.end());
    return z;
  };
  Tensor b({d, d, d});
  Tensor c({d, d, d, d});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto [x, u] = split(unit_vector(d, i));
      auto [y, w] = split(unit_vector(d, j));
      Vector br = join(t.bracket(x, y), r.rho(x).apply(w) - r.rho(y).apply(u) + v.bracket(u, w));
      for (std::size_t k = 0; k < d; ++k) b(i, j, k) = br[k];
      Matrix dxy = r.D(x, y);
      for (std::size_t k = 0; k < d; ++k) {
        auto [z, s] = split(unit_vector(d, k));
        Vector tv = dxy.apply(s) + r.theta(y, z).apply(u) - r.theta(x, z).apply(w) + v.bracket(u, w, s);
        Vector tr = join(t.bracket(x, y, z), tv);
        for (std::size_t l = 0; l < d; ++l) c(i, j, k, l) = tr[l];
      }
    }
  return LYAlgebra::unchecked(std::move(b), std::move(c));
}

AxiomReport check_action(const LYAlgebra& t, const LYAction& action, const CheckOptions& opt) {
  return verify_ly(semidirect(t, action), opt);
}

}  // namespace lietriple
