#include "lietriple/cochain.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <thread>

#include "lietriple/errors.hpp"

namespace lietriple {

SkewSignature::SkewSignature(std::size_t arity_, std::vector<std::pair<std::size_t, std::size_t>> pairs_)
    : arity(arity_), pairs(std::move(pairs_)) {
  std::vector<bool> used(arity, false);
  for (auto [p, q] : pairs) {
    if (p >= arity || q >= arity || p == q) throw InputError("skew pair out of range for arity " + std::to_string(arity));
    if (used[p] || used[q]) throw InputError("skew pairs must be disjoint");
    used[p] = used[q] = true;
  }
}

SkewSignature SkewSignature::yamaguti(std::size_t arity) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < arity; i += 2) pairs.emplace_back(i, i + 1);
  return SkewSignature(arity, std::move(pairs));
}

std::string to_string(const SkewSignature& s) {
  std::string out = "arity " + std::to_string(s.arity) + " pairs {";
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(s.pairs[i].first + 1) + "," + std::to_string(s.pairs[i].second + 1) + ")";
  }
  return out + "}";
}

CochainSpace::CochainSpace(SkewSignature sig, std::size_t source_dim, std::size_t target_dim)
    : sig_(std::move(sig)), d_(source_dim), m_(target_dim) {
  p_ = d_ * (d_ == 0 ? 0 : d_ - 1) / 2;
  std::vector<bool> paired(sig_.arity, false);
  for (auto [p, q] : sig_.pairs) paired[p] = paired[q] = true;
  for (std::size_t i = 0; i < sig_.arity; ++i)
    if (!paired[i]) free_.push_back(i);
  tuples_ = 1;
  for (std::size_t i = 0; i < sig_.pairs.size(); ++i) tuples_ *= p_;
  for (std::size_t i = 0; i < free_.size(); ++i) tuples_ *= d_;
}

std::vector<std::size_t> CochainSpace::tuple(std::size_t t) const {
  std::vector<std::size_t> out(sig_.arity, 0);
  for (std::size_t f = free_.size(); f-- > 0;) {
    out[free_[f]] = t % d_;
    t /= d_;
  }
  for (std::size_t k = sig_.pairs.size(); k-- > 0;) {
    std::size_t idx = t % p_;
    t /= p_;
    std::size_t i = 0;
    while (idx >= d_ - 1 - i) {
      idx -= d_ - 1 - i;
      ++i;
    }
    out[sig_.pairs[k].first] = i;
    out[sig_.pairs[k].second] = i + 1 + idx;
  }
  return out;
}

std::optional<std::pair<std::size_t, int>> CochainSpace::locate(const std::size_t* t) const {
  std::size_t idx = 0;
  int sign = 1;
  for (auto [p, q] : sig_.pairs) {
    std::size_t i = t[p], j = t[q];
    if (i == j) return std::nullopt;
    if (i > j) {
      std::swap(i, j);
      sign = -sign;
    }
    idx = idx * p_ + (i * d_ - i * (i + 1) / 2 + (j - i - 1));
  }
  for (std::size_t f : free_) idx = idx * d_ + t[f];
  return std::pair{idx, sign};
}

std::optional<std::pair<std::size_t, int>> CochainSpace::locate(const std::vector<std::size_t>& t) const {
  if (t.size() != sig_.arity) throw InputError("tuple length does not match cochain arity");
  return locate(t.data());
}

Cochain::Cochain(CochainSpace space) : space_(std::move(space)), coeffs_(space_.dim()) {}

Cochain::Cochain(CochainSpace space, Vector coeffs) : space_(std::move(space)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != space_.dim())
    throw InputError("cochain has " + std::to_string(coeffs_.size()) + " coefficients, space has dimension " +
                     std::to_string(space_.dim()));
}

Vector Cochain::value(const std::vector<std::size_t>& tuple) const {
  const std::size_t m = space_.target_dim();
  Vector out(m);
  auto loc = space_.locate(tuple);
  if (!loc) return out;
  for (std::size_t s = 0; s < m; ++s) {
    out[s] = coeffs_[loc->first * m + s];
    if (loc->second < 0) out[s] = -out[s];
  }
  return out;
}

Vector Cochain::eval(const std::vector<Vector>& args) const {
  const auto& sig = space_.signature();
  if (args.size() != sig.arity)
    throw InputError("cochain of arity " + std::to_string(sig.arity) + " evaluated on " +
                     std::to_string(args.size()) + " arguments");
  for (const auto& a : args)
    if (a.size() != space_.source_dim()) throw InputError("argument has wrong dimension");
  const std::size_t m = space_.target_dim();
  Vector out(m);
  std::vector<SparseVector> support;
  double expansions = 1;
  for (const auto& a : args) {
    support.push_back(to_sparse(a));
    expansions *= static_cast<double>(support.back().size());
  }
  if (expansions == 0) return out;
  if (expansions <= static_cast<double>(space_.tuple_count())) {
    std::vector<std::size_t> tup(sig.arity);
    auto expand = [&](auto&& self, std::size_t pos, const Rational& w) -> void {
      if (pos == sig.arity) {
        auto loc = space_.locate(tup.data());
        if (!loc) return;
        Rational ws = loc->second < 0 ? Rational(-w) : w;
        for (std::size_t s = 0; s < m; ++s) out[s] += ws * coeffs_[loc->first * m + s];
        return;
      }
      for (const auto& [i, v] : support[pos]) {
        tup[pos] = i;
        self(self, pos + 1, w * v);
      }
    };
    expand(expand, 0, Rational(1));
    return out;
  }
  std::vector<bool> paired(sig.arity, false);
  for (auto [p, q] : sig.pairs) paired[p] = paired[q] = true;
  for (std::size_t t = 0; t < space_.tuple_count(); ++t) {
    bool any = false;
    for (std::size_t s = 0; s < m && !any; ++s) any = sgn(coeffs_[t * m + s]) != 0;
    if (!any) continue;
    auto tup = space_.tuple(t);
    Rational w = 1;
    for (auto [p, q] : sig.pairs) {
      w *= args[p][tup[p]] * args[q][tup[q]] - args[p][tup[q]] * args[q][tup[p]];
      if (sgn(w) == 0) break;
    }
    for (std::size_t i = 0; i < sig.arity && sgn(w) != 0; ++i)
      if (!paired[i]) w *= args[i][tup[i]];
    if (sgn(w) == 0) continue;
    for (std::size_t s = 0; s < m; ++s) out[s] += w * coeffs_[t * m + s];
  }
  return out;
}

std::vector<CochainSpace> pair_spaces(std::size_t d, std::size_t m) {
  return {CochainSpace(SkewSignature(2, {{0, 1}}), d, m), CochainSpace(SkewSignature(3, {{0, 1}}), d, m)};
}

std::vector<CochainSpace> quadruple_spaces(std::size_t d, std::size_t m) {
  return {CochainSpace(SkewSignature(3, {{0, 1}}), d, m), CochainSpace(SkewSignature(4, {{0, 1}}), d, m),
          CochainSpace(SkewSignature(4, {{0, 1}, {2, 3}}), d, m),
          CochainSpace(SkewSignature(5, {{0, 1}, {2, 3}}), d, m)};
}

std::vector<CochainSpace> weak_quadruple_spaces(std::size_t d, std::size_t m) {
  return {CochainSpace(SkewSignature(3, {{0, 1}}), d, m), CochainSpace(SkewSignature(4, {{0, 1}}), d, m),
          CochainSpace(SkewSignature(4, {{0, 1}}), d, m), CochainSpace(SkewSignature(5, {{0, 1}}), d, m)};
}

std::vector<CochainSpace> delta3_codomain_spaces(std::size_t d, std::size_t m) {
  return {CochainSpace(SkewSignature(5, {{0, 1}}), d, m), CochainSpace(SkewSignature(6, {{0, 1}}), d, m),
          CochainSpace(SkewSignature::yamaguti(6), d, m), CochainSpace(SkewSignature::yamaguti(7), d, m)};
}

std::vector<CochainSpace> yamaguti_spaces(std::size_t n, std::size_t d, std::size_t m) {
  return {CochainSpace(SkewSignature::yamaguti(2 * n), d, m), CochainSpace(SkewSignature::yamaguti(2 * n + 1), d, m)};
}

std::size_t total_dim(const std::vector<CochainSpace>& spaces) {
  std::size_t n = 0;
  for (const auto& s : spaces) n += s.dim();
  return n;
}

CochainPair CochainPair::zero(std::size_t d, std::size_t m) {
  auto sp = pair_spaces(d, m);
  return {Cochain(sp[0]), Cochain(sp[1])};
}

Vector CochainPair::flatten() const { return join_cochains({nu, omega}); }

CochainPair CochainPair::from_vector(std::size_t d, std::size_t m, const Vector& v) {
  auto cs = split_cochains(pair_spaces(d, m), v);
  return {cs[0], cs[1]};
}

CochainQuadruple CochainQuadruple::zero(std::size_t d, std::size_t m) {
  auto sp = quadruple_spaces(d, m);
  return {Cochain(sp[0]), Cochain(sp[1]), Cochain(sp[2]), Cochain(sp[3])};
}

Vector CochainQuadruple::flatten() const { return join_cochains({l3, l4hat, l4tilde, l5}); }

CochainQuadruple CochainQuadruple::from_vector(std::size_t d, std::size_t m, const Vector& v) {
  auto cs = split_cochains(quadruple_spaces(d, m), v);
  return {cs[0], cs[1], cs[2], cs[3]};
}

bool CochainQuadruple::is_zero() const {
  return l3.is_zero() && l4hat.is_zero() && l4tilde.is_zero() && l5.is_zero();
}

std::vector<Cochain> split_cochains(const std::vector<CochainSpace>& spaces, const Vector& v) {
  if (v.size() != total_dim(spaces))
    throw InputError("vector of length " + std::to_string(v.size()) + " does not match cochain spaces of total dimension " +
                     std::to_string(total_dim(spaces)));
  std::vector<Cochain> out;
  std::size_t off = 0;
  for (const auto& s : spaces) {
    out.emplace_back(s, Vector(v.begin() + off, v.begin() + off + s.dim()));
    off += s.dim();
  }
  return out;
}

Vector join_cochains(const std::vector<Cochain>& cs) {
  Vector v;
  for (const auto& c : cs) v.insert(v.end(), c.coeffs().begin(), c.coeffs().end());
  return v;
}

std::size_t max_codomain() {
  const char* env = std::getenv("LIETRIPLE_MAX_CODOMAIN");
  if (!env || !*env) return 1000000;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw InputError("LIETRIPLE_MAX_CODOMAIN must be a nonnegative integer");
  return static_cast<std::size_t>(v);
}

namespace {

using Op = std::vector<std::tuple<std::size_t, std::size_t, Rational>>;

Op sparse_op(const Matrix& a) {
  Op op;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t s = 0; s < a.cols(); ++s)
      if (sgn(a(r, s)) != 0) op.emplace_back(r, s, a(r, s));
  return op;
}

struct Context {
  const LYAlgebra& a;
  std::size_t d;
  std::size_t m;
  std::vector<SparseVector> e;
  std::vector<Op> rho, D, theta;

  Context(const LYAlgebra& alg, const Representation& r) : a(alg), d(alg.dim()), m(r.module_dim()) {
    for (std::size_t i = 0; i < d; ++i) {
      e.push_back({{i, Rational(1)}});
      rho.push_back(sparse_op(r.rho(i)));
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        D.push_back(sparse_op(r.D(i, j)));
        theta.push_back(sparse_op(r.theta(i, j)));
      }
  }
  const Op* R(std::size_t i) const { return &rho[i]; }
  const Op* Dm(std::size_t i, std::size_t j) const { return &D[i * d + j]; }
  const Op* Th(std::size_t i, std::size_t j) const { return &theta[i * d + j]; }
  const SparseVector* x(std::size_t i) const { return &e[i]; }
  const SparseVector* br(std::size_t i, std::size_t j) const { return &a.basis_bracket(i, j); }
  const SparseVector* tr(std::size_t i, std::size_t j, std::size_t k) const { return &a.basis_bracket(i, j, k); }
};

// Accumulates, for one codomain tuple, the m output coordinates as linear
// forms in the domain coefficients.
class RowBuilder {
 public:
  RowBuilder(const std::vector<CochainSpace>& domain, std::size_t m) : dom_(domain), m_(m) {
    std::size_t off = 0;
    for (const auto& s : dom_) {
      offset_.push_back(off);
      off += s.dim();
    }
    acc_.assign(m, Vector(off));
    mark_.assign(m, std::vector<char>(off, 0));
    touched_.assign(m, {});
  }

  void term(int coef, const Op* op, std::size_t comp, std::initializer_list<const SparseVector*> args) {
    term(coef, op, comp, args.begin(), args.size());
  }

  void term(int coef, const Op* op, std::size_t comp, const SparseVector* const* args, std::size_t k) {
    if (op && op->empty()) return;
    for (std::size_t i = 0; i < k; ++i)
      if (args[i]->empty()) return;
    if (tup_.size() < k) tup_.resize(k);
    op_ = op;
    comp_ = comp;
    args_ = args;
    k_ = k;
    expand(0, Rational(coef));
  }

  SparseVector take(std::size_t r) {
    auto& t = touched_[r];
    std::sort(t.begin(), t.end());
    SparseVector row;
    for (std::size_t c : t) {
      if (sgn(acc_[r][c]) != 0) row.emplace_back(c, acc_[r][c]);
      acc_[r][c] = 0;
      mark_[r][c] = 0;
    }
    t.clear();
    return row;
  }

 private:
  void add(std::size_t r, std::size_t c, const Rational& v) {
    if (!mark_[r][c]) {
      mark_[r][c] = 1;
      touched_[r].push_back(c);
    }
    acc_[r][c] += v;
  }

  void expand(std::size_t pos, const Rational& w) {
    if (pos == k_) {
      auto loc = dom_[comp_].locate(tup_.data());
      if (!loc) return;
      std::size_t base = offset_[comp_] + loc->first * m_;
      Rational ws = loc->second < 0 ? Rational(-w) : w;
      if (!op_) {
        for (std::size_t s = 0; s < m_; ++s) add(s, base + s, ws);
      } else {
        for (const auto& [r, s, v] : *op_) add(r, base + s, ws * v);
      }
      return;
    }
    for (const auto& [i, v] : *args_[pos]) {
      tup_[pos] = i;
      expand(pos + 1, w * v);
    }
  }

  const std::vector<CochainSpace>& dom_;
  std::size_t m_;
  std::vector<std::size_t> offset_;
  std::vector<Vector> acc_;
  std::vector<std::vector<char>> mark_;
  std::vector<std::vector<std::size_t>> touched_;

  const Op* op_ = nullptr;
  std::size_t comp_ = 0;
  const SparseVector* const* args_ = nullptr;
  std::size_t k_ = 0;
  std::vector<std::size_t> tup_;
};

using Formula = std::function<void(RowBuilder&, std::size_t comp, const std::vector<std::size_t>& x)>;

void guard(const std::string& label, const std::vector<CochainSpace>& codomain) {
  std::size_t cap = max_codomain();
  std::size_t dim = total_dim(codomain);
  if (dim > cap)
    throw ResourceError(label + " codomain has dimension " + std::to_string(dim) + ", above the limit " +
                        std::to_string(cap) + " (LIETRIPLE_MAX_CODOMAIN)");
}

void require_valid(const LYAlgebra& a, const Representation& r) {
  AxiomReport chk = verify_rep(a, r);
  if (!chk.passed()) throw InvalidStructure("representation fails " + chk.failed_labels().front());
}

OperatorMatrix assemble(std::string label, std::vector<CochainSpace> domain, std::vector<CochainSpace> codomain,
                        std::size_t m, const Formula& f) {
  guard(label, codomain);
  OperatorMatrix out{std::move(label), SparseMatrix(total_dim(codomain), total_dim(domain)), std::move(domain),
                     std::move(codomain)};
  struct Job {
    std::size_t comp, tuple, row0;
  };
  std::vector<Job> jobs;
  std::size_t row = 0;
  for (std::size_t c = 0; c < out.codomain.size(); ++c)
    for (std::size_t t = 0; t < out.codomain[c].tuple_count(); ++t) {
      jobs.push_back({c, t, row});
      row += m;
    }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    RowBuilder b(out.domain, m);
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      const Job& job = jobs[j];
      f(b, job.comp, out.codomain[job.comp].tuple(job.tuple));
      for (std::size_t r = 0; r < m; ++r) out.matrix.set_row(job.row0 + r, b.take(r));
    }
  };
  std::size_t threads = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), jobs.size() / 64 + 1);
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

// (-1)^n times Yamaguti's delta_I (out = 0) or delta_II (out = 1) on (f, g).
void yamaguti_terms(RowBuilder& b, const Context& c, std::size_t n, std::size_t fc, std::size_t gc, std::size_t out,
                    const std::vector<std::size_t>& x, int sign) {
  std::vector<const SparseVector*> args;
  args.reserve(x.size());
  auto pm = [](std::size_t e) { return e % 2 == 0 ? 1 : -1; };
  if (out == 0) {
    std::size_t a = 2 * n, z = 2 * n + 1;
    args.clear();
    for (std::size_t i = 0; i < 2 * n; ++i) args.push_back(c.x(x[i]));
    args.push_back(c.x(x[z]));
    b.term(sign, c.R(x[a]), gc, args.data(), args.size());
    args.back() = c.x(x[a]);
    b.term(-sign, c.R(x[z]), gc, args.data(), args.size());
    args.back() = c.br(x[a], x[z]);
    b.term(-sign, nullptr, gc, args.data(), args.size());
  } else {
    std::size_t a = 2 * n, z = 2 * n + 1, w = 2 * n + 2;
    args.clear();
    for (std::size_t i = 0; i <= 2 * n; ++i) args.push_back(c.x(x[i]));
    b.term(sign, c.Th(x[z], x[w]), gc, args.data(), args.size());
    args.back() = c.x(x[z]);
    b.term(-sign, c.Th(x[a], x[w]), gc, args.data(), args.size());
  }
  const std::size_t len = x.size();
  const std::size_t kmax = out == 0 ? n : n + 1;
  const std::size_t comp = out == 0 ? fc : gc;
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::size_t i0 = 2 * k - 2, i1 = 2 * k - 1;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < len; ++i)
      if (i != i0 && i != i1) rest.push_back(i);
    args.clear();
    for (std::size_t i : rest) args.push_back(c.x(x[i]));
    b.term(sign * pm(n + k + 1), c.Dm(x[i0], x[i1]), comp, args.data(), args.size());
    for (std::size_t pos = 0; pos < rest.size(); ++pos) {
      std::size_t j = rest[pos];
      if (j < 2 * k) continue;
      args[pos] = c.tr(x[i0], x[i1], x[j]);
      b.term(sign * pm(n + k), nullptr, comp, args.data(), args.size());
      args[pos] = c.x(x[j]);
    }
  }
}

}  // namespace

OperatorMatrix yamaguti_delta(std::size_t n, const LYAlgebra& a, const Representation& r) {
  if (n == 0) throw InputError("Yamaguti coboundary needs n >= 1");
  require_valid(a, r);
  Context c(a, r);
  int sign = n % 2 == 0 ? 1 : -1;
  return assemble("yamaguti:" + std::to_string(n), yamaguti_spaces(n, c.d, c.m), yamaguti_spaces(n + 1, c.d, c.m), c.m,
                  [&](RowBuilder& b, std::size_t comp, const std::vector<std::size_t>& x) {
                    yamaguti_terms(b, c, n, 0, 1, comp, x, sign);
                  });
}

OperatorMatrix delta2(const LYAlgebra& a, const Representation& r, bool weak_codomain) {
  require_valid(a, r);
  Context c(a, r);
  auto codomain = weak_codomain ? weak_quadruple_spaces(c.d, c.m) : quadruple_spaces(c.d, c.m);
  enum { NU = 0, OM = 1 };
  return assemble("delta2", pair_spaces(c.d, c.m), std::move(codomain), c.m,
                  [&](RowBuilder& b, std::size_t comp, const std::vector<std::size_t>& x) {
                    static const std::size_t cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
                    switch (comp) {
                      case 0:
                        for (const auto& p : cyc) {
                          std::size_t u = x[p[0]], v = x[p[1]], w = x[p[2]];
                          b.term(-1, nullptr, OM, {c.x(u), c.x(v), c.x(w)});
                          b.term(1, c.R(u), NU, {c.x(v), c.x(w)});
                          b.term(-1, nullptr, NU, {c.br(u, v), c.x(w)});
                        }
                        break;
                      case 1:
                        for (const auto& p : cyc) {
                          std::size_t u = x[p[0]], v = x[p[1]], w = x[p[2]], y = x[3];
                          b.term(-1, c.Th(u, y), NU, {c.x(v), c.x(w)});
                          b.term(-1, nullptr, OM, {c.br(u, v), c.x(w), c.x(y)});
                        }
                        break;
                      default:
                        yamaguti_terms(b, c, 1, NU, OM, comp - 2, x, -1);
                    }
                  });
}

OperatorMatrix delta3(const LYAlgebra& a, const Representation& r) {
  require_valid(a, r);
  Context c(a, r);
  enum { L3 = 0, LH = 1, LT = 2, L5 = 3 };
  return assemble(
      "delta3", quadruple_spaces(c.d, c.m), delta3_codomain_spaces(c.d, c.m), c.m,
      [&](RowBuilder& b, std::size_t comp, const std::vector<std::size_t>& x) {
        auto e = [&](std::size_t i) { return c.x(x[i]); };
        auto X = [&](std::size_t i) { return c.tr(x[0], x[1], x[i]); };
        auto br = [&](std::size_t i, std::size_t j) { return c.br(x[i], x[j]); };
        if (comp == 0) {
          // x1 x2 y1 y2 y3 = 0..4
          b.term(1, c.Dm(x[0], x[1]), L3, {e(2), e(3), e(4)});
          b.term(-1, nullptr, L3, {X(2), e(3), e(4)});
          b.term(-1, nullptr, L3, {e(2), X(3), e(4)});
          b.term(-1, nullptr, L3, {e(2), e(3), X(4)});
          b.term(1, nullptr, LT, {e(0), e(1), br(2, 3), e(4)});
          b.term(1, nullptr, LT, {e(0), e(1), e(3), br(2, 4)});
          b.term(-1, nullptr, LT, {e(0), e(1), e(2), br(3, 4)});
          b.term(-1, c.R(x[2]), LT, {e(0), e(1), e(3), e(4)});
          b.term(1, c.R(x[3]), LT, {e(0), e(1), e(2), e(4)});
          b.term(-1, c.R(x[4]), LT, {e(0), e(1), e(2), e(3)});
          b.term(1, nullptr, L5, {e(0), e(1), e(2), e(3), e(4)});
          b.term(1, nullptr, L5, {e(0), e(1), e(3), e(4), e(2)});
          b.term(1, nullptr, L5, {e(0), e(1), e(4), e(2), e(3)});
        } else if (comp == 1) {
          // x1 x2 y1 y2 y3 z1 = 0..5
          b.term(1, c.Dm(x[0], x[1]), LH, {e(2), e(3), e(4), e(5)});
          b.term(-1, nullptr, LH, {X(2), e(3), e(4), e(5)});
          b.term(-1, nullptr, LH, {e(2), X(3), e(4), e(5)});
          b.term(-1, nullptr, LH, {e(2), e(3), X(4), e(5)});
          b.term(-1, nullptr, LH, {e(2), e(3), e(4), X(5)});
          b.term(1, c.Th(x[2], x[5]), LT, {e(0), e(1), e(3), e(4)});
          b.term(1, c.Th(x[4], x[5]), LT, {e(0), e(1), e(2), e(3)});
          b.term(-1, c.Th(x[3], x[5]), LT, {e(0), e(1), e(2), e(4)});
          b.term(1, nullptr, L5, {e(0), e(1), br(2, 3), e(4), e(5)});
          b.term(1, nullptr, L5, {e(0), e(1), e(3), br(2, 4), e(5)});
          b.term(-1, nullptr, L5, {e(0), e(1), e(2), br(3, 4), e(5)});
        } else {
          yamaguti_terms(b, c, 2, LT, L5, comp - 2, x, 1);
        }
      });
}

AxiomReport symmetry_audit(const Cochain& c, const SkewSignature& candidate, const CheckOptions& opt) {
  const auto& sp = c.space();
  if (candidate.arity != sp.arity())
    throw InputError("candidate signature has arity " + std::to_string(candidate.arity) + ", cochain has arity " +
                     std::to_string(sp.arity()));
  AxiomReport rep;
  for (auto [p, q] : candidate.pairs) {
    auto& ent = rep.open("(" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")");
    for_each_tuple(sp.arity(), sp.source_dim(), [&](const auto& t) {
      if (t[p] > t[q]) return;
      auto s = t;
      std::swap(s[p], s[q]);
      rep.record(ent, t, c.value(t) + c.value(s), opt);
    });
  }
  return rep;
}

}  // namespace lietriple
