#include "lietriple/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace lietriple::io {

namespace {

std::string field(const std::string& path, const std::string& key) { return path + "." + key; }
std::string item(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

template <class F>
auto guarded(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

const Json& object(const Json& j, const std::string& path, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  for (const char* k : required)
    if (!j.contains(k)) throw SchemaError(field(path, k), "missing required field");
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto known = [&](std::initializer_list<const char*> ks) {
      return std::any_of(ks.begin(), ks.end(), [&](const char* k) { return it.key() == k; });
    };
    if (!known(required) && !known(optional)) throw SchemaError(field(path, it.key()), "unknown field");
  }
  return j;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

std::size_t count_of(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::size_t dim_field(const Json& obj, const std::string& path, const char* key) {
  return count_of(obj.at(key), field(path, key));
}

void expect_dim(std::size_t got, std::size_t want, const std::string& path) {
  if (got != want)
    throw SchemaError(path, "dimension mismatch: expected " + std::to_string(want) + ", got " + std::to_string(got));
}

Rational rational_of(const Json& j, const std::string& path) {
  if (j.is_string()) return guarded(path, [&] { return parse_rational(j.get<std::string>()); });
  if (j.is_number_integer()) return Rational(j.dump());
  throw SchemaError(path, "expected a rational string such as \"3/2\" or an integer");
}

std::vector<std::size_t> index_of(const Json& j, const std::string& path, const std::vector<std::size_t>& shape) {
  array(j, path);
  if (j.size() != shape.size())
    throw SchemaError(path, "index tuple has length " + std::to_string(j.size()) + ", expected " +
                                std::to_string(shape.size()));
  std::vector<std::size_t> ix;
  for (std::size_t k = 0; k < shape.size(); ++k) {
    std::size_t v = count_of(j[k], item(path, k));
    if (v >= shape[k])
      throw SchemaError(item(path, k), "index " + std::to_string(v) + " out of range " + std::to_string(shape[k]));
    ix.push_back(v);
  }
  return ix;
}

// [[index-tuple, value], ...]; repeated tuples are rejected.
template <class Fn>
void read_entries(const Json& j, const std::string& path, const std::vector<std::size_t>& shape, Fn&& fn) {
  array(j, path);
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string p = item(path, k);
    const Json& e = array(j[k], p);
    if (e.size() != 2) throw SchemaError(p, "expected [index-tuple, value]");
    fn(index_of(e[0], item(p, 0), shape), rational_of(e[1], item(p, 1)), p);
  }
}

Tensor tensor_of(const Json& j, const std::string& path, std::vector<std::size_t> shape) {
  Tensor t(shape);
  std::set<std::vector<std::size_t>> seen;
  read_entries(j, path, shape, [&](const std::vector<std::size_t>& ix, const Rational& v, const std::string& p) {
    if (!seen.insert(ix).second) throw SchemaError(p, "repeated index tuple");
    t.at(ix) = v;
  });
  return t;
}

Json tensor_json(const Tensor& t) {
  Json out = Json::array();
  for (std::size_t f = 0; f < t.size(); ++f)
    if (sgn(t.data()[f]) != 0) out.push_back(Json::array({t.index_of(f), rational_json(t.data()[f])}));
  return out;
}

Matrix matrix_of(const Json& j, const std::string& path, std::optional<std::size_t> rows,
                 std::optional<std::size_t> cols) {
  object(j, path, {"rows", "cols", "entries"});
  std::size_t r = dim_field(j, path, "rows"), c = dim_field(j, path, "cols");
  if (rows) expect_dim(r, *rows, field(path, "rows"));
  if (cols) expect_dim(c, *cols, field(path, "cols"));
  Tensor t = tensor_of(j.at("entries"), field(path, "entries"), {r, c});
  Matrix m(r, c);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < c; ++b) m(a, b) = t(a, b);
  return m;
}

Json matrix_json(const Matrix& m) {
  Tensor t({m.rows(), m.cols()});
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b) t(a, b) = m(a, b);
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", tensor_json(t)}};
}

Vector vector_of(const Json& j, const std::string& path, std::size_t n) {
  array(j, path);
  expect_dim(j.size(), n, path + " length");
  Vector v;
  for (std::size_t k = 0; k < n; ++k) v.push_back(rational_of(j[k], item(path, k)));
  return v;
}

Subspace subspace_of(const Json& j, const std::string& path, std::size_t n) {
  array(j, path);
  Subspace s{n, {}};
  for (std::size_t k = 0; k < j.size(); ++k) s.basis.push_back(vector_of(j[k], item(path, k), n));
  return s;
}

// ---- algebras

LYAlgebra lya_of(const Json& j, const std::string& path) {
  object(j, path, {"dim", "binary", "ternary"});
  std::size_t n = dim_field(j, path, "dim");
  return LYAlgebra::unchecked(tensor_of(j.at("binary"), field(path, "binary"), {n, n, n}),
                              tensor_of(j.at("ternary"), field(path, "ternary"), {n, n, n, n}));
}

Json lya_json(const LYAlgebra& a) {
  return {{"dim", a.dim()}, {"binary", tensor_json(a.binary())}, {"ternary", tensor_json(a.ternary())}};
}

LieAlgebra lie_of(const Json& j, const std::string& path, bool allow_decomposition, LieDocument* doc = nullptr) {
  if (allow_decomposition)
    object(j, path, {"dim", "bracket"}, {"decomposition"});
  else
    object(j, path, {"dim", "bracket"});
  std::size_t n = dim_field(j, path, "dim");
  Tensor b = tensor_of(j.at("bracket"), field(path, "bracket"), {n, n, n});
  LieAlgebra g = guarded(field(path, "bracket"), [&] { return LieAlgebra(std::move(b)); });
  if (doc && j.contains("decomposition")) {
    std::string p = field(path, "decomposition");
    const Json& d = object(j.at("decomposition"), p, {"h", "m"});
    doc->decomposition = std::pair{subspace_of(d.at("h"), field(p, "h"), n), subspace_of(d.at("m"), field(p, "m"), n)};
  }
  return g;
}

Json lie_json(const LieAlgebra& g) { return {{"dim", g.dim()}, {"bracket", tensor_json(g.structure())}}; }

LeibnizAlgebra leibniz_of(const Json& j, const std::string& path) {
  object(j, path, {"dim", "product"});
  std::size_t n = dim_field(j, path, "dim");
  return LeibnizAlgebra(tensor_of(j.at("product"), field(path, "product"), {n, n, n}));
}

Json leibniz_json(const LeibnizAlgebra& l) { return {{"dim", l.dim()}, {"product", tensor_json(l.structure())}}; }

// ---- representations

Representation rep_of(const Json& j, const std::string& path, std::optional<std::size_t> n_expected,
                      std::optional<std::size_t> m_expected, bool allow_target, RepDocument* doc = nullptr) {
  if (allow_target)
    object(j, path, {"algebra_dim", "module_dim", "rho", "D", "theta"}, {"target"});
  else
    object(j, path, {"algebra_dim", "module_dim", "rho", "D", "theta"});
  std::size_t n = dim_field(j, path, "algebra_dim"), m = dim_field(j, path, "module_dim");
  if (n_expected) expect_dim(n, *n_expected, field(path, "algebra_dim"));
  if (m_expected) expect_dim(m, *m_expected, field(path, "module_dim"));
  Representation r(n, m);
  Tensor rho = tensor_of(j.at("rho"), field(path, "rho"), {n, m, m});
  Tensor d = tensor_of(j.at("D"), field(path, "D"), {n, n, m, m});
  Tensor th = tensor_of(j.at("theta"), field(path, "theta"), {n, n, m, m});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t) {
        r.rho(a)(s, t) = rho(a, s, t);
        for (std::size_t b = 0; b < n; ++b) {
          r.D(a, b)(s, t) = d(a, b, s, t);
          r.theta(a, b)(s, t) = th(a, b, s, t);
        }
      }
  if (doc && j.contains("target")) {
    doc->target = lya_of(j.at("target"), field(path, "target"));
    expect_dim(doc->target->dim(), m, field(field(path, "target"), "dim"));
  }
  return r;
}

Json rep_json(const Representation& r) {
  const std::size_t n = r.algebra_dim(), m = r.module_dim();
  Tensor rho({n, m, m}), d({n, n, m, m}), th({n, n, m, m});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t) {
        rho(a, s, t) = r.rho(a)(s, t);
        for (std::size_t b = 0; b < n; ++b) {
          d(a, b, s, t) = r.D(a, b)(s, t);
          th(a, b, s, t) = r.theta(a, b)(s, t);
        }
      }
  return {{"algebra_dim", n},
          {"module_dim", m},
          {"rho", tensor_json(rho)},
          {"D", tensor_json(d)},
          {"theta", tensor_json(th)}};
}

// ---- cochains

Cochain cochain_of(const Json& j, const std::string& path, const std::optional<CochainSpace>& want) {
  object(j, path, {"degree", "signature", "source_dim", "target_dim", "coefficients"});
  std::size_t arity = dim_field(j, path, "degree");
  std::string sp = field(path, "signature");
  array(j.at("signature"), sp);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k < j.at("signature").size(); ++k) {
    auto ix = index_of(j.at("signature")[k], item(sp, k), {arity, arity});
    pairs.emplace_back(ix[0], ix[1]);
  }
  SkewSignature sig = guarded(sp, [&] { return SkewSignature(arity, pairs); });
  std::size_t d = dim_field(j, path, "source_dim"), m = dim_field(j, path, "target_dim");
  CochainSpace space(sig, d, m);
  if (want && !(space == *want))
    throw SchemaError(path, "expected a cochain of signature " + to_string(want->signature()) + " on dims (" +
                                std::to_string(want->source_dim()) + ", " + std::to_string(want->target_dim()) +
                                "), got " + to_string(sig) + " on (" + std::to_string(d) + ", " +
                                std::to_string(m) + ")");
  Cochain c(space);
  std::vector<bool> seen(space.dim(), false);
  std::vector<std::size_t> shape(arity, d);
  shape.push_back(m);
  read_entries(j.at("coefficients"), field(path, "coefficients"), shape,
               [&](const std::vector<std::size_t>& ix, const Rational& v, const std::string& p) {
                 std::vector<std::size_t> args(ix.begin(), ix.end() - 1);
                 auto loc = space.locate(args);
                 if (!loc) {
                   if (sgn(v) != 0) throw SchemaError(p, "nonzero value on a repeated skew pair");
                   return;
                 }
                 std::size_t flat = loc->first * m + ix.back();
                 if (seen[flat]) throw SchemaError(p, "repeated coefficient");
                 seen[flat] = true;
                 c.coeffs()[flat] = loc->second > 0 ? v : Rational(-v);
               });
  return c;
}

Json signature_json(const SkewSignature& s) {
  Json out = Json::array();
  for (auto [a, b] : s.pairs) out.push_back(Json::array({a, b}));
  return out;
}

Json quadruple_json(const CochainQuadruple& q) {
  return {{"source_dim", q.l3.space().source_dim()},
          {"target_dim", q.l3.space().target_dim()},
          {"l3", cochain_json(q.l3)},
          {"l4hat", cochain_json(q.l4hat)},
          {"l4tilde", cochain_json(q.l4tilde)},
          {"l5", cochain_json(q.l5)}};
}

CochainQuadruple quadruple_of(const Json& j, const std::string& path, std::optional<std::size_t> d_expected,
                              std::optional<std::size_t> m_expected) {
  object(j, path, {"source_dim", "target_dim", "l3", "l4hat", "l4tilde", "l5"});
  std::size_t d = dim_field(j, path, "source_dim"), m = dim_field(j, path, "target_dim");
  if (d_expected) expect_dim(d, *d_expected, field(path, "source_dim"));
  if (m_expected) expect_dim(m, *m_expected, field(path, "target_dim"));
  auto spaces = quadruple_spaces(d, m);
  return {cochain_of(j.at("l3"), field(path, "l3"), spaces[0]),
          cochain_of(j.at("l4hat"), field(path, "l4hat"), spaces[1]),
          cochain_of(j.at("l4tilde"), field(path, "l4tilde"), spaces[2]),
          cochain_of(j.at("l5"), field(path, "l5"), spaces[3])};
}

// ---- 2-term algebras

TwoTermAlgebra twoterm_of(const Json& j, const std::string& path) {
  object(j, path, {"v0_dim", "v1_dim", "d", "b00", "b01", "t000", "tD", "tTheta", "corr"});
  TwoTermData data;
  const std::size_t n = dim_field(j, path, "v0_dim"), m = dim_field(j, path, "v1_dim");
  data.v0_dim = n;
  data.v1_dim = m;
  data.d = matrix_of(j.at("d"), field(path, "d"), n, m);
  data.b00 = tensor_of(j.at("b00"), field(path, "b00"), {n, n, n});
  data.b01 = tensor_of(j.at("b01"), field(path, "b01"), {n, m, m});
  data.t000 = tensor_of(j.at("t000"), field(path, "t000"), {n, n, n, n});
  data.tD = tensor_of(j.at("tD"), field(path, "tD"), {n, n, m, m});
  data.tTheta = tensor_of(j.at("tTheta"), field(path, "tTheta"), {m, n, n, m});
  data.corr = quadruple_of(j.at("corr"), field(path, "corr"), n, m);
  return guarded(path, [&] { return TwoTermAlgebra::unchecked(std::move(data)); });
}

Json twoterm_json(const TwoTermAlgebra& t) {
  const TwoTermData& d = t.data();
  return {{"v0_dim", d.v0_dim}, {"v1_dim", d.v1_dim}, {"d", matrix_json(d.d)},
          {"b00", tensor_json(d.b00)}, {"b01", tensor_json(d.b01)}, {"t000", tensor_json(d.t000)},
          {"tD", tensor_json(d.tD)}, {"tTheta", tensor_json(d.tTheta)}, {"corr", quadruple_json(d.corr)}};
}

HomomorphismDocument homomorphism_of(const Json& j, const std::string& path) {
  object(j, path, {"source", "target", "phi0", "phi1", "phi2", "phi3"});
  HomomorphismDocument h;
  h.source = twoterm_of(j.at("source"), field(path, "source"));
  h.target = twoterm_of(j.at("target"), field(path, "target"));
  const std::size_t n = h.source.v0_dim(), m = h.source.v1_dim(), n2 = h.target.v0_dim(), m2 = h.target.v1_dim();
  h.map.phi0 = matrix_of(j.at("phi0"), field(path, "phi0"), n2, n);
  h.map.phi1 = matrix_of(j.at("phi1"), field(path, "phi1"), m2, m);
  h.map.phi2 = cochain_of(j.at("phi2"), field(path, "phi2"), CochainSpace(SkewSignature(2, {{0, 1}}), n, m2));
  h.map.phi3 = cochain_of(j.at("phi3"), field(path, "phi3"), CochainSpace(SkewSignature(3, {{0, 1}}), n, m2));
  return h;
}

// ---- crossed modules

CrossedModuleLYA crossed_of(const Json& j, const std::string& path) {
  object(j, path, {"t", "v", "action", "boundary"});
  CrossedModuleLYA c;
  c.t = lya_of(j.at("t"), field(path, "t"));
  c.v = lya_of(j.at("v"), field(path, "v"));
  c.rep = rep_of(j.at("action"), field(path, "action"), c.t.dim(), c.v.dim(), false);
  c.boundary = matrix_of(j.at("boundary"), field(path, "boundary"), c.t.dim(), c.v.dim());
  return c;
}

Json crossed_json(const CrossedModuleLYA& c) {
  return {{"t", lya_json(c.t)}, {"v", lya_json(c.v)}, {"action", rep_json(c.rep)},
          {"boundary", matrix_json(c.boundary)}};
}

LeibnizCrossedModule leibniz_crossed_of(const Json& j, const std::string& path) {
  object(j, path, {"v", "l", "left", "right", "phi"});
  LeibnizCrossedModule lc;
  lc.v = guarded(field(path, "v"), [&] { return leibniz_of(j.at("v"), field(path, "v")); });
  lc.l = guarded(field(path, "l"), [&] { return leibniz_of(j.at("l"), field(path, "l")); });
  const std::size_t n = lc.l.dim(), m = lc.v.dim();
  lc.left = tensor_of(j.at("left"), field(path, "left"), {n, m, m});
  lc.right = tensor_of(j.at("right"), field(path, "right"), {m, n, m});
  lc.phi = matrix_of(j.at("phi"), field(path, "phi"), n, m);
  return lc;
}

ReductiveCrossedModule reductive_crossed_of(const Json& j, const std::string& path) {
  object(j, path, {"v", "g", "action", "phi", "v1", "v2", "h", "m"});
  ReductiveCrossedModule rc;
  LieCrossedModule& c = rc.lie;
  c.v = lie_of(j.at("v"), field(path, "v"), false);
  c.g = lie_of(j.at("g"), field(path, "g"), false);
  const std::size_t n = c.g.dim(), m = c.v.dim();
  c.action = tensor_of(j.at("action"), field(path, "action"), {n, m, m});
  c.phi = matrix_of(j.at("phi"), field(path, "phi"), n, m);
  rc.v1 = subspace_of(j.at("v1"), field(path, "v1"), m);
  rc.v2 = subspace_of(j.at("v2"), field(path, "v2"), m);
  rc.h = subspace_of(j.at("h"), field(path, "h"), n);
  rc.m = subspace_of(j.at("m"), field(path, "m"), n);
  return rc;
}

CrossedExtension extension_of(const Json& j, const std::string& path) {
  object(j, path, {"crossed", "i", "pi", "t", "s", "q"});
  CrossedExtension e;
  e.c = crossed_of(j.at("crossed"), field(path, "crossed"));
  e.t = lya_of(j.at("t"), field(path, "t"));
  const std::size_t sd = e.c.t.dim(), vd = e.c.v.dim(), td = e.t.dim();
  e.i = matrix_of(j.at("i"), field(path, "i"), vd, std::nullopt);
  e.pi = matrix_of(j.at("pi"), field(path, "pi"), td, sd);
  e.s = matrix_of(j.at("s"), field(path, "s"), sd, td);
  e.q = matrix_of(j.at("q"), field(path, "q"), vd, sd);
  return e;
}

Payload payload_of(const std::string& kind, const Json& j, const std::string& path) {
  if (kind == "lya") return lya_of(j, path);
  if (kind == "lie") {
    LieDocument doc;
    doc.lie = lie_of(j, path, true, &doc);
    return doc;
  }
  if (kind == "leibniz") return guarded(path, [&] { return leibniz_of(j, path); });
  if (kind == "rep") {
    RepDocument doc;
    doc.rep = rep_of(j, path, std::nullopt, std::nullopt, true, &doc);
    return doc;
  }
  if (kind == "cochain") return cochain_of(j, path, std::nullopt);
  if (kind == "quadruple") return quadruple_of(j, path, std::nullopt, std::nullopt);
  if (kind == "twoterm") return twoterm_of(j, path);
  if (kind == "homomorphism") return homomorphism_of(j, path);
  if (kind == "crossed") return crossed_of(j, path);
  if (kind == "leibniz-crossed") return leibniz_crossed_of(j, path);
  if (kind == "reductive-crossed") return reductive_crossed_of(j, path);
  if (kind == "extension") return extension_of(j, path);
  std::string known;
  for (const char* k : kKinds) known += std::string(known.empty() ? "" : ", ") + k;
  throw SchemaError("$.kind", "unknown kind \"" + kind + "\" (expected one of " + known + ")");
}

struct PayloadJson {
  Json operator()(const LYAlgebra& a) const { return lya_json(a); }
  Json operator()(const LieDocument& d) const {
    Json j = lie_json(d.lie);
    if (d.decomposition)
      j["decomposition"] = {{"h", subspace_json(d.decomposition->first)}, {"m", subspace_json(d.decomposition->second)}};
    return j;
  }
  Json operator()(const LeibnizAlgebra& l) const { return leibniz_json(l); }
  Json operator()(const RepDocument& d) const {
    Json j = rep_json(d.rep);
    if (d.target) j["target"] = lya_json(*d.target);
    return j;
  }
  Json operator()(const Cochain& c) const { return cochain_json(c); }
  Json operator()(const CochainQuadruple& q) const { return quadruple_json(q); }
  Json operator()(const TwoTermAlgebra& t) const { return twoterm_json(t); }
  Json operator()(const HomomorphismDocument& h) const {
    return {{"source", twoterm_json(h.source)}, {"target", twoterm_json(h.target)},
            {"phi0", matrix_json(h.map.phi0)},  {"phi1", matrix_json(h.map.phi1)},
            {"phi2", cochain_json(h.map.phi2)}, {"phi3", cochain_json(h.map.phi3)}};
  }
  Json operator()(const CrossedModuleLYA& c) const { return crossed_json(c); }
  Json operator()(const LeibnizCrossedModule& lc) const {
    return {{"v", leibniz_json(lc.v)}, {"l", leibniz_json(lc.l)}, {"left", tensor_json(lc.left)},
            {"right", tensor_json(lc.right)}, {"phi", matrix_json(lc.phi)}};
  }
  Json operator()(const ReductiveCrossedModule& rc) const {
    return {{"v", lie_json(rc.lie.v)},          {"g", lie_json(rc.lie.g)},   {"action", tensor_json(rc.lie.action)},
            {"phi", matrix_json(rc.lie.phi)},    {"v1", subspace_json(rc.v1)}, {"v2", subspace_json(rc.v2)},
            {"h", subspace_json(rc.h)},          {"m", subspace_json(rc.m)}};
  }
  Json operator()(const CrossedExtension& e) const {
    return {{"crossed", crossed_json(e.c)}, {"i", matrix_json(e.i)}, {"pi", matrix_json(e.pi)},
            {"t", lya_json(e.t)},           {"s", matrix_json(e.s)}, {"q", matrix_json(e.q)}};
  }
};

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

Json subspace_json(const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.basis) out.push_back(vector_json(v));
  return out;
}

Json cochain_json(const Cochain& c) {
  const CochainSpace& sp = c.space();
  Json coeffs = Json::array();
  for (std::size_t t = 0; t < sp.tuple_count(); ++t) {
    auto args = sp.tuple(t);
    for (std::size_t s = 0; s < sp.target_dim(); ++s) {
      const Rational& v = c.coeffs()[t * sp.target_dim() + s];
      if (sgn(v) == 0) continue;
      auto ix = args;
      ix.push_back(s);
      coeffs.push_back(Json::array({ix, rational_json(v)}));
    }
  }
  return {{"degree", sp.arity()},
          {"signature", signature_json(sp.signature())},
          {"source_dim", sp.source_dim()},
          {"target_dim", sp.target_dim()},
          {"coefficients", coeffs}};
}

Json to_json(const Document& doc) {
  return {{"kind", doc.kind()}, {"version", kSchemaVersion}, {"payload", std::visit(PayloadJson{}, doc.payload)}};
}

Document from_json(const Json& j) {
  object(j, "$", {"kind", "version", "payload"});
  if (!j.at("version").is_string()) throw SchemaError("$.version", "expected a version string");
  if (j.at("version").get<std::string>() != kSchemaVersion)
    throw SchemaError("$.version", "unsupported schema version \"" + j.at("version").get<std::string>() +
                                       "\" (supported: \"" + kSchemaVersion + "\")");
  if (!j.at("kind").is_string()) throw SchemaError("$.kind", "expected a string");
  return {payload_of(j.at("kind").get<std::string>(), j.at("payload"), "$.payload")};
}

namespace {

bool has_object(const Json& j) {
  if (j.is_object()) return true;
  if (j.is_array())
    for (const auto& x : j)
      if (has_object(x)) return true;
  return false;
}

// Objects one key per line; arrays free of objects stay on one line while short.
void pretty(const Json& j, std::string& out, std::size_t indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out += pad + Json(it.key()).dump() + ": ";
      pretty(it.value(), out, indent + 2);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
    return;
  }
  if (j.is_array() && !j.empty()) {
    std::string flat = j.dump();
    if (!has_object(j) && flat.size() + indent <= 100) {
      out += flat;
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      pretty(j[k], out, indent + 2);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
    return;
  }
  out += j.dump();
}

}  // namespace

std::string pretty_json(const Json& j) {
  std::string out;
  pretty(j, out, 0);
  return out + "\n";
}

std::string render(const Document& doc) { return pretty_json(to_json(doc)); }

Document parse(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", std::string("not valid JSON: ") + e.what());
  }
  return from_json(j);
}

Document load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.path(), std::string(e.what()).substr(e.path().size() + 2));
  }
}

void save(const std::string& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << render(doc);
}

}  // namespace lietriple::io
