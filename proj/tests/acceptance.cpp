// One line per criterion: "criterion N: PASS|FAIL (detail)". Exit status 0 iff every selected check passes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lietriple/cohomology.hpp"
#include "lietriple/crossed.hpp"
#include "lietriple/families.hpp"
#include "lietriple/twoterm.hpp"
#include "oracle.hpp"

using namespace lietriple;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Named {
  std::string name;
  LYAlgebra a;
};

std::vector<Named> fixture_algebras() {
  return {{"ABELIAN2", LYAlgebra(2)},
          {"A2", lie_to_lya(affine2())},
          {"OMNI1", omni_lie(1)},
          {"SO3", lie_to_lya(so3())},
          {"SO3RED", reductive_to_lya(so3_reductive())}};
}

std::string triple(const CohomologyResult& h) {
  return "(" + std::to_string(h.dim_cocycles) + "," + std::to_string(h.dim_coboundaries) + "," +
         std::to_string(h.dim_H) + ")";
}

// Collects the first failure; later ones only bump the count.
class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_++ == 0) first_ = what;
  }
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok) fail(what);
  }
  std::size_t checked() const { return checked_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s), first: " + first_};
  }

 private:
  std::size_t checked_ = 0, failures_ = 0;
  std::string first_;
};

std::string sample(const std::string& what, std::size_t k) { return what + " #" + std::to_string(k); }

// Randomized valid algebras of dims 2-4, each confirmed by verify_ly.
std::vector<LYAlgebra> random_algebras(Rng& rng, std::size_t count, Tally& t) {
  std::vector<LYAlgebra> out;
  for (std::size_t k = 0; k < count; ++k) {
    LYAlgebra a = random_lya(rng, 2, 4);
    t.expect(verify_ly(a).passed(), sample("random algebra invalid", k));
    out.push_back(std::move(a));
  }
  return out;
}

Outcome criterion1(Rng& rng) {
  Tally t;
  for (const auto& [name, a] : fixture_algebras()) {
    Representation r = adjoint_rep(a);
    t.expect((delta3(a, r).matrix * delta2(a, r).matrix).is_zero(), name + ": delta3*delta2 nonzero");
  }
  std::size_t n = 0;
  for (const auto& a : random_algebras(rng, 24, t)) {
    Representation r = adjoint_rep(a);
    t.expect((delta3(a, r).matrix * delta2(a, r).matrix).is_zero(), sample("random pair", n) + " (dim " +
                                                                        std::to_string(a.dim()) + ")");
    ++n;
  }
  return t.outcome("delta3*delta2 exactly zero on 5 fixtures and 24 random pairs, dims 2-4");
}

// Inclusion is tested by applying delta_2 to a basis of image(delta_1); below dim 4 the
// kernel is also computed and compared as a subspace.
Outcome criterion2(Rng& rng) {
  Tally t;
  std::size_t literal = 0;
  auto check = [&](const LYAlgebra& a, const std::string& what) {
    Representation r = adjoint_rep(a);
    OperatorMatrix y1 = yamaguti_delta(1, a, r), y2 = yamaguti_delta(2, a, r);
    Subspace im = image_basis(y1.matrix);
    bool inside = true;
    for (const auto& v : im.basis) inside = inside && is_zero(y2.matrix.apply(v));
    t.expect(inside, what + ": delta_2 does not vanish on image(delta_1)");
    if (a.dim() < 4) {
      t.expect(is_contained(im, kernel_basis(y2.matrix)), what + ": image(delta_1) not inside kernel(delta_2)");
      ++literal;
    }
  };
  for (const auto& [name, a] : fixture_algebras()) check(a, name);
  std::size_t n = 0;
  for (const auto& a : random_algebras(rng, 24, t)) check(a, sample("random pair", n++));
  return t.outcome("image(delta_1) inside kernel(delta_2) on 5 fixtures and 24 random pairs (" +
                   std::to_string(literal) + " also against an explicit kernel basis)");
}

Outcome criterion3(Rng& rng) {
  Tally t;
  auto check = [&](const LYAlgebra& a, const std::string& what) {
    Representation r = adjoint_rep(a);
    AxiomReport rep = verify_rep(a, r);
    t.expect(rep.passed(), what + ": adjoint fails " + failure_list(rep));
    t.expect(check_d_skew(r).passed(), what + ": D not skew");
  };
  for (const auto& [name, a] : fixture_algebras()) check(a, name);
  std::size_t n = 0;
  for (const auto& a : random_algebras(rng, 40, t)) check(a, sample("random algebra", n++));
  return t.outcome("adjoint passes R31-R62 and D-skew on 5 fixtures and 40 random algebras");
}

Outcome criterion4(Rng& rng) {
  Tally t;
  auto ly = [&](const LYAlgebra& a, const std::string& what) {
    AxiomReport r = verify_ly(a);
    t.expect(r.passed(), what + " fails " + failure_list(r));
  };
  auto fundamental = [&](const LYAlgebra& a, const std::string& what) {
    t.expect(verify_leibniz(fundamental_leibniz(a)).passed(), what + ": fundamental Leibniz algebra not Leibniz");
    t.expect(check_fundamental_action(a).passed(), what + ": ad is not a homomorphism");
  };
  ly(leibniz_to_lya(leib2()), "LEIB2");
  ly(leibniz_to_lya(lie_as_leibniz(affine2())), "A2 as Leibniz");
  ly(reductive_to_lya(so3_reductive()), "SO3RED");
  for (std::size_t k = 0; k < 24; ++k) {
    LeibnizAlgebra l = random_leibniz(rng, 2, 4);
    t.expect(verify_leibniz(l).passed(), sample("random Leibniz input invalid", k));
    ly(leibniz_to_lya(l), sample("leibniz_to_lya of random input", k));
  }
  for (std::size_t k = 0; k < 24; ++k) {
    ReductiveDecomposition d = random_reductive(rng);
    t.expect(verify_reductive(d).passed(), sample("random reductive input invalid", k));
    ly(reductive_to_lya(d), sample("reductive_to_lya of random input", k));
  }
  for (const auto& [name, a] : fixture_algebras()) fundamental(a, name);
  std::size_t n = 0;
  for (const auto& a : random_algebras(rng, 20, t)) fundamental(a, sample("random algebra", n++));
  return t.outcome("LY1-LY6 on 3 fixtures, 24 random Leibniz and 24 random reductive inputs; "
                   "fundamental Leibniz identities on 25 algebras");
}

Outcome criterion5(Rng& rng) {
  Tally t;
  std::size_t valid = 0, broken = 0;
  for (std::size_t k = 0; k < 40; ++k) {
    LYAlgebra a = random_lya(rng, 2, 3);
    Representation r = k % 3 == 2 ? zero_rep(a.dim(), 1 + rng() % 2) : adjoint_rep(a);
    CohomologyResult h = h3445_dims(a, r);
    Vector v(total_dim(quadruple_spaces(a.dim(), r.module_dim())));
    for (const auto& z : h.cocycle_basis.basis) axpy(v, random_rational(rng), z);
    std::size_t mode = k % 5;  // 0,1: valid; 2: broken quadruple; 3: broken rep; 4: broken algebra
    if (mode == 2) v[rng() % v.size()] += 1 + rng() % 3;
    if (mode == 3) r.rho(rng() % a.dim())(0, 0) += 1;
    if (mode == 4) {
      Tensor tern = a.ternary();
      std::size_t i = rng() % a.dim(), j = (i + 1) % a.dim(), kk = rng() % a.dim(), l = rng() % a.dim();
      tern(i, j, kk, l) += 1;
      tern(j, i, kk, l) -= 1;
      a = LYAlgebra::unchecked(a.binary(), tern);
    }
    CochainQuadruple q = CochainQuadruple::from_vector(a.dim(), r.module_dim(), v);
    bool expected = verify_ly(a).passed() && verify_rep(a, r).passed() && is_cocycle_3445(q, a, r).cocycle;
    TwoTermAlgebra tt = skeletal_from_data_unchecked(a, r, q);
    bool got = verify_two_term(tt).passed();
    t.expect(got == expected, sample("skeletal sample", k) + ": verify_two_term " + (got ? "passes" : "fails") +
                                  " but the data " + (expected ? "are valid" : "are not"));
    (expected ? valid : broken)++;
    auto [a2, r2, q2] = data_from_skeletal(tt);
    t.expect(a2 == a && r2 == r && q2 == q, sample("data_from_skeletal round trip", k));
    t.expect(skeletal_from_data_unchecked(a2, r2, q2) == tt, sample("skeletal_from_data round trip", k));
    if (expected) t.expect(skeletal_from_data(a2, r2, q2) == tt, sample("checked skeletal round trip", k));
  }
  t.expect(valid > 0 && broken > 0, "samples did not cover both outcomes");
  return t.outcome("round trips exact and verify_two_term <=> (LY and rep and cocycle) on 40 samples (" +
                   std::to_string(valid) + " valid, " + std::to_string(broken) + " broken)");
}

CrossedModuleLYA invalidate(Rng& rng, CrossedModuleLYA c) {
  switch (rng() % 3) {
    case 0:
      if (c.boundary.rows() && c.boundary.cols()) {
        c.boundary(rng() % c.boundary.rows(), rng() % c.boundary.cols()) += 1;
        break;
      }
      [[fallthrough]];
    case 1:
      c.rep.rho(rng() % c.t.dim())(rng() % c.v.dim(), rng() % c.v.dim()) += 1;
      break;
    default: {
      std::size_t i = rng() % c.t.dim(), j = rng() % c.t.dim();
      c.rep.theta(i, j)(rng() % c.v.dim(), rng() % c.v.dim()) += 1;
    }
  }
  return c;
}

Outcome criterion6(Rng& rng) {
  Tally t;
  std::size_t valid = 0, broken = 0;
  for (std::size_t k = 0; k < 48; ++k) {
    CrossedModuleLYA c = random_crossed(rng);
    bool keep = k % 2 == 0;
    if (!keep) c = invalidate(rng, c);
    bool crossed_ok = verify_crossed_module(c).passed();
    TwoTermAlgebra s = strict_from_crossed_unchecked(c);
    bool strict_ok = verify_two_term(s).passed();
    t.expect(crossed_ok == strict_ok, sample("strict sample", k) + ": crossed module " + (crossed_ok ? "passes" : "fails") +
                                          ", strict 2-term algebra " + (strict_ok ? "passes" : "fails"));
    if (keep) t.expect(crossed_ok, sample("random crossed module invalid", k));
    (crossed_ok ? valid : broken)++;
    if (crossed_ok) {
      t.expect(crossed_from_strict(strict_from_crossed(c)) == c, sample("crossed round trip", k));
      t.expect(strict_from_crossed(crossed_from_strict(s)) == s, sample("strict round trip", k));
    }
    t.expect(strict_from_crossed_unchecked(crossed_from_strict_unchecked(s)) == s,
             sample("unchecked strict round trip", k));
  }
  t.expect(valid > 0 && broken > 0, "samples did not cover both outcomes");
  return t.outcome("both round trips exact and verify_two_term <=> verify_crossed_module on 48 samples (" +
                   std::to_string(valid) + " passing, " + std::to_string(broken) + " failing after perturbation)");
}

Outcome criterion7(Rng& rng) {
  Tally t;
  auto check = [&](const CrossedModuleLYA& c, const std::string& what) {
    AxiomReport r = verify_crossed_module(c);
    t.expect(r.passed(), what + ": " + failure_list(r));
  };
  check(crossed_from_leibniz(identity_leibniz_crossed(leib2())), "LEIB2 identity");
  check(crossed_from_reductive(identity_reductive_crossed(so3_reductive())), "SO3RED identity");
  for (std::size_t k = 0; k < 20; ++k) {
    LeibnizCrossedModule lc = random_leibniz_crossed(rng);
    t.expect(verify_leibniz_crossed(lc).passed(), sample("random Leibniz crossed module invalid", k));
    check(crossed_from_leibniz(lc), sample("crossed_from_leibniz", k));
  }
  for (std::size_t k = 0; k < 20; ++k) {
    ReductiveCrossedModule rc = random_reductive_crossed(rng);
    t.expect(verify_reductive_crossed(rc).passed(), sample("random reductive crossed module invalid", k));
    check(crossed_from_reductive(rc), sample("crossed_from_reductive", k));
  }
  return t.outcome("verify_crossed_module passes on LEIB2, SO3RED and 20+20 random inputs");
}

Outcome criterion8(Rng& rng) {
  Tally t;
  std::size_t nonzero = 0, shifts = 0, pairs = 0;
  auto run = [&](const CrossedExtension& e, const std::string& what) {
    AxiomReport ext = verify_extension(e);
    t.expect(ext.passed(), what + ": extension invalid, " + failure_list(ext));
    if (!ext.passed()) return;
    CochainQuadruple q = extract_theta(e);
    Representation r = induced_representation(e);
    t.expect(is_cocycle_3445(q, e.t, r).cocycle, what + ": extracted quadruple is not a cocycle");
    if (!q.is_zero()) ++nonzero;
    for (std::size_t k = 0; k < 12; ++k) {
      Matrix h = random_matrix(rng, e.c.v.dim(), e.t.dim(), 2);
      Matrix s2 = e.s + e.c.boundary * h;
      t.expect(section_independence(e, s2, e.q), what + sample(": s + dh shift", k));
      ++shifts;
    }
    for (std::size_t k = 0; k < 4; ++k) {
      Matrix s2 = e.s + e.c.boundary * random_matrix(rng, e.c.v.dim(), e.t.dim(), 2);
      Matrix q2 = e.q + e.i * random_matrix(rng, e.m_dim(), e.c.t.dim(), 2);
      t.expect(check_sections(e, s2, q2).passed(), what + sample(": alternative sections invalid", k));
      t.expect(section_independence(e, s2, q2), what + sample(": independent section pair", k));
      ++pairs;
    }
  };
  LYAlgebra a2 = lie_to_lya(affine2());
  run(split_extension(a2, adjoint_rep(a2)), "split A2");
  run(heisenberg_extension(), "Heisenberg");
  for (std::size_t k = 0; k < 6; ++k) run(random_extension(rng), sample("random extension", k));
  t.expect(nonzero > 0, "no extension produced a nonzero quadruple");
  return t.outcome("8 extensions: extracted quadruples are cocycles (" + std::to_string(nonzero) +
                   " nonzero); section independence on " + std::to_string(shifts) + " s+dh shifts and " +
                   std::to_string(pairs) + " independent section pairs");
}

Outcome check9a(Rng&) {
  CohomologyResult h = h3445_dims(LYAlgebra(2), zero_rep(2, 1));
  bool ok = h.dim_cocycles == 6 && h.dim_coboundaries == 0 && h.dim_H == 6;
  return {ok, "h3445_dims(ABELIAN2, zero rep on k) = " + triple(h) + ", expected (6,0,6)"};
}

Outcome check9b(Rng&) {
  CohomologyResult h = yamaguti_h_dims(2, LYAlgebra(2), zero_rep(2, 1));
  bool ok = h.dim_cocycles == 3 && h.dim_coboundaries == 0 && h.dim_H == 3;
  return {ok, "yamaguti_h_dims(2, ABELIAN2, zero rep on k) = " + triple(h) + ", expected (3,0,3)"};
}

Outcome check9c(Rng&) {
  LYAlgebra a = lie_to_lya(affine2());
  Representation r = adjoint_rep(a);
  CohomologyResult lib = h3445_dims(a, r);
  CohomologyResult pw = cohomology_from_operators(SparseMatrix::from_dense(oracle::pointwise_delta2(a, r)),
                                                  SparseMatrix::from_dense(oracle::pointwise_delta3(a, r)));
  bool ok = lib.dim_cocycles == pw.dim_cocycles && lib.dim_coboundaries == pw.dim_coboundaries &&
            lib.dim_H == pw.dim_H && lib.cocycle_basis == pw.cocycle_basis &&
            lib.coboundary_basis == pw.coboundary_basis;
  return {ok, "h3445_dims(A2, adjoint): matrix path " + triple(lib) + ", pointwise path " + triple(pw)};
}

Outcome criterion10(Rng&) {
  Tally t;
  for (const auto& [name, a] : {Named{"A2", lie_to_lya(affine2())}, Named{"OMNI1", omni_lie(1)}}) {
    Representation r = adjoint_rep(a);
    for (const auto& [label, msg] : std::vector<std::pair<std::string, std::string>>{
             {"yamaguti_delta(1)", oracle::check_yamaguti(1, a, r)},
             {"delta2", oracle::check_delta2(a, r)},
             {"delta3", oracle::check_delta3(a, r)}})
      t.expect(msg.empty(), name + " " + label + ": " + msg);
  }
  return t.outcome("yamaguti_delta(1), delta2, delta3 equal the pointwise formulas column by column on A2 and OMNI1");
}

using Check = std::function<Outcome(Rng&)>;

const std::map<std::string, Check>& subchecks() {
  static const std::map<std::string, Check> m{{"9a", check9a}, {"9b", check9b}, {"9c", check9c}};
  return m;
}

Outcome criterion9(Rng& rng) {
  Outcome all{true, ""};
  for (const auto& [id, fn] : subchecks()) {
    Outcome o = fn(rng);
    all.pass = all.pass && o.pass;
    all.detail += (all.detail.empty() ? "" : "; ") + id + " " + (o.pass ? "pass" : "FAIL") + ": " + o.detail;
  }
  return all;
}

const std::vector<Check>& criteria() {
  static const std::vector<Check> v{criterion1, criterion2, criterion3, criterion4, criterion5,
                                    criterion6, criterion7, criterion8, criterion9, criterion10};
  return v;
}

bool report(const std::string& id, const Check& fn, std::uint64_t seed) {
  Rng rng(seed);
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn(rng);
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", secs);
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ") [" << buf << " s]"
            << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::optional<int> only;
  std::optional<std::string> sub;
  std::uint64_t seed = 20240611;
  app.add_option("--criterion", only, "run one criterion")->check(CLI::Range(1, 10));
  app.add_option("--check", sub, "run one sub-check")->check(CLI::IsMember({"9a", "9b", "9c"}));
  app.add_option("--seed", seed, "random seed");
  CLI11_PARSE(app, argc, argv);

  bool ok = true;
  if (sub) return report(*sub, subchecks().at(*sub), seed) ? 0 : 1;
  for (int n = 1; n <= 10; ++n)
    if (!only || *only == n) ok = report(std::to_string(n), criteria()[n - 1], seed + n) && ok;
  return ok ? 0 : 1;
}
