#include "lietriple/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include "lietriple/cohomology.hpp"
#include "lietriple/crossed.hpp"
#include "lietriple/serialize.hpp"

namespace lietriple::cli {

namespace {

using io::Document;
using io::Json;

struct Flags {
  bool json = false;
  bool text = false;
  bool bases = false;
  bool verbose = false;
  std::string e1 = "graded-cyclic";
  CheckOptions check() const { return CheckOptions{verbose}; }
};

struct Outcome {
  std::string command;
  AxiomReport checks;
  Json results = Json::object();
  std::optional<Document> document;
  std::optional<std::string> output;
  bool passed() const { return checks.passed(); }
};

Json entry_json(const AxiomEntry& e) {
  Json ws = Json::array();
  for (const auto& w : e.witnesses) ws.push_back({{"tuple", w.tuple}, {"defect", io::vector_json(w.defect)}});
  return {{"label", e.label}, {"passed", e.passed}, {"failures", e.failures}, {"witnesses", ws}};
}

Json outcome_json(const Outcome& o) {
  Json checks = Json::array();
  for (const auto& e : o.checks.entries) checks.push_back(entry_json(e));
  Json j = {{"command", o.command}, {"passed", o.passed()}, {"checks", checks}, {"results", o.results}};
  if (o.output) j["output"] = *o.output;
  else if (o.document) j["document"] = io::to_json(*o.document);
  return j;
}

std::string vector_text(const Vector& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + to_string(v[k]);
  return s + "]";
}

void text_results(const Json& j, const std::string& indent, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_object()) {
      out << indent << it.key() << ":\n";
      text_results(it.value(), indent + "  ", out);
    } else {
      out << indent << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
          << "\n";
    }
  }
}

void print_text(const Outcome& o, std::ostream& out) {
  out << "lietriple " << o.command << "\n";
  for (const auto& e : o.checks.entries) {
    out << (e.passed ? "  pass  " : "  FAIL  ") << e.label;
    if (!e.passed) {
      out << ": " << e.failures << (e.failures == 1 ? " failure" : " failures");
      for (const auto& w : e.witnesses) out << "\n          at " << format_tuple(w.tuple) << " defect " << vector_text(w.defect);
    }
    out << "\n";
  }
  text_results(o.results, "  ", out);
  if (o.output) out << "  output: " << *o.output << "\n";
  out << "result: " << (o.passed() ? "PASS" : "FAIL") << "\n";
  if (o.document && !o.output) out << io::render(*o.document);
}

template <class T>
T load_as(const std::string& path) {
  return io::expect<T>(io::load(path), path);
}

void require_count(const std::string& what, const std::vector<std::string>& files, std::size_t n) {
  if (files.size() != n)
    throw InputError(what + " expects " + std::to_string(n) + (n == 1 ? " input file" : " input files") + ", got " +
                     std::to_string(files.size()));
}

void require_dims(const LYAlgebra& a, const Representation& r) {
  if (r.algebra_dim() != a.dim())
    throw InputError("dimension mismatch: algebra has dimension " + std::to_string(a.dim()) +
                     ", representation expects " + std::to_string(r.algebra_dim()));
}

E1Reading e1_reading(const Flags& f) {
  return f.e1 == "cyclic-lhs" ? E1Reading::cyclic_lhs : E1Reading::graded_cyclic;
}

void add_cocycle_entry(Outcome& o, const CocycleVerdict& v) {
  AxiomEntry& e = o.checks.open("cocycle");
  if (v.cocycle) return;
  e.passed = false;
  e.failures = 1;
  if (v.witness) {
    e.witnesses.push_back({v.witness->tuple, v.witness->defect});
    o.results["cocycle_defect_component"] = v.witness->component;
  }
}

void add_flag_entry(Outcome& o, const std::string& label, bool ok) {
  AxiomEntry& e = o.checks.open(label);
  e.passed = ok;
  e.failures = ok ? 0 : 1;
}

// ---- verify

Outcome cmd_verify(const std::string& kind, const std::vector<std::string>& files, const std::string& algebra_file,
                   const std::string& rep_file, const Flags& f) {
  Outcome o;
  require_count("verify", files, 1);
  const std::string& path = files[0];
  Document doc = io::load(path);
  if (doc.kind() != kind)
    throw io::SchemaError(path + ".kind", "expected \"" + kind + "\", got \"" + doc.kind() + "\"");
  const CheckOptions opt = f.check();
  auto need = [&](const std::string& file, const char* flag) {
    if (file.empty()) throw InputError("verify " + kind + " needs " + flag);
    return file;
  };
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, LYAlgebra>) {
          o.checks = verify_ly(p, opt);
        } else if constexpr (std::is_same_v<T, io::LieDocument>) {
          o.checks = verify_lie(p.lie, opt);
          if (p.decomposition)
            o.checks.append(verify_reductive({p.lie, p.decomposition->first, p.decomposition->second}, opt),
                            "reductive:");
        } else if constexpr (std::is_same_v<T, LeibnizAlgebra>) {
          o.checks = verify_leibniz(p, opt);
        } else if constexpr (std::is_same_v<T, io::RepDocument>) {
          LYAlgebra a = load_as<LYAlgebra>(need(algebra_file, "--algebra"));
          require_dims(a, p.rep);
          o.checks = verify_rep(a, p.rep, opt);
          o.checks.append(check_d_skew(p.rep, opt));
          if (p.target) o.checks.append(check_action(a, {p.rep, *p.target}, opt), "action:");
        } else if constexpr (std::is_same_v<T, Cochain>) {
          o.results["degree"] = p.space().arity();
          o.results["signature"] = to_string(p.space().signature());
          o.results["dim"] = p.space().dim();
        } else if constexpr (std::is_same_v<T, CochainQuadruple>) {
          LYAlgebra a = load_as<LYAlgebra>(need(algebra_file, "--algebra"));
          Representation r = load_as<io::RepDocument>(need(rep_file, "--rep")).rep;
          require_dims(a, r);
          if (p.l3.space().source_dim() != a.dim() || p.l3.space().target_dim() != r.module_dim())
            throw InputError("dimension mismatch: quadruple on (" + std::to_string(p.l3.space().source_dim()) + ", " +
                             std::to_string(p.l3.space().target_dim()) + "), algebra and module (" +
                             std::to_string(a.dim()) + ", " + std::to_string(r.module_dim()) + ")");
          o.checks.absorb("algebra", verify_ly(a, opt));
          o.checks.absorb("representation", verify_rep(a, r, opt));
          if (o.checks.passed()) add_cocycle_entry(o, is_cocycle_3445(p, a, r));
        } else if constexpr (std::is_same_v<T, TwoTermAlgebra>) {
          o.checks = verify_two_term(p, {opt, e1_reading(f)});
        } else if constexpr (std::is_same_v<T, io::HomomorphismDocument>) {
          o.checks = verify_homomorphism(p.source, p.target, p.map, opt);
        } else if constexpr (std::is_same_v<T, CrossedModuleLYA>) {
          o.checks = verify_crossed_module(p, opt);
        } else if constexpr (std::is_same_v<T, LeibnizCrossedModule>) {
          o.checks = verify_leibniz_crossed(p, opt);
        } else if constexpr (std::is_same_v<T, ReductiveCrossedModule>) {
          o.checks = verify_reductive_crossed(p, opt);
        } else if constexpr (std::is_same_v<T, CrossedExtension>) {
          o.checks = verify_extension(p, opt);
        }
      },
      doc.payload);
  return o;
}

// ---- cohomology

Json echelon_json(const Subspace& s) {
  if (s.dim() == 0) return Json::array();
  Echelon e = row_reduce(Matrix::from_rows(s.basis, s.ambient_dim));
  Json out = Json::array();
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) out.push_back(io::vector_json(e.reduced.row(r)));
  return out;
}

Outcome cmd_cohomology(const std::vector<std::string>& files, const std::string& group, const Flags& f) {
  Outcome o;
  require_count("cohomology", files, 2);
  LYAlgebra a = load_as<LYAlgebra>(files[0]);
  Representation r = load_as<io::RepDocument>(files[1]).rep;
  require_dims(a, r);
  std::optional<std::size_t> n;
  if (group.rfind("yamaguti:", 0) == 0) {
    std::string tail = group.substr(9);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos || std::stoul(tail) == 0)
      throw InputError("--group yamaguti:<n> needs a positive integer n, got \"" + tail + "\"");
    n = std::stoul(tail);
  } else if (group != "3445") {
    throw InputError("--group must be 3445 or yamaguti:<n>, got \"" + group + "\"");
  }
  o.checks.absorb("algebra", verify_ly(a, f.check()));
  o.checks.absorb("representation", verify_rep(a, r, f.check()));
  o.results["group"] = group;
  if (!o.checks.passed()) return o;
  CohomologyResult res = n ? yamaguti_h_dims(*n, a, r) : h3445_dims(a, r);
  o.results["dims"] = {{"Z", res.dim_cocycles}, {"B", res.dim_coboundaries}, {"H", res.dim_H}};
  if (f.bases)
    o.results["bases"] = {{"Z", echelon_json(res.cocycle_basis)}, {"B", echelon_json(res.coboundary_basis)}};
  return o;
}

// ---- construct

struct Recipe {
  std::size_t inputs;
  std::string usage;
  std::function<void(Outcome&, const std::vector<std::string>&, std::size_t, const Flags&)> run;
};

// Precondition reports collapse to one entry each; post-verification is listed in full.
void pre(Outcome& o, const std::string& label, const AxiomReport& r) { o.checks.absorb("pre:" + label, r); }
void post(Outcome& o, const AxiomReport& r) { o.checks.append(r, "post:"); }

const std::map<std::string, Recipe>& recipes() {
  static const std::map<std::string, Recipe> table = {
      {"from-lie",
       {1, "LIE", [](Outcome& o, const auto& in, std::size_t, const Flags& f) {
          auto g = load_as<io::LieDocument>(in[0]).lie;
          pre(o, "lie", verify_lie(g, f.check()));
          if (!o.passed()) return;
          LYAlgebra a = lie_to_lya(g);
          post(o, verify_ly(a, f.check()));
          o.document = Document{a};
        }}},
      {"from-leibniz",
       {1, "LEIBNIZ", [](Outcome& o, const auto& in, std::size_t, const Flags& f) {
          auto l = load_as<LeibnizAlgebra>(in[0]);
          pre(o, "leibniz", verify_leibniz(l, f.check()));
          if (!o.passed()) return;
          LYAlgebra a = leibniz_to_lya(l);
          post(o, verify_ly(a, f.check()));
          o.document = Document{a};
        }}},
      {"from-reductive",
       {1, "LIE-WITH-DECOMPOSITION", [](Outcome& o, const auto& in, std::size_t, const Flags& f) {
          auto doc = load_as<io::LieDocument>(in[0]);
          if (!doc.decomposition) throw io::SchemaError(in[0] + ": $.payload.decomposition", "missing required field");
          ReductiveDecomposition d{doc.lie, doc.decomposition->first, doc.decomposition->second};
          pre(o, "reductive", verify_reductive(d, f.check()));
          if (!o.passed()) return;
          LYAlgebra a = reductive_to_lya(d);
          post(o, verify_ly(a, f.check()));
          o.document = Document{a};
        }}},
      {"omni-lie",
       {0, "--n N", [](Outcome& o, const auto&, std::size_t n, const Flags& f) {
          if (n == 0) throw InputError("omni-lie needs --n with n >= 1");
          LYAlgebra a = omni_lie(n);
          post(o, verify_ly(a, f.check()));
          o.document = Document{a};
        }}},
      {"semidirect",
       {2, "LYA ACTION", [](Outcome& o, const auto& in, std::size_t, const Flags& f) {
          auto t = load_as<LYAlgebra>(in[0]);
          auto act = load_as<io::RepDocument>(in[1]);
          if (!act.target) throw io::SchemaError(in[1] + ": $.payload.target", "an action needs the algebra acted on");
          require_dims(t, act.rep);
          pre(o, "algebra", verify_ly(t, f.check()));
          pre(o, "action", check_action(t, {act.rep, *act.target}, f.check()));
          if (!o.passed()) return;
          LYAlgebra a = semidirect(t, {act.rep, *act.target});
          post(o, verify_ly(a, f.check()));
          o.document = Document{a};
        }}},
      {"fundamental-leibniz",
       {1, "LYA", [](Outcome& o, const auto& in, std::size_t, const Flags& f) {
          auto a = load_as<LYAlgebra>(in[0]);
          pre(o, "algebra", verify_ly(a, f.check()));
          if (!o.passed()) return;
          LeibnizAlgebra l = fundamental_leibniz(a);
          post(o, verify_leibniz(l, f.check()));
          post(o, check_fundamental_action(a, f.check()));
          o.document = Document{l};
        }}},
      {"adjoint-rep",
       {1, "LYA", [](Outcome& o, const auto& in, std::size_t, const Flags& f) {
          auto a = load_as<LYAlgebra>(in[0]);
          pre(o, "algebra", verify_ly(a, f.check()));
          if (!o.passed()) return;
          Representation r = adjoint_rep(a);
          post(o, verify_rep(a, r, f.check()));
          post(o, check_d_skew(r, f.check()));
          o.document = Document{io::RepDocument{r, std::nullopt}};
        }}},
      {"skeletal",
       {3, "LYA REP QUADRUPLE", [](Outcome& o, const auto& in, std::size_t, const Flags& f) {
          auto a = load_as<LYAlgebra>(in[0]);
          auto r = load_as<io::RepDocument>(in[1]).rep;
          auto q = load_as<CochainQuadruple>(in[2]);
          require_dims(a, r);
          if (q.l3.space().source_dim() != a.dim() || q.l3.space().target_dim() != r.module_dim())
            throw InputError("dimension mismatch between the quadruple and the algebra/module");
          pre(o, "algebra", verify_ly(a, f.check()));
          pre(o, "representation", verify_rep(a, r, f.check()));
          if (!o.passed()) return;
          CocycleVerdict v = is_cocycle_3445(q, a, r);
          AxiomEntry& e = o.checks.open("pre:cocycle");
          if (!v.cocycle) {
            e.passed = false;
            e.failures = 1;
            if (v.witness) e.witnesses.push_back({v.witness->tuple, v.witness->defect});
            return;
          }
          TwoTermAlgebra t = skeletal_from_data(a, r, q);
          post(o, verify_two_term(t, {f.check(), e1_reading(f)}));
          o.document = Document{t};
        }}},
      {"strict",
       {1, "CROSSED", [](Outcome& o, const auto& in, std::size_t, const Flags& f) {
          auto c = load_as<CrossedModuleLYA>(in[0]);
          pre(o, "crossed-module", verify_crossed_module(c, f.check()));
          if (!o.passed()) return;
          TwoTermAlgebra t = strict_from_crossed(c);
          post(o, verify_two_term(t, {f.check(), e1_reading(f)}));
          o.document = Document{t};
        }}},
      {"crossed-from-strict",
       {1, "TWOTERM", [](Outcome& o, const auto& in, std::size_t, const Flags& f) {
          auto t = load_as<TwoTermAlgebra>(in[0]);
          add_flag_entry(o, "pre:strict", t.is_strict());
          pre(o, "two-term", verify_two_term(t, {f.check(), e1_reading(f)}));
          if (!o.passed()) return;
          CrossedModuleLYA c = crossed_from_strict(t);
          post(o, verify_crossed_module(c, f.check()));
          o.document = Document{c};
        }}},
      {"crossed-from-leibniz",
       {1, "LEIBNIZ-CROSSED", [](Outcome& o, const auto& in, std::size_t, const Flags& f) {
          auto lc = load_as<LeibnizCrossedModule>(in[0]);
          pre(o, "leibniz-crossed", verify_leibniz_crossed(lc, f.check()));
          if (!o.passed()) return;
          CrossedModuleLYA c = crossed_from_leibniz(lc);
          post(o, verify_crossed_module(c, f.check()));
          o.document = Document{c};
        }}},
      {"crossed-from-reductive",
       {1, "REDUCTIVE-CROSSED", [](Outcome& o, const auto& in, std::size_t, const Flags& f) {
          auto rc = load_as<ReductiveCrossedModule>(in[0]);
          pre(o, "reductive-crossed", verify_reductive_crossed(rc, f.check()));
          if (!o.passed()) return;
          CrossedModuleLYA c = crossed_from_reductive(rc);
          post(o, verify_crossed_module(c, f.check()));
          o.document = Document{c};
        }}},
  };
  return table;
}

Outcome cmd_construct(const std::string& recipe, const std::vector<std::string>& files, std::size_t n,
                      const std::string& output, const Flags& f) {
  const Recipe& r = recipes().at(recipe);
  require_count("construct " + recipe, files, r.inputs);
  Outcome o;
  r.run(o, files, n, f);
  if (o.document && !output.empty()) {
    io::save(output, *o.document);
    o.output = output;
  }
  return o;
}

// ---- extract-cocycle

Outcome cmd_extract(const std::vector<std::string>& files, const std::string& alt, const std::string& output,
                    const Flags& f) {
  require_count("extract-cocycle", files, 1);
  Outcome o;
  auto e = load_as<CrossedExtension>(files[0]);
  o.checks.append(verify_extension(e, f.check()), "extension:");
  std::optional<CrossedExtension> e2;
  if (!alt.empty()) {
    e2 = load_as<CrossedExtension>(alt);
    if (!(e2->c == e.c && e2->i == e.i && e2->pi == e.pi && e2->t == e.t))
      throw InputError(alt + ": alternative sections must come with the same extension data (only s and q may differ)");
    o.checks.append(check_sections(e, e2->s, e2->q, f.check()), "alt-sections:");
  }
  if (!o.passed()) return o;
  CochainQuadruple theta = extract_theta(e);
  add_cocycle_entry(o, is_cocycle_3445(theta, e.t, induced_representation(e)));
  o.results["zero"] = theta.is_zero();
  if (e2) add_flag_entry(o, "section-independence", section_independence(e, e2->s, e2->q));
  o.document = Document{theta};
  if (!output.empty()) {
    io::save(output, *o.document);
    o.output = output;
  }
  return o;
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks and constructions for Lie-Yamaguti algebras, their representations, cohomology, "
               "2-term algebras and crossed modules.",
               "lietriple"};
  app.set_version_flag("--version", "lietriple 0.1.0");
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  auto* json_flag = app.add_flag("--json", f.json, "JSON report");
  auto* text_flag = app.add_flag("--text", f.text, "text report (default)");
  json_flag->excludes(text_flag);
  app.add_flag("--bases", f.bases, "include echelon bases of Z and B (cohomology)");
  app.add_flag("--verbose", f.verbose, "list every failing tuple instead of the first");
  app.add_option("--e1", f.e1, "reading of the l3 homotopy condition with d(u) arguments")
      ->check(CLI::IsMember({"graded-cyclic", "cyclic-lhs"}));

  std::vector<std::string> kinds(std::begin(io::kKinds), std::end(io::kKinds));
  std::string kind, algebra_file, rep_file, group = "3445", recipe, output, alt;
  std::vector<std::string> files;
  std::size_t n = 0;

  auto* verify = app.add_subcommand("verify", "check the defining identities of a document");
  verify->add_option("kind", kind, "document kind")->required()->check(CLI::IsMember(kinds));
  verify->add_option("file", files, "document")->required();
  verify->add_option("--algebra", algebra_file, "LY algebra (rep, quadruple)");
  verify->add_option("--rep", rep_file, "representation (quadruple)");

  auto* cohom = app.add_subcommand("cohomology", "dimensions of Z, B and H");
  cohom->add_option("files", files, "LY algebra and representation")->required()->expected(2);
  cohom->add_option("--group", group, "3445 or yamaguti:<n>")->capture_default_str();

  std::vector<std::string> recipe_names;
  for (const auto& [k, v] : recipes()) recipe_names.push_back(k);
  auto* construct = app.add_subcommand("construct", "build a document from inputs and verify it");
  construct->add_option("recipe", recipe, "recipe")->required()->check(CLI::IsMember(recipe_names));
  construct->add_option("inputs", files, "input documents");
  construct->add_option("--n", n, "size parameter (omni-lie)");
  construct->add_option("-o,--output", output, "write the document here instead of into the report");

  auto* extract = app.add_subcommand("extract-cocycle", "the (3,4,4,5)-cocycle of a crossed-module extension");
  extract->add_option("file", files, "extension")->required()->expected(1);
  extract->add_option("--alt-sections", alt, "extension document differing only in s and q");
  extract->add_option("-o,--output", output, "write the quadruple here instead of into the report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const std::string command = join(args);
  auto fail = [&](int code, const std::string& kind_of, const std::string& msg) {
    err << "error: " << msg << "\n";
    if (f.json)
      out << io::pretty_json({{"command", command}, {"passed", false}, {"error", {{"kind", kind_of}, {"message", msg}}}});
    return code;
  };

  try {
    Outcome o;
    if (verify->parsed())
      o = cmd_verify(kind, files, algebra_file, rep_file, f);
    else if (cohom->parsed())
      o = cmd_cohomology(files, group, f);
    else if (construct->parsed())
      o = cmd_construct(recipe, files, n, output, f);
    else
      o = cmd_extract(files, alt, output, f);
    o.command = command;
    if (f.json)
      out << io::pretty_json(outcome_json(o));
    else
      print_text(o, out);
    return o.passed() ? kPass : kCheckFailed;
  } catch (const InputError& e) {
    return fail(kInputError, "input", e.what());
  } catch (const ResourceError& e) {
    return fail(kInputError, "resource", e.what());
  } catch (const InvalidStructure& e) {
    return fail(kCheckFailed, "invalid-structure", e.what());
  } catch (const std::exception& e) {
    return fail(kInternalError, "internal", e.what());
  }
}

}  // namespace lietriple::cli
