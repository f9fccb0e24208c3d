#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lietriple/cli.hpp"
#include "lietriple/cohomology.hpp"
#include "lietriple/crossed.hpp"
#include "lietriple/families.hpp"
#include "lietriple/serialize.hpp"
#include "lietriple/twoterm.hpp"

namespace py = pybind11;
using namespace lietriple;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

py::list fractions(const Vector& v) {
  py::list out;
  for (const auto& x : v) out.append(fraction(x));
  return out;
}

Rational rational(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) throw InputError("floats are not accepted; use int, str or Fraction");
  return parse_rational(py::str(h).cast<std::string>());
}

Vector vector(const py::iterable& xs) {
  Vector v;
  for (auto x : xs) v.push_back(rational(x));
  return v;
}

Vector sized(const py::iterable& xs, std::size_t n, const char* what) {
  Vector v = vector(xs);
  if (v.size() != n)
    throw InputError(std::string(what) + " has " + std::to_string(v.size()) + " entries, expected " +
                     std::to_string(n));
  return v;
}

py::list dense(const Matrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.append(fractions(m.row(r)));
  return rows;
}

Matrix matrix(const py::iterable& rows) {
  std::vector<Vector> rs;
  for (auto r : rows) rs.push_back(vector(py::reinterpret_borrow<py::iterable>(r)));
  std::size_t cols = rs.empty() ? 0 : rs.front().size();
  for (const auto& r : rs)
    if (r.size() != cols) throw InputError("ragged matrix rows");
  return Matrix::from_rows(rs, cols);
}

py::dict report(const AxiomReport& r) {
  py::dict out;
  out["passed"] = r.passed();
  py::list entries;
  for (const auto& e : r.entries) {
    py::dict d;
    d["label"] = e.label;
    d["passed"] = e.passed;
    d["failures"] = e.failures;
    py::list ws;
    for (const auto& w : e.witnesses) ws.append(py::make_tuple(py::cast(w.tuple), fractions(w.defect)));
    d["witnesses"] = ws;
    entries.append(d);
  }
  out["checks"] = entries;
  return out;
}

py::tuple dims(const CohomologyResult& h) { return py::make_tuple(h.dim_cocycles, h.dim_coboundaries, h.dim_H); }

py::object payload(const io::Document& doc) {
  return std::visit(
      [](const auto& p) -> py::object {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, io::LieDocument>) return py::cast(p.lie);
        else if constexpr (std::is_same_v<T, io::RepDocument>) return py::cast(p.rep);
        else return py::cast(p);
      },
      doc.payload);
}

template <class T>
std::string render_one(const T& x) {
  return io::render(io::Document{x});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations for LY algebras, their cohomology and 2-term algebras";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<InvalidStructure> invalid(m, "InvalidStructure", PyExc_ValueError);
  static py::exception<ResourceError> resource(m, "ResourceError", PyExc_RuntimeError);
  static py::exception<ConsistencyError> consistency(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      input_error(e.what());
    } catch (const InvalidStructure& e) {
      invalid(e.what());
    } catch (const ResourceError& e) {
      resource(e.what());
    } catch (const ConsistencyError& e) {
      consistency(e.what());
    }
  });

  py::class_<LYAlgebra>(m, "LYAlgebra")
      .def(py::init<std::size_t>(), py::arg("dim"), "abelian algebra of the given dimension")
      .def_property_readonly("dim", &LYAlgebra::dim)
      .def("bracket", [](const LYAlgebra& a, py::iterable x, py::iterable y) {
        return fractions(a.bracket(sized(x, a.dim(), "x"), sized(y, a.dim(), "y")));
      })
      .def("bracket3", [](const LYAlgebra& a, py::iterable x, py::iterable y, py::iterable z) {
        return fractions(a.bracket(sized(x, a.dim(), "x"), sized(y, a.dim(), "y"), sized(z, a.dim(), "z")));
      })
      .def("to_json", &render_one<LYAlgebra>)
      .def("__eq__", [](const LYAlgebra& a, const LYAlgebra& b) { return a == b; })
      .def("__repr__", [](const LYAlgebra& a) { return "<LYAlgebra dim=" + std::to_string(a.dim()) + ">"; });

  py::class_<LieAlgebra>(m, "LieAlgebra")
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def("bracket", [](const LieAlgebra& g, py::iterable x, py::iterable y) {
        return fractions(g.bracket(sized(x, g.dim(), "x"), sized(y, g.dim(), "y")));
      })
      .def("__repr__", [](const LieAlgebra& g) { return "<LieAlgebra dim=" + std::to_string(g.dim()) + ">"; });

  py::class_<LeibnizAlgebra>(m, "LeibnizAlgebra")
      .def_property_readonly("dim", &LeibnizAlgebra::dim)
      .def("product", [](const LeibnizAlgebra& l, py::iterable x, py::iterable y) {
        return fractions(l.product(sized(x, l.dim(), "x"), sized(y, l.dim(), "y")));
      })
      .def("to_json", &render_one<LeibnizAlgebra>)
      .def("__repr__", [](const LeibnizAlgebra& l) { return "<LeibnizAlgebra dim=" + std::to_string(l.dim()) + ">"; });

  py::class_<ReductiveDecomposition>(m, "ReductiveDecomposition")
      .def_property_readonly("lie", [](const ReductiveDecomposition& d) { return d.lie; })
      .def_property_readonly("h_dim", [](const ReductiveDecomposition& d) { return d.h.dim(); })
      .def_property_readonly("m_dim", [](const ReductiveDecomposition& d) { return d.m.dim(); });

  py::class_<Representation>(m, "Representation")
      .def_property_readonly("algebra_dim", &Representation::algebra_dim)
      .def_property_readonly("module_dim", &Representation::module_dim)
      .def("rho", [](const Representation& r, std::size_t i) { return dense(r.rho(i)); })
      .def("D", [](const Representation& r, std::size_t i, std::size_t j) { return dense(r.D(i, j)); })
      .def("theta", [](const Representation& r, std::size_t i, std::size_t j) { return dense(r.theta(i, j)); })
      .def("to_json", [](const Representation& r) { return io::render(io::Document{io::RepDocument{r, std::nullopt}}); })
      .def("__eq__", [](const Representation& a, const Representation& b) { return a == b; });

  py::class_<CochainQuadruple>(m, "CochainQuadruple")
      .def_static("from_vector", [](std::size_t d, std::size_t mdim, py::iterable v) {
        return CochainQuadruple::from_vector(d, mdim, vector(v));
      })
      .def("flatten", [](const CochainQuadruple& q) { return fractions(q.flatten()); })
      .def("is_zero", &CochainQuadruple::is_zero)
      .def("to_json", &render_one<CochainQuadruple>);

  py::class_<TwoTermAlgebra>(m, "TwoTermAlgebra")
      .def_property_readonly("v0_dim", &TwoTermAlgebra::v0_dim)
      .def_property_readonly("v1_dim", &TwoTermAlgebra::v1_dim)
      .def("is_skeletal", &TwoTermAlgebra::is_skeletal)
      .def("is_strict", &TwoTermAlgebra::is_strict)
      .def("to_json", &render_one<TwoTermAlgebra>);

  py::class_<CrossedModuleLYA>(m, "CrossedModule")
      .def_property_readonly("t", [](const CrossedModuleLYA& c) { return c.t; })
      .def_property_readonly("v", [](const CrossedModuleLYA& c) { return c.v; })
      .def_property_readonly("boundary", [](const CrossedModuleLYA& c) { return dense(c.boundary); })
      .def("to_json", &render_one<CrossedModuleLYA>);

  py::class_<CrossedExtension>(m, "CrossedExtension")
      .def_property_readonly("t", [](const CrossedExtension& e) { return e.t; })
      .def_property_readonly("m_dim", &CrossedExtension::m_dim)
      .def("to_json", &render_one<CrossedExtension>);

  py::class_<io::HomomorphismDocument>(m, "Homomorphism");
  py::class_<Cochain>(m, "Cochain").def("values", [](const Cochain& c) { return fractions(c.coeffs()); });
  py::class_<LeibnizCrossedModule>(m, "LeibnizCrossedModule");
  py::class_<ReductiveCrossedModule>(m, "ReductiveCrossedModule");

  py::class_<OperatorMatrix>(m, "Operator")
      .def_readonly("label", &OperatorMatrix::label)
      .def_property_readonly("shape", [](const OperatorMatrix& o) { return py::make_tuple(o.matrix.rows(), o.matrix.cols()); })
      .def_property_readonly("nonzeros", [](const OperatorMatrix& o) { return o.matrix.nonzeros(); })
      .def("apply", [](const OperatorMatrix& o, py::iterable v) { return fractions(o.matrix.apply(sized(v, o.matrix.cols(), "vector"))); })
      .def("dense", [](const OperatorMatrix& o) { return dense(o.matrix.dense()); })
      .def("__matmul__", [](const OperatorMatrix& a, const OperatorMatrix& b) {
        if (a.matrix.cols() != b.matrix.rows()) throw InputError("operator shapes do not compose");
        OperatorMatrix out{a.label + "*" + b.label, a.matrix * b.matrix, b.domain, a.codomain};
        return out;
      })
      .def("is_zero", [](const OperatorMatrix& o) { return o.matrix.is_zero(); });

  m.def("abelian", [](std::size_t n) { return LYAlgebra(n); }, py::arg("n"));
  m.def("affine2", &affine2);
  m.def("so3", &so3);
  m.def("heisenberg3", &heisenberg3);
  m.def("leib2", &leib2);
  m.def("so3_reductive", &so3_reductive);
  m.def("omni_lie", &omni_lie, py::arg("n"));
  m.def("lie_to_lya", &lie_to_lya);
  m.def("leibniz_to_lya", &leibniz_to_lya);
  m.def("reductive_to_lya", &reductive_to_lya);
  m.def("fundamental_leibniz", &fundamental_leibniz);
  m.def("adjoint_rep", &adjoint_rep);
  m.def("zero_rep", &zero_rep, py::arg("algebra_dim"), py::arg("module_dim"));
  m.def("change_basis", [](const LYAlgebra& a, py::iterable p) { return change_basis(a, matrix(p)); },
        py::arg("algebra"), py::arg("columns"));

  m.def("verify_ly", [](const LYAlgebra& a) { return report(verify_ly(a)); });
  m.def("verify_lie", [](const LieAlgebra& g) { return report(verify_lie(g)); });
  m.def("verify_leibniz", [](const LeibnizAlgebra& l) { return report(verify_leibniz(l)); });
  m.def("verify_rep", [](const LYAlgebra& a, const Representation& r) { return report(verify_rep(a, r)); });
  m.def("verify_two_term", [](const TwoTermAlgebra& t) { return report(verify_two_term(t)); });
  m.def("verify_crossed_module", [](const CrossedModuleLYA& c) { return report(verify_crossed_module(c)); });
  m.def("verify_extension", [](const CrossedExtension& e) { return report(verify_extension(e)); });

  m.def("yamaguti_delta", &yamaguti_delta, py::arg("n"), py::arg("algebra"), py::arg("rep"));
  m.def("delta2", [](const LYAlgebra& a, const Representation& r) { return delta2(a, r); });
  m.def("delta3", &delta3);
  m.def("h3445_dims", [](const LYAlgebra& a, const Representation& r) { return dims(h3445_dims(a, r)); });
  m.def("yamaguti_h_dims", [](std::size_t n, const LYAlgebra& a, const Representation& r) {
    return dims(yamaguti_h_dims(n, a, r));
  });
  m.def("is_cocycle_3445", [](const CochainQuadruple& q, const LYAlgebra& a, const Representation& r) {
    return is_cocycle_3445(q, a, r).cocycle;
  });

  m.def("skeletal_from_data", &skeletal_from_data);
  m.def("data_from_skeletal", &data_from_skeletal);
  m.def("identity_crossed", &identity_crossed);
  m.def("strict_from_crossed", &strict_from_crossed);
  m.def("crossed_from_strict", &crossed_from_strict);
  m.def("heisenberg_extension", &heisenberg_extension);
  m.def("extract_theta", [](const CrossedExtension& e) { return extract_theta(e); });
  m.def("induced_representation", &induced_representation);

  m.def("loads", [](const std::string& text) { return payload(io::parse(text)); }, py::arg("text"),
        "Parse a document; the payload comes back as the matching class.");
  m.def("load", [](const std::string& path) { return payload(io::load(path)); }, py::arg("path"));
  m.def("kind_of", [](const std::string& text) { return io::parse(text).kind(); }, py::arg("text"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line front end in process; returns (exit code, stdout, stderr).");
}
