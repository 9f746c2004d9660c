#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nilsol/catalog.hpp"
#include "nilsol/cli.hpp"
#include "nilsol/io.hpp"
#include "nilsol/verdict.hpp"

namespace py = pybind11;
using namespace nilsol;

namespace {

using Rows = std::vector<std::vector<Scalar>>;

Rows rows(const Matrix& m) {
  Rows out(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  }
  return out;
}

AlgebraFile from_catalog(const std::string& name) {
  const MetricLieAlgebra m = catalog(name);
  return make_algebra_file(name, m.algebra, m.gram);
}

py::dict certify(const AlgebraFile& f) {
  const auto gram = f.gram_or_none();
  const Verdict v = certify_standardness(f.algebra, gram);
  py::dict d;
  d["outcome"] = to_string(v.outcome);
  d["rule"] = v.rule ? py::cast(to_string(*v.rule)) : py::none();
  std::vector<std::string> satisfied;
  for (Rule r : v.satisfied) satisfied.push_back(to_string(r));
  d["satisfied"] = satisfied;
  d["pre_einstein"] = std::vector<Scalar>(v.pre_einstein.mu.begin(), v.pre_einstein.mu.end());
  if (v.rule) {
    const auto failure = reverify(f.algebra, gram, v);
    d["reverified"] = failure ? py::cast(*failure) : py::cast(true);
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact nilpotent and solvable Lie algebra computations";

  py::class_<Scalar>(m, "Scalar")
      .def(py::init<long>(), py::arg("value") = 0)
      .def(py::init([](const std::string& text) { return Scalar::parse(text); }))
      .def_static("sqrt", &Scalar::sqrt_of)
      .def("sign", &Scalar::sign)
      .def("is_rational", &Scalar::is_rational)
      .def("__float__", &Scalar::to_double)
      .def("__str__", &Scalar::str)
      .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.str() + "')"; })
      .def("__hash__", [](const Scalar& s) { return py::hash(py::str(s.str())); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self + long())
      .def(py::self * long())
      .def(py::self == long());
  py::implicitly_convertible<long, Scalar>();

  py::class_<AlgebraFile>(m, "Algebra")
      .def_static("parse", &parse_algebra_file, py::arg("text"))
      .def_static("from_catalog", &from_catalog, py::arg("name"))
      .def_readonly("name", &AlgebraFile::name)
      .def_property_readonly("dim", [](const AlgebraFile& f) { return f.algebra.dim(); })
      .def_property_readonly("labels", [](const AlgebraFile& f) { return f.algebra.labels(); })
      .def_property_readonly("is_nilpotent", [](const AlgebraFile& f) { return is_nilpotent(f.algebra); })
      .def("text", &emit_algebra_file)
      .def("ricci",
           [](const AlgebraFile& f) {
             const MetricLieAlgebra mla = f.metric_algebra();
             return rows(is_nilpotent(f.algebra) ? ricci_nilpotent(mla).ric : ricci_solvable(mla).ric);
           })
      .def("pre_einstein",
           [](const AlgebraFile& f) -> py::object {
             const auto pe = pre_einstein_diagonal(f.algebra);
             if (pe.status != PreEinsteinStatus::Verified) return py::none();
             return py::cast(std::vector<Scalar>(pe.mu.begin(), pe.mu.end()));
           })
      .def("nilsoliton",
           [](const AlgebraFile& f) -> py::object {
             const auto ns = nilsoliton_check(f.metric_algebra());
             if (!ns.certificate) return py::none();
             return py::make_tuple(ns.certificate->c, rows(ns.certificate->phi));
           })
      .def("certify", &certify);

  m.def("catalog_names", &catalog_names);
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in process; returns (exit code, stdout, stderr).");

  py::register_exception<InvalidAlgebra>(m, "InvalidAlgebra", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
