#include "liebi/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace liebi;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python layer turns them
// into fractions.Fraction.
std::vector<std::string> strings(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<std::vector<std::string>> strings(const Matrix& m) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(strings(m.row(r)));
  return out;
}

LieBialgebra from_text(const std::string& text) {
  auto v = io::validate_document(io::parse_document(text));
  if (!v.is_bialgebra_document) throw std::invalid_argument("document describes a Lie algebra only");
  if (!v.bialgebra) {
    std::string msg = "not a valid Lie bialgebra:";
    for (const auto& s : v.violations) msg += "\n  " + s;
    throw std::invalid_argument(msg);
  }
  return std::move(*v.bialgebra);
}

std::vector<std::string> validate_text(const std::string& text) {
  return io::validate_document(io::parse_document(text)).violations;
}

py::tuple atiyah(const LieBialgebra& b) {
  auto v = atiyah_vanishes(b);
  py::object witness = py::none();
  if (v.witness) {
    py::list blocks;
    for (const auto& blk : v.witness->blocks) blocks.append(strings(blk));
    witness = blocks;
  }
  return py::make_tuple(v.vanishes, witness);
}

py::tuple c1(const LieBialgebra& b) {
  auto v = c1_vanishes(b);
  return py::make_tuple(v.vanishes, v.v ? py::cast(strings(*v.v)) : py::none());
}

py::object center(const LieBialgebra& b) {
  auto w = center_obstruction(b);
  if (!w) return py::none();
  return py::make_tuple(strings(w->x), strings(w->xi), strings(w->image));
}

py::dict double_of(const LieBialgebra& b) {
  auto d = build_double(b);
  py::list brackets;
  const std::size_t m = d.algebra->dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (!is_zero(d.algebra->c(i, j, k))) brackets.append(py::make_tuple(i, j, k, to_string(d.algebra->c(i, j, k))));
  py::dict out;
  out["dim"] = m;
  out["basis"] = d.algebra->basis_names();
  out["brackets"] = brackets;
  out["pairing"] = strings(d.pairing);
  return out;
}

std::string report_json(const LieBialgebra& b, bool c1_only) {
  return io::report_to_json(full_report(b, {.c1_only = c1_only}), b, {{"source", "python"}}).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Atiyah classes of Lie bialgebras over the rationals";

  py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<catalog::UnknownEntry>(m, "UnknownEntry", PyExc_ValueError);

  py::class_<LieBialgebra>(m, "Bialgebra")
      .def_property_readonly("dim", &LieBialgebra::dim)
      .def_property_readonly("basis", [](const LieBialgebra& b) { return b.g().basis_names(); })
      .def_property_readonly("dual_basis", [](const LieBialgebra& b) { return b.g_dual().basis_names(); })
      .def("to_document",
           [](const LieBialgebra& b) {
             io::InputDocument doc;
             doc.basis = b.g().basis_names();
             doc.dual_basis = b.g_dual().basis_names();
             doc.brackets = b.g().constants();
             doc.dual_brackets = b.g_dual().constants();
             return io::emit_document(doc);
           })
      .def("__eq__", [](const LieBialgebra& a, const LieBialgebra& b) { return a == b; })
      .def("__repr__", [](const LieBialgebra& b) { return "<Bialgebra dim=" + std::to_string(b.dim()) + ">"; });

  m.def("catalog_names", &catalog::names);
  m.def(
      "catalog_get", [](const std::string& name, std::size_t max_n) { return catalog::get(name, max_n).bialgebra; },
      py::arg("name"), py::arg("max_n") = catalog::default_max_n);
  m.def(
      "catalog_emit", [](const std::string& name, std::size_t max_n) {
        return io::emit_document(io::to_document(catalog::get(name, max_n)));
      },
      py::arg("name"), py::arg("max_n") = catalog::default_max_n);
  m.def("from_json", &from_text, py::arg("text"));
  m.def("validate", &validate_text, py::arg("text"));
  m.def("swap", &liebi::swap);
  m.def("atiyah_vanishes", &atiyah);
  m.def("c1_vanishes", &c1);
  m.def("center_obstruction", &center);
  m.def("modular_vector", [](const LieBialgebra& b) { return strings(modular_vector(b.g())); });
  m.def("build_double", &double_of);
  m.def("full_report_json", &report_json, py::arg("bialgebra"), py::arg("c1_only") = false,
        py::call_guard<py::gil_scoped_release>());
}
