#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quiverfg/catalog.hpp"
#include "quiverfg/cli.hpp"
#include "quiverfg/error.hpp"
#include "quiverfg/fgcheck.hpp"
#include "quiverfg/hochschild.hpp"
#include "quiverfg/io.hpp"
#include "quiverfg/nakayama.hpp"
#include "quiverfg/tilting.hpp"

namespace py = pybind11;
using namespace qfg;

namespace {

Field field_or_q(const std::optional<std::string>& f) { return f ? parse_field(*f) : Field::rationals(); }
std::optional<Field> field_opt(const std::optional<std::string>& f) {
  return f ? std::optional<Field>(parse_field(*f)) : std::nullopt;
}

// pybind11 holders cannot point to const, so algebras travel in a handle.
struct Algebra {
  AlgebraPtr ptr;
  const FDAlgebra& operator*() const { return *ptr; }
};

}  // namespace

PYBIND11_MODULE(_quiverfg, m) {
  m.doc() = "Finite-dimensional quiver algebras: homological invariants and tilting";

  static py::exception<Error> error(m, "QuiverError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Algebra>(m, "Algebra")
      .def_property_readonly("dim", [](const Algebra& a) { return a.ptr->dim(); })
      .def_property_readonly("num_vertices", [](const Algebra& a) { return a.ptr->num_vertices(); })
      .def_property_readonly("num_arrows", [](const Algebra& a) { return a.ptr->num_arrows(); })
      .def_property_readonly("field", [](const Algebra& a) { return a.ptr->field().to_string(); })
      .def_property_readonly("vertices", [](const Algebra& a) { return a.ptr->quiver().vertices; })
      .def("cartan_matrix", [](const Algebra& a) { return a.ptr->cartan_matrix(); })
      .def("loewy_length", [](const Algebra& a) { return a.ptr->loewy_length(); })
      .def("__repr__", [](const Algebra& a) {
        return "<Algebra dim=" + std::to_string(a.ptr->dim()) + " over " + a.ptr->field().to_string() + ">";
      });

  py::class_<FDModule>(m, "Module")
      .def_property_readonly("dims", &FDModule::dims)
      .def_property_readonly("total_dim", &FDModule::total_dim)
      .def("__repr__", [](const FDModule& x) { return "<Module dims=" + describe_dims(x.dims()) + ">"; });

  m.def("catalog_names", &catalog::names);
  m.def(
      "catalog", [](const std::string& name, std::optional<std::string> f) { return Algebra{catalog::by_name(name, field_or_q(f))}; },
      py::arg("name"), py::arg("field") = std::nullopt);
  m.def(
      "parse_algebra",
      [](const std::string& text, std::optional<std::string> f) { return Algebra{parse_algebra(text, field_opt(f))}; },
      py::arg("text"), py::arg("field") = std::nullopt);
  m.def(
      "load_algebra",
      [](const std::string& path, std::optional<std::string> f) { return Algebra{load_algebra(path, field_opt(f))}; },
      py::arg("path"), py::arg("field") = std::nullopt);
  m.def(
      "module", [](const Algebra& a, const std::string& ref) { return module_ref(a.ptr, ref); }, py::arg("algebra"), py::arg("ref"), "Module from a reference such as 'P1+P2+S2'.");

  m.def("is_nakayama", [](const Algebra& a) { return is_nakayama(*a); });
  m.def("admissible_sequence", [](const Algebra& a) { return admissible_sequence(*a).lengths; });
  m.def(
      "gorenstein", [](const Algebra& a, std::size_t cap) { return to_string(is_gorenstein(a.ptr, cap).verdict); },
      py::arg("algebra"), py::arg("cap") = 20);
  m.def(
      "fg_verdict", [](const Algebra& a, std::size_t cap) { return to_string(fg_evidence(a.ptr, Selector::Even, cap).verdict); },
      py::arg("algebra"), py::arg("cap") = 8);
  m.def(
      "hh_dims", [](const Algebra& a, std::size_t cap) { return hh_dims(a.ptr, cap); }, py::arg("algebra"), py::arg("cap"));
  m.def(
      "ext_dims", [](const FDModule& x, const FDModule& y, std::size_t cap) { return ext_dims(x, y, cap).dims; },
      py::arg("m"), py::arg("n"), py::arg("cap"));
  m.def(
      "is_tilting", [](const FDModule& t, std::size_t cap) { return check_tilting(t, cap).verdict == Verdict::Yes; },
      py::arg("module"), py::arg("cap") = 10);

  m.def(
      "run", [](const std::vector<std::string>& args) {
        auto r = cli::run(args);
        return py::make_tuple(r.exit_code, r.text);
      },
      "Runs the command line interface; returns (exit_code, output).");
}
