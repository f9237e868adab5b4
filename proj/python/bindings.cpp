#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nrt/error.hpp"
#include "nrt/expr.hpp"
#include "nrt/nearring.hpp"
#include "nrt/suites.hpp"
#include "nrt/word_core.hpp"

namespace py = pybind11;
using namespace nrt;

PYBIND11_MODULE(_nrt, m) {
  m.doc() = "Nearrings on towers of HNN extensions";

  static py::exception<Error> error(m, "NrtError");
  static py::exception<SyntaxError> syntax(m, "ExprSyntaxError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SyntaxError& e) {
      py::set_error(syntax, e.what());
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::enum_<Variant>(m, "Variant")
      .value("A", Variant::A)
      .value("B", Variant::B)
      .value("C", Variant::C);

  py::class_<Element>(m, "Element")
      .def(py::init<Variant>(), py::arg("variant") = Variant::A)
      .def_property_readonly("variant", &Element::variant)
      .def_property_readonly("level", &Element::level)
      .def("is_zero", &Element::is_zero)
      .def("__add__", [](const Element& a, const Element& b) { return add(a, b); })
      .def("__sub__", [](const Element& a, const Element& b) { return sub(a, b); })
      .def("__neg__", [](const Element& a) { return neg(a); })
      .def("__mul__", [](const Element& a, const Element& b) { return mul(a, b); })
      .def("__rmul__", [](const Element& a, std::int64_t k) { return scalar(k, a); })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("__hash__", &Element::hash)
      .def("__str__", [](const Element& e) { return render(e); })
      .def("__repr__", [](const Element& e) {
        return std::string("Element(") + to_string(e.variant()) + ", '" + render(e) + "')";
      });

  m.def("parse", &parse_element, py::arg("text"), py::arg("variant"));
  m.def("render", &render);
  m.def("make_int", &make_int);
  m.def("make_pi", py::overload_cast<Variant, std::uint32_t, std::int64_t>(&make_pi),
        py::arg("variant"), py::arg("index"), py::arg("exponent") = 1);
  m.def("make_omega", &make_omega, py::arg("variant"), py::arg("j"), py::arg("m") = 1);
  m.def("make_stable", &make_stable, py::arg("alpha"), py::arg("beta"), py::arg("sign") = 1);
  m.def("unit", &unit);
  m.def("add", &add);
  m.def("neg", &neg);
  m.def("equal", &equal);
  m.def("level", &level);
  m.def("size", &size);
  m.def("scalar", py::overload_cast<std::int64_t, const Element&>(&scalar));
  m.def("cyclic_reduce", [](const Element& a) {
    CyclicForm cf = cyclic_reduce(a);
    return py::make_tuple(cf.conj, cf.core);
  });
  m.def("power_of", py::overload_cast<const Element&, const Element&>(&power_of));
  m.def("conjugator", &conjugator);

  m.def("f_eval", &f_eval, py::arg("zeta"), py::arg("x"));
  m.def("mul", &mul);
  m.def("mu", &mu);
  m.def("preimage", &preimage, py::arg("zeta"), py::arg("x"));
  m.def("in_W", &in_W);
  m.def("in_H", &in_H, py::arg("zeta"), py::arg("x"));

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite_json",
      [](const std::string& name, Variant v, std::uint64_t seed, std::size_t count, int depth,
         std::int64_t zeta1, std::int64_t zeta2) {
        SampleConfig cfg;
        cfg.seed = seed;
        cfg.count = count;
        cfg.max_level = depth;
        Report r;
        {
          py::gil_scoped_release release;
          r = run_suite(name, v, cfg, zeta1, zeta2);
        }
        return write_report(r);
      },
      py::arg("name"), py::arg("variant"), py::arg("seed") = 0, py::arg("count") = 100,
      py::arg("depth") = 3, py::arg("zeta1") = 2, py::arg("zeta2") = 3);
}
