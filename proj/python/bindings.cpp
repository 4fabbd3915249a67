#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "vnumlab/commands.hpp"
#include "vnumlab/errors.hpp"
#include "vnumlab/io.hpp"
#include "vnumlab/primes.hpp"
#include "vnumlab/subquotient.hpp"
#include "vnumlab/vnumber.hpp"

namespace py = pybind11;
using namespace vnumlab;

namespace {

// Structured results cross the boundary as canonical JSON text; the Python
// package decodes them.
std::string dump(const Json& j) { return j.dump(); }

// Rings are shared as pointers to const, which pybind11 cannot hold directly.
struct Ring {
  RingPtr ptr;
};

}  // namespace

PYBIND11_MODULE(_vnumlab, m) {
  m.doc() = "Monomial subquotients, associated primes and v-numbers";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  // Exceptions carry the stable error code, and parse errors their position.
  py::register_exception_translator([](std::exception_ptr p) {
    auto raise = [](py::handle type, const Error& e) {
      py::object exc = type(e.what());
      exc.attr("code") = e.code();
      if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
        exc.attr("line") = pe->line();
        exc.attr("column") = pe->column();
      }
      PyErr_SetObject(type.ptr(), exc.ptr());
    };
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      raise(parse_error, e);
    } catch (const Error& e) {
      raise(error, e);
    }
  });

  py::class_<Ring>(m, "Ring")
      .def(py::init([](std::vector<std::string> names, std::vector<std::int64_t> weights) {
             if (weights.empty()) return Ring{make_ring(std::move(names))};
             return Ring{make_ring(std::move(names), std::move(weights))};
           }),
           py::arg("names"), py::arg("weights") = std::vector<std::int64_t>{})
      .def_property_readonly("names", [](const Ring& r) { return r.ptr->names(); })
      .def_property_readonly("weights", [](const Ring& r) { return r.ptr->weights(); })
      .def("degree", [](const Ring& r, const std::string& text) {
        return weighted_degree(*r.ptr, parse_monomial(*r.ptr, text));
      })
      .def("__eq__", [](const Ring& a, const Ring& b) { return *a.ptr == *b.ptr; });

  py::class_<MonomialIdeal>(m, "Ideal")
      .def(py::init([](const Ring& ring, const std::vector<std::string>& gens) { return parse_ideal(ring.ptr, gens); }),
           py::arg("ring"), py::arg("generators"))
      .def_static("zero", [](const Ring& r) { return MonomialIdeal::zero(r.ptr); })
      .def_static("unit", [](const Ring& r) { return MonomialIdeal::unit(r.ptr); })
      .def_property_readonly("ring", [](const MonomialIdeal& i) { return Ring{i.ring_ptr()}; })
      .def_property_readonly("generators", &MonomialIdeal::to_strings)
      .def("is_zero", &MonomialIdeal::is_zero)
      .def("is_unit", &MonomialIdeal::is_unit)
      .def("__contains__",
           [](const MonomialIdeal& i, const std::string& text) { return i.contains(parse_monomial(i.ring(), text)); })
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
      .def("__add__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return sum(a, b); })
      .def("__mul__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return product(a, b); })
      .def("__pow__", [](const MonomialIdeal& a, std::uint32_t n) { return power(a, n); })
      .def("intersect", [](const MonomialIdeal& a, const MonomialIdeal& b) { return intersect(a, b); })
      .def("colon", [](const MonomialIdeal& a, const MonomialIdeal& b) { return colon_ideal(a, b); })
      .def("saturate", [](const MonomialIdeal& a, const MonomialIdeal& b) { return saturate(a, b); })
      .def("__repr__", [](const MonomialIdeal& i) {
        std::string out = "Ideal(";
        const auto gens = i.to_strings();
        for (std::size_t k = 0; k < gens.size(); ++k) out += (k ? ", " : "") + gens[k];
        return out + ")";
      });

  py::class_<Subquotient>(m, "Module")
      .def(py::init<MonomialIdeal, MonomialIdeal, std::int64_t>(), py::arg("numerator"), py::arg("denominator"),
           py::arg("shift") = 0)
      .def_property_readonly("numerator", &Subquotient::numerator)
      .def_property_readonly("denominator", &Subquotient::denominator)
      .def_property_readonly("shift", &Subquotient::shift)
      .def("is_zero", [](const Subquotient& q) { return is_zero(q); })
      .def("is_artinian", [](const Subquotient& q) { return is_artinian(q); })
      .def("_indeg", [](const Subquotient& q) { return dump(to_json(indeg(q))); })
      .def("_end", [](const Subquotient& q) { return dump(to_json(end_artinian(q))); })
      .def("_ass", [](const Subquotient& q) { return dump(to_json(q.ring(), ass(q))); })
      .def("_v_number", [](const Subquotient& q) { return dump(to_json(q.ring(), v_number(q))); });

  m.def("command_names", &command_names);
  m.def(
      "_run",
      [](const std::string& document, const std::string& command, std::optional<std::string> cache_dir,
         const std::string& format) {
        RunOptions run;
        if (cache_dir) run.cache_dir = *cache_dir;
        const auto result = command == "verify-golden" ? run_verify_golden()
                                                       : run_command(parse_input(document), command, run);
        return py::make_tuple(format == "json" ? dump(result.json) : render(result, format), result.exit_code);
      },
      py::arg("document"), py::arg("command"), py::arg("cache_dir") = std::nullopt, py::arg("format") = "json");
  m.def("_canonicalize", [](const std::string& document) { return dump(to_json(parse_input(document))); });
}
