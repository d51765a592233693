#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clocklattice/error.hpp"
#include "clocklattice/io.hpp"
#include "clocklattice/matchings.hpp"
#include "clocklattice/pipeline.hpp"
#include "clocklattice/tait.hpp"

namespace py = pybind11;
namespace cl = clocklattice;

namespace {

std::optional<cl::StarPair> to_stars(const std::optional<std::pair<int, int>>& s) {
  if (!s) return std::nullopt;
  return cl::StarPair{s->first, s->second};
}

std::optional<std::pair<int, int>> from_stars(const std::optional<cl::StarPair>& s) {
  if (!s) return std::nullopt;
  return std::pair{s->first, s->second};
}

py::dict routes_dict(const cl::HeightRoutes& r) {
  py::dict d;
  d["height"] = r.height();
  d["bfs"] = r.bfs;
  d["num_states"] = r.num_states;
  d["symdiff"] = r.symdiff_height;
  d["peel"] = r.peel_height;
  d["closed_form"] = r.closed_form;
  d["bfs_skipped"] = r.bfs_skipped;
  d["peel_skipped"] = r.peel_skipped;
  d["disagreements"] = r.disagreements;
  d["agree"] = r.agree();
  return d;
}

const cl::Universe& universe_of(const cl::Instance& inst) {
  if (!inst.universe) throw cl::Error(cl::ErrorKind::InvalidGraph, "instance has no universe");
  return *inst.universe;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Clock lattices of knot universes";

  static py::exception<cl::Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const cl::Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(py::str(e.what()));
      exc.attr("kind") = py::str(std::string(cl::to_string(e.kind())));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.attr("DEFAULT_CAP") = cl::kDefaultMatchingCap;

  py::class_<cl::Instance>(m, "Instance")
      .def_readonly("label", &cl::Instance::label)
      .def_property_readonly("stars", [](const cl::Instance& i) { return from_stars(i.gamma.stars()); })
      .def_property_readonly("num_crossings", [](const cl::Instance& i) { return i.gamma.size(); })
      .def_property_readonly("num_vertices", [](const cl::Instance& i) { return i.gamma.num_vertices(); })
      .def_property_readonly("num_edges", [](const cl::Instance& i) { return i.gamma.num_edges(); })
      .def_property_readonly("has_universe", [](const cl::Instance& i) { return i.universe.has_value(); })
      .def_property_readonly("positions",
                             [](const cl::Instance& i) {
                               std::vector<std::pair<double, double>> out;
                               for (const auto& p : i.positions) out.emplace_back(p[0], p[1]);
                               return out;
                             })
      .def("__repr__", [](const cl::Instance& i) {
        return "<Instance " + (i.label.empty() ? std::string("?") : i.label) + ", " + std::to_string(i.gamma.size()) + " crossings>";
      });

  m.def("from_text", [](const std::string& text, std::optional<std::pair<int, int>> stars) {
    return cl::instance_from_text(text, to_stars(stars));
  }, py::arg("text"), py::arg("stars") = py::none(), "PD code, universe JSON or balanced-graph JSON");
  m.def("load_fixture", [](const std::string& name, std::optional<std::pair<int, int>> stars) {
    return cl::instance_from_fixture(name, to_stars(stars));
  }, py::arg("name"), py::arg("stars") = py::none());
  m.def("fixture_names", &cl::fixture_names);
  m.def("require_strict", &cl::require_strict, py::arg("instance"));

  m.def("grid_height_closed_form", [](int rows, int cols) { return cl::grid_height_closed_form({rows, cols}); },
        py::arg("m"), py::arg("n"));

  m.def("height_routes", [](const cl::Instance& inst, std::size_t cap) {
    return routes_dict(cl::compute_height_routes(inst, cap));
  }, py::arg("instance"), py::arg("cap") = cl::kDefaultMatchingCap);

  m.def("count_matchings", [](const cl::Instance& inst, std::size_t cap) {
    return cl::enumerate_matchings(inst.gamma, cap).size();
  }, py::arg("instance"), py::arg("cap") = cl::kDefaultMatchingCap);

  // Returned as decimal text and converted in Python so large counts stay exact.
  m.def("_spanning_tree_count", [](const cl::Instance& inst) {
    const auto& u = universe_of(inst);
    const auto stars = inst.gamma.stars() ? *inst.gamma.stars() : cl::auto_stars(u);
    const auto tait = cl::build_tait(u, cl::checkerboard(u, stars));
    return cl::count_spanning_trees(tait.first).str();
  }, py::arg("instance"));

  m.def("_decomposition_json", [](const cl::Instance& inst, const std::string& route) {
    if (route == "peel") return cl::decomposition_json(cl::peel_decompose(inst.gamma), inst.gamma);
    if (route != "symdiff") throw cl::Error(cl::ErrorKind::SchemaViolation, "route must be symdiff or peel");
    const auto& b = inst.gamma;
    return cl::decomposition_json(cl::symdiff_decompose(b, cl::clocked_state(b), cl::counterclocked_state(b)), b);
  }, py::arg("instance"), py::arg("route") = "symdiff");

  m.def("_lattice_json", [](const cl::Instance& inst, std::size_t cap) {
    return cl::lattice_json(cl::build_lattice(inst.gamma, cap));
  }, py::arg("instance"), py::arg("cap") = cl::kDefaultMatchingCap);

  m.def("lattice_dot", [](const cl::Instance& inst, std::size_t cap) {
    return cl::lattice_dot(cl::build_lattice(inst.gamma, cap));
  }, py::arg("instance"), py::arg("cap") = cl::kDefaultMatchingCap);

  m.def("gamma_dot", [](const cl::Instance& inst) { return cl::gamma_dot(inst.gamma, inst.positions); }, py::arg("instance"));

  m.def("verify_clock_theorem", [](const cl::Instance& inst, std::size_t cap) {
    const auto cd = cl::build_lattice(inst.gamma, cap);
    const auto r = cl::verify_clock_theorem(cd, inst.gamma);
    return std::pair{r.passed(), r.summary()};
  }, py::arg("instance"), py::arg("cap") = cl::kDefaultMatchingCap);

  m.def("verify_morse", [](const cl::Instance& inst, std::size_t cap) {
    const auto& u = universe_of(inst);
    std::size_t valid = 0;
    const auto states = cl::enumerate_matchings(inst.gamma, cap);
    for (const auto& s : states) valid += cl::verify_morse(cl::matching_to_morse(inst.gamma, s, u)).passed() ? 1 : 0;
    return std::pair{valid, states.size()};
  }, py::arg("instance"), py::arg("cap") = cl::kDefaultMatchingCap);
}
