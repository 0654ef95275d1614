#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pdmatch/classify.hpp"
#include "pdmatch/dispatch.hpp"
#include "pdmatch/errors.hpp"
#include "pdmatch/generators.hpp"
#include "pdmatch/serialize.hpp"

namespace py = pybind11;
using namespace pdmatch;

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

Matching to_matching(const Edges& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [j, i] : edges) out.push_back({j, i});
  return Matching(std::move(out));
}

Edges from_matching(const Matching& m) {
  Edges out;
  for (const Edge& e : m.edges()) out.emplace_back(e.job, e.machine);
  return out;
}

std::vector<std::vector<Tolerance>> rows_of(const Instance& inst) {
  std::vector<std::vector<Tolerance>> rows;
  for (std::size_t j = 0; j < inst.jobs(); ++j) rows.emplace_back(inst.row(j).begin(), inst.row(j).end());
  return rows;
}

}  // namespace

PYBIND11_MODULE(_pdmatch, mod) {
  mod.doc() = "Maximum bipartite PD-matching solvers";

  py::register_exception<ClassMismatch>(mod, "ClassMismatch", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(mod, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);

  py::class_<Instance>(mod, "Instance")
      .def(py::init(&Instance::from_rows), py::arg("rows"))
      .def_property_readonly("jobs", &Instance::jobs)
      .def_property_readonly("machines", &Instance::machines)
      .def("rows", &rows_of)
      .def("to_json", [](const Instance& inst) { return serialize(inst); })
      .def_static("from_json", [](const std::string& text) { return parse_instance(text); })
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& inst) {
        return "Instance(jobs=" + std::to_string(inst.jobs()) + ", machines=" + std::to_string(inst.machines()) + ")";
      });

  mod.def("algorithms", &algorithm_names);
  mod.def(
      "solve",
      [](const Instance& inst, const std::string& algorithm, std::optional<std::uint64_t> budget) {
        SolveOptions options;
        options.budget = budget;
        const SolveReport r = solve_with(inst, algorithm, options);
        py::dict out;
        out["edges"] = from_matching(r.matching);
        out["size"] = r.matching.size();
        out["algorithm"] = r.algorithm;
        out["optimal"] = r.optimal;
        return out;
      },
      py::arg("instance"), py::arg("algorithm") = "auto", py::arg("budget") = py::none());
  mod.def(
      "verify",
      [](const Instance& inst, const Edges& edges) {
        const Matching m = to_matching(edges);
        py::dict out;
        out["valid"] = verify(inst, m).valid;
        out["maximal"] = is_maximal(inst, m);
        out["strongly_maximal"] = is_strongly_maximal(inst, m);
        return out;
      },
      py::arg("instance"), py::arg("edges"));
  mod.def("classify", [](const Instance& inst) { return to_json(classify(inst)).dump(); });
  mod.def("class_label", [](const Instance& inst) { return class_label(classify(inst)); });

  mod.def("gen_random", &gen_random, py::arg("n"), py::arg("m"), py::arg("max_tol"), py::arg("zero_prob") = 0.0,
          py::arg("seed") = 0);
  mod.def("gen_monotonous", &gen_monotonous, py::arg("n"), py::arg("m"), py::arg("max_tol"), py::arg("seed") = 0);
  mod.def("gen_udep_mono", &gen_udep_mono, py::arg("n"), py::arg("m"), py::arg("max_tol"), py::arg("seed") = 0);
  mod.def("gen_vdep", &gen_vdep, py::arg("n"), py::arg("m"), py::arg("max_tol"), py::arg("zero_prob") = 0.0,
          py::arg("seed") = 0);
  mod.def("gen_types", &gen_types, py::arg("n"), py::arg("m"), py::arg("t"), py::arg("max_tol"), py::arg("seed") = 0);
  mod.def(
      "gen_3partition",
      [](const std::vector<Tolerance>& values, Tolerance bound, std::size_t k) {
        return gen_3partition(values, bound, k);
      },
      py::arg("values"), py::arg("bound"), py::arg("k"));
  mod.def("fixture", &fixture, py::arg("name"), py::arg("param") = 0);
}
