#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "otg/exact.hpp"
#include "otg/gen.hpp"
#include "otg/io.hpp"
#include "otg/solver.hpp"
#include "otg/sweep.hpp"
#include "otg/visibility.hpp"

namespace py = pybind11;
using namespace otg;

namespace {

Terrain terrain_from_pairs(const std::vector<std::pair<long long, long long>>& coords) {
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (const auto& [x, y] : coords) pts.push_back(Point{Rational(x), Rational(y)});
  return Terrain::validate(std::move(pts));
}

std::vector<std::pair<std::string, std::string>> vertex_strings(const Terrain& t) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(t.size());
  for (const Point& p : t.vertices()) out.emplace_back(p.x.str(), p.y.str());
  return out;
}

py::dict sweep_result_dict(const SweepResult& r) {
  py::dict d;
  d["guards"] = r.guards;
  d["lists"] = r.lists;
  d["intersections_fired"] = r.counters.intersections_fired;
  d["heap_ops"] = r.counters.heap_ops();
  return d;
}

py::dict solution_dict(const GuardSolution& sol) {
  py::dict d;
  d["guards"] = sol.guards;
  d["lists"] = sol.lists;
  py::list prov;
  for (std::uint8_t bits : sol.provenance) prov.append(provenance_label(bits));
  d["provenance"] = prov;
  d["extended"] = sol.extended;
  d["scale"] = sol.scale.str();
  return d;
}

}  // namespace

PYBIND11_MODULE(_otguard, m) {
  m.doc() = "vertex guarding of orthogonal terrains: optimal one-sided sweeps, "
            "their 2-approximate union, and an exact oracle";

  py::register_exception<TerrainError>(m, "TerrainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);

  py::enum_<VertexClass>(m, "VertexClass")
      .value("LEFT_CONVEX", VertexClass::LeftConvex)
      .value("RIGHT_CONVEX", VertexClass::RightConvex)
      .value("LEFT_REFLEX", VertexClass::LeftReflex)
      .value("RIGHT_REFLEX", VertexClass::RightReflex);

  py::class_<Terrain>(m, "Terrain")
      .def(py::init(&terrain_from_pairs), py::arg("vertices"),
           "Validate an orthogonal terrain from integer (x, y) pairs, left to right.")
      .def("__len__", &Terrain::size)
      .def("vertices", &vertex_strings, "Vertex coordinates as decimal strings.")
      .def("classes",
           [](const Terrain& t) {
             std::vector<std::string> out;
             out.reserve(t.size());
             for (VertexClass c : t.classes()) out.emplace_back(to_string(c));
             return out;
           })
      .def("vertex_class", [](const Terrain& t, VertexId v) { return t.vclass(v); })
      .def("is_reflex", &Terrain::is_reflex)
      .def("upper_vertex", &Terrain::upper_vertex)
      .def("mirror", &Terrain::mirror)
      .def("starts_vertical", &Terrain::starts_vertical)
      .def("ends_vertical", &Terrain::ends_vertical);

  m.def("parse_terrain", [](const std::string& text) { return parse_terrain(text); },
        py::arg("text"));
  m.def("serialize_terrain", &serialize_terrain, py::arg("terrain"));

  m.def("sees", &sees, py::arg("terrain"), py::arg("p"), py::arg("q"),
        "Brute-force visibility between two vertices (grazing allowed).");
  m.def("visibility_matrix",
        [](const Terrain& t, std::size_t cap) {
          const auto mat = VisibilityMatrix::build(t, cap);
          std::vector<std::vector<bool>> rows(mat.size(), std::vector<bool>(mat.size()));
          for (std::size_t i = 0; i < mat.size(); ++i)
            for (std::size_t j = 0; j < mat.size(); ++j)
              rows[i][j] = mat.sees(static_cast<VertexId>(i), static_cast<VertexId>(j));
          return rows;
        },
        py::arg("terrain"), py::arg("cap") = 512);

  m.def("run_left_sweep",
        [](const Terrain& t) { return sweep_result_dict(run_left_sweep(t)); },
        py::arg("terrain"),
        "Optimal guards for the left convex witnesses; requires vertical terminal edges.");

  m.def("approx_guard_set",
        [](const Terrain& t, const std::string& sides) {
          const SolveSides s = sides == "left"    ? SolveSides::Left
                               : sides == "right" ? SolveSides::Right
                                                  : SolveSides::Both;
          return solution_dict(approx_guard_set(t, s));
        },
        py::arg("terrain"), py::arg("sides") = "both",
        "Union of the two one-sided optima: guards every vertex, at most twice the optimum.");

  m.def("verify_solution",
        [](const Terrain& t, const std::vector<VertexId>& guards) {
          const auto report = verify_solution(t, guards);
          return py::make_tuple(report.covered, report.uncovered);
        },
        py::arg("terrain"), py::arg("guards"));

  m.def("minimum_guard_set",
        [](const Terrain& t, std::optional<std::vector<VertexId>> candidates,
           std::optional<std::vector<VertexId>> witnesses, std::size_t cap) {
          return minimum_guard_set(t, candidates ? *candidates : all_vertices(t),
                                   witnesses ? *witnesses : all_vertices(t),
                                   ExactOptions{.max_candidates = cap});
        },
        py::arg("terrain"), py::arg("candidates") = py::none(),
        py::arg("witnesses") = py::none(), py::arg("cap") = 24,
        "Exact minimum guard set by exhaustive search (small instances).");

  m.def("random_terrain",
        [](std::uint64_t seed, std::int64_t steps, std::int64_t max_run, std::int64_t max_jump,
           const std::string& ends) {
          GenParams p;
          p.seed = seed;
          p.steps = steps;
          p.max_run = max_run;
          p.max_jump = max_jump;
          p.ends = ends == "horizontal" ? EndStyle::HorizontalBoth
                   : ends == "mixed"    ? EndStyle::Mixed
                                        : EndStyle::VerticalBoth;
          return random_terrain(p);
        },
        py::arg("seed"), py::arg("steps") = 8, py::arg("max_run") = 4, py::arg("max_jump") = 4,
        py::arg("ends") = "vertical");

  m.def("fixtures", [] {
    py::dict d;
    for (const auto& [name, t] : fixtures()) d[py::cast(name)] = t;
    return d;
  });

  m.def("render_svg",
        [](const Terrain& t, std::optional<std::vector<VertexId>> guards,
           std::optional<std::vector<std::vector<VertexId>>> lists) {
          if (!guards) return render_svg(t);
          SolutionData data;
          data.guards = *guards;
          if (lists) data.lists = *lists;
          else data.lists.assign(guards->size(), {});
          return render_svg(t, &data);
        },
        py::arg("terrain"), py::arg("guards") = py::none(), py::arg("lists") = py::none());
}
