#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <loosehc/absorb.hpp>
#include <loosehc/connect.hpp>
#include <loosehc/models.hpp>
#include <loosehc/oracle.hpp>
#include <loosehc/pathcover.hpp>

namespace py = pybind11;
using namespace loosehc;

namespace {

std::vector<std::vector<int>> edge_lists(const Hypergraph3& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.push_back({e[0], e[1], e[2]});
  return out;
}

Hypergraph3 from_edge_lists(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.size() != 3) throw std::invalid_argument("edges must have three vertices");
    es.push_back(Hypergraph3::make_edge(e[0], e[1], e[2]));
  }
  return Hypergraph3(n, std::move(es));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "3-uniform hypergraph toolkit: degree analytics, random models, "
            "absorbers, and loose Hamilton cycle search";

  py::class_<Hypergraph3>(m, "Hypergraph3")
      .def(py::init(&from_edge_lists), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Hypergraph3::vertex_count)
      .def_property_readonly("edge_count", &Hypergraph3::edge_count)
      .def("edges", &edge_lists)
      .def("has_edge",
           [](const Hypergraph3& g, int a, int b, int c) { return g.has_edge(a, b, c); })
      .def("degree", &Hypergraph3::degree)
      .def("codegree", &Hypergraph3::codegree)
      .def("to_text", &Hypergraph3::to_text)
      .def("to_json", &Hypergraph3::to_json)
      .def_static("from_text", &Hypergraph3::from_text)
      .def_static("from_json", &Hypergraph3::from_json)
      .def_static("complete", &Hypergraph3::complete)
      .def("save", &Hypergraph3::save, py::arg("path"), py::arg("format") = "text")
      .def_static("load", &Hypergraph3::load)
      .def("__repr__", [](const Hypergraph3& g) {
        return "<Hypergraph3 n=" + std::to_string(g.vertex_count()) + " edges=" +
               std::to_string(g.edge_count()) + ">";
      });

  m.def(
      "sample_h3np",
      [](int n, double p, std::uint64_t seed) { return sample_h3np({n, p, seed}); },
      py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def(
      "extremal_codegree", [](int n) { return extremal_codegree(n).graph; }, py::arg("n"));
  m.def(
      "extremal_degree", [](int n) { return extremal_degree(n).graph; }, py::arg("n"));

  m.def("min_d_degree", &min_d_degree, py::arg("g"), py::arg("d"));
  m.def(
      "deg_set",
      [](const Hypergraph3& g, const std::vector<int>& s,
         const std::optional<std::vector<int>>& w) {
        return deg_set(g, s, w ? &*w : nullptr);
      },
      py::arg("g"), py::arg("s"), py::arg("w") = std::nullopt);
  m.def("e_triple", &e_triple, py::arg("g"), py::arg("x"), py::arg("y"), py::arg("z"));

  m.def(
      "validate_loose_path",
      [](const Hypergraph3& g, const std::vector<int>& vs) {
        auto res = validate_loose_path(g, LoosePath{vs});
        return py::make_tuple(res.ok, defect_name(res.defect));
      },
      py::arg("g"), py::arg("vertices"));
  m.def(
      "validate_loose_cycle",
      [](const Hypergraph3& g, const std::vector<int>& vs) {
        auto res = validate_loose_cycle(g, LooseCycle{vs});
        return py::make_tuple(res.ok, defect_name(res.defect));
      },
      py::arg("g"), py::arg("vertices"));

  m.def(
      "m3_density",
      [](const Hypergraph3& g) {
        auto res = m3_density(g);
        return res.value.str();
      },
      py::arg("g"));
  m.def(
      "gadget",
      [](const std::string& kind) {
        GadgetKind k;
        if (kind == "a2") k = GadgetKind::A2;
        else if (kind == "a1") k = GadgetKind::A1;
        else if (kind == "backbone") k = GadgetKind::backbone1;
        else if (kind == "contracted_backbone") k = GadgetKind::contracted_backbone;
        else throw std::invalid_argument("unknown gadget kind: " + kind);
        auto t = build_gadget_template(k);
        py::dict d;
        d["labels"] = t.labels;
        std::vector<std::vector<int>> edges;
        for (const Edge& e : t.edges) edges.push_back({e[0], e[1], e[2]});
        d["edges"] = edges;
        d["covering"] = t.covering;
        d["noncovering"] = t.noncovering;
        return d;
      },
      py::arg("kind"));

  m.def(
      "has_loose_hc",
      [](const Hypergraph3& g) {
        auto res = has_loose_hc(g);
        py::dict d;
        d["yes"] = res.yes;
        d["exhaustive"] = res.exhaustive;
        d["nodes"] = res.nodes_explored;
        if (res.witness) d["witness"] = res.witness->vertices;
        if (!res.reason.empty()) d["reason"] = res.reason;
        return d;
      },
      py::arg("g"));
  m.def("count_loose_hc", &count_loose_hc, py::arg("g"));

  m.def(
      "greedy_path_cover",
      [](const Hypergraph3& g, double rho) {
        auto cover = greedy_path_cover(g, rho);
        std::vector<std::vector<int>> paths;
        for (const auto& p : cover.paths) paths.push_back(p.vertices);
        py::dict d;
        d["paths"] = paths;
        d["within_budget"] = cover.within_budget;
        return d;
      },
      py::arg("g"), py::arg("rho") = 0.3);

  m.def(
      "find_loose_hc_pipeline",
      [](const Hypergraph3& g, double alpha, double rho, std::uint64_t seed, int retries) {
        PipelineConfig config;
        config.alpha = alpha;
        config.rho = rho;
        config.seed = seed;
        config.retries = retries;
        auto res = find_loose_hc_pipeline(g, config);
        py::dict d;
        d["found"] = res.cycle.has_value();
        d["attempts"] = res.attempts;
        if (res.cycle) d["cycle"] = res.cycle->vertices;
        else d["stage_failures"] = res.failure_summary();
        return d;
      },
      py::arg("g"), py::arg("alpha") = 0.1, py::arg("rho") = 0.3, py::arg("seed") = 0,
      py::arg("retries") = 8);
  m.def("pipeline_min_host", &pipeline_min_host, py::arg("m"), py::arg("d_mode") = 2);
}
