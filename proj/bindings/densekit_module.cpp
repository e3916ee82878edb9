// Python bindings for the core clustering operations.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "densekit/cover.h"
#include "densekit/cuts.h"
#include "densekit/eigs.h"
#include "densekit/generators.h"
#include "densekit/hyper_diffusion.h"
#include "densekit/local_bipartite.h"
#include "densekit/local_directed.h"
#include "densekit/metrics.h"
#include "densekit/spectral.h"

namespace py = pybind11;
using namespace densekit;

namespace {

Graph make_graph(std::size_t n, const std::vector<std::tuple<VertexId, VertexId, double>>& edges) {
  std::vector<WeightedEdge> es;
  es.reserve(edges.size());
  for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
  return Graph(n, es);
}

Digraph make_digraph(std::size_t n, const std::vector<std::tuple<VertexId, VertexId, double>>& arcs) {
  std::vector<Arc> as;
  as.reserve(arcs.size());
  for (const auto& [u, v, w] : arcs) as.push_back({u, v, w});
  return Digraph(n, as);
}

Hypergraph make_hypergraph(std::size_t n,
                           const std::vector<std::pair<double, std::vector<VertexId>>>& edges) {
  std::vector<Hyperedge> es;
  es.reserve(edges.size());
  for (const auto& [w, members] : edges) es.push_back({w, members});
  return Hypergraph(n, std::move(es));
}

py::dict pair_dict(const BipartitePair& p) {
  py::dict d;
  d["L"] = p.left;
  d["R"] = p.right;
  d["beta"] = p.beta;
  d["found"] = p.found;
  return d;
}

}  // namespace

PYBIND11_MODULE(_densekit, m) {
  m.doc() = "spectral and local clustering for graphs, digraphs, and hypergraphs";

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("degree", &Graph::degree)
      .def("total_volume", &Graph::total_volume)
      .def("volume", &Graph::volume)
      .def("connected", &Graph::connected)
      .def("edges", [](const Graph& g) {
        std::vector<std::tuple<VertexId, VertexId, double>> out;
        for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.w);
        return out;
      });

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&make_digraph), py::arg("vertex_count"), py::arg("arcs"))
      .def_property_readonly("vertex_count", &Digraph::vertex_count)
      .def_property_readonly("arc_count", &Digraph::arc_count)
      .def("out_degree", &Digraph::out_degree)
      .def("in_degree", &Digraph::in_degree)
      .def("arcs", [](const Digraph& d) {
        std::vector<std::tuple<VertexId, VertexId, double>> out;
        for (const auto& a : d.arcs()) out.emplace_back(a.tail, a.head, a.w);
        return out;
      });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init(&make_hypergraph), py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Hypergraph::vertex_count)
      .def_property_readonly("edge_count", &Hypergraph::edge_count)
      .def("degree", &Hypergraph::degree)
      .def("total_volume", &Hypergraph::total_volume)
      .def("edges", [](const Hypergraph& h) {
        std::vector<std::pair<double, std::vector<VertexId>>> out;
        for (const auto& e : h.edges()) out.emplace_back(e.w, e.members);
        return out;
      });

  // cut functionals
  m.def("conductance", &conductance, py::arg("graph"), py::arg("vertex_set"));
  m.def("bipartiteness", &bipartiteness, py::arg("graph"), py::arg("L"), py::arg("R"));
  m.def("hyper_bipartiteness", &hyper_bipartiteness, py::arg("hypergraph"), py::arg("L"), py::arg("R"));
  m.def("flow_ratio", &flow_ratio, py::arg("digraph"), py::arg("L"), py::arg("R"));
  m.def("cut_imbalance", &cut_imbalance, py::arg("digraph"), py::arg("L"), py::arg("R"));
  m.def("restricted_weight", &restricted_weight, py::arg("hypergraph"), py::arg("A"), py::arg("B"),
        py::arg("C"));

  // covers
  m.def("double_cover", &double_cover);
  m.def("semi_double_cover", &semi_double_cover);

  // spectral
  m.def(
      "smallest_eigs",
      [](const Graph& g, int k, const std::string& kind) {
        LaplacianKind lk = kind == "signless" ? LaplacianKind::SignlessNormalized
                                              : LaplacianKind::NormalizedLaplacian;
        EigenPairs p = smallest_eigs(lk, g, k);
        return py::make_tuple(p.values, p.vectors);
      },
      py::arg("graph"), py::arg("k"), py::arg("kind") = "normalized");
  m.def("sweep_set_cheeger", &sweep_set_cheeger);
  m.def("spectral_cluster", &spectral_cluster, py::arg("graph"), py::arg("k"), py::arg("ell"),
        py::arg("seed") = 0);
  m.def(
      "two_sided_sweep",
      [](const Graph& g, const Eigen::VectorXd& f) { return pair_dict(two_sided_sweep(g, f)); },
      py::arg("graph"), py::arg("f"));

  // local clustering
  m.def(
      "loc_bipart_dc",
      [](const Graph& g, VertexId seed, double gamma, double beta_hat, bool best_prefix) {
        auto r = loc_bipart_dc(g, seed, gamma, beta_hat,
                               best_prefix ? SweepMode::BestPrefix : SweepMode::FirstQualifying);
        py::dict d;
        d["L"] = r.left;
        d["R"] = r.right;
        d["beta"] = r.beta;
        d["volume"] = r.volume;
        d["found"] = r.found;
        d["pushes"] = r.pushes;
        return d;
      },
      py::arg("graph"), py::arg("seed"), py::arg("gamma"), py::arg("beta"), py::arg("best_prefix") = false);
  m.def(
      "evo_cut_directed",
      [](const Digraph& d, VertexId u, const std::string& side, double phi, std::uint64_t seed,
         int steps) {
        EvoCutResult r = side == "both" ? evo_cut_directed_both(d, u, phi, seed, steps)
                                        : evo_cut_directed(d, u, side == "2" ? 2 : 1, phi, seed, steps);
        py::dict out;
        out["L"] = r.left;
        out["R"] = r.right;
        out["flow_ratio"] = r.flow_ratio;
        out["cut_imbalance"] = r.cut_imbalance;
        out["found"] = r.found;
        out["steps"] = r.steps;
        return out;
      },
      py::arg("digraph"), py::arg("seed"), py::arg("side") = "both", py::arg("phi") = 0.01,
      py::arg("rng_seed") = 0, py::arg("steps") = -1);

  // hypergraph diffusion
  m.def(
      "find_bipartite_components",
      [](const Hypergraph& h, py::object f0, double eps, int max_iters, const std::string& mode) {
        Eigen::VectorXd start =
            f0.is_none() ? default_start_vector(h) : f0.cast<Eigen::VectorXd>();
        auto r = find_bipartite_components(h, start, eps, 0.9999, max_iters,
                                           mode == "approx" ? DiffusionMode::EvenSplit
                                                            : DiffusionMode::ExactLp);
        py::dict d;
        d["lambda"] = r.lambda;
        d["L"] = r.pair.left;
        d["R"] = r.pair.right;
        d["beta_h"] = r.pair.beta;
        d["converged"] = r.converged;
        d["iters"] = r.iters;
        d["rq_history"] = r.rq_history;
        d["f"] = r.f;
        return d;
      },
      py::arg("hypergraph"), py::arg("f0") = py::none(), py::arg("eps") = 1.0,
      py::arg("max_iters") = 1000, py::arg("mode") = "lp");
  m.def(
      "two_sided_sweep_hyper",
      [](const Hypergraph& h, const Eigen::VectorXd& f) { return pair_dict(two_sided_sweep_hyper(h, f)); },
      py::arg("hypergraph"), py::arg("f"));
  m.def("clique_reduction", &clique_reduction);
  m.def("clique_cut", [](const Hypergraph& h) { return pair_dict(clique_cut(h)); });
  m.def("rayleigh_quotient", &rayleigh_quotient, py::arg("hypergraph"), py::arg("f"));

  // generators (each returns the instance and its ground truth)
  m.def(
      "sbm",
      [](std::size_t n, int k, double p, double q, std::uint64_t seed) {
        auto s = sbm(n, k, p, q, seed);
        return py::make_tuple(s.graph, s.truth);
      },
      py::arg("n"), py::arg("k"), py::arg("p"), py::arg("q"), py::arg("seed") = 0);
  m.def(
      "meta_sbm",
      [](const std::string& meta, std::size_t cluster_size, double p, double q, std::uint64_t seed) {
        auto s = meta_sbm(named_meta_graph(meta), cluster_size, p, q, seed);
        return py::make_tuple(s.graph, s.truth);
      },
      py::arg("meta"), py::arg("cluster_size"), py::arg("p"), py::arg("q"), py::arg("seed") = 0);
  m.def(
      "local_sbm3",
      [](std::size_t n1, double p1, double q1, std::uint64_t seed) {
        auto s = local_sbm3(n1, p1, q1, seed);
        return py::make_tuple(s.graph, s.truth);
      },
      py::arg("n1"), py::arg("p1"), py::arg("q1"), py::arg("seed") = 0);
  m.def(
      "cbm",
      [](int k, std::size_t n, double p, double q, double eta, std::uint64_t seed) {
        auto s = cbm(k, n, p, q, eta, seed);
        return py::make_tuple(s.graph, s.truth);
      },
      py::arg("k"), py::arg("n"), py::arg("p"), py::arg("q"), py::arg("eta"), py::arg("seed") = 0);
  m.def(
      "cbm_plus",
      [](int k, std::size_t n, double p, double q, double eta, std::size_t n_extra, double q1x,
         double q2x, double eta_x, std::uint64_t seed) {
        auto s = cbm_plus(k, n, p, q, eta, n_extra, q1x, q2x, eta_x, seed);
        return py::make_tuple(s.graph, s.truth);
      },
      py::arg("k"), py::arg("n"), py::arg("p"), py::arg("q"), py::arg("eta"), py::arg("n_extra"),
      py::arg("q1x") = 0.5, py::arg("q2x") = 0.005, py::arg("eta_x") = 1.0, py::arg("seed") = 0);
  m.def(
      "hyper_two_cluster",
      [](std::size_t n, int r, double p, double q, std::uint64_t seed) {
        auto s = hyper_two_cluster(n, r, p, q, seed);
        return py::make_tuple(s.graph, s.left, s.right);
      },
      py::arg("n"), py::arg("r"), py::arg("p"), py::arg("q"), py::arg("seed") = 0);
  m.def("knn_graph", &knn_graph, py::arg("points"), py::arg("k"));
  m.def("gaussian_graph", &gaussian_graph, py::arg("points"), py::arg("sigma"));

  // metrics
  m.def("rand_index", &rand_index, py::arg("truth"), py::arg("pred"));
  m.def("adjusted_rand_index", &adjusted_rand_index, py::arg("truth"), py::arg("pred"));
  m.def("f1_pair_score", &f1_pair_score, py::arg("C1"), py::arg("C2"), py::arg("L"), py::arg("R"));
  m.def("misclassified_ratio", &misclassified_ratio, py::arg("C1"), py::arg("C2"), py::arg("L"),
        py::arg("R"));
  m.def("matched_accuracy", &matched_accuracy, py::arg("truth"), py::arg("pred"), py::arg("n"));
}
