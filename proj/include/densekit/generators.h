#pragma once

#include <cstdint>
#include <string>

#include "densekit/graph.h"
#include "densekit/io.h"

namespace densekit {

struct GraphSample {
  Graph graph;
  Partition truth;
};

struct DigraphSample {
  Digraph graph;
  Partition truth;
};

struct HypergraphSample {
  Hypergraph graph;
  VertexSet left, right;
};

// SBM(n, k, p, q): k near-equal clusters, intra-pair probability p, inter q.
// When k does not divide n the first n mod k clusters get the extra vertex.
GraphSample sbm(std::size_t n, int k, double p, double q, std::uint64_t seed);

// Generalised SBM driven by a meta-graph on k vertices: clusters of size n
// each; inter-cluster pairs are only sampled along meta-graph edges.
GraphSample meta_sbm(const Graph& meta, std::size_t cluster_size, double p, double q, std::uint64_t seed);

// Three-cluster model with a planted dense pair (C1, C2):
// n2 = n1, n3 = 10 n1, p2 = 2 p1, q2 = 0.1 p1; C1-C2 pairs connect with q1.
GraphSample local_sbm3(std::size_t n1, double p1, double q1, std::uint64_t seed);

// Cyclic block model: k clusters of size n; intra edges w.p. p with uniform
// orientation; C_i -> C_{i+1 mod k} pairs w.p. q oriented forward w.p. eta.
DigraphSample cbm(int k, std::size_t n, double p, double q, double eta, std::uint64_t seed);

// CBM plus two local clusters of size n_extra attached to C_1: the extra pair
// is internally dense (q1x) and wired to C_1 with probability q2x, oriented
// C_1 -> C_{k+1} and C_{k+2} -> C_1 with probability eta_x.
DigraphSample cbm_plus(int k, std::size_t n, double p, double q, double eta, std::size_t n_extra,
                       double q1x, double q2x, double eta_x, std::uint64_t seed);

// Two-cluster r-uniform hypergraph: r-subsets inside either half appear with
// probability p, mixed subsets with probability q. Sampled by drawing a
// binomial count per stratum and then distinct subsets, so the astronomically
// many candidate subsets are never enumerated.
HypergraphSample hyper_two_cluster(std::size_t n, int r, double p, double q, std::uint64_t seed);

// Union-symmetrised k-nearest-neighbour graph of row-vector points (weight 1,
// distance ties broken by index).
Graph knn_graph(const std::vector<std::vector<double>>& points, int k);

// Complete graph with Gaussian kernel weights exp(-||u - v||^2 / (2 sigma^2)).
Graph gaussian_graph(const std::vector<std::vector<double>>& points, double sigma);

// Small named meta-graphs for experiment presets: "cycle:K" and "grid:AxB".
Graph named_meta_graph(const std::string& name);

}  // namespace densekit
