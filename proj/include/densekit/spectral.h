#pragma once

#include <Eigen/Dense>
#include <optional>

#include "densekit/eigs.h"
#include "densekit/graph.h"
#include "densekit/io.h"

namespace densekit {

// Spectral embedding F(u) = deg(u)^{-1/2} (f_1(u), ..., f_ell(u)).
struct Embedding {
  Eigen::MatrixXd points;          // one row per embedded vertex
  std::vector<VertexId> vertices;  // row -> vertex id
  std::vector<double> weights;     // deg(u), used as k-means weights
  int ell = 0;
};

Embedding spectral_embedding(const Graph& g, int ell);

// Cheeger sweep: order vertices by f_2(v)/sqrt(deg v) and return the prefix
// with minimum conductance.
VertexSet sweep_set_cheeger(const Graph& g);

// Spectral clustering into k clusters using ell <= k eigenvectors.
// Zero-degree vertices come back as singleton clusters.
Partition spectral_cluster(const Graph& g, int k, int ell, std::uint64_t seed = 0);

// Two-sided sweep over |f| thresholds scored by graph bipartiteness;
// ties broken towards smaller vol(L u R).
BipartitePair two_sided_sweep(const Graph& g, const Eigen::VectorXd& f);

struct MetaGraph {
  Eigen::MatrixXd adjacency;       // k x k, diagonal = total internal ordered-pair weight
  Eigen::VectorXd degrees;         // row sums = vol(S_i)
  Eigen::VectorXd gammas;          // eigenvalues of N_M, ascending
  Eigen::MatrixXd eigenvectors;    // columns, matching gammas
};

// Collapse a partition into its meta-graph of inter-cluster weights.
MetaGraph meta_graph_of(const Graph& g, const Partition& partition);

// Psi(ell) = sum_{i<=ell} gamma_i / lambda_{ell+1}. Returns infinity when
// lambda_{ell+1} vanishes (fewer than ell+1 connected pieces of spectrum).
double psi(const Graph& g, const Partition& partition, int ell);

}  // namespace densekit
