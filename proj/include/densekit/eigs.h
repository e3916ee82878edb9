#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "densekit/graph.h"

namespace densekit {

// Graph operators with spectra in [0, 2]:
//   NormalizedLaplacian  N = I - D^{-1/2} A D^{-1/2}
//   SignlessNormalized   Z = D^{-1/2} (D + A) D^{-1/2} = 2I - N
//   LazyWalk             W = (I + A D^{-1}) / 2
enum class LaplacianKind { NormalizedLaplacian, SignlessNormalized, LazyWalk };

// Full-size sparse matrix; rows/columns of zero-degree vertices are zero.
Eigen::SparseMatrix<double> laplacian_matrix(LaplacianKind kind, const Graph& g);

struct EigenPairs {
  Eigen::VectorXd values;        // sorted by the requested end of the spectrum
  Eigen::MatrixXd vectors;       // orthonormal columns, rows indexed by vertex
  std::vector<VertexId> dropped; // zero-degree vertices excluded from the system
};

// k eigenpairs at the bottom (ascending) or top (descending) of the spectrum
// of N or Z. Dense solve for small systems, Lanczos with full
// reorthogonalisation otherwise. Per-pair residual ||Mx - lambda x|| <= 1e-8.
EigenPairs smallest_eigs(LaplacianKind kind, const Graph& g, int k);
EigenPairs largest_eigs(LaplacianKind kind, const Graph& g, int k);

// f = D^{-1/2} u for u the bottom eigenvector of Z; the natural starting
// vector for signless diffusions. Zero on zero-degree vertices.
Eigen::VectorXd min_signless_vector(const Graph& g);

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace densekit
