#pragma once

#include <cstdint>
#include <unordered_map>

#include "densekit/graph.h"

namespace densekit {

// Sparse Pagerank state on the implicit double cover: mass and residual for
// both copies of every touched vertex.
struct DcVector {
  std::unordered_map<VertexId, double> p1, p2, r1, r2;

  double mass() const;      // ||p1||_1 + ||p2||_1
  double residual() const;  // ||r1||_1 + ||r2||_1
};

// One push at (u, side): converts alpha r_side(u) into mass, keeps half of the
// rest in place and spreads the other half to the opposite copies of u's
// neighbours, weighted by w(u, v)/deg(u).
DcVector dc_push(double alpha, VertexId u, int side, const DcVector& state, const Graph& g);

struct AprResult {
  DcVector vec;
  std::uint64_t pushes = 0;
  double pushed_volume = 0;  // sum of deg(u) over pushes; O(1/(eps alpha)) bound
};

// Approximate Pagerank apr(alpha, chi_{v1}, r) on the double cover, processed
// with a FIFO queue of above-threshold (vertex, side) pairs.
AprResult apr_dc(const Graph& g, VertexId v, double alpha, double eps);

// sigma: entrywise max(0, difference of copy masses); support is simple.
// Input and output are (copy-1, copy-2) value pairs indexed by base vertex.
std::unordered_map<VertexId, std::pair<double, double>> simplify(
    const std::unordered_map<VertexId, std::pair<double, double>>& mass);

enum class SweepMode {
  FirstQualifying,  // return the first prefix at or below the target
  BestPrefix,       // scan the full support and return the minimiser
};

struct SweepPairResult {
  VertexSet left, right;
  double beta = 1.0;
  double volume = 0;
  std::size_t sweep_index = 0;
  bool found = false;
  std::uint64_t pushes = 0;
};

// Local discovery of a densely connected pair from a seed vertex.
// alpha and eps follow the target-volume / target-bipartiteness coupling
// alpha = beta_hat^2 / 378, eps = 1 / (20 gamma).
SweepPairResult loc_bipart_dc(const Graph& g, VertexId seed, double gamma, double beta_hat,
                              SweepMode mode = SweepMode::FirstQualifying);

// Same search with the Pagerank parameters supplied directly.
SweepPairResult loc_bipart_dc_params(const Graph& g, VertexId seed, double alpha, double eps,
                                     double beta_hat, SweepMode mode = SweepMode::FirstQualifying);

// Convenience wrapper taking the planted pair's bipartiteness rather than the
// output target: applies beta_hat = sqrt(7560 beta).
SweepPairResult loc_bipart_dc_target(const Graph& g, VertexId seed, double gamma, double beta);

// Piecewise-linear concave envelope of set mass against set volume.
struct LsCurve {
  std::vector<double> x;  // volumes, increasing, x[0] = 0
  std::vector<double> y;  // masses, y[0] = 0

  double at(double volume) const;  // linear interpolation
};

// Curve of a nonnegative vector over a graph; `p` maps vertex -> value and
// absent vertices carry zero mass.
LsCurve ls_curve(const std::unordered_map<VertexId, double>& p, const Graph& g);

}  // namespace densekit
