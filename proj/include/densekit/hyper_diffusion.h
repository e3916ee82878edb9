#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>

#include "densekit/graph.h"
#include "densekit/rng.h"
#include "densekit/simplex.h"

namespace densekit {

// Discrepancy of an edge under f: max_{u in e} f(u) + min_{v in e} f(v).
struct EdgeDiscrepancy {
  std::uint32_t edge;
  double delta;
  double c;  // w(e) |delta|
};

std::vector<EdgeDiscrepancy> edge_discrepancies(const Hypergraph& h, const Eigen::VectorXd& f);

// f^T J f = sum_e w(e) delta_f(e)^2 over ||f||_w^2; zero measure is an error.
double rayleigh_quotient(const Hypergraph& h, const Eigen::VectorXd& f);

// One recursion level inside an equivalence class: the chosen set P received
// the common rate delta.
struct RateLevel {
  std::vector<VertexId> cls;     // class members still unassigned at this level
  std::vector<VertexId> chosen;  // P
  double delta;
};

struct RatePlan {
  Eigen::VectorXd r;  // dr/dt per vertex
  // r_e(v) for every participating (edge, vertex) pair; zero elsewhere.
  std::map<std::pair<std::uint32_t, VertexId>, double> edge_contrib;
  std::vector<RateLevel> levels;
};

// The unique rate of change satisfying the diffusion conservation and
// monotonicity rules, computed per equivalence class of equal f-values by the
// recursive densest-subset linear program. Classes of at most
// `exact_class_limit` members are solved over exact rationals.
RatePlan compute_change_rate(const Hypergraph& h, const Eigen::VectorXd& f,
                             int exact_class_limit = 64,
                             SimplexSolver<double>::PivotRule rule = SimplexSolver<double>::PivotRule::Bland);

struct RateVerification {
  bool ok = false;
  double max_rule1_error = 0;   // worst |sum deg r_e - (-w delta)| over edge sides
  double max_flow_deficit = 0;  // worst cut({s}) - maxflow over levels
  double max_consistency_error = 0;  // worst |r(v) - sum_e r_e(v)|
  std::string detail;
};

// Rebuilds the per-level flow networks from (h, f, plan.r), checks that the
// max-flow saturates the source cut (so a valid contribution set exists), and
// re-checks the conservation sums on plan.edge_contrib.
RateVerification verify_rate_plan(const Hypergraph& h, const Eigen::VectorXd& f, const RatePlan& plan,
                                  double tol = 1e-9);

// FBCA rate: split each edge weight evenly across the max-min vertex pairs.
Eigen::VectorXd even_split_rate(const Hypergraph& h, const Eigen::VectorXd& f);

enum class DiffusionMode { ExactLp, EvenSplit };

struct DiffusionState {
  Eigen::VectorXd f;
  double t = 0;
  double eps = 1.0;
  std::vector<double> rq_history;
};

DiffusionState make_diffusion_state(const Hypergraph& h, const Eigen::VectorXd& f0, double eps = 1.0);

// f <- f + eps r, then renormalised to ||f||_w = 1.
void diffusion_step(const Hypergraph& h, DiffusionState& state, DiffusionMode mode);

// Two-sided sweep over |f| thresholds scored by hypergraph bipartiteness.
BipartitePair two_sided_sweep_hyper(const Hypergraph& h, const Eigen::VectorXd& f);

struct DiffusionResult {
  double lambda = 0;  // R_J(f_final)
  Eigen::VectorXd f;
  BipartitePair pair;
  bool converged = false;
  int iters = 0;
  std::vector<double> rq_history;
};

// Diffusion loop followed by the two-sided sweep. Convergence: the Rayleigh
// quotient ratio stays above `convergence_ratio` for five consecutive steps,
// or the quotient falls below 1e-12.
DiffusionResult find_bipartite_components(const Hypergraph& h, const Eigen::VectorXd& f0, double eps = 1.0,
                                          double convergence_ratio = 0.9999, int max_iters = 1000,
                                          DiffusionMode mode = DiffusionMode::ExactLp);

// Default starting vector: bottom signless eigenvector of the clique reduction.
Eigen::VectorXd default_start_vector(const Hypergraph& h);

// Each hyperedge becomes a clique with pairwise weight w(e)/(rank(e)-1); this
// preserves every vertex degree.
Graph clique_reduction(const Hypergraph& h);

// Each hyperedge becomes a single uniformly chosen pair with weight w(e).
Graph random_reduction(const Hypergraph& h, CounterRng& rng);

// Baseline: two-sided sweep of the clique reduction's bottom signless
// eigenvector, scored by hypergraph bipartiteness on the original instance.
BipartitePair clique_cut(const Hypergraph& h);

}  // namespace densekit
