#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "densekit/graph.h"

namespace densekit {

// Trials run concurrently with per-trial RNG streams; DENSEKIT_THREADS caps
// the worker count.
int thread_cap();

struct LocalBipartiteRow {
  std::size_t n1;
  double p1, q1;
};

// The synthetic rows of the planted dense-pair benchmark.
LocalBipartiteRow table_5_1_row(int row);

struct LocalBipartiteStats {
  int trials = 0;
  double mean_beta = 0, mean_ari = 0, mean_misclassified = 0, mean_runtime_ms = 0;
  double target_beta = 0, target_volume = 0;
};

// Planted dense-pair recovery, averaged over seeded trials with a random
// starting vertex inside the pair. The Pagerank resolution follows
// eps = 1/(20 gamma) with gamma = vol(C1 u C2); the teleport probability is a
// preset constant because the theoretical coupling alpha = beta_hat^2/378
// with beta_hat <= 1 is far below the useful range at these scales.
LocalBipartiteStats run_local_bipartite_experiment(const LocalBipartiteRow& row, int trials,
                                                   std::uint64_t seed, double alpha = 0.05);

struct DirectedStats {
  int trials = 0;
  double mean_ari = 0, mean_flow_ratio = 0, mean_cut_imbalance = 0, mean_runtime_ms = 0;
};

// CBM+ local recovery: seeds drawn from the two extra clusters; the evolving
// set process runs for a fixed number of steps.
DirectedStats run_cbm_plus_experiment(int k, std::size_t n, std::size_t n_extra, int trials,
                                      std::uint64_t seed, int esp_steps = 30);

struct BetaSweepRow {
  double ratio;  // q1 / p1
  double target_beta = 0;
  double mean_beta = 0, mean_ari = 0;
};

// Recovery quality versus the planted pair's density ratio: higher q1/p1
// means a lower target bipartiteness and an easier instance.
std::vector<BetaSweepRow> run_beta_sweep(std::size_t n1, double p1, const std::vector<double>& ratios,
                                         int trials, std::uint64_t seed);

struct MetaSweepCell {
  double ratio;
  int ell;
  double mean_accuracy;
};

// Spectral clustering accuracy for several eigenvector counts over meta-graph
// SBM instances at the given p/q ratios.
std::vector<MetaSweepCell> run_meta_sweep(const std::string& meta_name, std::size_t cluster_size, double p,
                                          const std::vector<double>& ratios, const std::vector<int>& ells,
                                          int trials, std::uint64_t seed);

struct HyperSweepRow {
  double ratio;
  double fbca_beta = 0, clique_beta = 0, fbc_beta = 0;
  double fbca_runtime_ms = 0, clique_runtime_ms = 0, fbc_runtime_ms = 0;
  bool has_fbc = false;
};

// Two-cluster hypergraph benchmark comparing the diffusion (approximate and
// optionally exact) against the clique-reduction baseline.
std::vector<HyperSweepRow> run_hyper_sweep(std::size_t n, int r, double p,
                                           const std::vector<double>& ratios, int trials,
                                           std::uint64_t seed, bool include_fbc);

}  // namespace densekit
