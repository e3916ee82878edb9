#include "densekit/experiments.h"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "densekit/cuts.h"
#include "densekit/generators.h"
#include "densekit/hyper_diffusion.h"
#include "densekit/local_bipartite.h"
#include "densekit/local_directed.h"
#include "densekit/metrics.h"
#include "densekit/rng.h"
#include "densekit/spectral.h"

namespace densekit {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void parallel_trials(int trials, const std::function<void(int)>& body) {
  int workers = std::min(thread_cap(), trials);
  if (workers <= 1) {
    for (int t = 0; t < trials; ++t) body(t);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        int t = next.fetch_add(1);
        if (t >= trials) return;
        body(t);
      }
    });
  for (auto& th : pool) th.join();
}

// Partition {L, R, rest} against {C1, C2, rest} over a common universe.
Partition pair_partition(const VertexSet& l, const VertexSet& r, std::size_t n) {
  VertexSet rest;
  auto in = std::vector<char>(n, 0);
  for (VertexId v : l) in[v] = 1;
  for (VertexId v : r) in[v] = 1;
  for (VertexId v = 0; v < n; ++v)
    if (!in[v]) rest.push_back(v);
  Partition parts{l, r};
  if (!rest.empty()) parts.push_back(std::move(rest));
  return parts;
}

}  // namespace

int thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  int cap = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("DENSEKIT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) cap = v;
  }
  return cap;
}

LocalBipartiteRow table_5_1_row(int row) {
  switch (row) {
    case 1:
      return {1000, 1e-3, 0.018};
    case 2:
      return {10000, 1e-4, 0.0018};
    case 3:
      return {100000, 1e-5, 0.00018};
    case 4:
      return {1000, 4e-3, 0.012};
  }
  throw std::invalid_argument("row must be in 1..4");
}

LocalBipartiteStats run_local_bipartite_experiment(const LocalBipartiteRow& row, int trials,
                                                   std::uint64_t seed, double alpha) {
  LocalBipartiteStats stats;
  stats.trials = trials;
  std::vector<double> betas(trials), aris(trials), miscl(trials), times(trials);
  std::vector<double> tbeta(trials), tvol(trials);

  parallel_trials(trials, [&](int t) {
    CounterRng trial_rng(seed, 1000 + static_cast<std::uint64_t>(t));
    GraphSample s = local_sbm3(row.n1, row.p1, row.q1, trial_rng.next_u64());
    const auto& c1 = s.truth[0];
    const auto& c2 = s.truth[1];
    double gamma = s.graph.volume(c1) + s.graph.volume(c2);
    tbeta[t] = bipartiteness(s.graph, c1, c2);
    tvol[t] = gamma;

    VertexSet pool = set_union(c1, c2);
    VertexId start = pool[trial_rng.next_below(pool.size())];

    auto t0 = Clock::now();
    auto res = loc_bipart_dc_params(s.graph, start, alpha, 1.0 / (20.0 * gamma), 1.0,
                                    SweepMode::BestPrefix);
    times[t] = ms_since(t0);
    betas[t] = res.beta;
    miscl[t] = misclassified_ratio(c1, c2, res.left, res.right);
    Partition pred = pair_partition(res.left, res.right, s.graph.vertex_count());
    Partition truth = pair_partition(c1, c2, s.graph.vertex_count());
    aris[t] = adjusted_rand_index(truth, pred);
  });

  auto mean = [](const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  };
  stats.mean_beta = mean(betas);
  stats.mean_ari = mean(aris);
  stats.mean_misclassified = mean(miscl);
  stats.mean_runtime_ms = mean(times);
  stats.target_beta = mean(tbeta);
  stats.target_volume = mean(tvol);
  return stats;
}

DirectedStats run_cbm_plus_experiment(int k, std::size_t n, std::size_t n_extra, int trials,
                                      std::uint64_t seed, int esp_steps) {
  DirectedStats stats;
  stats.trials = trials;
  std::vector<double> aris(trials), flows(trials), cis(trials), times(trials);

  parallel_trials(trials, [&](int t) {
    CounterRng trial_rng(seed, 2000 + static_cast<std::uint64_t>(t));
    DigraphSample s = cbm_plus(k, n, 0.001, 0.01, 0.9, n_extra, 0.5, 0.005, 1.0, trial_rng.next_u64());
    const auto& c_a = s.truth[k];
    const auto& c_b = s.truth[k + 1];
    VertexSet pool = set_union(c_a, c_b);
    VertexId start = pool[trial_rng.next_below(pool.size())];

    auto t0 = Clock::now();
    auto res = evo_cut_directed_both(s.graph, start, 0.01, trial_rng.next_u64(), esp_steps);
    times[t] = ms_since(t0);
    flows[t] = res.found ? res.flow_ratio : 1.0;
    cis[t] = res.found ? res.cut_imbalance : 0.0;
    Partition pred = pair_partition(res.left, res.right, s.graph.vertex_count());
    Partition truth = pair_partition(c_a, c_b, s.graph.vertex_count());
    aris[t] = adjusted_rand_index(truth, pred);
  });

  auto mean = [](const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  };
  stats.mean_ari = mean(aris);
  stats.mean_flow_ratio = mean(flows);
  stats.mean_cut_imbalance = mean(cis);
  stats.mean_runtime_ms = mean(times);
  return stats;
}

std::vector<BetaSweepRow> run_beta_sweep(std::size_t n1, double p1, const std::vector<double>& ratios,
                                         int trials, std::uint64_t seed) {
  std::vector<BetaSweepRow> rows(ratios.size());
  for (std::size_t ri = 0; ri < ratios.size(); ++ri) {
    LocalBipartiteRow params{n1, p1, p1 * ratios[ri]};
    auto stats = run_local_bipartite_experiment(params, trials, seed + ri);
    rows[ri] = {ratios[ri], stats.target_beta, stats.mean_beta, stats.mean_ari};
  }
  return rows;
}

std::vector<MetaSweepCell> run_meta_sweep(const std::string& meta_name, std::size_t cluster_size, double p,
                                          const std::vector<double>& ratios, const std::vector<int>& ells,
                                          int trials, std::uint64_t seed) {
  Graph meta = named_meta_graph(meta_name);
  const int k = static_cast<int>(meta.vertex_count());
  const std::size_t n = cluster_size * k;

  struct Job {
    double ratio;
    int trial;
  };
  std::vector<Job> jobs;
  for (double ratio : ratios)
    for (int t = 0; t < trials; ++t) jobs.push_back({ratio, t});

  // accuracy[job][ell index]
  std::vector<std::vector<double>> accuracy(jobs.size(), std::vector<double>(ells.size(), 0));
  parallel_trials(static_cast<int>(jobs.size()), [&](int j) {
    const Job& job = jobs[j];
    CounterRng trial_rng(seed, 3000 + static_cast<std::uint64_t>(j));
    GraphSample s = meta_sbm(meta, cluster_size, p, p / job.ratio, trial_rng.next_u64());
    for (std::size_t e = 0; e < ells.size(); ++e) {
      Partition pred = spectral_cluster(s.graph, k, ells[e], trial_rng.at(e));
      accuracy[j][e] = matched_accuracy(s.truth, pred, n);
    }
  });

  std::vector<MetaSweepCell> cells;
  for (std::size_t ri = 0; ri < ratios.size(); ++ri)
    for (std::size_t e = 0; e < ells.size(); ++e) {
      double sum = 0;
      for (int t = 0; t < trials; ++t) sum += accuracy[ri * trials + t][e];
      cells.push_back({ratios[ri], ells[e], sum / trials});
    }
  return cells;
}

std::vector<HyperSweepRow> run_hyper_sweep(std::size_t n, int r, double p,
                                           const std::vector<double>& ratios, int trials,
                                           std::uint64_t seed, bool include_fbc) {
  struct Job {
    std::size_t ratio_idx;
    int trial;
  };
  std::vector<Job> jobs;
  for (std::size_t ri = 0; ri < ratios.size(); ++ri)
    for (int t = 0; t < trials; ++t) jobs.push_back({ri, t});

  std::vector<HyperSweepRow> rows(ratios.size());
  for (std::size_t ri = 0; ri < ratios.size(); ++ri) {
    rows[ri].ratio = ratios[ri];
    rows[ri].has_fbc = include_fbc;
  }
  std::vector<double> fbca(jobs.size()), clique(jobs.size()), fbc(jobs.size());
  std::vector<double> fbca_ms(jobs.size()), clique_ms(jobs.size()), fbc_ms(jobs.size());

  parallel_trials(static_cast<int>(jobs.size()), [&](int j) {
    const Job& job = jobs[j];
    CounterRng trial_rng(seed, 4000 + static_cast<std::uint64_t>(j));
    HypergraphSample s = hyper_two_cluster(n, r, p, p * ratios[job.ratio_idx], trial_rng.next_u64());
    Eigen::VectorXd f0 = default_start_vector(s.graph);

    auto t0 = Clock::now();
    auto approx = find_bipartite_components(s.graph, f0, 1.0, 0.9999, 500, DiffusionMode::EvenSplit);
    fbca_ms[j] = ms_since(t0);
    fbca[j] = approx.pair.beta;

    t0 = Clock::now();
    auto cc = clique_cut(s.graph);
    clique_ms[j] = ms_since(t0);
    clique[j] = cc.beta;

    if (include_fbc) {
      t0 = Clock::now();
      auto exact = find_bipartite_components(s.graph, f0, 1.0, 0.9999, 500, DiffusionMode::ExactLp);
      fbc_ms[j] = ms_since(t0);
      fbc[j] = exact.pair.beta;
    }
  });

  for (std::size_t j = 0; j < jobs.size(); ++j) {
    auto& row = rows[jobs[j].ratio_idx];
    row.fbca_beta += fbca[j] / trials;
    row.clique_beta += clique[j] / trials;
    row.fbca_runtime_ms += fbca_ms[j] / trials;
    row.clique_runtime_ms += clique_ms[j] / trials;
    if (include_fbc) {
      row.fbc_beta += fbc[j] / trials;
      row.fbc_runtime_ms += fbc_ms[j] / trials;
    }
  }
  return rows;
}

}  // namespace densekit
