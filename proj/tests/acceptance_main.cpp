// Acceptance suite: every criterion prints one pass/fail line and the binary
// exits nonzero if any of them fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "densekit/cover.h"
#include "densekit/cuts.h"
#include "densekit/eigs.h"
#include "densekit/experiments.h"
#include "densekit/generators.h"
#include "densekit/hyper_diffusion.h"
#include "densekit/local_bipartite.h"
#include "densekit/metrics.h"
#include "densekit/spectral.h"
#include "test_util.h"

using namespace densekit;
using namespace densekit::test;

namespace {

struct Checker {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void(Checker&)>& body) {
  Checker c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.ok) {
    std::printf("[PASS] criterion %2d: %s (%.1fs)\n", id, name.c_str(), secs);
  } else {
    std::printf("[FAIL] criterion %2d: %s (%.1fs) -- %s\n", id, name.c_str(), secs, c.detail.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

int main() {
  criterion(1, "cover correspondences are exact", [](Checker& c) {
    CounterRng rng(101);
    int done = 0;
    while (done < 200) {
      std::size_t n = 4 + rng.next_below(17);
      Graph g = random_graph(n, 0.35, rng, done % 2 == 0);
      Graph dc = double_cover(g);
      Digraph d = random_digraph(n, 0.25, rng, done % 2 == 1);
      Graph sc = semi_double_cover(d);
      VertexSet l, r;
      for (std::size_t v = 0; v < n; ++v) {
        double u = rng.next_double();
        if (u < 0.3)
          l.push_back(static_cast<VertexId>(v));
        else if (u < 0.6)
          r.push_back(static_cast<VertexId>(v));
      }
      if (g.volume(l) + g.volume(r) > 0) {
        double lhs = conductance_one_sided(dc, lift_pair(l, r, n));
        double rhs = bipartiteness(g, l, r);
        c.expect(std::abs(lhs - rhs) <= 1e-12, "graph cover mismatch " + fmt(lhs - rhs));
      }
      if (d.volume_out(l) + d.volume_in(r) > 0) {
        double lhs = conductance_one_sided(sc, lift_pair(l, r, n));
        double rhs = flow_ratio(d, l, r);
        c.expect(std::abs(lhs - rhs) <= 1e-12, "digraph cover mismatch " + fmt(lhs - rhs));
      }
      ++done;
    }
  });

  criterion(2, "Cheeger sweep bound and spectral lower bound", [](Checker& c) {
    CounterRng rng(102);
    for (int t = 0; t < 100; ++t) {
      std::size_t n = 5 + rng.next_below(12);
      Graph g = random_connected_graph(n, 0.35, rng, t % 3 == 0);
      double lambda2 = smallest_eigs(LaplacianKind::NormalizedLaplacian, g, 2).values[1];
      double swept = conductance(g, sweep_set_cheeger(g));
      c.expect(swept <= std::sqrt(2 * lambda2) + 1e-9,
               "sweep " + fmt(swept) + " above sqrt(2 l2) " + fmt(std::sqrt(2 * lambda2)));
      double exact = brute_force_min_conductance(g);
      c.expect(lambda2 / 2 <= exact + 1e-9, "lambda2/2 " + fmt(lambda2 / 2) + " above Phi_G " + fmt(exact));
    }
  });

  criterion(3, "structure theorem inequalities on SBM samples", [](Checker& c) {
    for (int t = 0; t < 20; ++t) {
      GraphSample s = sbm(300, 3, 0.2, 0.01, 300 + t);
      const int k = 3;
      auto eig = smallest_eigs(LaplacianKind::NormalizedLaplacian, s.graph, k + 1);
      double lambda_k1 = eig.values[k];
      double max_phi = 0;
      for (const auto& cl : s.truth) max_phi = std::max(max_phi, conductance(s.graph, cl));

      Eigen::MatrixXd gbar(s.graph.vertex_count(), k);
      for (int i = 0; i < k; ++i) {
        Eigen::VectorXd col = Eigen::VectorXd::Zero(s.graph.vertex_count());
        for (VertexId v : s.truth[i]) col[v] = std::sqrt(s.graph.degree(v));
        gbar.col(i) = col / col.norm();
      }
      double sum_second = 0;
      for (int i = 0; i < k; ++i) {
        Eigen::VectorXd fhat = Eigen::VectorXd::Zero(s.graph.vertex_count());
        for (int j = 0; j < k; ++j) fhat += gbar.col(i).dot(eig.vectors.col(j)) * eig.vectors.col(j);
        double gap = (gbar.col(i) - fhat).squaredNorm();
        c.expect(gap <= max_phi / lambda_k1 + 1e-9,
                 "first inequality violated: " + fmt(gap) + " > " + fmt(max_phi / lambda_k1));
        Eigen::VectorXd ghat = Eigen::VectorXd::Zero(s.graph.vertex_count());
        for (int j = 0; j < k; ++j) ghat += eig.vectors.col(i).dot(gbar.col(j)) * gbar.col(j);
        sum_second += (eig.vectors.col(i) - ghat).squaredNorm();
      }
      c.expect(sum_second <= k * max_phi / lambda_k1 + 1e-9,
               "second inequality violated: " + fmt(sum_second));
    }
  });

  criterion(4, "fewer eigenvectors beat classical clustering at the hardest ratio", [](Checker& c) {
    auto cells = run_meta_sweep("cycle:10", 200, 0.01, {2.0, 2.5, 3.0}, {3, 10}, 10, 400);
    double acc3 = 0, acc10 = 0;
    for (const auto& cell : cells) {
      if (cell.ratio == 2.0 && cell.ell == 3) acc3 = cell.mean_accuracy;
      if (cell.ratio == 2.0 && cell.ell == 10) acc10 = cell.mean_accuracy;
    }
    c.expect(acc3 >= acc10 + 0.02,
             "ell=3 accuracy " + fmt(acc3) + " does not beat ell=10 " + fmt(acc10) + " by 0.02");
  });

  criterion(5, "approximate Pagerank identity and volume bound", [](Checker& c) {
    CounterRng rng(105);
    for (int t = 0; t < 50; ++t) {
      std::size_t n = 5 + rng.next_below(26);
      Graph g = random_connected_graph(n, 0.3, rng, t % 2 == 0);
      Graph dc = double_cover(g);
      double alpha = 0.05 + rng.next_double() * 0.4;
      double eps = 1e-4 + rng.next_double() * 1e-3;
      VertexId seed = static_cast<VertexId>(rng.next_below(n));
      AprResult res = apr_dc(g, seed, alpha, eps);

      Eigen::VectorXd p = Eigen::VectorXd::Zero(2 * n), r = Eigen::VectorXd::Zero(2 * n);
      for (const auto& [v, val] : res.vec.p1) p[v] = val;
      for (const auto& [v, val] : res.vec.p2) p[v + n] = val;
      for (const auto& [v, val] : res.vec.r1) r[v] = val;
      for (const auto& [v, val] : res.vec.r2) r[v + n] = val;
      Eigen::VectorXd chi = Eigen::VectorXd::Zero(2 * n);
      chi[seed] = 1.0;
      double err = (p + dense_ppr(dc, alpha, r) - dense_ppr(dc, alpha, chi)).cwiseAbs().maxCoeff();
      c.expect(err <= 1e-9, "Pagerank identity error " + fmt(err));

      double support_vol = 0;
      for (const auto& [v, val] : res.vec.p1)
        if (val > 0) support_vol += g.degree(v);
      for (const auto& [v, val] : res.vec.p2)
        if (val > 0) support_vol += g.degree(v);
      c.expect(support_vol <= 1.0 / (eps * alpha) + 1e-9, "support volume above 1/(eps alpha)");
    }
  });

  criterion(6, "planted dense pair recovery (table row 1)", [](Checker& c) {
    auto stats = run_local_bipartite_experiment(table_5_1_row(1), 10, 600);
    c.expect(stats.mean_ari >= 0.90, "mean ARI " + fmt(stats.mean_ari) + " below 0.90");
    c.expect(stats.mean_beta <= 0.22, "mean beta " + fmt(stats.mean_beta) + " above 0.22");
  });

  criterion(7, "directed local recovery on CBM+", [](Checker& c) {
    auto stats = run_cbm_plus_experiment(3, 1000, 100, 10, 700);
    c.expect(stats.mean_ari >= 0.90, "mean ARI " + fmt(stats.mean_ari) + " below 0.90");
  });

  criterion(8, "rate plans satisfy the diffusion rules", [](Checker& c) {
    CounterRng rng(108);
    for (int t = 0; t < 300; ++t) {
      std::size_t n = 4 + rng.next_below(9);
      Hypergraph h = random_hypergraph(n, 3 + rng.next_below(10), 5, rng, t % 3 == 0);
      Eigen::VectorXd f(n);
      for (std::size_t v = 0; v < n; ++v) f[v] = std::round((rng.next_double() * 2 - 1) * 50) / 50;
      RatePlan plan = compute_change_rate(h, f);
      auto verdict = verify_rate_plan(h, f, plan, 1e-9);
      c.expect(verdict.ok, "plan invalid at trial " + std::to_string(t) + ": " + verdict.detail +
                               " rule1=" + fmt(verdict.max_rule1_error) +
                               " flow=" + fmt(verdict.max_flow_deficit));

      bool rank2 = true;
      for (const auto& e : h.edges()) rank2 &= e.members.size() == 2;
      if (rank2) {
        Eigen::VectorXd expected = Eigen::VectorXd::Zero(n);
        for (const auto& e : h.edges()) {
          expected[e.members[0]] -= e.w * (f[e.members[0]] + f[e.members[1]]);
          expected[e.members[1]] -= e.w * (f[e.members[0]] + f[e.members[1]]);
        }
        for (std::size_t v = 0; v < n; ++v)
          if (h.degree(v) > 0) expected[v] /= h.degree(v);
        c.expect((plan.r - expected).cwiseAbs().maxCoeff() <= 1e-9, "rank-2 rate mismatch");
      }
    }
  });

  criterion(9, "clique-pair eigen example at n = 12", [](Checker& c) {
    const int n = 12, half = 6, triples = 4;
    std::vector<Hyperedge> edges;
    for (int a = 0; a < 2; ++a)
      for (int i = 0; i < half; ++i)
        for (int j = i + 1; j < half; ++j)
          edges.push_back({1.0, {static_cast<VertexId>(a * half + i), static_cast<VertexId>(a * half + j)}});
    Eigen::VectorXd f = Eigen::VectorXd::Zero(n);
    int lone_l = 0, lone_r = half, pair_l = 2, pair_r = half + 2;
    for (int t = 0; t < triples; ++t) {
      VertexId lone, p1, p2;
      if (t % 2 == 0) {
        lone = static_cast<VertexId>(lone_l++);
        p1 = static_cast<VertexId>(pair_r++);
        p2 = static_cast<VertexId>(pair_r++);
      } else {
        lone = static_cast<VertexId>(lone_r++);
        p1 = static_cast<VertexId>(pair_l++);
        p2 = static_cast<VertexId>(pair_l++);
      }
      edges.push_back({1.0, {lone, p1, p2}});
      f[lone] = 1;
      f[p1] = -1;
      f[p2] = 0;
    }
    Hypergraph h(n, std::move(edges));

    double quotient = rayleigh_quotient(h, f);
    c.expect(std::abs(quotient - 2.0 / 3.0) <= 1e-9, "Rayleigh quotient " + fmt(quotient));
    RatePlan plan = compute_change_rate(h, f);
    double dir_err = (plan.r + (2.0 / 3.0) * f).cwiseAbs().maxCoeff();
    c.expect(dir_err <= 1e-9, "rate deviates from the fixed direction by " + fmt(dir_err));
  });

  criterion(10, "hypergraph Cheeger bound and monotone quotient", [](Checker& c) {
    CounterRng rng(110);
    for (int t = 0; t < 50; ++t) {
      std::size_t n = 6 + rng.next_below(10);
      Hypergraph h = random_hypergraph(n, 4 + rng.next_below(12), 4, rng, t % 2 == 0);
      Eigen::VectorXd f0 = default_start_vector(h);
      auto res = find_bipartite_components(h, f0, 1.0, 0.9999, 300,
                                           t % 2 == 0 ? DiffusionMode::ExactLp : DiffusionMode::EvenSplit);
      c.expect(res.pair.beta <= std::sqrt(2 * res.lambda) + 1e-9,
               "beta_H " + fmt(res.pair.beta) + " above sqrt(2 lambda) " + fmt(std::sqrt(2 * res.lambda)));
      for (std::size_t i = 1; i < res.rq_history.size(); ++i)
        c.expect(res.rq_history[i] <= res.rq_history[i - 1] + 1e-6, "quotient increased at step " +
                                                                        std::to_string(i));
    }
  });

  criterion(11, "diffusion beats the clique-cut baseline across ratios", [](Checker& c) {
    auto rows = run_hyper_sweep(200, 3, 1e-4, {2, 3, 4, 5, 6}, 10, 1100, false);
    for (const auto& row : rows)
      c.expect(row.fbca_beta <= row.clique_beta + 1e-12,
               "ratio " + fmt(row.ratio) + ": FBCA " + fmt(row.fbca_beta) + " above CliqueCut " +
                   fmt(row.clique_beta));
  });

  criterion(12, "simplify operator properties", [](Checker& c) {
    CounterRng rng(112);
    for (int t = 0; t < 1000; ++t) {
      std::size_t n = 3 + rng.next_below(18);
      Graph g = random_connected_graph(n, 0.35, rng, t % 2 == 1);
      Graph dc = double_cover(g);
      auto wmat = laplacian_matrix(LaplacianKind::LazyWalk, dc);
      auto apply_sigma = [&](const Eigen::VectorXd& x) {
        Eigen::VectorXd out(2 * n);
        for (std::size_t v = 0; v < n; ++v) {
          out[v] = std::max(0.0, x[v] - x[v + n]);
          out[v + n] = std::max(0.0, x[v + n] - x[v]);
        }
        return out;
      };
      Eigen::VectorXd a(2 * n), b(2 * n);
      for (std::size_t i = 0; i < 2 * n; ++i) {
        a[i] = rng.next_double();
        b[i] = rng.next_double();
      }
      double scale = rng.next_double() * 3;
      c.expect((apply_sigma(scale * a) - scale * apply_sigma(a)).cwiseAbs().maxCoeff() <= 1e-12,
               "homogeneity failed");
      c.expect((apply_sigma(a + b) - apply_sigma(a) - apply_sigma(b)).maxCoeff() <= 1e-12,
               "sub-distributivity failed");
      c.expect((apply_sigma(wmat * a) - wmat * apply_sigma(a)).maxCoeff() <= 1e-12,
               "walk commutation failed");
    }
  });

  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria failed\n", failures);
  return 1;
}
