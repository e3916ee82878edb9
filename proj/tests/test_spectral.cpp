#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numeric>

#include "densekit/cuts.h"
#include "densekit/eigs.h"
#include "densekit/generators.h"
#include "densekit/kmeans.h"
#include "densekit/metrics.h"
#include "densekit/spectral.h"
#include "doctest.h"
#include "test_util.h"

using namespace densekit;
using namespace densekit::test;

TEST_CASE("bottom of the normalized Laplacian") {
  CounterRng rng(3);
  Graph g = random_connected_graph(20, 0.3, rng, true);
  auto eig = smallest_eigs(LaplacianKind::NormalizedLaplacian, g, 3);
  CHECK(eig.values[0] == doctest::Approx(0.0).epsilon(1e-9));
  // eigenvector proportional to D^{1/2} 1
  Eigen::VectorXd expected(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) expected[v] = std::sqrt(g.degree(v));
  expected.normalize();
  double align = std::abs(expected.dot(eig.vectors.col(0)));
  CHECK(align == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("C4 second eigenvalue is 1") {
  Graph c4 = cycle_graph(4);
  auto eig = smallest_eigs(LaplacianKind::NormalizedLaplacian, c4, 2);
  CHECK(eig.values[1] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("zero eigenvalue multiplicity equals component count") {
  // three disjoint triangles
  std::vector<WeightedEdge> edges;
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < 3; ++i)
      edges.push_back({static_cast<VertexId>(3 * c + i), static_cast<VertexId>(3 * c + (i + 1) % 3), 1.0});
  Graph g(9, edges);
  auto eig = smallest_eigs(LaplacianKind::NormalizedLaplacian, g, 4);
  CHECK(eig.values[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(eig.values[1] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(eig.values[2] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(eig.values[3] > 0.5);
}

TEST_CASE("eigen pairs satisfy the residual contract") {
  CounterRng rng(5);
  Graph g = random_connected_graph(40, 0.2, rng, true);
  auto nmat = laplacian_matrix(LaplacianKind::NormalizedLaplacian, g);
  auto eig = smallest_eigs(LaplacianKind::NormalizedLaplacian, g, 5);
  for (int i = 0; i < 5; ++i) {
    Eigen::VectorXd x = eig.vectors.col(i);
    CHECK((nmat * x - eig.values[i] * x).norm() <= 1e-8);
  }
}

TEST_CASE("Lanczos path agrees with a dense solve") {
  CounterRng rng(17);
  // n > 200 forces the iterative path
  Graph g = random_connected_graph(230, 0.05, rng);
  auto eig = smallest_eigs(LaplacianKind::NormalizedLaplacian, g, 6);
  Eigen::MatrixXd dense(laplacian_matrix(LaplacianKind::NormalizedLaplacian, g));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
  for (int i = 0; i < 6; ++i) CHECK(eig.values[i] == doctest::Approx(es.eigenvalues()[i]).epsilon(1e-7));

  auto top = largest_eigs(LaplacianKind::NormalizedLaplacian, g, 2);
  CHECK(top.values[0] == doctest::Approx(es.eigenvalues()[229]).epsilon(1e-7));
  CHECK(top.values[1] == doctest::Approx(es.eigenvalues()[228]).epsilon(1e-7));
}

TEST_CASE("signless operator mirrors the Laplacian spectrum") {
  CounterRng rng(6);
  Graph g = random_connected_graph(30, 0.25, rng, true);
  auto bottom_z = smallest_eigs(LaplacianKind::SignlessNormalized, g, 1);
  auto top_n = largest_eigs(LaplacianKind::NormalizedLaplacian, g, 1);
  CHECK(bottom_z.values[0] == doctest::Approx(2.0 - top_n.values[0]).epsilon(1e-9));
}

TEST_CASE("sweep set on two cliques joined by an edge") {
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), 1.0});
      edges.push_back({static_cast<VertexId>(6 + i), static_cast<VertexId>(6 + j), 1.0});
    }
  edges.push_back({0, 6, 1.0});
  Graph g(12, edges);
  VertexSet sweep = sweep_set_cheeger(g);
  double phi = conductance(g, sweep);
  CHECK(phi == doctest::Approx(brute_force_min_conductance(g)).epsilon(1e-12));
  CHECK(sweep.size() == 6);
}

TEST_CASE("sweep set on the 8-cycle finds a contiguous arc") {
  Graph c8 = cycle_graph(8);
  VertexSet sweep = sweep_set_cheeger(c8);
  CHECK(conductance(c8, sweep) == doctest::Approx(0.25));
}

TEST_CASE("sweep set on a disconnected graph returns a zero-conductance set") {
  Graph g(6, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}, {3, 4, 1.0}, {4, 5, 1.0}, {5, 3, 1.0}});
  CHECK(conductance(g, sweep_set_cheeger(g)) == doctest::Approx(0.0));
}

TEST_CASE("Cheeger sandwich on random connected graphs") {
  CounterRng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 5 + rng.next_below(10);
    Graph g = random_connected_graph(n, 0.35, rng, trial % 3 == 0);
    auto eig = smallest_eigs(LaplacianKind::NormalizedLaplacian, g, 2);
    double lambda2 = eig.values[1];
    double swept = conductance(g, sweep_set_cheeger(g));
    CHECK(swept <= std::sqrt(2 * lambda2) + 1e-9);
    CHECK(lambda2 / 2 <= brute_force_min_conductance(g) + 1e-9);
  }
}

TEST_CASE("weighted kmeans degenerate cases") {
  Eigen::MatrixXd pts(4, 2);
  pts << 0, 0, 0, 0, 1, 1, 1, 1;
  std::vector<double> w{1, 2, 1, 2};
  auto res = weighted_kmeans(pts, w, 2, 0);
  CHECK(res.cost == doctest::Approx(0.0));
  auto one = weighted_kmeans(pts.topRows(2), {1.0, 1.0}, 1, 0);
  CHECK(one.cost == doctest::Approx(0.0));
  CHECK(one.centres(0, 0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(weighted_kmeans(pts, w, 3, 0), std::invalid_argument);
}

TEST_CASE("weighted kmeans matches the exhaustive 2-partition optimum") {
  CounterRng rng(33);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 10;
    Eigen::MatrixXd pts(n, 2);
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) {
      double cx = i < n / 2 ? 0.0 : 5.0;
      pts(i, 0) = cx + rng.next_gaussian() * 0.3;
      pts(i, 1) = rng.next_gaussian() * 0.3;
      w[i] = 0.5 + rng.next_double();
    }
    auto km = weighted_kmeans(pts, w, 2, trial);

    double best = std::numeric_limits<double>::max();
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      Eigen::RowVector2d ca = Eigen::RowVector2d::Zero(), cb = Eigen::RowVector2d::Zero();
      double wa = 0, wb = 0;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          ca += w[i] * pts.row(i);
          wa += w[i];
        } else {
          cb += w[i] * pts.row(i);
          wb += w[i];
        }
      }
      ca /= wa;
      cb /= wb;
      double cost = 0;
      for (int i = 0; i < n; ++i)
        cost += w[i] * (pts.row(i) - (mask & (1u << i) ? ca : cb)).squaredNorm();
      best = std::min(best, cost);
    }
    CHECK(km.cost == doctest::Approx(best).epsilon(1e-9));
  }
}

TEST_CASE("spectral clustering separates disconnected cliques") {
  std::vector<WeightedEdge> edges;
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        edges.push_back({static_cast<VertexId>(5 * c + i), static_cast<VertexId>(5 * c + j), 1.0});
  Graph g(15, edges);
  Partition truth{range_set(0, 5), range_set(5, 10), range_set(10, 15)};
  Partition parts = spectral_cluster(g, 3, 3, 1);
  CHECK(adjusted_rand_index(truth, parts) == doctest::Approx(1.0));
}

TEST_CASE("spectral clustering assignment is invariant under edge rescaling") {
  CounterRng rng(8);
  GraphSample s = sbm(45, 3, 0.8, 0.05, 12);
  std::vector<WeightedEdge> scaled;
  for (auto e : s.graph.edges()) scaled.push_back({e.u, e.v, 3.25 * e.w});
  Graph g2(s.graph.vertex_count(), scaled);
  Partition a = spectral_cluster(s.graph, 3, 3, 5);
  Partition b = spectral_cluster(g2, 3, 3, 5);
  CHECK(adjusted_rand_index(a, b) == doctest::Approx(1.0));
}

TEST_CASE("two sided sweep basics") {
  Graph k33 = complete_bipartite(3, 3);
  Eigen::VectorXd f(6);
  f << -1, -1, -1, 1, 1, 1;
  auto pair = two_sided_sweep(k33, f);
  CHECK(pair.beta == doctest::Approx(0.0));
  CHECK(pair.left.size() == 3);

  Eigen::VectorXd zero = Eigen::VectorXd::Zero(6);
  CHECK_THROWS_AS(two_sided_sweep(k33, zero), std::domain_error);
}

TEST_CASE("two sided sweep minimises over enumerated sweep pairs") {
  CounterRng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 5 + rng.next_below(10);
    Graph g = random_connected_graph(n, 0.4, rng, trial % 2 == 0);
    Eigen::VectorXd f(n);
    for (std::size_t v = 0; v < n; ++v) f[v] = rng.next_gaussian();
    auto pair = two_sided_sweep(g, f);

    // independent enumeration of the n sweep pairs
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      if (std::abs(f[a]) != std::abs(f[b])) return std::abs(f[a]) > std::abs(f[b]);
      return a < b;
    });
    double best = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      VertexSet l, r;
      for (std::size_t i = 0; i <= j; ++i) (f[order[i]] < 0 ? l : r).push_back(order[i]);
      l = make_vertex_set(std::move(l));
      r = make_vertex_set(std::move(r));
      if (g.volume(l) + g.volume(r) <= 0) continue;
      best = std::min(best, bipartiteness(g, l, r));
    }
    CHECK(pair.beta <= best + 1e-12);
  }
}

TEST_CASE("two sided sweep satisfies the dual Cheeger bound") {
  CounterRng rng(72);
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t n = 6 + rng.next_below(12);
    Graph g = random_connected_graph(n, 0.3, rng);
    auto top = largest_eigs(LaplacianKind::NormalizedLaplacian, g, 1);
    Eigen::VectorXd f(n);
    for (std::size_t v = 0; v < n; ++v)
      f[v] = g.degree(v) > 0 ? top.vectors(v, 0) / std::sqrt(g.degree(v)) : 0.0;
    auto pair = two_sided_sweep(g, f);
    CHECK(pair.beta <= std::sqrt(2 * (2 - top.values[0])) + 1e-9);
  }
}

TEST_CASE("meta graph of disconnected clusters is diagonal") {
  std::vector<WeightedEdge> edges;
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < 4; ++i)
      edges.push_back({static_cast<VertexId>(4 * c + i), static_cast<VertexId>(4 * c + (i + 1) % 4), 1.0});
  Graph g(12, edges);
  Partition parts{range_set(0, 4), range_set(4, 8), range_set(8, 12)};
  MetaGraph m = meta_graph_of(g, parts);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(m.adjacency(i, j) == 0.0);
  CHECK(m.adjacency(0, 0) == doctest::Approx(8.0));  // ordered-pair internal weight
  CHECK(m.degrees[0] == doctest::Approx(g.volume(parts[0])));
  CHECK(m.gammas[0] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(m.gammas[2] == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("meta graph with all weight crossing") {
  Graph k22 = complete_bipartite(2, 2);
  Partition parts{{0, 1}, {2, 3}};
  MetaGraph m = meta_graph_of(k22, parts);
  CHECK(m.adjacency(0, 0) == 0.0);
  CHECK(m.adjacency(0, 1) == doctest::Approx(4.0));
  // the signless analogue of the meta graph has a zero eigenvalue: gamma_k = 2
  CHECK(m.gammas[1] == doctest::Approx(2.0));
}

TEST_CASE("meta graph SBM cross weights match binomial expectation") {
  GraphSample s = sbm(60, 3, 0.9, 0.05, 99);
  MetaGraph m = meta_graph_of(s.graph, s.truth);
  double mean = 0.05 * 400, sd = std::sqrt(400 * 0.05 * 0.95);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      CHECK(m.adjacency(i, j) >= mean - 3 * sd);
      CHECK(m.adjacency(i, j) <= mean + 3 * sd);
    }
}

TEST_CASE("lambda_i <= gamma_i on SBM samples") {
  GraphSample s = sbm(90, 3, 0.6, 0.05, 5);
  MetaGraph m = meta_graph_of(s.graph, s.truth);
  auto eig = smallest_eigs(LaplacianKind::NormalizedLaplacian, s.graph, 3);
  for (int i = 0; i < 3; ++i) CHECK(eig.values[i] <= m.gammas[i] + 1e-9);
}

TEST_CASE("psi on disconnected clusters vanishes") {
  std::vector<WeightedEdge> edges;
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < 4; ++i)
      edges.push_back({static_cast<VertexId>(4 * c + i), static_cast<VertexId>(4 * c + (i + 1) % 4), 1.0});
  Graph g(12, edges);
  Partition parts{range_set(0, 4), range_set(4, 8), range_set(8, 12)};
  // lambda_4 > 0 only when there are exactly 3 components; gamma_1..3 all 0
  CHECK(psi(g, parts, 3) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("psi against the meta SBM regime") {
  Graph meta = named_meta_graph("cycle:6");
  GraphSample s = meta_sbm(meta, 50, 0.4, 0.1, 2);
  double v = psi(s.graph, s.truth, 3);
  CHECK(v > 0);
  CHECK(std::isfinite(v));
  // Psi(3) stays below 3 / upsilon_lower_bound on planted instances
  double upsilon_lb = upsilon_lower_bound(s.graph, s.truth, 6);
  CHECK(v < 3.0 / upsilon_lb);
}

TEST_CASE("structure theorem inequalities on an SBM sample") {
  GraphSample s = sbm(120, 3, 0.4, 0.02, 31);
  const int k = 3;
  auto eig = smallest_eigs(LaplacianKind::NormalizedLaplacian, s.graph, k + 1);
  double lambda_k1 = eig.values[k];
  double max_phi = 0;
  for (const auto& cluster : s.truth) max_phi = std::max(max_phi, conductance(s.graph, cluster));

  Eigen::MatrixXd gbar(s.graph.vertex_count(), k);
  for (int i = 0; i < k; ++i) {
    Eigen::VectorXd col = Eigen::VectorXd::Zero(s.graph.vertex_count());
    for (VertexId v : s.truth[i]) col[v] = std::sqrt(s.graph.degree(v));
    gbar.col(i) = col / col.norm();
  }
  Eigen::MatrixXd fmat = eig.vectors.leftCols(k);

  double sum_second = 0;
  for (int i = 0; i < k; ++i) {
    Eigen::VectorXd fhat = Eigen::VectorXd::Zero(s.graph.vertex_count());
    for (int j = 0; j < k; ++j) fhat += gbar.col(i).dot(fmat.col(j)) * fmat.col(j);
    CHECK((gbar.col(i) - fhat).squaredNorm() <= max_phi / lambda_k1 + 1e-9);

    Eigen::VectorXd ghat = Eigen::VectorXd::Zero(s.graph.vertex_count());
    for (int j = 0; j < k; ++j) ghat += fmat.col(i).dot(gbar.col(j)) * gbar.col(j);
    sum_second += (fmat.col(i) - ghat).squaredNorm();
  }
  CHECK(sum_second <= k * max_phi / lambda_k1 + 1e-9);
}

TEST_CASE("hexagonal meta structure shows up in the embedding") {
  Graph meta = named_meta_graph("cycle:6");
  GraphSample s = meta_sbm(meta, 60, 0.4, 0.08, 77);
  Embedding emb = spectral_embedding(s.graph, 3);

  // degree-weighted cluster means in the (f2, f3) plane
  std::vector<Eigen::Vector2d> means(6, Eigen::Vector2d::Zero());
  std::vector<double> mass(6, 0);
  std::vector<int> cluster(s.graph.vertex_count());
  for (int b = 0; b < 6; ++b)
    for (VertexId v : s.truth[b]) cluster[v] = b;
  for (std::size_t i = 0; i < emb.vertices.size(); ++i) {
    int b = cluster[emb.vertices[i]];
    means[b] += emb.weights[i] * Eigen::Vector2d(emb.points(i, 1), emb.points(i, 2));
    mass[b] += emb.weights[i];
  }
  for (int b = 0; b < 6; ++b) means[b] /= mass[b];

  // a hexagonal layout: all means at a common radius, neighbours at a common
  // spacing, and every pair clearly separated
  double min_pair = 1e9, max_radius = 0, min_radius = 1e9;
  for (int b = 0; b < 6; ++b) {
    double radius = means[b].norm();
    max_radius = std::max(max_radius, radius);
    min_radius = std::min(min_radius, radius);
    for (int c = b + 1; c < 6; ++c) min_pair = std::min(min_pair, (means[b] - means[c]).norm());
  }
  CHECK(min_pair > 0.45 * max_radius);
  CHECK(min_radius > 0.7 * max_radius);
}

TEST_CASE("grid meta-graph clustering with three eigenvectors") {
  Graph meta = named_meta_graph("grid:4x4");
  // low-gap regime: q close to p
  GraphSample s = meta_sbm(meta, 100, 0.08, 0.04, 13);
  Partition with3 = spectral_cluster(s.graph, 16, 3, 2);
  Partition with16 = spectral_cluster(s.graph, 16, 16, 2);
  double acc3 = matched_accuracy(s.truth, with3, s.graph.vertex_count());
  double acc16 = matched_accuracy(s.truth, with16, s.graph.vertex_count());
  CHECK(acc3 >= acc16);
}

TEST_CASE("two sided sweep puts a dominant entry first") {
  Graph g = cycle_graph(5);
  Eigen::VectorXd f(5);
  f << 0.1, -100.0, 0.2, 0.1, 0.05;
  // enumerating prefixes starts from ({1}, {}): beta = 1; the minimiser is
  // still guaranteed to be at most that
  auto pair = two_sided_sweep(g, f);
  CHECK(pair.beta <= 1.0);
  CHECK(set_contains(pair.left, 1));
}
