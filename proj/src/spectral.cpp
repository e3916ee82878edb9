#include "densekit/spectral.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "densekit/cuts.h"
#include "densekit/kmeans.h"

namespace densekit {

Embedding spectral_embedding(const Graph& g, int ell) {
  EigenPairs eig = smallest_eigs(LaplacianKind::NormalizedLaplacian, g, ell);
  Embedding emb;
  emb.ell = ell;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) emb.vertices.push_back(v);
  emb.points.resize(emb.vertices.size(), ell);
  emb.weights.reserve(emb.vertices.size());
  for (std::size_t i = 0; i < emb.vertices.size(); ++i) {
    VertexId v = emb.vertices[i];
    emb.points.row(i) = eig.vectors.row(v) / std::sqrt(g.degree(v));
    emb.weights.push_back(g.degree(v));
  }
  return emb;
}

VertexSet sweep_set_cheeger(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("sweep needs at least two vertices");
  EigenPairs eig = smallest_eigs(LaplacianKind::NormalizedLaplacian, g, 2);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> key(n);
  for (VertexId v = 0; v < n; ++v)
    key[v] = g.degree(v) > 0 ? eig.vectors(v, 1) / std::sqrt(g.degree(v)) : 0.0;
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    if (key[a] != key[b]) return key[a] < key[b];
    return a < b;
  });

  std::vector<char> in(n, 0);
  double cut = 0, vol = 0;
  const double total = g.total_volume();
  double best = std::numeric_limits<double>::max();
  std::size_t best_j = 0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    VertexId v = order[j];
    double to_inside = 0;
    for (const auto& [u, w] : g.neighbors(v))
      if (in[u]) to_inside += w;
    cut += g.degree(v) - 2 * to_inside;
    vol += g.degree(v);
    in[v] = 1;
    double denom = std::min(vol, total - vol);
    double phi = denom > 0 ? cut / denom : (cut > 0 ? std::numeric_limits<double>::max() : 0.0);
    if (phi < best) {
      best = phi;
      best_j = j;
    }
  }
  return make_vertex_set({order.begin(), order.begin() + best_j + 1});
}

Partition spectral_cluster(const Graph& g, int k, int ell, std::uint64_t seed) {
  const int n = static_cast<int>(g.vertex_count());
  if (ell < 1 || ell > k || k > n) throw std::invalid_argument("need 1 <= ell <= k <= n");
  Embedding emb = spectral_embedding(g, ell);

  // Zero-degree vertices sit outside the embedding and come back as
  // singleton clusters appended after the k-means clusters.
  std::set<std::vector<double>> distinct;
  for (Eigen::Index i = 0; i < emb.points.rows(); ++i) {
    std::vector<double> row(emb.points.cols());
    for (Eigen::Index j = 0; j < emb.points.cols(); ++j) row[j] = emb.points(i, j);
    distinct.insert(std::move(row));
  }
  int k_eff = std::min<int>(k, static_cast<int>(distinct.size()));
  if (k_eff < 1) throw std::invalid_argument("no positive-degree vertices to cluster");

  KmeansResult km = weighted_kmeans(emb.points, emb.weights, k_eff, seed);
  Partition parts(k_eff);
  for (std::size_t i = 0; i < emb.vertices.size(); ++i) parts[km.assignment[i]].push_back(emb.vertices[i]);
  parts.erase(std::remove_if(parts.begin(), parts.end(), [](const VertexSet& s) { return s.empty(); }),
              parts.end());
  for (auto& p : parts) p = make_vertex_set(std::move(p));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) <= 0) parts.push_back({v});
  return parts;
}

BipartitePair two_sided_sweep(const Graph& g, const Eigen::VectorXd& f) {
  const std::size_t n = g.vertex_count();
  if (static_cast<std::size_t>(f.size()) != n) throw std::invalid_argument("vector size mismatch");
  if (f.cwiseAbs().maxCoeff() == 0) throw std::domain_error("two_sided_sweep: all-zero vector");

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    double ka = std::abs(f[a]), kb = std::abs(f[b]);
    if (ka != kb) return ka > kb;
    return a < b;
  });

  // Incremental beta(L, R) = 1 - 2 w(L,R) / vol(L u R) over prefixes.
  std::vector<char> side(n, 0);  // 0 outside, 1 in L, 2 in R
  double cross = 0, vol = 0;
  double best = std::numeric_limits<double>::max();
  double best_vol = 0;
  std::size_t best_j = 0;
  for (std::size_t j = 0; j < n; ++j) {
    VertexId v = order[j];
    char s = f[v] < 0 ? 1 : 2;
    for (const auto& [u, w] : g.neighbors(v))
      if (side[u] != 0 && side[u] != s) cross += w;
    side[v] = s;
    vol += g.degree(v);
    if (vol <= 0) continue;
    double beta = 1.0 - 2.0 * cross / vol;
    if (beta < best - 1e-15 || (std::abs(beta - best) <= 1e-15 && vol < best_vol)) {
      best = beta;
      best_vol = vol;
      best_j = j;
    }
  }

  BipartitePair pair;
  for (std::size_t j = 0; j <= best_j; ++j) {
    VertexId v = order[j];
    (f[v] < 0 ? pair.left : pair.right).push_back(v);
  }
  pair.left = make_vertex_set(std::move(pair.left));
  pair.right = make_vertex_set(std::move(pair.right));
  pair.beta = bipartiteness(g, pair.left, pair.right);
  return pair;
}

MetaGraph meta_graph_of(const Graph& g, const Partition& partition) {
  const std::size_t n = g.vertex_count();
  const int k = static_cast<int>(partition.size());
  std::vector<int> cluster(n, -1);
  for (int i = 0; i < k; ++i)
    for (VertexId v : partition[i]) {
      if (cluster[v] != -1) throw std::invalid_argument("partition has overlapping clusters");
      cluster[v] = i;
    }
  for (std::size_t v = 0; v < n; ++v)
    if (cluster[v] == -1) throw std::invalid_argument("partition does not cover all vertices");

  MetaGraph m;
  m.adjacency = Eigen::MatrixXd::Zero(k, k);
  for (const auto& e : g.edges()) {
    int a = cluster[e.u], b = cluster[e.v];
    if (a == b) {
      m.adjacency(a, a) += 2 * e.w;  // ordered-pair count keeps row sums = vol(S_a)
    } else {
      m.adjacency(a, b) += e.w;
      m.adjacency(b, a) += e.w;
    }
  }
  m.degrees = m.adjacency.rowwise().sum();

  Eigen::MatrixXd nm = Eigen::MatrixXd::Identity(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (m.degrees[i] > 0 && m.degrees[j] > 0)
        nm(i, j) -= m.adjacency(i, j) / std::sqrt(m.degrees[i] * m.degrees[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(nm);
  m.gammas = es.eigenvalues();
  m.eigenvectors = es.eigenvectors();
  return m;
}

double psi(const Graph& g, const Partition& partition, int ell) {
  const int n = static_cast<int>(g.vertex_count());
  if (ell < 1 || ell >= n) throw std::invalid_argument("need 1 <= ell < n");
  if (ell > static_cast<int>(partition.size())) throw std::invalid_argument("ell must be at most k");
  MetaGraph m = meta_graph_of(g, partition);
  EigenPairs eig = smallest_eigs(LaplacianKind::NormalizedLaplacian, g, ell + 1);
  double lambda = eig.values[ell];
  double num = 0;
  for (int i = 0; i < ell; ++i) num += m.gammas[i];
  if (lambda <= 1e-14) return std::numeric_limits<double>::infinity();
  return num / lambda;
}

}  // namespace densekit
