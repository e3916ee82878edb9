#include "densekit/generators.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

#include "densekit/rng.h"

namespace densekit {

namespace {

// Stream ids for the per-model substreams.
enum : std::uint64_t { kIntra = 1, kInter = 2, kOrient = 3, kExtra = 4 };

std::uint64_t pair_counter(std::size_t n, std::size_t i, std::size_t j) {
  return static_cast<std::uint64_t>(i) * n + j;
}

Partition blocks_of(const std::vector<std::size_t>& sizes) {
  Partition parts;
  VertexId next = 0;
  for (std::size_t s : sizes) {
    VertexSet p(s);
    for (std::size_t i = 0; i < s; ++i) p[i] = next++;
    parts.push_back(std::move(p));
  }
  return parts;
}

}  // namespace

GraphSample sbm(std::size_t n, int k, double p, double q, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("sbm: k must be positive");
  std::vector<std::size_t> sizes(k, n / k);
  for (std::size_t i = 0; i < n % k; ++i) ++sizes[i];
  Partition truth = blocks_of(sizes);
  std::vector<int> block(n);
  for (int b = 0; b < k; ++b)
    for (VertexId v : truth[b]) block[v] = b;

  CounterRng rng(seed, kIntra);
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double prob = block[i] == block[j] ? p : q;
      if (prob > 0 && rng.double_at(pair_counter(n, i, j)) < prob)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), 1.0});
    }
  return {Graph(n, edges), std::move(truth)};
}

GraphSample meta_sbm(const Graph& meta, std::size_t cluster_size, double p, double q, std::uint64_t seed) {
  const int k = static_cast<int>(meta.vertex_count());
  const std::size_t n = cluster_size * k;
  Partition truth = blocks_of(std::vector<std::size_t>(k, cluster_size));
  CounterRng rng(seed, kIntra);

  std::vector<WeightedEdge> edges;
  auto sample_block = [&](int bi, int bj, double prob) {
    if (prob <= 0) return;
    for (VertexId u : truth[bi])
      for (VertexId v : truth[bj]) {
        if (bi == bj && v <= u) continue;
        if (rng.double_at(pair_counter(n, u, v)) < prob) edges.push_back({u, v, 1.0});
      }
  };
  for (int b = 0; b < k; ++b) sample_block(b, b, p);
  for (const auto& e : meta.edges()) sample_block(static_cast<int>(e.u), static_cast<int>(e.v), q);
  return {Graph(n, edges), std::move(truth)};
}

GraphSample local_sbm3(std::size_t n1, double p1, double q1, std::uint64_t seed) {
  const std::size_t n2 = n1, n3 = 10 * n1;
  const double p2 = 2 * p1, q2 = 0.1 * p1;
  const std::size_t n = n1 + n2 + n3;
  Partition truth = blocks_of({n1, n2, n3});
  std::vector<int> block(n);
  for (int b = 0; b < 3; ++b)
    for (VertexId v : truth[b]) block[v] = b;

  auto prob_of = [&](int a, int b) {
    if (a == b) return a == 2 ? p2 : p1;
    if ((a == 0 && b == 1) || (a == 1 && b == 0)) return q1;
    return q2;
  };
  CounterRng rng(seed, kIntra);
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double prob = prob_of(block[i], block[j]);
      if (prob > 0 && rng.double_at(pair_counter(n, i, j)) < prob)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), 1.0});
    }
  return {Graph(n, edges), std::move(truth)};
}

namespace {

DigraphSample cyclic_model(int k, std::size_t n, double p, double q, double eta, std::size_t n_extra,
                           double q1x, double q2x, double eta_x, bool plus, std::uint64_t seed) {
  std::vector<std::size_t> sizes(k, n);
  if (plus) {
    sizes.push_back(n_extra);
    sizes.push_back(n_extra);
  }
  Partition truth = blocks_of(sizes);
  const std::size_t total = plus ? k * n + 2 * n_extra : k * n;
  std::vector<int> block(total);
  for (std::size_t b = 0; b < sizes.size(); ++b)
    for (VertexId v : truth[b]) block[v] = static_cast<int>(b);

  CounterRng edge_rng(seed, kInter);
  CounterRng dir_rng(seed, kOrient);
  std::vector<Arc> arcs;

  auto undirected_block = [&](int bi, int bj, double prob) {
    // edge w.p. prob, orientation uniform
    for (VertexId u : truth[bi])
      for (VertexId v : truth[bj]) {
        if (bi == bj && v <= u) continue;
        std::uint64_t c = pair_counter(total, u, v);
        if (edge_rng.double_at(c) < prob) {
          bool fwd = dir_rng.double_at(c) < 0.5;
          arcs.push_back(fwd ? Arc{u, v, 1.0} : Arc{v, u, 1.0});
        }
      }
  };
  auto oriented_block = [&](int bi, int bj, double prob, double eta_fwd) {
    // edge w.p. prob, oriented bi -> bj with probability eta_fwd
    for (VertexId u : truth[bi])
      for (VertexId v : truth[bj]) {
        std::uint64_t c = pair_counter(total, u, v);
        if (edge_rng.double_at(c) < prob) {
          bool fwd = dir_rng.double_at(c) < eta_fwd;
          arcs.push_back(fwd ? Arc{u, v, 1.0} : Arc{v, u, 1.0});
        }
      }
  };

  for (int b = 0; b < k; ++b) undirected_block(b, b, p);
  for (int b = 0; b < k; ++b) oriented_block(b, (b + 1) % k, q, eta);
  if (plus) {
    undirected_block(k, k, p);
    undirected_block(k + 1, k + 1, p);
    undirected_block(k, k + 1, q1x);
    oriented_block(0, k, q2x, eta_x);      // C_1 -> C_{k+1}
    oriented_block(k + 1, 0, q2x, eta_x);  // C_{k+2} -> C_1
  }
  return {Digraph(total, arcs), std::move(truth)};
}

}  // namespace

DigraphSample cbm(int k, std::size_t n, double p, double q, double eta, std::uint64_t seed) {
  return cyclic_model(k, n, p, q, eta, 0, 0, 0, 0, false, seed);
}

DigraphSample cbm_plus(int k, std::size_t n, double p, double q, double eta, std::size_t n_extra,
                       double q1x, double q2x, double eta_x, std::uint64_t seed) {
  return cyclic_model(k, n, p, q, eta, n_extra, q1x, q2x, eta_x, true, seed);
}

namespace {

double log_binom(std::size_t n, int r) {
  double s = 0;
  for (int i = 0; i < r; ++i) s += std::log(static_cast<double>(n - i)) - std::log(static_cast<double>(i + 1));
  return s;
}

// Draw `count` distinct r-subsets of `pool` uniformly; collisions with
// already-drawn subsets are resampled so each subset appears at most once.
void draw_subsets(const VertexSet& pool, int r, std::uint64_t count, CounterRng& rng,
                  std::set<std::vector<VertexId>>& seen, std::vector<Hyperedge>& out,
                  const std::function<bool(const std::vector<VertexId>&)>& accept) {
  const std::size_t m = pool.size();
  for (std::uint64_t drawn = 0; drawn < count;) {
    std::vector<VertexId> pick;
    std::set<std::size_t> idx;
    while (idx.size() < static_cast<std::size_t>(r)) idx.insert(rng.next_below(m));
    for (std::size_t i : idx) pick.push_back(pool[i]);
    if (!accept(pick)) continue;
    if (seen.insert(pick).second) {
      out.push_back({1.0, pick});
      ++drawn;
    }
  }
}

}  // namespace

HypergraphSample hyper_two_cluster(std::size_t n, int r, double p, double q, std::uint64_t seed) {
  if (r < 2) throw std::invalid_argument("hyper_two_cluster: rank must be >= 2");
  const std::size_t nl = n / 2, nr = n - nl;
  VertexSet left(nl), right(nr), all(n);
  for (std::size_t i = 0; i < nl; ++i) left[i] = static_cast<VertexId>(i);
  for (std::size_t i = 0; i < nr; ++i) right[i] = static_cast<VertexId>(nl + i);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<VertexId>(i);

  const double cl = std::exp(log_binom(nl, r));
  const double cr = std::exp(log_binom(nr, r));
  const double cmixed = std::exp(log_binom(n, r)) - cl - cr;

  CounterRng rng(seed, kExtra);
  auto count_of = [&](double total, double prob) -> std::uint64_t {
    if (prob <= 0 || total <= 0) return 0;
    if (total < (1ull << 32))
      return rng.next_binomial(static_cast<std::uint64_t>(std::llround(total)), prob);
    return rng.next_poisson(total * prob);
  };

  std::set<std::vector<VertexId>> seen;
  std::vector<Hyperedge> edges;
  auto always = [](const std::vector<VertexId>&) { return true; };
  std::function<bool(const std::vector<VertexId>&)> accept_always = always;
  draw_subsets(left, r, count_of(cl, p), rng, seen, edges, accept_always);
  draw_subsets(right, r, count_of(cr, p), rng, seen, edges, accept_always);
  std::function<bool(const std::vector<VertexId>&)> accept_mixed = [&](const std::vector<VertexId>& pick) {
    bool has_l = false, has_r = false;
    for (VertexId v : pick) (v < nl ? has_l : has_r) = true;
    return has_l && has_r;
  };
  draw_subsets(all, r, count_of(cmixed, q), rng, seen, edges, accept_mixed);

  return {Hypergraph(n, std::move(edges)), std::move(left), std::move(right)};
}

Graph knn_graph(const std::vector<std::vector<double>>& points, int k) {
  const std::size_t n = points.size();
  if (k < 1 || static_cast<std::size_t>(k) >= n) throw std::invalid_argument("knn_graph: need 1 <= k < n");
  std::vector<WeightedEdge> edges;
  std::set<std::pair<VertexId, VertexId>> present;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      double d2 = 0;
      for (std::size_t t = 0; t < points[i].size(); ++t) {
        double d = points[i][t] - points[j][t];
        d2 += d * d;
      }
      dist.emplace_back(d2, j);
    }
    std::sort(dist.begin(), dist.end());
    for (int t = 0; t < k; ++t) {
      auto key = std::minmax<std::size_t>(i, dist[t].second);
      if (present.insert({static_cast<VertexId>(key.first), static_cast<VertexId>(key.second)}).second)
        edges.push_back({static_cast<VertexId>(key.first), static_cast<VertexId>(key.second), 1.0});
    }
  }
  return Graph(n, edges);
}

Graph gaussian_graph(const std::vector<std::vector<double>>& points, double sigma) {
  if (!(sigma > 0)) throw std::invalid_argument("gaussian_graph: sigma must be positive");
  const std::size_t n = points.size();
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double d2 = 0;
      for (std::size_t t = 0; t < points[i].size(); ++t) {
        double d = points[i][t] - points[j][t];
        d2 += d * d;
      }
      edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), std::exp(-d2 / (2 * sigma * sigma))});
    }
  return Graph(n, edges);
}

Graph named_meta_graph(const std::string& name) {
  auto colon = name.find(':');
  std::string kind = name.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  std::vector<WeightedEdge> edges;
  if (kind == "cycle") {
    int k = std::stoi(arg);
    if (k < 3) throw std::invalid_argument("cycle meta-graph needs k >= 3");
    for (int i = 0; i < k; ++i)
      edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % k), 1.0});
    return Graph(k, edges);
  }
  if (kind == "grid") {
    auto x = arg.find('x');
    if (x == std::string::npos) throw std::invalid_argument("grid meta-graph: expected grid:AxB");
    int a = std::stoi(arg.substr(0, x)), b = std::stoi(arg.substr(x + 1));
    auto id = [&](int i, int j) { return static_cast<VertexId>(i * b + j); };
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) {
        if (i + 1 < a) edges.push_back({id(i, j), id(i + 1, j), 1.0});
        if (j + 1 < b) edges.push_back({id(i, j), id(i, j + 1), 1.0});
      }
    return Graph(a * b, edges);
  }
  if (kind == "path") {
    int k = std::stoi(arg);
    for (int i = 0; i + 1 < k; ++i)
      edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1), 1.0});
    return Graph(k, edges);
  }
  throw std::invalid_argument("unknown meta-graph '" + name + "' (use cycle:K, grid:AxB, path:K)");
}

}  // namespace densekit
