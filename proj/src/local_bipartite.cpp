#include "densekit/local_bipartite.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "densekit/cover.h"
#include "densekit/cuts.h"

namespace densekit {

namespace {

double sum_values(const std::unordered_map<VertexId, double>& m) {
  double s = 0;
  for (const auto& [_, v] : m) s += v;
  return s;
}

}  // namespace

double DcVector::mass() const { return sum_values(p1) + sum_values(p2); }
double DcVector::residual() const { return sum_values(r1) + sum_values(r2); }

DcVector dc_push(double alpha, VertexId u, int side, const DcVector& state, const Graph& g) {
  DcVector out = state;
  auto& p = side == 1 ? out.p1 : out.p2;
  auto& r = side == 1 ? out.r1 : out.r2;
  auto& r_other = side == 1 ? out.r2 : out.r1;
  auto it = r.find(u);
  double ru = it == r.end() ? 0.0 : it->second;
  if (ru <= 0) throw std::domain_error("dc_push: no residual at the pushed copy");
  p[u] += alpha * ru;
  r[u] = (1 - alpha) * ru / 2;
  double du = g.degree(u);
  if (alpha < 1)
    for (const auto& [v, w] : g.neighbors(u)) r_other[v] += (1 - alpha) * ru * w / (2 * du);
  return out;
}

AprResult apr_dc(const Graph& g, VertexId v, double alpha, double eps) {
  if (!(alpha > 0) || alpha > 1) throw std::invalid_argument("apr_dc: need 0 < alpha <= 1");
  if (!(eps > 0)) throw std::invalid_argument("apr_dc: eps must be positive");
  const std::size_t n = g.vertex_count();
  if (v >= n) throw std::invalid_argument("apr_dc: seed out of range");

  // Dense working arrays indexed by (vertex, side); sides interleaved as 2v+side-1.
  std::vector<double> p(2 * n, 0.0), r(2 * n, 0.0);
  std::vector<char> queued(2 * n, 0);
  std::deque<std::uint32_t> fifo;
  std::vector<std::uint32_t> touched;

  auto idx = [](VertexId u, int side) { return 2 * u + (side - 1); };
  auto enqueue_if_ready = [&](VertexId u, int side) {
    std::uint32_t i = idx(u, side);
    if (!queued[i] && r[i] >= eps * g.degree(u) && g.degree(u) > 0) {
      queued[i] = 1;
      fifo.push_back(i);
    }
  };

  r[idx(v, 1)] = 1.0;
  touched.push_back(idx(v, 1));
  enqueue_if_ready(v, 1);

  AprResult res;
  while (!fifo.empty()) {
    std::uint32_t i = fifo.front();
    fifo.pop_front();
    queued[i] = 0;
    VertexId u = i / 2;
    int side = (i % 2) + 1;
    double du = g.degree(u);
    if (r[i] < eps * du) continue;

    double ru = r[i];
    p[i] += alpha * ru;
    r[i] = (1 - alpha) * ru / 2;
    ++res.pushes;
    res.pushed_volume += du;
    for (const auto& [w_v, w] : g.neighbors(u)) {
      std::uint32_t j = idx(w_v, 3 - side);
      if (p[j] == 0 && r[j] == 0) touched.push_back(j);
      r[j] += (1 - alpha) * ru * w / (2 * du);
      enqueue_if_ready(w_v, 3 - side);
    }
    enqueue_if_ready(u, side);
  }

  for (std::uint32_t i : touched) {
    VertexId u = i / 2;
    int side = (i % 2) + 1;
    if (p[i] > 0) (side == 1 ? res.vec.p1 : res.vec.p2)[u] = p[i];
    if (r[i] > 0) (side == 1 ? res.vec.r1 : res.vec.r2)[u] = r[i];
  }
  return res;
}

std::unordered_map<VertexId, std::pair<double, double>> simplify(
    const std::unordered_map<VertexId, std::pair<double, double>>& mass) {
  std::unordered_map<VertexId, std::pair<double, double>> out;
  for (const auto& [v, pq] : mass) {
    double a = std::max(0.0, pq.first - pq.second);
    double b = std::max(0.0, pq.second - pq.first);
    if (a > 0 || b > 0) out[v] = {a, b};
  }
  return out;
}

namespace {

struct SweepEntry {
  VertexId v;
  int side;
  double density;  // p(x) / deg(x)
  double value;
};

}  // namespace

SweepPairResult loc_bipart_dc_params(const Graph& g, VertexId seed, double alpha, double eps,
                                     double beta_hat, SweepMode mode) {
  AprResult apr = apr_dc(g, seed, alpha, eps);

  // sigma o p: keep the dominant copy of every touched vertex.
  std::unordered_map<VertexId, std::pair<double, double>> mass;
  for (const auto& [v, val] : apr.vec.p1) mass[v].first = val;
  for (const auto& [v, val] : apr.vec.p2) mass[v].second = val;
  auto simple = simplify(mass);

  std::vector<SweepEntry> order;
  order.reserve(simple.size());
  for (const auto& [v, pq] : simple) {
    if (g.degree(v) <= 0) continue;
    if (pq.first > 0) order.push_back({v, 1, pq.first / g.degree(v), pq.first});
    if (pq.second > 0) order.push_back({v, 2, pq.second / g.degree(v), pq.second});
  }
  std::sort(order.begin(), order.end(), [](const SweepEntry& a, const SweepEntry& b) {
    if (a.density != b.density) return a.density > b.density;
    if (a.side != b.side) return a.side < b.side;
    return a.v < b.v;
  });

  // Incremental conductance of sweep prefixes on the implicit double cover.
  // Prefixes are simple, so vol(prefix) is at most half the cover volume and
  // the one-sided and two-sided definitions agree.
  std::vector<char> side_of(g.vertex_count(), 0);
  double cut = 0, vol = 0;
  double best_phi = std::numeric_limits<double>::max();
  std::size_t best_j = 0;
  std::ptrdiff_t first_hit = -1;
  SweepPairResult result;
  result.pushes = apr.pushes;

  for (std::size_t j = 0; j < order.size(); ++j) {
    const auto& ent = order[j];
    double to_inside = 0;
    for (const auto& [u, w] : g.neighbors(ent.v))
      if (side_of[u] == 3 - ent.side) to_inside += w;  // cover edges go to the opposite copy
    cut += g.degree(ent.v) - 2 * to_inside;
    vol += g.degree(ent.v);
    side_of[ent.v] = static_cast<char>(ent.side);
    double phi = vol > 0 ? cut / vol : 1.0;
    if (phi < best_phi) {
      best_phi = phi;
      best_j = j;
    }
    if (phi <= beta_hat && first_hit < 0) {
      first_hit = static_cast<std::ptrdiff_t>(j);
      if (mode == SweepMode::FirstQualifying) break;
    }
  }

  if (order.empty()) {
    result.found = false;
    return result;
  }
  std::size_t upto;
  if (mode == SweepMode::FirstQualifying) {
    result.found = first_hit >= 0;
    upto = result.found ? static_cast<std::size_t>(first_hit) : best_j;
  } else {
    result.found = best_phi <= beta_hat;
    upto = best_j;
  }

  for (std::size_t j = 0; j <= upto; ++j)
    (order[j].side == 1 ? result.left : result.right).push_back(order[j].v);
  result.left = make_vertex_set(std::move(result.left));
  result.right = make_vertex_set(std::move(result.right));
  result.beta = bipartiteness(g, result.left, result.right);
  result.volume = g.volume(result.left) + g.volume(result.right);
  result.sweep_index = upto;
  return result;
}

SweepPairResult loc_bipart_dc(const Graph& g, VertexId seed, double gamma, double beta_hat, SweepMode mode) {
  if (!(gamma > 0)) throw std::invalid_argument("loc_bipart_dc: gamma must be positive");
  if (!(beta_hat > 0) || beta_hat > 1) throw std::invalid_argument("loc_bipart_dc: need 0 < beta_hat <= 1");
  double alpha = beta_hat * beta_hat / 378.0;
  double eps = 1.0 / (20.0 * gamma);
  return loc_bipart_dc_params(g, seed, alpha, eps, beta_hat, mode);
}

SweepPairResult loc_bipart_dc_target(const Graph& g, VertexId seed, double gamma, double beta) {
  double beta_hat = std::sqrt(7560.0 * beta);
  if (beta_hat > 1) beta_hat = 1;  // the coupling saturates for desk-scale targets
  return loc_bipart_dc(g, seed, gamma, beta_hat);
}

double LsCurve::at(double volume) const {
  if (x.empty()) return 0;
  if (volume <= x.front()) return y.front();
  if (volume >= x.back()) return y.back();
  auto it = std::upper_bound(x.begin(), x.end(), volume);
  std::size_t hi = static_cast<std::size_t>(it - x.begin());
  std::size_t lo = hi - 1;
  double t = (volume - x[lo]) / (x[hi] - x[lo]);
  return y[lo] + t * (y[hi] - y[lo]);
}

LsCurve ls_curve(const std::unordered_map<VertexId, double>& p, const Graph& g) {
  std::vector<std::pair<double, VertexId>> order;  // (-density, vertex)
  double support_mass = 0, support_vol = 0;
  for (const auto& [v, val] : p) {
    if (val < 0) throw std::domain_error("ls_curve: negative entry");
    if (val == 0) continue;
    if (g.degree(v) <= 0) continue;
    order.emplace_back(-val / g.degree(v), v);
    support_mass += val;
    support_vol += g.degree(v);
  }
  std::sort(order.begin(), order.end());

  LsCurve c;
  c.x.push_back(0);
  c.y.push_back(0);
  double vol = 0, mass = 0;
  for (const auto& [negd, v] : order) {
    vol += g.degree(v);
    mass += p.at(v);
    c.x.push_back(vol);
    c.y.push_back(mass);
  }
  if (support_vol < g.total_volume()) {
    c.x.push_back(g.total_volume());
    c.y.push_back(support_mass);
  }
  return c;
}

}  // namespace densekit
