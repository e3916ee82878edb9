#include "densekit/local_directed.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "densekit/cover.h"
#include "densekit/cuts.h"

namespace densekit {

namespace {

// One-step lazy-walk probabilities into S for every candidate vertex
// (members of S and their neighbours): h(v) = [v in S]/2 + w(v, S)/(2 deg v).
std::unordered_map<VertexId, double> hitting_probs(const Graph& g, const VertexSet& s) {
  std::unordered_map<VertexId, double> h;
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : s) in[v] = 1;
  auto consider = [&](VertexId v) {
    if (h.count(v) || g.degree(v) <= 0) return;
    double w_in = 0;
    for (const auto& [u, w] : g.neighbors(v))
      if (in[u]) w_in += w;
    h[v] = (in[v] ? 0.5 : 0.0) + w_in / (2 * g.degree(v));
  };
  for (VertexId v : s) {
    consider(v);
    for (const auto& [u, _] : g.neighbors(v)) consider(u);
  }
  return h;
}

struct ThresholdSets {
  std::vector<std::pair<double, VertexId>> order;  // by h descending
  std::vector<double> levels;                      // distinct h values, descending
  std::vector<std::size_t> prefix_len;             // candidates with h >= level
  std::vector<double> prefix_vol;
};

ThresholdSets threshold_sets(const Graph& g, const std::unordered_map<VertexId, double>& h) {
  ThresholdSets ts;
  ts.order.reserve(h.size());
  for (const auto& [v, p] : h)
    if (p > 0) ts.order.emplace_back(p, v);
  std::sort(ts.order.begin(), ts.order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  double vol = 0;
  for (std::size_t i = 0; i < ts.order.size(); ++i) {
    vol += g.degree(ts.order[i].second);
    bool last_of_level = i + 1 == ts.order.size() || ts.order[i + 1].first != ts.order[i].first;
    if (last_of_level) {
      ts.levels.push_back(ts.order[i].first);
      ts.prefix_len.push_back(i + 1);
      ts.prefix_vol.push_back(vol);
    }
  }
  return ts;
}

VertexSet prefix_set(const ThresholdSets& ts, std::size_t len) {
  VertexSet out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(ts.order[i].second);
  return make_vertex_set(std::move(out));
}

}  // namespace

VertexSet esp_step(const Graph& g, const VertexSet& s, CounterRng& rng) {
  if (s.empty() || s.size() >= g.vertex_count())
    throw std::domain_error("esp_step: state must be a nonempty proper subset");
  auto h = hitting_probs(g, s);
  double t = rng.next_double();
  VertexSet out;
  for (const auto& [v, p] : h)
    if (p >= t) out.push_back(v);
  return make_vertex_set(std::move(out));
}

VertexSet volume_biased_step(const Graph& g, const VertexSet& s, CounterRng& rng) {
  auto ts = threshold_sets(g, hitting_probs(g, s));
  if (ts.levels.empty()) return s;
  // S' = prefix at level j has K(S, S') = level_j - level_{j+1}; the
  // volume-biased kernel reweights by vol(S'), and the total weight is
  // exactly vol(S) because vol is a martingale for the plain chain.
  std::vector<double> weight(ts.levels.size());
  double total = 0;
  for (std::size_t j = 0; j < ts.levels.size(); ++j) {
    double next = j + 1 < ts.levels.size() ? ts.levels[j + 1] : 0.0;
    weight[j] = (ts.levels[j] - next) * ts.prefix_vol[j];
    total += weight[j];
  }
  double pick = rng.next_double() * total, acc = 0;
  for (std::size_t j = 0; j < ts.levels.size(); ++j) {
    acc += weight[j];
    if (acc >= pick) return prefix_set(ts, ts.prefix_len[j]);
  }
  return prefix_set(ts, ts.prefix_len.back());
}

std::vector<VertexSet> volume_biased_sample(const Graph& g, VertexId start, int steps, CounterRng& rng) {
  if (steps < 0) throw std::invalid_argument("volume_biased_sample: negative step count");
  std::vector<VertexSet> traj{VertexSet{start}};
  for (int t = 0; t < steps; ++t) {
    traj.push_back(volume_biased_step(g, traj.back(), rng));
    if (traj.back().size() == g.vertex_count()) break;  // absorbed at V
  }
  return traj;
}

EvoCutResult evo_cut_directed(const Digraph& d, VertexId u, int side, double phi, std::uint64_t seed,
                              int steps_override) {
  if (!(phi > 0) || phi >= 1) throw std::invalid_argument("evo_cut_directed: need 0 < phi < 1");
  if (side != 1 && side != 2) throw std::invalid_argument("evo_cut_directed: side must be 1 or 2");
  const std::size_t n = d.vertex_count();
  Graph cover = semi_double_cover(d);
  VertexId start = cover_id(u, side, n);
  if (cover.degree(start) <= 0) return {};  // isolated copy: nothing to walk on

  int steps = steps_override >= 0
                  ? steps_override
                  : static_cast<int>(std::floor(1.0 / (100.0 * std::pow(phi, 2.0 / 3.0))));

  CounterRng rng(seed, static_cast<std::uint64_t>(side));
  auto traj = volume_biased_sample(cover, start, steps, rng);

  EvoCutResult res;
  res.steps = static_cast<int>(traj.size()) - 1;
  double best_phi = std::numeric_limits<double>::max();
  const VertexSet* best = nullptr;
  for (const auto& s : traj) {
    if (s.empty() || s.size() >= cover.vertex_count()) continue;
    double c = conductance_one_sided(cover, s);
    if (c < best_phi) {
      best_phi = c;
      best = &s;
    }
  }
  if (!best) return res;

  res.cover_conductance = best_phi;
  VertexSet l, r;
  for (VertexId x : *best) {
    VertexId v = x < n ? x : static_cast<VertexId>(x - n);
    bool c1 = set_contains(*best, v);
    bool c2 = set_contains(*best, static_cast<VertexId>(v + n));
    if (c1 && !c2 && x < n) l.push_back(v);
    if (c2 && !c1 && x >= n) r.push_back(v);
  }
  res.left = make_vertex_set(std::move(l));
  res.right = make_vertex_set(std::move(r));
  if (res.left.empty() && res.right.empty()) return res;

  res.found = true;
  double denom = d.volume_out(res.left) + d.volume_in(res.right);
  res.flow_ratio = denom > 0 ? flow_ratio(d, res.left, res.right) : 1.0;
  double lr = arc_weight_between(d, res.left, res.right);
  double rl = arc_weight_between(d, res.right, res.left);
  res.cut_imbalance = lr + rl > 0 ? 0.5 * std::abs((lr - rl) / (lr + rl)) : 0.0;
  return res;
}

EvoCutResult evo_cut_directed_both(const Digraph& d, VertexId u, double phi, std::uint64_t seed,
                                   int steps_override) {
  EvoCutResult a = evo_cut_directed(d, u, 1, phi, seed, steps_override);
  EvoCutResult b = evo_cut_directed(d, u, 2, phi, seed, steps_override);
  if (!a.found) return b;
  if (!b.found) return a;
  return a.flow_ratio <= b.flow_ratio ? a : b;
}

}  // namespace densekit
