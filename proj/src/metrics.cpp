#include "densekit/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "densekit/cuts.h"
#include "densekit/eigs.h"

namespace densekit {

namespace {

std::vector<int> labels_of(const Partition& parts, std::size_t& n_out) {
  std::size_t n = 0;
  for (const auto& p : parts)
    for (VertexId v : p) n = std::max<std::size_t>(n, v + 1);
  std::vector<int> lab(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (VertexId v : parts[i]) {
      if (lab[v] != -1) throw std::invalid_argument("partition has overlapping clusters");
      lab[v] = static_cast<int>(i);
    }
  n_out = n;
  return lab;
}

}  // namespace

PairConfusion pair_confusion(const Partition& truth, const Partition& pred) {
  std::size_t nt = 0, np = 0;
  auto lt = labels_of(truth, nt);
  auto lp = labels_of(pred, np);
  if (nt != np) throw std::invalid_argument("partitions cover different universes");
  for (std::size_t v = 0; v < nt; ++v)
    if ((lt[v] == -1) != (lp[v] == -1)) throw std::invalid_argument("partitions cover different universes");

  // Contingency-table route: O(n + #clusters^2) instead of O(n^2) pairs.
  std::vector<std::vector<std::uint64_t>> cont(truth.size(), std::vector<std::uint64_t>(pred.size(), 0));
  std::uint64_t n = 0;
  for (std::size_t v = 0; v < nt; ++v) {
    if (lt[v] == -1) continue;
    ++cont[lt[v]][lp[v]];
    ++n;
  }
  std::uint64_t sum_sq = 0, row_sq = 0, col_sq = 0;
  std::vector<std::uint64_t> rows(truth.size(), 0), cols(pred.size(), 0);
  for (std::size_t i = 0; i < truth.size(); ++i)
    for (std::size_t j = 0; j < pred.size(); ++j) {
      std::uint64_t c = cont[i][j];
      sum_sq += c * c;
      rows[i] += c;
      cols[j] += c;
    }
  for (auto r : rows) row_sq += r * r;
  for (auto c : cols) col_sq += c * c;

  PairConfusion pc;
  pc.tp = sum_sq - n;
  pc.fn = row_sq - sum_sq;
  pc.fp = col_sq - sum_sq;
  pc.tn = n * (n - 1) - pc.tp - pc.fn - pc.fp;
  return pc;
}

double rand_index(const Partition& truth, const Partition& pred) {
  PairConfusion pc = pair_confusion(truth, pred);
  if (pc.total() == 0) return 1.0;
  return static_cast<double>(pc.tp + pc.tn) / static_cast<double>(pc.total());
}

double adjusted_rand_index(const Partition& truth, const Partition& pred) {
  PairConfusion pc = pair_confusion(truth, pred);
  double tp = static_cast<double>(pc.tp), tn = static_cast<double>(pc.tn);
  double fp = static_cast<double>(pc.fp), fn = static_cast<double>(pc.fn);
  double denom = (tp + fn) * (tn + fn) + (tn + fp) * (tp + fp);
  if (denom == 0) return tp + tn > 0 ? 1.0 : 0.0;
  return 2.0 * (tp * tn - fp * fn) / denom;
}

namespace {

double f1_of_sets(const VertexSet& a, const VertexSet& b) {
  if (a.empty() && b.empty()) return 1.0;
  VertexSet inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
  double denom = static_cast<double>(a.size() + b.size());
  return denom > 0 ? 2.0 * static_cast<double>(inter.size()) / denom : 0.0;
}

double sym_diff_size(const VertexSet& a, const VertexSet& b) {
  VertexSet d;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
  return static_cast<double>(d.size());
}

double union_size(const VertexSet& a, const VertexSet& b) {
  return static_cast<double>(set_union(a, b).size());
}

}  // namespace

double f1_pair_score(const VertexSet& c1, const VertexSet& c2, const VertexSet& l, const VertexSet& r) {
  double direct = 0.5 * (f1_of_sets(c1, l) + f1_of_sets(c2, r));
  double swapped = 0.5 * (f1_of_sets(c1, r) + f1_of_sets(c2, l));
  return std::max(direct, swapped);
}

double misclassified_ratio(const VertexSet& c1, const VertexSet& c2, const VertexSet& l, const VertexSet& r) {
  auto ratio = [&](const VertexSet& a, const VertexSet& b) {
    double denom = union_size(c1, a) + union_size(c2, b);
    if (denom == 0) return 0.0;
    return (sym_diff_size(c1, a) + sym_diff_size(c2, b)) / denom;
  };
  return std::min(ratio(l, r), ratio(r, l));
}

namespace {

// Hungarian algorithm (maximum-weight perfect matching on a square matrix).
double hungarian_max(const std::vector<std::vector<double>>& score) {
  const int k = static_cast<int>(score.size());
  const double inf = std::numeric_limits<double>::infinity();
  // classic O(k^3) potentials formulation, minimising -score
  std::vector<double> u(k + 1, 0), v(k + 1, 0);
  std::vector<int> p(k + 1, 0), way(k + 1, 0);
  for (int i = 1; i <= k; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(k + 1, inf);
    std::vector<char> used(k + 1, false);
    do {
      used[j0] = true;
      int i0 = p[j0], j1 = 0;
      double delta = inf;
      for (int j = 1; j <= k; ++j) {
        if (used[j]) continue;
        double cur = -score[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= k; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  double total = 0;
  for (int j = 1; j <= k; ++j)
    if (p[j] > 0) total += score[p[j] - 1][j - 1];
  return total;
}

}  // namespace

double matched_accuracy(const Partition& truth, const Partition& pred, std::size_t n) {
  const int k = static_cast<int>(std::max(truth.size(), pred.size()));
  std::vector<std::vector<double>> overlap(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < truth.size(); ++i)
    for (std::size_t j = 0; j < pred.size(); ++j) {
      VertexSet inter;
      std::set_intersection(truth[i].begin(), truth[i].end(), pred[j].begin(), pred[j].end(),
                            std::back_inserter(inter));
      overlap[i][j] = static_cast<double>(inter.size());
    }
  return hungarian_max(overlap) / static_cast<double>(n);
}

double upsilon_lower_bound(const Graph& g, const Partition& partition, int k) {
  if (static_cast<int>(partition.size()) != k) throw std::invalid_argument("partition size != k");
  double max_phi = 0;
  for (const auto& s : partition) max_phi = std::max(max_phi, conductance(g, s));
  EigenPairs eig = smallest_eigs(LaplacianKind::NormalizedLaplacian, g, k + 1);
  double lambda = eig.values[k];
  if (max_phi <= 0) return std::numeric_limits<double>::infinity();
  return lambda / max_phi;
}

double rho_exact_small(const Graph& g, int k) {
  const int n = static_cast<int>(g.vertex_count());
  if (n > 14) throw std::invalid_argument("rho_exact_small is exponential; n <= 14 only");
  if (k < 2 || k > n) throw std::invalid_argument("need 2 <= k <= n");

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> label(n, 0);
  std::vector<VertexSet> parts(k);
  // canonical labelings (label[v] <= #labels used so far) visit each partition once
  auto rec = [&](auto&& self, int v, int used) -> void {
    if (n - v < k - used) return;
    if (v == n) {
      for (auto& p : parts) p.clear();
      for (int i = 0; i < n; ++i) parts[label[i]].push_back(static_cast<VertexId>(i));
      double worst = 0;
      for (const auto& p : parts) worst = std::max(worst, conductance(g, p));
      best = std::min(best, worst);
      return;
    }
    int limit = std::min(used, k - 1);
    for (int c = 0; c <= limit; ++c) {
      label[v] = c;
      self(self, v + 1, std::max(used, c + 1));
    }
  };
  rec(rec, 1, 1);
  return best;
}

}  // namespace densekit
