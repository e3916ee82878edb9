#include "densekit/kmeans.h"

#include <limits>
#include <set>
#include <stdexcept>

#include "densekit/rng.h"

namespace densekit {

namespace {

double sq_dist(const Eigen::MatrixXd& pts, int i, const Eigen::MatrixXd& centres, int c) {
  return (pts.row(i) - centres.row(c)).squaredNorm();
}

KmeansResult lloyd_once(const Eigen::MatrixXd& pts, const std::vector<double>& w, int k, CounterRng rng,
                        int max_iters) {
  const int n = static_cast<int>(pts.rows());
  const int dim = static_cast<int>(pts.cols());
  Eigen::MatrixXd centres(k, dim);

  // Weighted D^2 seeding.
  std::vector<double> d2(n, std::numeric_limits<double>::max());
  {
    double total = 0;
    for (int i = 0; i < n; ++i) total += w[i];
    double pick = rng.next_double() * total, acc = 0;
    int first = n - 1;
    for (int i = 0; i < n; ++i) {
      acc += w[i];
      if (acc >= pick) {
        first = i;
        break;
      }
    }
    centres.row(0) = pts.row(first);
  }
  for (int c = 1; c < k; ++c) {
    double total = 0;
    for (int i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], sq_dist(pts, i, centres, c - 1));
      total += w[i] * d2[i];
    }
    int chosen = -1;
    if (total > 0) {
      double pick = rng.next_double() * total, acc = 0;
      for (int i = 0; i < n; ++i) {
        acc += w[i] * d2[i];
        if (acc >= pick) {
          chosen = i;
          break;
        }
      }
    }
    if (chosen < 0) {
      // all remaining mass sits on existing centres; take any point not yet
      // chosen to keep k distinct centres
      chosen = static_cast<int>(rng.next_below(n));
    }
    centres.row(c) = pts.row(chosen);
  }

  std::vector<int> assign(n, 0);
  double cost = 0;
  for (int iter = 0; iter < max_iters; ++iter) {
    bool changed = false;
    cost = 0;
    for (int i = 0; i < n; ++i) {
      int best = 0;
      double bd = sq_dist(pts, i, centres, 0);
      for (int c = 1; c < k; ++c) {
        double d = sq_dist(pts, i, centres, c);
        if (d < bd) {
          bd = d;
          best = c;
        }
      }
      if (assign[i] != best) {
        assign[i] = best;
        changed = true;
      }
      cost += w[i] * bd;
    }
    if (!changed && iter > 0) break;
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, dim);
    std::vector<double> mass(k, 0);
    for (int i = 0; i < n; ++i) {
      sums.row(assign[i]) += w[i] * pts.row(i);
      mass[assign[i]] += w[i];
    }
    for (int c = 0; c < k; ++c) {
      if (mass[c] > 0) {
        centres.row(c) = sums.row(c) / mass[c];
      } else {
        // empty cluster: reseed at the point farthest from its centre
        int far = 0;
        double fd = -1;
        for (int i = 0; i < n; ++i) {
          double d = w[i] * sq_dist(pts, i, centres, assign[i]);
          if (d > fd) {
            fd = d;
            far = i;
          }
        }
        centres.row(c) = pts.row(far);
      }
    }
  }
  return {std::move(assign), std::move(centres), cost};
}

}  // namespace

KmeansResult weighted_kmeans(const Eigen::MatrixXd& points, const std::vector<double>& weights, int k,
                             std::uint64_t seed, int restarts, int max_iters) {
  const int n = static_cast<int>(points.rows());
  if (static_cast<int>(weights.size()) != n) throw std::invalid_argument("weights size mismatch");
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::set<std::vector<double>> distinct;
  for (int i = 0; i < n; ++i) {
    std::vector<double> p(points.cols());
    for (int j = 0; j < points.cols(); ++j) p[j] = points(i, j);
    distinct.insert(std::move(p));
    if (static_cast<int>(distinct.size()) >= k) break;
  }
  if (static_cast<int>(distinct.size()) < k)
    throw std::invalid_argument("k exceeds the number of distinct points");

  CounterRng rng(seed);
  KmeansResult best;
  best.cost = std::numeric_limits<double>::max();
  for (int r = 0; r < restarts; ++r) {
    KmeansResult res = lloyd_once(points, weights, k, rng.split(r), max_iters);
    if (res.cost < best.cost) best = std::move(res);
  }
  return best;
}

}  // namespace densekit
