#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace densekit {

struct KmeansResult {
  std::vector<int> assignment;  // point -> cluster in [0, k)
  Eigen::MatrixXd centres;      // k x dim
  double cost = 0;              // sum_i weight_i * ||x_i - c_{a(i)}||^2
};

// Weighted Lloyd iteration with weighted D^2 seeding. `restarts` independent
// runs are performed and the best objective kept; deterministic for a fixed
// (seed, restarts). Throws if k exceeds the number of distinct points.
KmeansResult weighted_kmeans(const Eigen::MatrixXd& points, const std::vector<double>& weights, int k,
                             std::uint64_t seed, int restarts = 10, int max_iters = 100);

}  // namespace densekit
