#pragma once

#include <cstdint>

#include "densekit/graph.h"
#include "densekit/io.h"

namespace densekit {

// Ordered-pair confusion counts between two labelings of the same universe.
struct PairConfusion {
  std::uint64_t tp = 0, tn = 0, fp = 0, fn = 0;

  std::uint64_t total() const { return tp + tn + fp + fn; }  // n (n - 1)
};

PairConfusion pair_confusion(const Partition& truth, const Partition& pred);

double rand_index(const Partition& truth, const Partition& pred);
double adjusted_rand_index(const Partition& truth, const Partition& pred);

// Pair-recovery scores: both take the better of matching (L, R) to (C1, C2)
// directly or swapped.
double f1_pair_score(const VertexSet& c1, const VertexSet& c2, const VertexSet& l, const VertexSet& r);
double misclassified_ratio(const VertexSet& c1, const VertexSet& c2, const VertexSet& l, const VertexSet& r);

// Accuracy (1/n) sum_i |S_i n A_i| under the best one-to-one matching of
// clusters, computed by the Hungarian algorithm.
double matched_accuracy(const Partition& truth, const Partition& pred, std::size_t n);

// lambda_{k+1} / max_i Phi(S_i) for a given partition: a certified lower
// bound on the clusterability ratio.
double upsilon_lower_bound(const Graph& g, const Partition& partition, int k);

// Exact k-way expansion by exhaustive partition enumeration; exponential,
// intended for n <= 14.
double rho_exact_small(const Graph& g, int k);

}  // namespace densekit
