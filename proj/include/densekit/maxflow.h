#pragma once

#include <limits>
#include <vector>

namespace densekit {

// Dinic's max-flow on a small directed network with double capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count) : head_(node_count, -1), level_(node_count), iter_(node_count) {}

  static constexpr double kInf = std::numeric_limits<double>::infinity();

  // Returns the arc index; the residual reverse arc is index ^ 1.
  int add_edge(int from, int to, double capacity);

  double solve(int s, int t);

  double flow_on(int arc) const { return edges_[2 * arc].flow; }

 private:
  struct Edge {
    int to, next;
    double cap, flow;
  };

  bool bfs(int s, int t);
  double dfs(int v, int t, double limit);

  std::vector<Edge> edges_;
  std::vector<int> head_, level_, iter_;
};

}  // namespace densekit
