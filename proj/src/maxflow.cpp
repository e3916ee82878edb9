#include "densekit/maxflow.h"

#include <algorithm>
#include <queue>

namespace densekit {

namespace {
constexpr double kEps = 1e-12;
}

int MaxFlow::add_edge(int from, int to, double capacity) {
  int id = static_cast<int>(edges_.size()) / 2;
  edges_.push_back({to, head_[from], capacity, 0.0});
  head_[from] = static_cast<int>(edges_.size()) - 1;
  edges_.push_back({from, head_[to], 0.0, 0.0});
  head_[to] = static_cast<int>(edges_.size()) - 1;
  return id;
}

bool MaxFlow::bfs(int s, int t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e = head_[v]; e != -1; e = edges_[e].next) {
      if (level_[edges_[e].to] == -1 && edges_[e].cap - edges_[e].flow > kEps) {
        level_[edges_[e].to] = level_[v] + 1;
        q.push(edges_[e].to);
      }
    }
  }
  return level_[t] != -1;
}

double MaxFlow::dfs(int v, int t, double limit) {
  if (v == t || limit <= kEps) return limit;
  for (int& e = iter_[v]; e != -1; e = edges_[e].next) {
    Edge& ed = edges_[e];
    if (level_[ed.to] != level_[v] + 1 || ed.cap - ed.flow <= kEps) continue;
    double pushed = dfs(ed.to, t, std::min(limit, ed.cap - ed.flow));
    if (pushed > kEps) {
      ed.flow += pushed;
      edges_[e ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

double MaxFlow::solve(int s, int t) {
  double total = 0;
  while (bfs(s, t)) {
    for (std::size_t i = 0; i < head_.size(); ++i) iter_[i] = head_[i];
    for (;;) {
      double pushed = dfs(s, t, kInf);
      if (pushed <= kEps) break;
      total += pushed;
    }
  }
  return total;
}

}  // namespace densekit
