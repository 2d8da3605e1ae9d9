#include "swapbribery/min_cost_flow.h"

#include <algorithm>
#include <functional>
#include <queue>

#include "swapbribery/cost.h"
#include "swapbribery/errors.h"

namespace swapbribery {

MinCostFlow::MinCostFlow(int num_nodes) : graph_(num_nodes) {}

int MinCostFlow::AddEdge(int from, int to, std::int64_t capacity,
                         std::int64_t cost) {
  if (cost < 0) throw ParameterError("min-cost flow edge with negative cost");
  if (capacity < 0) throw ParameterError("min-cost flow edge with negative capacity");
  if (from == to) throw ParameterError("min-cost flow self-loop");
  const int n = static_cast<int>(graph_.size());
  if (from < 0 || from >= n || to < 0 || to >= n) {
    throw ParameterError("min-cost flow edge endpoint out of range");
  }
  int id = static_cast<int>(edge_index_.size());
  edge_index_.emplace_back(from, static_cast<int>(graph_[from].size()));
  original_capacity_.push_back(capacity);
  graph_[from].push_back({to, static_cast<int>(graph_[to].size()), capacity, cost});
  graph_[to].push_back({from, static_cast<int>(graph_[from].size()) - 1, 0, -cost});
  return id;
}

MinCostFlow::Result MinCostFlow::Solve(int source, int sink, std::int64_t limit) {
  const int n = static_cast<int>(graph_.size());
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> potential(n, 0);
  std::vector<std::int64_t> dist(n);
  std::vector<int> prev_node(n);
  std::vector<int> prev_edge(n);
  Result result;

  while (result.flow < limit) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[source] = 0;
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    queue.emplace(0, source);
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (d != dist[u]) continue;
      for (int slot = 0; slot < static_cast<int>(graph_[u].size()); ++slot) {
        const Edge& e = graph_[u][slot];
        if (e.capacity == 0) continue;
        std::int64_t nd = d + e.cost + potential[u] - potential[e.to];
        if (nd < dist[e.to]) {
          dist[e.to] = nd;
          prev_node[e.to] = u;
          prev_edge[e.to] = slot;
          queue.emplace(nd, e.to);
        }
      }
    }
    if (dist[sink] == kInf) break;
    for (int v = 0; v < n; ++v) {
      if (dist[v] < kInf) potential[v] += dist[v];
    }
    std::int64_t push = limit - result.flow;
    for (int v = sink; v != source; v = prev_node[v]) {
      push = std::min(push, graph_[prev_node[v]][prev_edge[v]].capacity);
    }
    for (int v = sink; v != source; v = prev_node[v]) {
      Edge& e = graph_[prev_node[v]][prev_edge[v]];
      e.capacity -= push;
      graph_[v][e.rev].capacity += push;
      result.cost = CheckedAdd(result.cost, CheckedMul(push, e.cost));
    }
    result.flow += push;
  }
  return result;
}

std::int64_t MinCostFlow::flow(int edge_id) const {
  auto [node, slot] = edge_index_.at(edge_id);
  return original_capacity_[edge_id] - graph_[node][slot].capacity;
}

}  // namespace swapbribery
