#ifndef SWAPBRIBERY_MIN_COST_FLOW_H_
#define SWAPBRIBERY_MIN_COST_FLOW_H_

#include <cstdint>
#include <limits>
#include <vector>

namespace swapbribery {

// Min-cost flow by successive shortest augmenting paths. Edge costs must be
// nonnegative; Johnson potentials keep reduced costs nonnegative so every
// shortest-path step is a Dijkstra run. Capacities are integers, so the
// optimum found is integral.
class MinCostFlow {
 public:
  static constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MinCostFlow(int num_nodes);

  // Returns an edge id usable with flow().
  int AddEdge(int from, int to, std::int64_t capacity, std::int64_t cost);

  struct Result {
    std::int64_t flow = 0;
    std::int64_t cost = 0;
  };

  // Pushes up to `limit` units from source to sink at minimum total cost
  // among all flows of the resulting value.
  Result Solve(int source, int sink, std::int64_t limit = kUnbounded);

  std::int64_t flow(int edge_id) const;

 private:
  struct Edge {
    int to;
    int rev;
    std::int64_t capacity;
    std::int64_t cost;
  };

  std::vector<std::vector<Edge>> graph_;
  std::vector<std::pair<int, int>> edge_index_;  // id -> (node, slot)
  std::vector<std::int64_t> original_capacity_;
};

}  // namespace swapbribery

#endif  // SWAPBRIBERY_MIN_COST_FLOW_H_
