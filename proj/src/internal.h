#ifndef SWAPBRIBERY_SRC_INTERNAL_H_
#define SWAPBRIBERY_SRC_INTERNAL_H_

// Helpers shared by the solver translation units. Not installed.

#include <cstdint>
#include <optional>
#include <vector>

#include "swapbribery/cost.h"
#include "swapbribery/election.h"

namespace swapbribery::internal {

struct Assignment {
  std::int64_t cost = 0;
  std::vector<int> type_of_row;
};

// Min-cost assignment of every row to a column, column t receiving exactly
// multiplicity[t] rows (sum of multiplicities == rows). FORBIDDEN entries
// are unusable. nullopt when no complete assignment exists.
std::optional<Assignment> AssignWithMultiplicities(
    const std::vector<std::vector<Cost>>& costs,
    const std::vector<int>& multiplicity);

// All m! orders in lexicographic order.
std::vector<Preference> AllOrders(int m);

// C(n, k), saturating at INT64_MAX.
std::int64_t Binomial(std::int64_t n, std::int64_t k);

}  // namespace swapbribery::internal

#endif  // SWAPBRIBERY_SRC_INTERNAL_H_
