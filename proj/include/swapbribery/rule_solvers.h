#ifndef SWAPBRIBERY_RULE_SOLVERS_H_
#define SWAPBRIBERY_RULE_SOLVERS_H_

#include <optional>
#include <vector>

#include "swapbribery/cost.h"
#include "swapbribery/instance.h"

namespace swapbribery {

// Swap bribery for plurality and veto. Each vote ends with some candidate on
// top (bottom for veto), and the cheapest way to get candidate c there is to
// bubble c past everything in the way. For every final score of the
// preferred candidate the votes are routed to their new top (bottom)
// candidates by a min-cost flow with the score caps as capacities.
std::optional<BriberySolution> solve_plurality_veto_swap(
    const BriberyInstance& instance);

// Shift bribery for the k-approval family (plurality and veto included).
// A voter either leaves the preferred candidate alone or pays to move it
// into the last approved position, which takes one point from the candidate
// that held it.
std::optional<BriberySolution> solve_kapproval_shift(
    const BriberyInstance& instance);

// Swap bribery for the k-approval family with few voters: tries every
// choice of approved set per voter. Throws CapacityError past
// limits.max_fixed_voters voters or limits.max_profiles combinations.
std::optional<BriberySolution> solve_kapproval_fixed_voters(
    const BriberyInstance& instance, const SearchLimits& limits = {});

struct ShiftPlan {
  Cost cost;
  std::vector<int> shifts;
};

// Cheapest way to move the preferred candidate up exactly `total` positions
// summed over all votes, ignoring the budget and the winner condition.
// Among cheapest plans the lexicographically smallest shift vector is
// returned. nullopt if `total` exceeds the available headroom or every plan
// is FORBIDDEN.
std::optional<ShiftPlan> borda_shift_dp(const BriberyInstance& instance,
                                        int total);

enum class ApproximationVerdict {
  kFeasible,      // solution found within the budget
  kInconclusive,  // cheapest found exceeds the budget by at most a factor 2
  kInfeasible,    // nothing within the budget can exist
};

struct ApproximationResult {
  ApproximationVerdict verdict = ApproximationVerdict::kInfeasible;
  // Cheapest winning bribery found, also when it exceeds the budget.
  std::optional<BriberySolution> solution;
};

// Two-stage Borda shift bribery: for every total k take the cheapest k-shift
// plan, then on top of it the cheapest (k - j)-shift plan for every j <= k;
// the cheapest combination that makes the preferred candidate win costs at
// most twice the optimum.
ApproximationResult borda_shift_2approx(const BriberyInstance& instance);

// Optimal shift bribery for any rule by exhaustive search.
std::optional<BriberySolution> solve_shift_exact(const BriberyInstance& instance,
                                                 const SearchLimits& limits = {});

// Optimal SP-AV bribery mixing swaps and approval-threshold changes, by
// exhaustive search. Thresholds leaving 1..m-1 are never considered.
std::optional<BriberySolution> solve_spav_mixed_exact(
    const BriberyInstance& instance, const SearchLimits& limits = {});

}  // namespace swapbribery

#endif  // SWAPBRIBERY_RULE_SOLVERS_H_
