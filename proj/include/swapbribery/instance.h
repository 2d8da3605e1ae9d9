#ifndef SWAPBRIBERY_INSTANCE_H_
#define SWAPBRIBERY_INSTANCE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "swapbribery/cost.h"
#include "swapbribery/election.h"
#include "swapbribery/swap_model.h"

namespace swapbribery {

enum class BriberyKind {
  kSwap,   // per-voter swap prices
  kShift,  // per-voter shift prices; only the preferred candidate moves
  kMixed,  // SP-AV: swap prices plus approval-threshold prices
};

struct BriberyInstance {
  Election election;
  Rule rule = Rule::Plurality();
  Candidate preferred = 0;
  // Each list is either empty or holds exactly one entry per voter.
  std::vector<SwapPriceFn> swap_prices;
  std::vector<ShiftPriceFn> shift_prices;
  std::vector<ThresholdPriceFn> threshold_prices;
  std::int64_t budget = 0;

  BriberyKind kind() const;
  // True when the instance carries the price tables its kind needs (always
  // true for an election without voters).
  bool has_prices() const;

  // Throws ParameterError on any broken invariant.
  void Validate() const;

  friend bool operator==(const BriberyInstance&, const BriberyInstance&) = default;
};

struct BriberySolution {
  SwapSequence swaps;
  std::vector<int> shifts;            // one per voter for shift instances
  std::vector<int> threshold_deltas;  // one per voter for mixed instances
  Cost total_cost;
  std::vector<Candidate> winners;

  friend bool operator==(const BriberySolution&, const BriberySolution&) = default;
};

// Applies the solution's swaps, then shifts, then threshold changes.
// Throws AdmissibilityError / RangeError / ParameterError on bad steps.
Election replay(const BriberyInstance& instance, const BriberySolution& solution);

// Price of the solution recomputed from the instance's price tables.
Cost recompute_cost(const BriberyInstance& instance,
                    const BriberySolution& solution);

struct ReplayReport {
  bool ok = false;
  std::string message;
  Cost cost;
  std::vector<Candidate> winners;
};

// Full verification: replays cleanly, recorded cost matches the prices and
// fits the budget, the preferred candidate wins, and the recorded winner set
// is the one the replay produces.
ReplayReport check_solution(const BriberyInstance& instance,
                            const BriberySolution& solution);

// Fills total_cost and winners by replay and requires the preferred
// candidate to win (and, if `enforce_budget`, the cost to fit). Throws
// ConsistencyError otherwise. Every solver returns through this.
BriberySolution finalize_solution(const BriberyInstance& instance,
                                  BriberySolution solution,
                                  bool enforce_budget = true);

// Limits for the desk-scale enumerations. Exceeding one raises
// CapacityError; nothing is ever truncated silently.
struct SearchLimits {
  int max_fixed_candidates = 4;
  int max_fixed_voters = 4;
  // Profiles (or multisets) evaluated by a single enumeration.
  std::int64_t max_profiles = 10'000'000;
  // Orders settled by the per-voter reachability search of the oracle.
  std::int64_t max_orders_per_voter = 1'000'000;
};

}  // namespace swapbribery

#endif  // SWAPBRIBERY_INSTANCE_H_
