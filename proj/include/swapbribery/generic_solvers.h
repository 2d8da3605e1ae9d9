#ifndef SWAPBRIBERY_GENERIC_SOLVERS_H_
#define SWAPBRIBERY_GENERIC_SOLVERS_H_

#include <optional>
#include <span>
#include <vector>

#include "swapbribery/election.h"
#include "swapbribery/instance.h"
#include "swapbribery/swap_model.h"

namespace swapbribery {

struct MultisetAssignment {
  Cost cost;
  std::vector<Preference> targets;  // targets[i] is what voter i becomes
};

// Cheapest way to turn the vote list into the target multiset (given as a
// list; only multiplicities matter). Solved as a min-cost flow from voters
// to the distinct target votes. Throws InfeasibleError if no bijection
// avoids forbidden swaps.
MultisetAssignment list_to_multiset_cost(std::span<const Preference> votes,
                                         std::span<const SwapPriceFn> prices,
                                         std::span<const Preference> target);

// Exact solver for few candidates: enumerates every multiset of n votes over
// the m! orders (times the admissible thresholds for SP-AV), keeps those in
// which the preferred candidate wins, and prices each by
// list_to_multiset_cost. Throws CapacityError when m exceeds
// limits.max_fixed_candidates. Shift instances are rejected.
std::optional<BriberySolution> solve_fixed_candidates(
    const BriberyInstance& instance, const SearchLimits& limits = {});

// Brute-force reference. Each voter's reachable outcomes within the budget
// are enumerated independently (a Dijkstra search over adjacent swaps for
// swap and mixed instances, every affordable shift for shift instances),
// merged when they contribute identically to the rule's tally, and the
// product of the per-voter choices is searched depth-first with budget
// pruning. Globally optimal; raises CapacityError past the limits.
std::optional<BriberySolution> exact_oracle(const BriberyInstance& instance,
                                            const SearchLimits& limits = {});

// A strict partial order given by its (transitively closed) "before" pairs.
class PartialPreference {
 public:
  PartialPreference() = default;
  // Throws ParameterError if the pairs (after closure) contain a cycle.
  PartialPreference(int m, const std::vector<CandidatePair>& before);

  int size() const { return m_; }
  bool before(Candidate a, Candidate b) const { return closure_[a * m_ + b]; }
  bool comparable(Candidate a, Candidate b) const {
    return before(a, b) || before(b, a);
  }
  std::vector<CandidatePair> pairs() const;

  bool extended_by(const Preference& vote) const;
  // A linear extension, picking the smallest available index first.
  Preference completion() const;

  friend bool operator==(const PartialPreference&, const PartialPreference&) = default;

 private:
  int m_ = 0;
  std::vector<bool> closure_;
};

struct PossibleWinnerInstance {
  CandidateSet candidates;
  Rule rule = Rule::Plurality();
  std::vector<PartialPreference> votes;
  Candidate preferred = 0;
};

// Completes each vote topologically and prices every swap of a comparable
// pair at 1, every other swap at 0, with budget 0. The preferred candidate
// can be made a winner at cost 0 iff some completion of the partial profile
// makes it a winner.
BriberyInstance reduce_possible_winner(const PossibleWinnerInstance& pw);

}  // namespace swapbribery

#endif  // SWAPBRIBERY_GENERIC_SOLVERS_H_
