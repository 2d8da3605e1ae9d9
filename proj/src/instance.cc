#include "swapbribery/instance.h"

#include <algorithm>

#include "swapbribery/errors.h"

namespace swapbribery {

BriberyKind BriberyInstance::kind() const {
  if (!shift_prices.empty()) return BriberyKind::kShift;
  if (!threshold_prices.empty()) return BriberyKind::kMixed;
  return BriberyKind::kSwap;
}

bool BriberyInstance::has_prices() const {
  const std::size_t n = election.votes().size();
  if (n == 0) return true;
  switch (kind()) {
    case BriberyKind::kShift:
      return shift_prices.size() == n;
    case BriberyKind::kMixed:
      return swap_prices.size() == n && threshold_prices.size() == n;
    case BriberyKind::kSwap:
      return swap_prices.size() == n;
  }
  return false;
}

void BriberyInstance::Validate() const {
  ValidateRule(election, rule);
  const int m = election.num_candidates();
  const int n = election.num_voters();
  if (preferred < 0 || preferred >= m) {
    throw ParameterError("preferred candidate index out of range");
  }
  if (budget < 0) throw ParameterError("budget must be nonnegative");
  if (!shift_prices.empty() && (!swap_prices.empty() || !threshold_prices.empty())) {
    throw ParameterError("shift prices cannot be combined with swap or threshold prices");
  }
  auto check_count = [n](std::size_t count, const char* what) {
    if (count != 0 && count != static_cast<std::size_t>(n)) {
      throw ParameterError(std::string("expected one ") + what +
                           " table per voter, got " + std::to_string(count));
    }
  };
  check_count(swap_prices.size(), "swap price");
  check_count(shift_prices.size(), "shift price");
  check_count(threshold_prices.size(), "threshold price");
  for (const auto& prices : swap_prices) {
    if (prices.size() != m) throw ParameterError("swap price table has wrong size");
  }
  for (int i = 0; i < static_cast<int>(shift_prices.size()); ++i) {
    int above = election.vote(i).position_of(preferred);
    if (shift_prices[i].headroom() != above) {
      throw ParameterError("voter " + std::to_string(i + 1) + " has " +
                           std::to_string(above) +
                           " candidates above the preferred one but " +
                           std::to_string(shift_prices[i].headroom()) +
                           " shift prices");
    }
  }
  if (!threshold_prices.empty() && rule.kind() != Rule::Kind::kSpav) {
    throw ParameterError("threshold prices require the spav rule");
  }
}

Election replay(const BriberyInstance& instance, const BriberySolution& solution) {
  const int n = instance.election.num_voters();
  Election current = apply_swap_sequence(instance.election, solution.swaps);
  if (!solution.shifts.empty()) {
    if (static_cast<int>(solution.shifts.size()) != n) {
      throw ParameterError("shift vector length differs from the voter count");
    }
    for (int i = 0; i < n; ++i) {
      current = current.with_vote(
          i, apply_shift(current.vote(i), instance.preferred, solution.shifts[i]));
    }
  }
  if (!solution.threshold_deltas.empty()) {
    if (static_cast<int>(solution.threshold_deltas.size()) != n) {
      throw ParameterError("threshold delta vector length differs from the voter count");
    }
    if (!current.has_approvals()) {
      throw ParameterError("threshold changes need an SP-AV election");
    }
    std::vector<int> thresholds = current.approvals();
    for (int i = 0; i < n; ++i) thresholds[i] += solution.threshold_deltas[i];
    current = Election(current.candidates(), current.votes(), std::move(thresholds));
  }
  return current;
}

Cost recompute_cost(const BriberyInstance& instance,
                    const BriberySolution& solution) {
  Cost total;
  if (!solution.swaps.swaps.empty() && instance.swap_prices.empty()) {
    throw ParameterError("solution contains swaps but the instance has no swap prices");
  }
  for (const UnitSwap& swap : solution.swaps.swaps) {
    total += instance.swap_prices.at(swap.voter)(swap.upper, swap.lower);
  }
  for (std::size_t i = 0; i < solution.shifts.size(); ++i) {
    if (solution.shifts[i] == 0) continue;
    if (instance.shift_prices.empty()) {
      throw ParameterError("solution contains shifts but the instance has no shift prices");
    }
    total += instance.shift_prices.at(i)(solution.shifts[i]);
  }
  for (std::size_t i = 0; i < solution.threshold_deltas.size(); ++i) {
    if (solution.threshold_deltas[i] == 0) continue;
    if (instance.threshold_prices.empty()) {
      throw ParameterError("solution changes thresholds but the instance has no threshold prices");
    }
    total += instance.threshold_prices.at(i)(solution.threshold_deltas[i]);
  }
  return total;
}

ReplayReport check_solution(const BriberyInstance& instance,
                            const BriberySolution& solution) {
  ReplayReport report;
  try {
    Election after = replay(instance, solution);
    report.cost = recompute_cost(instance, solution);
    report.winners = winners(after, instance.rule);
  } catch (const BriberyError& e) {
    report.message = e.what();
    return report;
  }
  if (report.cost != solution.total_cost) {
    report.message = "recorded cost " + solution.total_cost.ToString() +
                     " but the prices give " + report.cost.ToString();
  } else if (report.cost.forbidden() || report.cost.value() > instance.budget) {
    report.message = "cost " + report.cost.ToString() + " exceeds budget " +
                     std::to_string(instance.budget);
  } else if (!std::binary_search(report.winners.begin(), report.winners.end(),
                                 instance.preferred)) {
    report.message = "preferred candidate does not win after replay";
  } else if (report.winners != solution.winners) {
    report.message = "recorded winner set differs from the replayed one";
  } else {
    report.ok = true;
    report.message = "ok";
  }
  return report;
}

BriberySolution finalize_solution(const BriberyInstance& instance,
                                  BriberySolution solution, bool enforce_budget) {
  try {
    Election after = replay(instance, solution);
    solution.total_cost = recompute_cost(instance, solution);
    solution.swaps.total_cost = Cost();
    for (const UnitSwap& swap : solution.swaps.swaps) {
      solution.swaps.total_cost += instance.swap_prices.at(swap.voter)(swap.upper, swap.lower);
    }
    solution.winners = winners(after, instance.rule);
  } catch (const BriberyError& e) {
    throw ConsistencyError(std::string("solver produced an unreplayable solution: ") +
                           e.what());
  }
  if (solution.total_cost.forbidden()) {
    throw ConsistencyError("solver produced a solution using a forbidden price");
  }
  if (!std::binary_search(solution.winners.begin(), solution.winners.end(),
                          instance.preferred)) {
    throw ConsistencyError("solver produced a solution in which the preferred candidate loses");
  }
  if (enforce_budget && solution.total_cost.value() > instance.budget) {
    throw ConsistencyError("solver produced a solution over budget");
  }
  return solution;
}

}  // namespace swapbribery
