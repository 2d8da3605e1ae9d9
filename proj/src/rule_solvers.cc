#include "swapbribery/rule_solvers.h"

#include <algorithm>
#include <functional>
#include <string>

#include "internal.h"
#include "swapbribery/errors.h"
#include "swapbribery/generic_solvers.h"
#include "swapbribery/min_cost_flow.h"

namespace swapbribery {
namespace {

void RequireKind(const BriberyInstance& instance, BriberyKind kind,
                 const char* solver) {
  instance.Validate();
  if (instance.kind() != kind || !instance.has_prices()) {
    const char* needed = kind == BriberyKind::kSwap    ? "swap"
                         : kind == BriberyKind::kShift ? "shift"
                                                       : "swap and threshold";
    throw ParameterError(std::string(solver) + " needs " + needed +
                         " prices for every voter");
  }
}

// Penalty that dominates every sum of finite option costs.
std::int64_t PenaltyFor(const std::vector<std::vector<Cost>>& costs) {
  std::int64_t total = 1;
  for (const auto& row : costs) {
    for (const Cost& c : row) {
      if (c.finite()) total = CheckedAdd(total, c.value());
    }
  }
  return total;
}

// `vote` with `c` moved to the top (or bottom), everything else in order.
Preference MoveTo(const Preference& vote, Candidate c, bool top) {
  std::vector<Candidate> ranking;
  if (top) ranking.push_back(c);
  for (Candidate x : vote.ranking()) {
    if (x != c) ranking.push_back(x);
  }
  if (!top) ranking.push_back(c);
  return Preference(std::move(ranking));
}

BriberySolution SwapsToTargets(const BriberyInstance& instance,
                               const std::vector<Preference>& targets) {
  BriberySolution solution;
  for (int i = 0; i < instance.election.num_voters(); ++i) {
    SwapSequence part = transform_sequence(instance.election.vote(i), targets[i],
                                           instance.swap_prices[i], i);
    solution.swaps.swaps.insert(solution.swaps.swaps.end(), part.swaps.begin(),
                                part.swaps.end());
  }
  return finalize_solution(instance, std::move(solution));
}

}  // namespace

std::optional<BriberySolution> solve_plurality_veto_swap(
    const BriberyInstance& instance) {
  RequireKind(instance, BriberyKind::kSwap, "plurality/veto solver");
  const Rule::Kind kind = instance.rule.kind();
  if (kind != Rule::Kind::kPlurality && kind != Rule::Kind::kVeto) {
    throw ParameterError("plurality/veto solver called with rule " +
                         instance.rule.ToString());
  }
  const bool veto = kind == Rule::Kind::kVeto;
  const Election& election = instance.election;
  const int m = election.num_candidates();
  const int n = election.num_voters();
  const Candidate p = instance.preferred;
  if (n == 0) return finalize_solution(instance, {});

  // replace[i][c]: cheapest price of making c voter i's top (veto: bottom).
  std::vector<std::vector<Cost>> replace(n, std::vector<Cost>(m));
  for (int i = 0; i < n; ++i) {
    const Preference& vote = election.vote(i);
    for (Candidate c = 0; c < m; ++c) {
      Cost total;
      for (Candidate other = 0; other < m; ++other) {
        if (other == c) continue;
        if (!veto && vote.prefers(other, c)) total += instance.swap_prices[i](other, c);
        if (veto && vote.prefers(c, other)) total += instance.swap_prices[i](c, other);
      }
      replace[i][c] = total;
    }
  }
  const std::int64_t penalty = PenaltyFor(replace);

  std::optional<std::int64_t> best_cost;
  std::vector<Candidate> best_choice;
  // t is p's final point count (plurality) or veto count (veto).
  const int max_t = veto ? n / m : n;
  for (int t = veto ? 0 : 1; t <= max_t; ++t) {
    const int source = n + m;
    const int sink = n + m + 1;
    MinCostFlow flow(n + m + 2);
    std::vector<std::vector<std::pair<Candidate, int>>> voter_edges(n);
    for (int i = 0; i < n; ++i) {
      flow.AddEdge(source, i, 1, 0);
      for (Candidate c = 0; c < m; ++c) {
        if (replace[i][c].forbidden()) continue;
        voter_edges[i].emplace_back(c, flow.AddEdge(i, n + c, 1, replace[i][c].value()));
      }
    }
    std::vector<int> required;
    for (Candidate c = 0; c < m; ++c) {
      if (c == p) {
        required.push_back(flow.AddEdge(n + c, sink, t, 0));
      } else if (!veto) {
        flow.AddEdge(n + c, sink, t, penalty);
      } else {
        required.push_back(flow.AddEdge(n + c, sink, t, 0));
        flow.AddEdge(n + c, sink, n, penalty);
      }
    }
    MinCostFlow::Result result = flow.Solve(source, sink);
    if (result.flow != n) continue;
    bool saturated = std::all_of(required.begin(), required.end(),
                                 [&](int id) { return flow.flow(id) == t; });
    if (!saturated) continue;
    const std::int64_t optional_units = veto ? n - static_cast<std::int64_t>(m) * t : n - t;
    const std::int64_t cost = result.cost - penalty * optional_units;
    if (cost > instance.budget) continue;
    if (best_cost && cost >= *best_cost) continue;
    best_cost = cost;
    best_choice.assign(n, -1);
    for (int i = 0; i < n; ++i) {
      for (auto [c, id] : voter_edges[i]) {
        if (flow.flow(id) > 0) best_choice[i] = c;
      }
    }
  }
  if (!best_cost) return std::nullopt;

  std::vector<Preference> targets;
  for (int i = 0; i < n; ++i) {
    targets.push_back(MoveTo(election.vote(i), best_choice[i], !veto));
  }
  return SwapsToTargets(instance, targets);
}

std::optional<BriberySolution> solve_kapproval_shift(const BriberyInstance& instance) {
  RequireKind(instance, BriberyKind::kShift, "k-approval shift solver");
  const Election& election = instance.election;
  const int m = election.num_candidates();
  const int n = election.num_voters();
  const Candidate p = instance.preferred;
  const std::optional<int> width = instance.rule.approval_width(m);
  if (!width) {
    throw ParameterError("k-approval shift solver called with rule " +
                         instance.rule.ToString());
  }
  const int k = *width;

  std::vector<std::int64_t> base(m, 0);
  for (const auto& vote : election.votes()) {
    for (int pos = 0; pos < k; ++pos) ++base[vote.at(pos)];
  }

  // Voters who can be bribed into approving p, with their price and the
  // candidate pushed out of the approved block.
  struct Eligible {
    int voter;
    std::int64_t price;
    Candidate displaced;
    int shift;
  };
  std::vector<Eligible> eligible;
  for (int i = 0; i < n; ++i) {
    const int pos = election.vote(i).position_of(p);
    if (pos < k) continue;
    Cost price = instance.shift_prices[i](pos - k + 1);
    if (price.forbidden()) continue;
    eligible.push_back({i, price.value(), election.vote(i).at(k - 1), pos - k + 1});
  }
  const int e = static_cast<int>(eligible.size());
  std::int64_t penalty = 1;
  for (const auto& option : eligible) penalty = CheckedAdd(penalty, option.price);

  std::optional<std::int64_t> best_cost;
  std::vector<bool> best_chosen;
  for (int t = 0; t <= e; ++t) {
    std::vector<std::int64_t> need(m, 0);
    std::int64_t total_need = 0;
    for (Candidate c = 0; c < m; ++c) {
      if (c == p) continue;
      need[c] = std::max<std::int64_t>(0, base[c] - base[p] - t);
      total_need += need[c];
    }
    if (total_need > t) continue;
    // Nodes: voters 0..e-1, groups e..e+m-1, select, skip, source, sink.
    const int select = e + m;
    const int skip = e + m + 1;
    const int source = e + m + 2;
    const int sink = e + m + 3;
    MinCostFlow flow(e + m + 4);
    std::vector<int> chosen_edge(e);
    for (int v = 0; v < e; ++v) {
      flow.AddEdge(source, v, 1, 0);
      chosen_edge[v] = flow.AddEdge(v, e + eligible[v].displaced, 1, eligible[v].price);
      flow.AddEdge(v, skip, 1, 0);
    }
    std::vector<std::pair<int, std::int64_t>> required;
    for (Candidate c = 0; c < m; ++c) {
      if (c == p) continue;
      if (need[c] > 0) required.emplace_back(flow.AddEdge(e + c, select, need[c], 0), need[c]);
      flow.AddEdge(e + c, select, e, penalty);
    }
    flow.AddEdge(select, sink, t, 0);
    flow.AddEdge(skip, sink, e - t, 0);
    MinCostFlow::Result result = flow.Solve(source, sink);
    if (result.flow != e) continue;
    bool saturated = std::all_of(required.begin(), required.end(), [&](const auto& r) {
      return flow.flow(r.first) == r.second;
    });
    if (!saturated) continue;
    const std::int64_t cost = result.cost - penalty * (t - total_need);
    if (cost > instance.budget) continue;
    if (best_cost && cost >= *best_cost) continue;
    best_cost = cost;
    best_chosen.assign(e, false);
    for (int v = 0; v < e; ++v) best_chosen[v] = flow.flow(chosen_edge[v]) > 0;
  }
  if (!best_cost) return std::nullopt;

  BriberySolution solution;
  solution.shifts.assign(n, 0);
  for (int v = 0; v < e; ++v) {
    if (best_chosen[v]) solution.shifts[eligible[v].voter] = eligible[v].shift;
  }
  return finalize_solution(instance, std::move(solution));
}

std::optional<BriberySolution> solve_kapproval_fixed_voters(
    const BriberyInstance& instance, const SearchLimits& limits) {
  RequireKind(instance, BriberyKind::kSwap, "fixed-voters solver");
  const Election& election = instance.election;
  const Rule& rule = instance.rule;
  const int m = election.num_candidates();
  const int n = election.num_voters();
  const std::optional<int> width = rule.approval_width(m);
  if (!width) {
    throw ParameterError("fixed-voters solver called with rule " + rule.ToString());
  }
  const int k = *width;
  if (n > limits.max_fixed_voters) {
    throw CapacityError("fixed-voters solver is limited to n <= " +
                        std::to_string(limits.max_fixed_voters) + ", got n = " +
                        std::to_string(n));
  }
  const std::int64_t sets = internal::Binomial(m, k);
  std::int64_t combinations = 1;
  for (int i = 0; i < n; ++i) {
    if (combinations > limits.max_profiles / std::max<std::int64_t>(sets, 1)) {
      throw CapacityError("fixed-voters enumeration exceeds " +
                          std::to_string(limits.max_profiles) + " combinations");
    }
    combinations *= sets;
  }

  // Per voter: every approved set, as the cheapest order realizing it (its
  // members and then the rest, each in their current relative order).
  struct Choice {
    std::int64_t cost;
    Preference order;
    std::vector<std::int64_t> contribution;
  };
  std::vector<std::vector<Choice>> choices(n);
  for (int i = 0; i < n; ++i) {
    const Preference& vote = election.vote(i);
    std::vector<bool> member(m, false);
    std::fill(member.begin(), member.begin() + k, true);
    // prev_permutation over a true-first mask visits subsets lexicographically.
    do {
      std::vector<Candidate> ranking;
      for (Candidate c : vote.ranking()) {
        if (member[c]) ranking.push_back(c);
      }
      for (Candidate c : vote.ranking()) {
        if (!member[c]) ranking.push_back(c);
      }
      Preference order(std::move(ranking));
      Cost cost = transform_cost(vote, order, instance.swap_prices[i]);
      if (cost.forbidden() || cost.value() > instance.budget) continue;
      choices[i].push_back({cost.value(), order, contribution(rule, order, 0)});
    } while (std::prev_permutation(member.begin(), member.end()));
    std::stable_sort(choices[i].begin(), choices[i].end(),
                     [](const Choice& a, const Choice& b) { return a.cost < b.cost; });
  }

  std::vector<std::int64_t> tally(tally_size(rule, m), 0);
  std::vector<int> pick(n, 0);
  std::vector<int> best_pick;
  std::optional<std::int64_t> best_cost;
  std::function<void(int, std::int64_t)> search = [&](int voter, std::int64_t spent) {
    if (voter == n) {
      if (wins_from_tally(rule, m, tally, instance.preferred) &&
          (!best_cost || spent < *best_cost)) {
        best_cost = spent;
        best_pick = pick;
      }
      return;
    }
    for (int c = 0; c < static_cast<int>(choices[voter].size()); ++c) {
      const Choice& choice = choices[voter][c];
      const std::int64_t total = spent + choice.cost;
      if (total > instance.budget || (best_cost && total >= *best_cost)) break;
      for (std::size_t x = 0; x < tally.size(); ++x) tally[x] += choice.contribution[x];
      pick[voter] = c;
      search(voter + 1, total);
      for (std::size_t x = 0; x < tally.size(); ++x) tally[x] -= choice.contribution[x];
    }
  };
  search(0, 0);
  if (!best_cost) return std::nullopt;

  std::vector<Preference> targets;
  for (int i = 0; i < n; ++i) targets.push_back(choices[i][best_pick[i]].order);
  return SwapsToTargets(instance, targets);
}

namespace {

std::optional<ShiftPlan> ShiftDp(const std::vector<ShiftPriceFn>& rho, int total) {
  const int n = static_cast<int>(rho.size());
  int headroom = 0;
  for (const auto& r : rho) headroom += r.headroom();
  if (total < 0 || total > headroom) return std::nullopt;
  // best[i][k]: cheapest way for voters i..n-1 to contribute exactly k shifts.
  std::vector<std::vector<Cost>> best(n + 1, std::vector<Cost>(total + 1, Cost::Forbidden()));
  best[n][0] = Cost::Zero();
  for (int i = n - 1; i >= 0; --i) {
    for (int k = 0; k <= total; ++k) {
      for (int s = 0; s <= std::min(k, rho[i].headroom()); ++s) {
        Cost candidate = rho[i](s) + best[i + 1][k - s];
        if (candidate < best[i][k]) best[i][k] = candidate;
      }
    }
  }
  if (best[0][total].forbidden()) return std::nullopt;
  ShiftPlan plan;
  plan.cost = best[0][total];
  int remaining = total;
  for (int i = 0; i < n; ++i) {
    for (int s = 0; s <= std::min(remaining, rho[i].headroom()); ++s) {
      if (rho[i](s) + best[i + 1][remaining - s] == best[i][remaining]) {
        plan.shifts.push_back(s);
        remaining -= s;
        break;
      }
    }
  }
  return plan;
}

void RequireBordaShift(const BriberyInstance& instance) {
  RequireKind(instance, BriberyKind::kShift, "Borda shift solver");
  if (instance.rule.kind() != Rule::Kind::kBorda) {
    throw ParameterError("Borda shift solver called with rule " + instance.rule.ToString());
  }
}

}  // namespace

std::optional<ShiftPlan> borda_shift_dp(const BriberyInstance& instance, int total) {
  RequireBordaShift(instance);
  return ShiftDp(instance.shift_prices, total);
}

ApproximationResult borda_shift_2approx(const BriberyInstance& instance) {
  RequireBordaShift(instance);
  const Election& election = instance.election;
  const int n = election.num_voters();
  const Candidate p = instance.preferred;
  const Rule& rule = instance.rule;
  const int m = election.num_candidates();
  int headroom = 0;
  for (const auto& r : instance.shift_prices) headroom += r.headroom();

  std::vector<std::int64_t> base(tally_size(rule, m), 0);
  for (const auto& vote : election.votes()) add_contribution(rule, vote, 0, base);

  std::optional<Cost> best_cost;
  std::vector<int> best_shifts;
  for (int k = 0; k <= headroom; ++k) {
    std::optional<ShiftPlan> first = ShiftDp(instance.shift_prices, k);
    if (!first) continue;
    // Prices for further shifts on top of the first stage.
    std::vector<ShiftPriceFn> rest;
    for (int i = 0; i < n; ++i) {
      const ShiftPriceFn& rho = instance.shift_prices[i];
      const Cost paid = rho(first->shifts[i]);
      std::vector<Cost> extra;
      for (int s = first->shifts[i]; s <= rho.headroom(); ++s) {
        extra.push_back(rho(s).forbidden() ? Cost::Forbidden()
                                           : Cost(rho(s).value() - paid.value()));
      }
      rest.emplace_back(std::move(extra));
    }
    for (int j = 0; j <= k; ++j) {
      std::optional<ShiftPlan> second = ShiftDp(rest, k - j);
      if (!second) continue;
      const Cost total = first->cost + second->cost;
      if (best_cost && !(total < *best_cost)) continue;
      std::vector<int> shifts(n);
      std::vector<std::int64_t> tally = base;
      for (int i = 0; i < n; ++i) {
        shifts[i] = first->shifts[i] + second->shifts[i];
        const Preference& vote = election.vote(i);
        add_contribution(rule, vote, 0, tally, -1);
        add_contribution(rule, apply_shift(vote, p, shifts[i]), 0, tally);
      }
      if (!wins_from_tally(rule, m, tally, p)) continue;
      best_cost = total;
      best_shifts = std::move(shifts);
    }
  }

  ApproximationResult result;
  if (!best_cost) return result;
  BriberySolution solution;
  solution.shifts = best_shifts;
  const std::int64_t cost = best_cost->value();
  if (cost <= instance.budget) {
    result.verdict = ApproximationVerdict::kFeasible;
    result.solution = finalize_solution(instance, std::move(solution));
  } else {
    // The optimum is at least half of what was found.
    result.verdict = cost - instance.budget <= instance.budget
                         ? ApproximationVerdict::kInconclusive
                         : ApproximationVerdict::kInfeasible;
    result.solution = finalize_solution(instance, std::move(solution), false);
  }
  return result;
}

std::optional<BriberySolution> solve_shift_exact(const BriberyInstance& instance,
                                                 const SearchLimits& limits) {
  RequireKind(instance, BriberyKind::kShift, "exact shift solver");
  std::int64_t vectors = 1;
  for (const auto& rho : instance.shift_prices) {
    std::int64_t options = 1;
    while (options <= rho.headroom() && rho(static_cast<int>(options)) <= Cost(instance.budget)) {
      ++options;
    }
    if (vectors > limits.max_profiles / options) {
      throw CapacityError("exact shift search exceeds " +
                          std::to_string(limits.max_profiles) + " shift vectors");
    }
    vectors *= options;
  }
  return exact_oracle(instance, limits);
}

std::optional<BriberySolution> solve_spav_mixed_exact(const BriberyInstance& instance,
                                                      const SearchLimits& limits) {
  RequireKind(instance, BriberyKind::kMixed, "mixed SP-AV solver");
  return exact_oracle(instance, limits);
}

}  // namespace swapbribery
