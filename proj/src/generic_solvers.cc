#include "swapbribery/generic_solvers.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>

#include "internal.h"
#include "swapbribery/errors.h"
#include "swapbribery/min_cost_flow.h"

namespace swapbribery {
namespace internal {

std::optional<Assignment> AssignWithMultiplicities(
    const std::vector<std::vector<Cost>>& costs,
    const std::vector<int>& multiplicity) {
  const int rows = static_cast<int>(costs.size());
  const int types = static_cast<int>(multiplicity.size());
  // source, rows, types, sink
  const int source = 0;
  const int sink = rows + types + 1;
  MinCostFlow flow(rows + types + 2);
  std::vector<std::vector<std::pair<int, int>>> row_edges(rows);
  for (int i = 0; i < rows; ++i) {
    flow.AddEdge(source, 1 + i, 1, 0);
    for (int t = 0; t < types; ++t) {
      if (multiplicity[t] == 0 || costs[i][t].forbidden()) continue;
      int id = flow.AddEdge(1 + i, 1 + rows + t, 1, costs[i][t].value());
      row_edges[i].emplace_back(t, id);
    }
  }
  for (int t = 0; t < types; ++t) {
    if (multiplicity[t] > 0) flow.AddEdge(1 + rows + t, sink, multiplicity[t], 0);
  }
  MinCostFlow::Result result = flow.Solve(source, sink);
  if (result.flow != rows) return std::nullopt;
  Assignment out;
  out.cost = result.cost;
  out.type_of_row.assign(rows, -1);
  for (int i = 0; i < rows; ++i) {
    for (auto [t, id] : row_edges[i]) {
      if (flow.flow(id) > 0) out.type_of_row[i] = t;
    }
  }
  return out;
}

std::vector<Preference> AllOrders(int m) {
  std::vector<Candidate> ranking(m);
  std::iota(ranking.begin(), ranking.end(), 0);
  std::vector<Preference> out;
  do {
    out.emplace_back(ranking);
  } while (std::next_permutation(ranking.begin(), ranking.end()));
  return out;
}

std::int64_t Binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    __int128 next = static_cast<__int128>(result) * (n - k + i) / i;
    if (next > kMax) return kMax;
    result = static_cast<std::int64_t>(next);
  }
  return result;
}

}  // namespace internal

MultisetAssignment list_to_multiset_cost(std::span<const Preference> votes,
                                         std::span<const SwapPriceFn> prices,
                                         std::span<const Preference> target) {
  if (votes.size() != target.size() || votes.size() != prices.size()) {
    throw ParameterError("vote list, price list and target multiset differ in size");
  }
  std::vector<Preference> distinct(target.begin(), target.end());
  std::sort(distinct.begin(), distinct.end());
  std::vector<int> multiplicity;
  {
    std::vector<Preference> unique;
    for (const auto& vote : distinct) {
      if (unique.empty() || unique.back() != vote) {
        unique.push_back(vote);
        multiplicity.push_back(1);
      } else {
        ++multiplicity.back();
      }
    }
    distinct = std::move(unique);
  }
  std::vector<std::vector<Cost>> costs(votes.size());
  for (std::size_t i = 0; i < votes.size(); ++i) {
    for (const auto& order : distinct) {
      costs[i].push_back(transform_cost(votes[i], order, prices[i]));
    }
  }
  auto assignment = internal::AssignWithMultiplicities(costs, multiplicity);
  if (!assignment) {
    throw InfeasibleError("no assignment of voters to the target multiset avoids forbidden swaps");
  }
  MultisetAssignment out;
  out.cost = Cost(assignment->cost);
  for (int type : assignment->type_of_row) out.targets.push_back(distinct[type]);
  return out;
}

namespace {

void RequirePrices(const BriberyInstance& instance) {
  instance.Validate();
  if (!instance.has_prices()) {
    throw ParameterError("instance lacks price tables for every voter");
  }
}

// Builds a swap solution from per-voter targets (and threshold changes).
BriberySolution SolutionFromTargets(const BriberyInstance& instance,
                                    const std::vector<Preference>& targets,
                                    const std::vector<int>& deltas) {
  BriberySolution solution;
  for (int i = 0; i < instance.election.num_voters(); ++i) {
    SwapSequence part = transform_sequence(instance.election.vote(i), targets[i],
                                           instance.swap_prices[i], i);
    solution.swaps.swaps.insert(solution.swaps.swaps.end(), part.swaps.begin(),
                                part.swaps.end());
  }
  if (instance.kind() == BriberyKind::kMixed) solution.threshold_deltas = deltas;
  return finalize_solution(instance, std::move(solution));
}

}  // namespace

std::optional<BriberySolution> solve_fixed_candidates(
    const BriberyInstance& instance, const SearchLimits& limits) {
  RequirePrices(instance);
  if (instance.kind() == BriberyKind::kShift) {
    throw ParameterError("the fixed-candidates solver handles swap instances only");
  }
  const Election& election = instance.election;
  const Rule& rule = instance.rule;
  const int m = election.num_candidates();
  const int n = election.num_voters();
  if (m > limits.max_fixed_candidates) {
    throw CapacityError("fixed-candidates solver is limited to m <= " +
                        std::to_string(limits.max_fixed_candidates) + ", got m = " +
                        std::to_string(m));
  }

  // A vote type is an order plus, for SP-AV, an approval threshold.
  struct VoteType {
    Preference order;
    int threshold;
  };
  std::vector<int> thresholds = {0};
  const bool spav = rule.kind() == Rule::Kind::kSpav;
  const bool mixed = instance.kind() == BriberyKind::kMixed;
  if (spav) {
    thresholds.clear();
    if (mixed) {
      for (int l = 1; l <= m - 1; ++l) thresholds.push_back(l);
    } else {
      thresholds = election.approvals();
      std::sort(thresholds.begin(), thresholds.end());
      thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                       thresholds.end());
    }
  }
  std::vector<VoteType> types;
  for (const auto& order : internal::AllOrders(m)) {
    for (int l : thresholds) types.push_back({order, l});
  }
  const int num_types = static_cast<int>(types.size());

  std::vector<std::vector<Cost>> costs(n, std::vector<Cost>(num_types));
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < num_types; ++t) {
      Cost c = transform_cost(election.vote(i), types[t].order,
                              instance.swap_prices[i]);
      if (spav) {
        int delta = types[t].threshold - election.approvals(i);
        if (mixed) {
          c += instance.threshold_prices[i](delta);
        } else if (delta != 0) {
          c = Cost::Forbidden();
        }
      }
      costs[i][t] = c;
    }
  }

  std::int64_t multisets = internal::Binomial(num_types + n - 1, n);
  if (multisets > limits.max_profiles) {
    throw CapacityError("fixed-candidates enumeration needs " +
                        std::to_string(multisets) + " multisets, limit " +
                        std::to_string(limits.max_profiles));
  }

  std::vector<std::vector<std::int64_t>> contributions;
  for (const auto& type : types) {
    contributions.push_back(contribution(rule, type.order, type.threshold));
  }

  std::vector<std::int64_t> tally(tally_size(rule, m), 0);
  std::vector<int> multiplicity(num_types, 0);
  std::optional<std::int64_t> best_cost;
  std::vector<int> best_assignment;

  // Multisets are visited in lexicographic order of their sorted type lists;
  // only strict improvements replace the incumbent.
  std::function<void(int, int)> visit = [&](int first_type, int remaining) {
    if (remaining == 0) {
      if (!wins_from_tally(rule, m, tally, instance.preferred)) return;
      auto assignment = internal::AssignWithMultiplicities(costs, multiplicity);
      if (!assignment || assignment->cost > instance.budget) return;
      if (!best_cost || assignment->cost < *best_cost) {
        best_cost = assignment->cost;
        best_assignment = assignment->type_of_row;
      }
      return;
    }
    for (int t = first_type; t < num_types; ++t) {
      for (std::size_t x = 0; x < tally.size(); ++x) tally[x] += contributions[t][x];
      ++multiplicity[t];
      visit(t, remaining - 1);
      --multiplicity[t];
      for (std::size_t x = 0; x < tally.size(); ++x) tally[x] -= contributions[t][x];
    }
  };
  visit(0, n);

  if (!best_cost) return std::nullopt;
  std::vector<Preference> targets;
  std::vector<int> deltas;
  for (int i = 0; i < n; ++i) {
    const VoteType& type = types[best_assignment[i]];
    targets.push_back(type.order);
    deltas.push_back(spav ? type.threshold - election.approvals(i) : 0);
  }
  return SolutionFromTargets(instance, targets, deltas);
}

namespace {

// One thing a single voter can be bribed into.
struct Option {
  std::int64_t cost = 0;
  std::vector<std::int64_t> contribution;
  std::vector<UnitSwap> swaps;
  int shift = 0;
  int threshold_delta = 0;
};

struct ReachedOrder {
  std::string key;  // ranking as bytes
  std::int64_t cost;
  int parent;
  Candidate upper;
  Candidate lower;
};

std::string KeyOf(const Preference& vote) {
  std::string key(vote.size(), '\0');
  for (int pos = 0; pos < vote.size(); ++pos) key[pos] = static_cast<char>(vote.at(pos));
  return key;
}

Preference FromKey(const std::string& key) {
  std::vector<Candidate> ranking(key.size());
  for (std::size_t pos = 0; pos < key.size(); ++pos) {
    ranking[pos] = static_cast<unsigned char>(key[pos]);
  }
  return Preference(std::move(ranking));
}

// Every order reachable from `start` by admissible swaps of total price at
// most `budget`, settled in (cost, lexicographic) order, with the cheapest
// swap path to each recorded through parent links.
std::vector<ReachedOrder> ReachableOrders(const Preference& start,
                                          const SwapPriceFn& prices,
                                          std::int64_t budget, std::int64_t limit) {
  const int m = start.size();
  if (m > 255) throw CapacityError("oracle supports at most 255 candidates");
  using Item = std::pair<std::int64_t, std::string>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  struct Label {
    std::int64_t cost;
    std::string parent;
    Candidate upper;
    Candidate lower;
    bool settled = false;
    int settled_index = -1;
  };
  std::unordered_map<std::string, Label> labels;
  std::vector<ReachedOrder> settled;

  std::string origin = KeyOf(start);
  labels[origin] = {0, "", -1, -1};
  queue.emplace(0, origin);
  while (!queue.empty()) {
    auto [cost, key] = queue.top();
    queue.pop();
    Label& label = labels[key];
    if (label.settled || label.cost != cost) continue;
    label.settled = true;
    label.settled_index = static_cast<int>(settled.size());
    int parent = label.parent.empty() ? -1 : labels[label.parent].settled_index;
    settled.push_back({key, cost, parent, label.upper, label.lower});
    if (static_cast<std::int64_t>(settled.size()) > limit) {
      throw CapacityError("per-voter reachability search exceeded " +
                          std::to_string(limit) + " orders");
    }
    for (int pos = 0; pos + 1 < m; ++pos) {
      Candidate upper = static_cast<unsigned char>(key[pos]);
      Candidate lower = static_cast<unsigned char>(key[pos + 1]);
      Cost price = prices(upper, lower);
      if (price.forbidden()) continue;
      std::int64_t next_cost = CheckedAdd(cost, price.value());
      if (next_cost > budget) continue;
      std::string next = key;
      std::swap(next[pos], next[pos + 1]);
      auto it = labels.find(next);
      if (it != labels.end() && (it->second.settled || it->second.cost <= next_cost)) {
        continue;
      }
      labels[next] = {next_cost, key, upper, lower};
      queue.emplace(next_cost, std::move(next));
    }
  }
  return settled;
}

std::vector<UnitSwap> PathTo(const std::vector<ReachedOrder>& reached, int index,
                             int voter) {
  std::vector<UnitSwap> path;
  for (int at = index; reached[at].parent != -1; at = reached[at].parent) {
    path.push_back({voter, reached[at].upper, reached[at].lower});
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Option> VoterOptions(const BriberyInstance& instance, int voter,
                                 const SearchLimits& limits) {
  const Election& election = instance.election;
  const Rule& rule = instance.rule;
  const int m = election.num_candidates();
  const Preference& vote = election.vote(voter);
  const int threshold = election.has_approvals() ? election.approvals(voter) : 0;
  std::vector<Option> raw;

  if (instance.kind() == BriberyKind::kShift) {
    const ShiftPriceFn& rho = instance.shift_prices[voter];
    for (int s = 0; s <= rho.headroom(); ++s) {
      Cost price = rho(s);
      if (price.forbidden() || price.value() > instance.budget) continue;
      Option option;
      option.cost = price.value();
      option.shift = s;
      option.contribution =
          contribution(rule, apply_shift(vote, instance.preferred, s), threshold);
      raw.push_back(std::move(option));
    }
  } else {
    std::vector<ReachedOrder> reached =
        ReachableOrders(vote, instance.swap_prices[voter], instance.budget,
                        limits.max_orders_per_voter);
    const bool mixed = instance.kind() == BriberyKind::kMixed;
    for (int r = 0; r < static_cast<int>(reached.size()); ++r) {
      Preference order = FromKey(reached[r].key);
      std::vector<int> deltas = {0};
      if (mixed) {
        deltas.clear();
        for (int l = 1; l <= m - 1; ++l) deltas.push_back(l - threshold);
      }
      for (int delta : deltas) {
        Cost price(reached[r].cost);
        if (delta != 0) price += instance.threshold_prices[voter](delta);
        if (price.forbidden() || price.value() > instance.budget) continue;
        Option option;
        option.cost = price.value();
        option.threshold_delta = delta;
        option.contribution = contribution(rule, order, threshold + delta);
        option.swaps = PathTo(reached, r, voter);
        raw.push_back(std::move(option));
      }
    }
  }

  // Options with equal contributions are interchangeable for every winner
  // computation; keep the cheapest, earliest generated one.
  std::stable_sort(raw.begin(), raw.end(), [](const Option& a, const Option& b) {
    return a.cost < b.cost;
  });
  std::vector<Option> out;
  std::map<std::vector<std::int64_t>, bool> seen;
  for (auto& option : raw) {
    if (seen.emplace(option.contribution, true).second) out.push_back(std::move(option));
  }
  return out;
}

}  // namespace

std::optional<BriberySolution> exact_oracle(const BriberyInstance& instance,
                                            const SearchLimits& limits) {
  RequirePrices(instance);
  const Rule& rule = instance.rule;
  const int m = instance.election.num_candidates();
  const int n = instance.election.num_voters();

  std::vector<std::vector<Option>> options(n);
  for (int i = 0; i < n; ++i) options[i] = VoterOptions(instance, i, limits);

  std::vector<std::int64_t> tally(tally_size(rule, m), 0);
  std::vector<int> choice(n, 0);
  std::vector<int> best_choice;
  std::optional<std::int64_t> best_cost;
  std::int64_t profiles = 0;

  std::function<void(int, std::int64_t)> search = [&](int voter, std::int64_t spent) {
    if (voter == n) {
      if (++profiles > limits.max_profiles) {
        throw CapacityError("exact oracle exceeded " +
                            std::to_string(limits.max_profiles) + " profiles");
      }
      if (wins_from_tally(rule, m, tally, instance.preferred) &&
          (!best_cost || spent < *best_cost)) {
        best_cost = spent;
        best_choice = choice;
      }
      return;
    }
    for (int o = 0; o < static_cast<int>(options[voter].size()); ++o) {
      const Option& option = options[voter][o];
      std::int64_t total = spent + option.cost;
      if (total > instance.budget) break;
      if (best_cost && total >= *best_cost) break;
      for (std::size_t x = 0; x < tally.size(); ++x) tally[x] += option.contribution[x];
      choice[voter] = o;
      search(voter + 1, total);
      for (std::size_t x = 0; x < tally.size(); ++x) tally[x] -= option.contribution[x];
    }
  };
  search(0, 0);

  if (!best_cost) return std::nullopt;
  BriberySolution solution;
  if (instance.kind() == BriberyKind::kShift) solution.shifts.assign(n, 0);
  if (instance.kind() == BriberyKind::kMixed) solution.threshold_deltas.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const Option& option = options[i][best_choice[i]];
    solution.swaps.swaps.insert(solution.swaps.swaps.end(), option.swaps.begin(),
                                option.swaps.end());
    if (instance.kind() == BriberyKind::kShift) solution.shifts[i] = option.shift;
    if (instance.kind() == BriberyKind::kMixed) {
      solution.threshold_deltas[i] = option.threshold_delta;
    }
  }
  return finalize_solution(instance, std::move(solution));
}

PartialPreference::PartialPreference(int m, const std::vector<CandidatePair>& before)
    : m_(m), closure_(static_cast<std::size_t>(m) * m, false) {
  for (auto [a, b] : before) {
    if (a < 0 || a >= m || b < 0 || b >= m) {
      throw ParameterError("partial order mentions an unknown candidate");
    }
    closure_[a * m + b] = true;
  }
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < m; ++i) {
      if (!closure_[i * m + k]) continue;
      for (int j = 0; j < m; ++j) {
        if (closure_[k * m + j]) closure_[i * m + j] = true;
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    if (closure_[i * m + i]) {
      throw ParameterError("partial order contains a cycle");
    }
  }
}

std::vector<CandidatePair> PartialPreference::pairs() const {
  std::vector<CandidatePair> out;
  for (int a = 0; a < m_; ++a) {
    for (int b = 0; b < m_; ++b) {
      if (before(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

bool PartialPreference::extended_by(const Preference& vote) const {
  for (int a = 0; a < m_; ++a) {
    for (int b = 0; b < m_; ++b) {
      if (before(a, b) && !vote.prefers(a, b)) return false;
    }
  }
  return true;
}

Preference PartialPreference::completion() const {
  std::vector<int> indegree(m_, 0);
  for (int a = 0; a < m_; ++a) {
    for (int b = 0; b < m_; ++b) {
      if (before(a, b)) ++indegree[b];
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int c = 0; c < m_; ++c) {
    if (indegree[c] == 0) ready.push(c);
  }
  std::vector<Candidate> ranking;
  while (!ready.empty()) {
    int c = ready.top();
    ready.pop();
    ranking.push_back(c);
    for (int b = 0; b < m_; ++b) {
      if (before(c, b) && --indegree[b] == 0) ready.push(b);
    }
  }
  return Preference(std::move(ranking));
}

BriberyInstance reduce_possible_winner(const PossibleWinnerInstance& pw) {
  const int m = pw.candidates.size();
  std::vector<Preference> votes;
  BriberyInstance instance;
  for (const auto& partial : pw.votes) {
    if (partial.size() != m) {
      throw ParameterError("partial vote ranges over a different candidate set");
    }
    votes.push_back(partial.completion());
    SwapPriceFn prices(m, Cost::Zero());
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a != b && partial.comparable(a, b)) prices.set(a, b, Cost(1));
      }
    }
    instance.swap_prices.push_back(std::move(prices));
  }
  instance.election = Election(pw.candidates, std::move(votes));
  instance.rule = pw.rule;
  instance.preferred = pw.preferred;
  instance.budget = 0;
  instance.Validate();
  return instance;
}

}  // namespace swapbribery
