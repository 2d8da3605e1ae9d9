// Acceptance checks. Prints one line per criterion and exits nonzero if any
// fails. `--only N` runs a single criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swapbribery/errors.h"
#include "swapbribery/generic_solvers.h"
#include "swapbribery/hardness_gen.h"
#include "swapbribery/rule_solvers.h"
#include "swapbribery/swap_model.h"
#include "test_util.h"

namespace swapbribery {
namespace {

using testing::Rng;
using testing::Uniform;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::optional<std::int64_t> CostOf(const std::optional<BriberySolution>& solution) {
  if (!solution) return std::nullopt;
  return solution->total_cost.value();
}

std::string Show(const std::optional<std::int64_t>& cost) {
  return cost ? std::to_string(*cost) : "infeasible";
}

// Returns false (and records the first mismatch) when the solution is not a
// genuine winning bribery within budget at its reported cost.
bool Genuine(const BriberyInstance& instance, const BriberySolution& solution,
             std::string& detail) {
  ReplayReport report = check_solution(instance, solution);
  if (!report.ok && detail.empty()) detail = "replay failed: " + report.message;
  return report.ok;
}

std::vector<Preference> AllOrders(int m) {
  std::vector<Candidate> ranking(m);
  for (int i = 0; i < m; ++i) ranking[i] = i;
  std::vector<Preference> out;
  do {
    out.emplace_back(ranking);
  } while (std::next_permutation(ranking.begin(), ranking.end()));
  return out;
}

Outcome VoteTransform() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  Rng rng(101);
  int pairs = 0;
  for (int m = 2; m <= 4; ++m) {
    for (const Preference& from : AllOrders(m)) {
      const SwapPriceFn prices = testing::RandomSwapPrices(m, rng, 9);
      for (const auto& [to, distance] : testing::AllDistances(from, prices)) {
        ++pairs;
        if (transform_cost(from, to, prices) != distance) {
          out.pass = false;
          if (out.detail.empty()) out.detail = "shortest-path mismatch at m=" + std::to_string(m);
        }
      }
    }
  }
  for (int trial = 0; trial < 500; ++trial) {
    const int m = Uniform(rng, 2, 7);
    const Preference from = testing::RandomVote(m, rng);
    const Preference to = testing::RandomVote(m, rng);
    const SwapPriceFn prices = testing::RandomSwapPrices(m, rng, 9);
    std::int64_t inversion_sum = 0;
    int inversions = 0;
    for (Candidate a = 0; a < m; ++a) {
      for (Candidate b = 0; b < m; ++b) {
        if (a != b && from.position_of(a) < from.position_of(b) &&
            to.position_of(b) < to.position_of(a)) {
          inversion_sum += prices(a, b).value();
          ++inversions;
        }
      }
    }
    const SwapSequence sequence = transform_sequence(from, to, prices);
    const Election replayed = apply_swap_sequence(Election(testing::Roster(m), {from}), sequence);
    std::int64_t paid = 0;
    for (const UnitSwap& swap : sequence.swaps) paid += prices(swap.upper, swap.lower).value();
    if (transform_cost(from, to, prices) != Cost(inversion_sum) || replayed.vote(0) != to ||
        paid != inversion_sum || static_cast<int>(sequence.swaps.size()) != inversions) {
      out.pass = false;
      if (out.detail.empty()) out.detail = "inversion-sum or replay mismatch, trial " + std::to_string(trial);
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 10.0) out.pass = false;
  char buffer[128];
  std::snprintf(buffer, sizeof buffer, "%d exhaustive pairs + 500 random pairs in %.2f s", pairs,
                seconds);
  if (out.detail.empty()) out.detail = buffer;
  return out;
}

Outcome MultisetTransform() {
  Outcome out;
  Rng rng(202);
  int forbidden = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = Uniform(rng, 2, 4);
    const int n = Uniform(rng, 1, 6);
    std::vector<Preference> votes, target;
    std::vector<SwapPriceFn> prices;
    for (int i = 0; i < n; ++i) {
      votes.push_back(testing::RandomVote(m, rng));
      target.push_back(testing::RandomVote(m, rng));
      prices.push_back(testing::RandomSwapPrices(m, rng, 9, 0.1));
    }
    const Cost expected = testing::BruteAssignmentCost(votes, prices, target);
    Cost got = Cost::Forbidden();
    try {
      got = list_to_multiset_cost(votes, prices, target).cost;
    } catch (const InfeasibleError&) {
    }
    if (expected.forbidden()) ++forbidden;
    if (got != expected) {
      out.pass = false;
      if (out.detail.empty()) out.detail = "mismatch on trial " + std::to_string(trial);
    }
  }
  if (out.detail.empty()) {
    out.detail = "200 instances agree (" + std::to_string(forbidden) + " with no finite bijection)";
  }
  return out;
}

Outcome FixedCandidates() {
  Outcome out;
  Rng rng(303);
  int feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Rule rule = testing::AllRules(3)[trial % 7];
    const int n = Uniform(rng, 1, 4);
    const bool mixed = rule.kind() == Rule::Kind::kSpav && trial % 2 == 1;
    const BriberyInstance instance = testing::RandomSwapInstance(n, 3, rule, rng, 5, 0.15, mixed);
    const auto fixed = solve_fixed_candidates(instance);
    const auto oracle = exact_oracle(instance);
    if (CostOf(fixed) != CostOf(oracle)) {
      out.pass = false;
      if (out.detail.empty()) {
        out.detail = rule.ToString() + " trial " + std::to_string(trial) + ": fixed " +
                     Show(CostOf(fixed)) + " vs oracle " + Show(CostOf(oracle));
      }
    }
    if (fixed) {
      ++feasible;
      out.pass &= Genuine(instance, *fixed, out.detail);
    }
  }
  if (out.detail.empty()) out.detail = "200 instances agree, " + std::to_string(feasible) + " feasible";
  return out;
}

Outcome PluralityVetoAndKApprovalShift() {
  Outcome out;
  Rng rng(404);
  int feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = Uniform(rng, 2, 5);
    const int n = Uniform(rng, 1, 5);
    const Rule rule = trial % 2 == 0 ? Rule::Plurality() : Rule::Veto();
    const BriberyInstance instance = testing::RandomSwapInstance(n, m, rule, rng, 6, 0.15);
    const auto flow = solve_plurality_veto_swap(instance);
    const auto oracle = exact_oracle(instance);
    if (CostOf(flow) != CostOf(oracle)) {
      out.pass = false;
      if (out.detail.empty()) out.detail = "plurality/veto mismatch, trial " + std::to_string(trial);
    }
    if (flow) {
      ++feasible;
      out.pass &= Genuine(instance, *flow, out.detail);
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const int m = Uniform(rng, 3, 5);
    const int n = Uniform(rng, 1, 5);
    const Rule rule = Rule::KApproval(1 + trial % 2);
    const BriberyInstance instance = testing::RandomShiftInstance(n, m, rule, rng, 4, 0.1);
    const auto flow = solve_kapproval_shift(instance);
    const auto oracle = exact_oracle(instance);
    if (CostOf(flow) != CostOf(oracle)) {
      out.pass = false;
      if (out.detail.empty()) out.detail = "k-approval shift mismatch, trial " + std::to_string(trial);
    }
    if (flow) {
      ++feasible;
      out.pass &= Genuine(instance, *flow, out.detail);
    }
  }
  if (out.detail.empty()) out.detail = "400 instances agree, " + std::to_string(feasible) + " feasible";
  return out;
}

Outcome FixedVoters() {
  Outcome out;
  Rng rng(505);
  int feasible = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = Uniform(rng, 3, 5);
    const int n = Uniform(rng, 1, 2);
    const BriberyInstance instance =
        testing::RandomSwapInstance(n, m, Rule::KApproval(2), rng, 5, 0.15);
    const auto fixed = solve_kapproval_fixed_voters(instance);
    const auto oracle = exact_oracle(instance);
    if (CostOf(fixed) != CostOf(oracle)) {
      out.pass = false;
      if (out.detail.empty()) out.detail = "mismatch on trial " + std::to_string(trial);
    }
    if (fixed) {
      ++feasible;
      out.pass &= Genuine(instance, *fixed, out.detail);
    }
  }
  if (out.detail.empty()) out.detail = "100 instances agree, " + std::to_string(feasible) + " feasible";
  return out;
}

Outcome BordaApproximation() {
  Outcome out;
  Rng rng(606);
  int measured = 0;
  double worst_ratio = 1.0;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = Uniform(rng, 2, 5);
    const int n = Uniform(rng, 1, 6);
    BriberyInstance instance = testing::RandomShiftInstance(n, m, Rule::Borda(), rng, 4, 0.1);
    instance.budget = 4 * m * n;
    const auto oracle = exact_oracle(instance);
    if (!oracle) continue;
    ++measured;
    const std::int64_t opt = oracle->total_cost.value();
    const ApproximationResult result = borda_shift_2approx(instance);
    if (!result.solution) {
      out.pass = false;
      if (out.detail.empty()) out.detail = "no solution where OPT exists, trial " + std::to_string(trial);
      continue;
    }
    const std::int64_t found = result.solution->total_cost.value();
    const bool winning = is_winner(replay(instance, *result.solution), instance.rule,
                                   instance.preferred);
    const bool honest = recompute_cost(instance, *result.solution) == result.solution->total_cost;
    if (found < opt || found > 2 * opt || !winning || !honest) {
      out.pass = false;
      if (out.detail.empty()) {
        out.detail = "trial " + std::to_string(trial) + ": OPT " + std::to_string(opt) +
                     ", returned " + std::to_string(found);
      }
    }
    if (opt > 0) worst_ratio = std::max(worst_ratio, static_cast<double>(found) / opt);
  }
  if (measured < 250) out.pass = false;
  if (out.detail.empty()) {
    char buffer[128];
    std::snprintf(buffer, sizeof buffer, "%d instances with OPT, worst ratio %.3f", measured,
                  worst_ratio);
    out.detail = buffer;
  }
  return out;
}

Outcome ReductionRoundTrips() {
  Outcome out;
  struct Tally {
    std::string name;
    int agree = 0;
    int total = 0;
  };
  std::vector<Tally> tallies = {{"x3c-3approval"}, {"x3c-borda-shift"}, {"bb-kapproval"},
                                {"x3c-maximin-shift"}, {"x3c-spav"}};
  auto record = [&](Tally& tally, bool label, bool solved) {
    ++tally.total;
    if (label == solved) ++tally.agree;
  };

  std::vector<X3CInstance> sources;
  for (int k = 1; k <= 2; ++k) {
    for (int sets = 1; sets <= 4; ++sets) {
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        sources.push_back(random_x3c(k, sets, seed * 31 + sets, seed % 2 == 0 && sets >= k));
      }
    }
  }
  for (const X3CInstance& x3c : sources) {
    const bool label = testing::BruteExactCover(x3c);
    if (x3c.k >= 2) {
      record(tallies[0], label, exact_oracle(gen_x3c_3approval(x3c).instance).has_value());
    }
    record(tallies[1], label, solve_shift_exact(gen_x3c_borda_shift(x3c).instance).has_value());
    record(tallies[3], label, solve_shift_exact(gen_x3c_maximin_shift(x3c).instance).has_value());
    record(tallies[4], label, solve_spav_mixed_exact(gen_x3c_spav_mixed(x3c).instance).has_value());
  }
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const BBInstance bb = random_bb(n, k, 0.3 + 0.1 * seed, seed * 7 + n);
        record(tallies[2], testing::BruteBiclique(bb),
               exact_oracle(gen_bb_kapproval(bb).instance).has_value());
      }
    }
  }
  for (const Tally& tally : tallies) {
    if (!out.detail.empty()) out.detail += ", ";
    out.detail += tally.name + " " + std::to_string(tally.agree) + "/" + std::to_string(tally.total);
    if (tally.agree != tally.total) out.pass = false;
  }
  return out;
}

Outcome MaximinTable() {
  Outcome out;
  int checked = 0;
  for (int k = 1; k <= 4; ++k) {
    for (int sets = k; sets <= k + 3; ++sets) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const X3CInstance x3c = random_x3c(k, sets, seed + 100 * k + sets, seed == 0);
        const BriberyInstance instance = gen_x3c_maximin_shift(x3c).instance;
        const Election& e = instance.election;
        const int m = e.num_candidates();
        const int big_m = sets;
        const int kk = k, ll = k;
        // Head-to-head counts straight from the votes.
        auto count = [&](Candidate a, Candidate b) {
          int c = 0;
          for (int i = 0; i < e.num_voters(); ++i) {
            if (e.vote(i).position_of(a) < e.vote(i).position_of(b)) ++c;
          }
          return c - big_m;
        };
        auto maximin = [&](Candidate a) {
          int best = e.num_voters();
          for (Candidate b = 0; b < m; ++b) {
            if (b != a) best = std::min(best, count(a, b) + big_m);
          }
          return best;
        };
        const Candidate p = 0;
        const Candidate t = e.candidates().index_of("t");
        const Candidate c = e.candidates().index_of("c");
        bool ok = count(p, t) == ll && count(p, c) == ll + kk && count(t, p) == ll + 2 * kk &&
                  count(t, c) == kk && count(c, p) == ll + kk && count(c, t) == 2 * ll + kk;
        for (Candidate b = 3; b < m; ++b) {
          ok = ok && count(p, b) == ll + kk - 1 && count(b, p) == ll + kk + 1 &&
               count(t, b) == 2 * ll + 2 * kk && count(b, t) == 0 &&
               count(c, b) == 2 * ll + 2 * kk - 1 && count(b, c) == 1;
          for (Candidate b2 = 3; b2 < m; ++b2) {
            if (b2 != b) ok = ok && count(b, b2) <= 2 * ll + 2 * kk;
          }
        }
        ok = ok && maximin(p) == big_m + ll && maximin(t) == big_m + kk &&
             maximin(c) == big_m + kk + ll;
        const auto points = scores(e, instance.rule);
        ok = ok && points[p] == ScoreValue(big_m + ll) && points[t] == ScoreValue(big_m + kk) &&
             points[c] == ScoreValue(big_m + kk + ll);
        ++checked;
        if (!ok) {
          out.pass = false;
          if (out.detail.empty()) out.detail = "table violated at K=" + std::to_string(k);
        }
      }
    }
  }
  if (out.detail.empty()) out.detail = std::to_string(checked) + " generated instances, K = 1..4";
  return out;
}

Outcome PossibleWinner() {
  Outcome out;
  Rng rng(909);
  int yes = 0, empty = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = Uniform(rng, 2, 4);
    const int n = Uniform(rng, 1, 3);
    PossibleWinnerInstance pw;
    pw.candidates = testing::Roster(m);
    pw.rule = trial % 2 == 0 ? Rule::KApproval(Uniform(rng, 1, m - 1)) : Rule::Borda();
    pw.preferred = Uniform(rng, 0, m - 1);
    const bool all_empty = trial % 5 == 0;
    if (all_empty) ++empty;
    for (int i = 0; i < n; ++i) {
      pw.votes.push_back(all_empty ? PartialPreference(m, {})
                                   : testing::RandomPartial(m, Uniform(rng, 0, 10) / 10.0, rng));
    }
    const BriberyInstance reduced = reduce_possible_winner(pw);
    const auto solution = exact_oracle(reduced);
    const bool expected = testing::BrutePossibleWinner(pw);
    if (expected) ++yes;
    if (solution.has_value() != expected || (solution && solution->total_cost != Cost(0))) {
      out.pass = false;
      if (out.detail.empty()) out.detail = "mismatch on trial " + std::to_string(trial);
    }
  }
  if (out.detail.empty()) {
    out.detail = "100 profiles agree (" + std::to_string(yes) + " possible winners, " +
                 std::to_string(empty) + " with empty partial orders)";
  }
  return out;
}

Outcome ShiftSwapConsistency() {
  Outcome out;
  Rng rng(1010);
  int feasible = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = Uniform(rng, 2, 4);
    const int n = Uniform(rng, 1, 3);
    const BriberyInstance shift =
        testing::RandomShiftInstance(n, m, testing::RandomRule(m, rng), rng, 4, 0.1);
    BriberyInstance swap = shift;
    swap.shift_prices.clear();
    for (int i = 0; i < n; ++i) {
      swap.swap_prices.push_back(
          shift_to_swap_prices(shift.election.vote(i), shift.preferred, shift.shift_prices[i]));
    }
    const auto by_shift = CostOf(exact_oracle(shift));
    const auto by_swap = CostOf(exact_oracle(swap));
    const auto brute = testing::BruteShiftOptimum(shift);
    if (by_shift) ++feasible;
    if (by_shift != by_swap || by_shift != brute) {
      out.pass = false;
      if (out.detail.empty()) {
        out.detail = "trial " + std::to_string(trial) + ": shift " + Show(by_shift) + ", swap " +
                     Show(by_swap);
      }
    }
  }
  if (out.detail.empty()) out.detail = "100 instances agree, " + std::to_string(feasible) + " feasible";
  return out;
}

Outcome SpavCoverCost() {
  Outcome out;
  int yes_instances = 0, at_3k = 0, below_3k = 0;
  for (int k = 1; k <= 2; ++k) {
    for (int sets = k; sets <= 4; ++sets) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const X3CInstance x3c = random_x3c(k, sets, seed * 13 + sets, true);
        if (!testing::BruteExactCover(x3c)) continue;
        ++yes_instances;
        BriberyInstance instance = gen_x3c_spav_mixed(x3c).instance;
        instance.budget = 3 * k;
        const auto at = solve_spav_mixed_exact(instance);
        if (at && at->total_cost == Cost(3 * k)) ++at_3k;
        instance.budget = 3 * k - 1;
        if (!solve_spav_mixed_exact(instance)) ++below_3k;
      }
    }
  }
  out.pass = at_3k == yes_instances && below_3k == yes_instances;
  out.detail = std::to_string(yes_instances) + " yes-instances: feasible at exactly 3K in " +
               std::to_string(at_3k) + ", infeasible at 3K-1 in " + std::to_string(below_3k);
  return out;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace swapbribery

int main(int argc, char** argv) {
  using namespace swapbribery;
  CLI::App app{"Acceptance checks"};
  int only = 0;
  app.add_option("--only", only, "Run a single criterion (1-11)");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "vote transform cost is the shortest swap path", VoteTransform},
      {2, "multiset transform flow equals exhaustive assignment", MultisetTransform},
      {3, "fixed-candidates solver equals exact oracle", FixedCandidates},
      {4, "plurality/veto and k-approval shift flows equal exact oracle",
       PluralityVetoAndKApprovalShift},
      {5, "fixed-voters solver equals exact oracle", FixedVoters},
      {6, "Borda shift approximation within twice optimum", BordaApproximation},
      {7, "reduction generators agree with source labels", ReductionRoundTrips},
      {8, "maximin construction head-to-head table and scores", MaximinTable},
      {9, "possible-winner reduction equals completion enumeration", PossibleWinner},
      {10, "shift and converted swap prices give equal optima", ShiftSwapConsistency},
      {11, "SP-AV yes-instances cost exactly 3K", SpavCoverCost},
  };

  bool all = true;
  for (const Criterion& criterion : criteria) {
    if (only != 0 && criterion.id != only) continue;
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %d: %s -- %s\n", outcome.pass ? "PASS" : "FAIL", criterion.id,
                criterion.name, outcome.detail.c_str());
    std::fflush(stdout);
    all &= outcome.pass;
  }
  return all ? 0 : 1;
}
