#ifndef SWAPBRIBERY_TESTS_TEST_UTIL_H_
#define SWAPBRIBERY_TESTS_TEST_UTIL_H_

// Random instance generators and deliberately naive reference computations
// for the tests. Nothing in here calls a library solver; the winner and
// cost computations are rewritten from the definitions so that the tests
// check the library against something independent.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "swapbribery/generic_solvers.h"
#include "swapbribery/hardness_gen.h"
#include "swapbribery/instance.h"

namespace swapbribery::testing {

using Rng = std::mt19937_64;

int Uniform(Rng& rng, int lo, int hi);
CandidateSet Roster(int m);
Preference RandomVote(int m, Rng& rng);
// Prices in 0..max_price, each FORBIDDEN with probability forbidden_rate.
SwapPriceFn RandomSwapPrices(int m, Rng& rng, int max_price = 9, double forbidden_rate = 0.0);
ShiftPriceFn RandomShiftPrices(int headroom, Rng& rng, int max_step = 4,
                               double forbidden_rate = 0.0);
Rule RandomRule(int m, Rng& rng);  // any of the seven
std::vector<Rule> AllRules(int m);

// Swap instance with random votes, prices and budget. SP-AV rules get random
// thresholds (and threshold prices when `mixed`).
BriberyInstance RandomSwapInstance(int n, int m, const Rule& rule, Rng& rng,
                                   int max_price = 5, double forbidden_rate = 0.15,
                                   bool mixed = false);
BriberyInstance RandomShiftInstance(int n, int m, const Rule& rule, Rng& rng,
                                    int max_step = 4, double forbidden_rate = 0.1);

// ---------------------------------------------------------------------------
// Naive references.

// Winners straight from the rule definitions.
std::vector<Candidate> NaiveWinners(const std::vector<Preference>& votes,
                                    const std::vector<int>& approvals, int m,
                                    const Rule& rule);
bool NaiveWins(const std::vector<Preference>& votes, const std::vector<int>& approvals,
               int m, const Rule& rule, Candidate c);

// Dijkstra over all m! orders with adjacent swaps as weighted edges.
Cost ShortestSwapDistance(const Preference& from, const Preference& to,
                          const SwapPriceFn& prices);
// Every order together with its shortest swap distance from `from`.
std::vector<std::pair<Preference, Cost>> AllDistances(const Preference& from,
                                                      const SwapPriceFn& prices);

// Minimum over all n! bijections; FORBIDDEN if none is finite.
Cost BruteAssignmentCost(const std::vector<Preference>& votes,
                         const std::vector<SwapPriceFn>& prices,
                         const std::vector<Preference>& target);

// Optimal cost (nullopt if infeasible within the budget) by enumerating
// every profile of m! orders per voter (times thresholds for mixed SP-AV).
std::optional<std::int64_t> BruteSwapOptimum(const BriberyInstance& instance);
// Optimal cost over every per-voter shift vector.
std::optional<std::int64_t> BruteShiftOptimum(const BriberyInstance& instance);

// Whether some completion of the partial votes makes `pw.preferred` win.
bool BrutePossibleWinner(const PossibleWinnerInstance& pw);
bool BruteExactCover(const X3CInstance& x3c);
bool BruteBiclique(const BBInstance& bb);

// Random partial order: each pair of a random linear order kept with
// probability `density`.
PartialPreference RandomPartial(int m, double density, Rng& rng);

}  // namespace swapbribery::testing

#endif  // SWAPBRIBERY_TESTS_TEST_UTIL_H_
