#ifndef SWAPBRIBERY_HARDNESS_GEN_H_
#define SWAPBRIBERY_HARDNESS_GEN_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swapbribery/instance.h"

namespace swapbribery {

// Exact cover by 3-sets over the ground set {0, ..., 3K-1}.
struct X3CInstance {
  int k = 1;
  std::vector<std::array<int, 3>> sets;

  int ground_size() const { return 3 * k; }
  // Throws ParameterError unless K >= 1 and every set holds three distinct
  // in-range elements.
  void Validate() const;
  friend bool operator==(const X3CInstance&, const X3CInstance&) = default;
};

// Bipartite graph with sides U = W = {0, ..., N-1}; asks for a K x K biclique.
struct BBInstance {
  int n = 1;
  int k = 1;
  std::vector<std::pair<int, int>> edges;  // (u, w)

  void Validate() const;
  bool has_edge(int u, int w) const;
  friend bool operator==(const BBInstance&, const BBInstance&) = default;
};

struct ReductionInstance {
  std::string reduction;  // CLI name of the construction
  BriberyInstance instance;
  // Whether the source instance is a yes-instance; nullopt when the
  // exhaustive check was over its cap.
  std::optional<bool> expected_feasible;
  std::int64_t target_budget = 0;
};

// Exhaustive searches used for labels. Throw CapacityError when C(M, K)
// (resp. C(N, K)) exceeds `max_subsets`.
bool x3c_check(const X3CInstance& x3c, std::int64_t max_subsets = 10'000'000);
bool balanced_biclique_check(const BBInstance& bb,
                             std::int64_t max_subsets = 10'000'000);

// Every generator verifies the score profile its construction promises and
// throws ConsistencyError if it does not hold. Candidate 0 is always the
// preferred candidate p.

// k-approval swap bribery (k >= 3) from X3C; requires K >= 2. Budget K.
ReductionInstance gen_x3c_3approval(const X3CInstance& x3c, int k = 3);
// Borda shift bribery from X3C. Budget K.
ReductionInstance gen_x3c_borda_shift(const X3CInstance& x3c);
// Single-voter (N+1)-approval swap bribery from balanced biclique. Budget N-K.
ReductionInstance gen_bb_kapproval(const BBInstance& bb);
// Maximin shift bribery from X3C, with L = K. Budget K.
ReductionInstance gen_x3c_maximin_shift(const X3CInstance& x3c);
// SP-AV mixed bribery from X3C; no swaps allowed, threshold changes priced
// |delta|. Budget 3K.
ReductionInstance gen_x3c_spav_mixed(const X3CInstance& x3c);

// Random sources for fixtures. With `plant_cover`, the first K sets (before
// shuffling) form an exact cover.
X3CInstance random_x3c(int k, int num_sets, std::uint64_t seed, bool plant_cover);
BBInstance random_bb(int n, int k, double edge_probability, std::uint64_t seed);

}  // namespace swapbribery

#endif  // SWAPBRIBERY_HARDNESS_GEN_H_
