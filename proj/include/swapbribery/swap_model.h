#ifndef SWAPBRIBERY_SWAP_MODEL_H_
#define SWAPBRIBERY_SWAP_MODEL_H_

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "swapbribery/cost.h"
#include "swapbribery/election.h"

namespace swapbribery {

// Per-voter swap prices. (upper, lower) is the price of turning
// "... upper > lower ..." into "... lower > upper ..."; the two orientations
// of a pair are priced independently. The diagonal is never read.
class SwapPriceFn {
 public:
  SwapPriceFn() = default;
  explicit SwapPriceFn(int m, Cost fill = Cost::Zero());

  int size() const { return m_; }
  Cost operator()(Candidate upper, Candidate lower) const {
    return table_[upper * m_ + lower];
  }
  void set(Candidate upper, Candidate lower, Cost price) {
    table_[upper * m_ + lower] = price;
  }

  friend bool operator==(const SwapPriceFn& a, const SwapPriceFn& b);

 private:
  int m_ = 0;
  std::vector<Cost> table_;
};

// rho(i) is the price of moving the preferred candidate up i positions in one
// vote. Stored for i = 0..headroom, where headroom is the number of
// candidates ranked above the preferred one; larger shifts are FORBIDDEN.
class ShiftPriceFn {
 public:
  ShiftPriceFn() : prices_{Cost::Zero()} {}
  // prices[0] must be 0 and the sequence nondecreasing.
  explicit ShiftPriceFn(std::vector<Cost> prices);

  int headroom() const { return static_cast<int>(prices_.size()) - 1; }
  Cost operator()(int shift) const;
  const std::vector<Cost>& prices() const { return prices_; }

  friend bool operator==(const ShiftPriceFn&, const ShiftPriceFn&) = default;

 private:
  std::vector<Cost> prices_;
};

// sigma(delta): price of changing an SP-AV approval threshold by delta.
// Deltas absent from the table are FORBIDDEN; sigma(0) = 0 always.
class ThresholdPriceFn {
 public:
  ThresholdPriceFn() : prices_{{0, Cost::Zero()}} {}
  explicit ThresholdPriceFn(std::map<int, Cost> prices);

  // sigma(k) = |k| on min_delta..max_delta.
  static ThresholdPriceFn AbsoluteValue(int min_delta, int max_delta);

  Cost operator()(int delta) const;
  const std::map<int, Cost>& prices() const { return prices_; }

  friend bool operator==(const ThresholdPriceFn&, const ThresholdPriceFn&) = default;

 private:
  std::map<int, Cost> prices_;
};

struct UnitSwap {
  int voter = 0;
  Candidate upper = 0;
  Candidate lower = 0;

  friend bool operator==(const UnitSwap&, const UnitSwap&) = default;
};

struct SwapSequence {
  std::vector<UnitSwap> swaps;
  Cost total_cost;

  friend bool operator==(const SwapSequence&, const SwapSequence&) = default;
};

using CandidatePair = std::pair<Candidate, Candidate>;

// Pairs (a, b) with a above b in `from` and b above a in `to`, sorted.
std::vector<CandidatePair> inversion_set(const Preference& from,
                                         const Preference& to);

// Cheapest price of turning `from` into `to` by adjacent swaps: the sum of
// the prices of the inverted pairs. FORBIDDEN if any inverted pair is.
Cost transform_cost(const Preference& from, const Preference& to,
                     const SwapPriceFn& prices);

// A cheapest swap sequence realizing transform_cost. Repeatedly swaps the
// leftmost adjacent inverted pair, so every inverted pair is swapped exactly
// once and nothing else is touched. Throws InfeasibleError when the cost is
// FORBIDDEN. Every emitted swap is tagged with `voter`.
SwapSequence transform_sequence(const Preference& from, const Preference& to,
                                const SwapPriceFn& prices, int voter = 0);

// Executes swaps in order. Throws AdmissibilityError naming the first step
// whose candidates are not adjacent (upper directly above lower) at that time.
Election apply_swap_sequence(const Election& election,
                             std::span<const UnitSwap> swaps);
inline Election apply_swap_sequence(const Election& election,
                                    const SwapSequence& sequence) {
  return apply_swap_sequence(election, sequence.swaps);
}

// Moves `preferred` up exactly `shift` positions. Throws RangeError if fewer
// than `shift` candidates are above it.
Preference apply_shift(const Preference& vote, Candidate preferred, int shift);

// Swap prices under which moving `preferred` up i positions in `vote` costs
// exactly rho(i) and every other swap is FORBIDDEN. The swap past the
// candidate ell places above `preferred` is priced rho(ell) - rho(ell - 1).
SwapPriceFn shift_to_swap_prices(const Preference& vote, Candidate preferred,
                                 const ShiftPriceFn& rho);

}  // namespace swapbribery

#endif  // SWAPBRIBERY_SWAP_MODEL_H_
