#include "swapbribery/swap_model.h"

#include <algorithm>

#include "swapbribery/errors.h"

namespace swapbribery {

SwapPriceFn::SwapPriceFn(int m, Cost fill)
    : m_(m), table_(static_cast<std::size_t>(m) * m, fill) {}

bool operator==(const SwapPriceFn& a, const SwapPriceFn& b) {
  if (a.m_ != b.m_) return false;
  for (int i = 0; i < a.m_; ++i) {
    for (int j = 0; j < a.m_; ++j) {
      if (i != j && a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

ShiftPriceFn::ShiftPriceFn(std::vector<Cost> prices) : prices_(std::move(prices)) {
  if (prices_.empty()) prices_.push_back(Cost::Zero());
  if (prices_[0] != Cost::Zero()) {
    throw ParameterError("shift prices must start with rho(0) = 0");
  }
  for (std::size_t i = 1; i < prices_.size(); ++i) {
    if (prices_[i] < prices_[i - 1]) {
      throw ParameterError("shift prices must be nondecreasing (rho(" +
                           std::to_string(i) + ") < rho(" +
                           std::to_string(i - 1) + "))");
    }
  }
}

Cost ShiftPriceFn::operator()(int shift) const {
  if (shift < 0) throw RangeError("negative shift");
  if (shift > headroom()) return Cost::Forbidden();
  return prices_[shift];
}

ThresholdPriceFn::ThresholdPriceFn(std::map<int, Cost> prices)
    : prices_(std::move(prices)) {
  auto zero = prices_.find(0);
  if (zero != prices_.end() && zero->second != Cost::Zero()) {
    throw ParameterError("threshold prices must have sigma(0) = 0");
  }
  prices_[0] = Cost::Zero();
  // Absent and explicitly forbidden deltas mean the same thing.
  std::erase_if(prices_, [](const auto& entry) { return entry.second.forbidden(); });
}

ThresholdPriceFn ThresholdPriceFn::AbsoluteValue(int min_delta, int max_delta) {
  std::map<int, Cost> prices;
  for (int delta = min_delta; delta <= max_delta; ++delta) {
    prices.emplace(delta, Cost(delta < 0 ? -delta : delta));
  }
  return ThresholdPriceFn(std::move(prices));
}

Cost ThresholdPriceFn::operator()(int delta) const {
  auto it = prices_.find(delta);
  return it == prices_.end() ? Cost::Forbidden() : it->second;
}

namespace {

void RequireSameSize(const Preference& from, const Preference& to) {
  if (from.size() != to.size()) {
    throw ParameterError("votes range over different candidate sets");
  }
}

}  // namespace

std::vector<CandidatePair> inversion_set(const Preference& from,
                                         const Preference& to) {
  RequireSameSize(from, to);
  std::vector<CandidatePair> out;
  const int m = from.size();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Candidate a = from.at(i);
      Candidate b = from.at(j);
      if (to.prefers(b, a)) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Cost transform_cost(const Preference& from, const Preference& to,
                     const SwapPriceFn& prices) {
  RequireSameSize(from, to);
  Cost total;
  const int m = from.size();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Candidate a = from.at(i);
      Candidate b = from.at(j);
      if (to.prefers(b, a)) {
        total += prices(a, b);
        if (total.forbidden()) return total;
      }
    }
  }
  return total;
}

SwapSequence transform_sequence(const Preference& from, const Preference& to,
                                const SwapPriceFn& prices, int voter) {
  SwapSequence out;
  out.total_cost = transform_cost(from, to, prices);
  if (out.total_cost.forbidden()) {
    throw InfeasibleError("transformation requires a forbidden swap");
  }
  Preference current = from;
  const int m = current.size();
  int pos = 0;
  while (pos + 1 < m) {
    Candidate upper = current.at(pos);
    Candidate lower = current.at(pos + 1);
    if (to.prefers(lower, upper)) {
      out.swaps.push_back({voter, upper, lower});
      current.swap_adjacent(pos);
      // Only the pair ending at `pos` can have become inverted.
      if (pos > 0) --pos;
    } else {
      ++pos;
    }
  }
  return out;
}

Election apply_swap_sequence(const Election& election,
                             std::span<const UnitSwap> swaps) {
  std::vector<Preference> votes = election.votes();
  for (std::size_t step = 0; step < swaps.size(); ++step) {
    const UnitSwap& swap = swaps[step];
    if (swap.voter < 0 || swap.voter >= static_cast<int>(votes.size())) {
      throw AdmissibilityError(step, "voter index out of range");
    }
    Preference& vote = votes[swap.voter];
    const int m = vote.size();
    if (swap.upper < 0 || swap.upper >= m || swap.lower < 0 || swap.lower >= m) {
      throw AdmissibilityError(step, "candidate index out of range");
    }
    int pos = vote.position_of(swap.upper);
    if (pos + 1 >= m || vote.at(pos + 1) != swap.lower) {
      throw AdmissibilityError(
          step, "candidates " + election.candidates().name(swap.upper) + " and " +
                    election.candidates().name(swap.lower) +
                    " are not adjacent in that order in voter " +
                    std::to_string(swap.voter + 1) + "'s ranking");
    }
    vote.swap_adjacent(pos);
  }
  return Election(election.candidates(), std::move(votes), election.approvals());
}

Preference apply_shift(const Preference& vote, Candidate preferred, int shift) {
  int pos = vote.position_of(preferred);
  if (shift < 0 || shift > pos) {
    throw RangeError("cannot shift up by " + std::to_string(shift) + " with only " +
                     std::to_string(pos) + " candidates above");
  }
  std::vector<Candidate> ranking = vote.ranking();
  std::rotate(ranking.begin() + (pos - shift), ranking.begin() + pos,
              ranking.begin() + pos + 1);
  return Preference(std::move(ranking));
}

SwapPriceFn shift_to_swap_prices(const Preference& vote, Candidate preferred,
                                 const ShiftPriceFn& rho) {
  const int pos = vote.position_of(preferred);
  if (rho.headroom() != pos) {
    throw ParameterError("shift price table covers " +
                         std::to_string(rho.headroom()) + " shifts but " +
                         std::to_string(pos) + " candidates are above");
  }
  SwapPriceFn out(vote.size(), Cost::Forbidden());
  for (int distance = 1; distance <= pos; ++distance) {
    Candidate above = vote.at(pos - distance);
    Cost hi = rho(distance);
    Cost lo = rho(distance - 1);
    Cost step = hi.forbidden() ? Cost::Forbidden() : Cost(hi.value() - lo.value());
    out.set(above, preferred, step);
  }
  return out;
}

}  // namespace swapbribery
