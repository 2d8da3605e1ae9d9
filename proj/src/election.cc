#include "swapbribery/election.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "swapbribery/cost.h"
#include "swapbribery/errors.h"

namespace swapbribery {
namespace {

bool ValidName(const std::string& name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char ch) {
    return ch == '#' || ch == ':' || ch == '>' ||
           std::isspace(static_cast<unsigned char>(ch));
  });
}

// Integer sort key whose maximum identifies the winners.
std::vector<std::int64_t> ScoreKeys(const Rule& rule, int m,
                                    std::span<const std::int64_t> tally) {
  std::vector<std::int64_t> keys(m, 0);
  if (!rule.pairwise()) {
    std::copy(tally.begin(), tally.begin() + m, keys.begin());
    return keys;
  }
  for (int i = 0; i < m; ++i) {
    if (rule.kind() == Rule::Kind::kMaximin) {
      std::int64_t worst = 0;
      bool first = true;
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        std::int64_t support = tally[i * m + j];
        if (first || support < worst) worst = support;
        first = false;
      }
      keys[i] = worst;
    } else {
      std::int64_t wins = 0;
      std::int64_t ties = 0;
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        std::int64_t forward = tally[i * m + j];
        std::int64_t backward = tally[j * m + i];
        if (forward > backward) ++wins;
        if (forward == backward) ++ties;
      }
      keys[i] = wins * rule.alpha_denominator() + ties * rule.alpha_numerator();
    }
  }
  return keys;
}

}  // namespace

CandidateSet::CandidateSet(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.empty()) throw ParameterError("candidate set is empty");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (!ValidName(name)) {
      throw ParameterError("invalid candidate name '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw ParameterError("duplicate candidate name '" + name + "'");
    }
  }
}

std::optional<Candidate> CandidateSet::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Candidate>(it - names_.begin());
}

Candidate CandidateSet::index_of(std::string_view name) const {
  auto found = find(name);
  if (!found) throw ParameterError("unknown candidate '" + std::string(name) + "'");
  return *found;
}

Preference::Preference(std::vector<Candidate> ranking)
    : ranking_(std::move(ranking)), position_(ranking_.size(), -1) {
  const int m = size();
  for (int pos = 0; pos < m; ++pos) {
    Candidate c = ranking_[pos];
    if (c < 0 || c >= m) {
      throw ParameterError("vote mentions candidate index " + std::to_string(c) +
                           " outside 0.." + std::to_string(m - 1));
    }
    if (position_[c] != -1) {
      throw ParameterError("vote lists candidate index " + std::to_string(c) +
                           " twice");
    }
    position_[c] = pos;
  }
}

Preference Preference::Identity(int m) {
  std::vector<Candidate> ranking(m);
  std::iota(ranking.begin(), ranking.end(), 0);
  return Preference(std::move(ranking));
}

void Preference::swap_adjacent(int position) {
  std::swap(ranking_[position], ranking_[position + 1]);
  position_[ranking_[position]] = position;
  position_[ranking_[position + 1]] = position + 1;
}

Rule Rule::KApproval(int k) {
  Rule rule(Kind::kKApproval);
  rule.k_ = k;
  return rule;
}

Rule Rule::Copeland(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0 || numerator < 0 || numerator > denominator) {
    throw ParameterError("copeland alpha must be a rational in [0,1]");
  }
  std::int64_t g = std::gcd(numerator, denominator);
  Rule rule(Kind::kCopeland);
  rule.alpha_num_ = numerator / g;
  rule.alpha_den_ = denominator / g;
  return rule;
}

void Rule::Validate(int m) const {
  if (kind_ == Kind::kKApproval && (k_ < 1 || k_ > m - 1)) {
    throw ParameterError("kapproval needs 1 <= k <= m-1, got k=" +
                         std::to_string(k_) + " with m=" + std::to_string(m));
  }
}

std::optional<int> Rule::approval_width(int m) const {
  switch (kind_) {
    case Kind::kPlurality:
      return std::min(1, m);
    case Kind::kKApproval:
      return k_;
    case Kind::kVeto:
      return std::max(0, m - 1);
    default:
      return std::nullopt;
  }
}

std::string Rule::ToString() const {
  switch (kind_) {
    case Kind::kPlurality:
      return "plurality";
    case Kind::kKApproval:
      return "kapproval " + std::to_string(k_);
    case Kind::kVeto:
      return "veto";
    case Kind::kBorda:
      return "borda";
    case Kind::kCopeland:
      return "copeland " + std::to_string(alpha_num_) + "/" +
             std::to_string(alpha_den_);
    case Kind::kMaximin:
      return "maximin";
    case Kind::kSpav:
      return "spav";
  }
  return "?";
}

ScoreValue::ScoreValue(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) throw ParameterError("score denominator must be positive");
  std::int64_t g = std::gcd(numerator, denominator);
  if (g == 0) g = 1;
  num_ = numerator / g;
  den_ = denominator / g;
}

std::strong_ordering operator<=>(const ScoreValue& a, const ScoreValue& b) {
  return CheckedMul(a.num_, b.den_) <=> CheckedMul(b.num_, a.den_);
}

std::string ScoreValue::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Election::Election(CandidateSet candidates, std::vector<Preference> votes,
                   std::vector<int> approvals)
    : candidates_(std::move(candidates)),
      votes_(std::move(votes)),
      approvals_(std::move(approvals)) {
  const int m = candidates_.size();
  for (const auto& vote : votes_) {
    if (vote.size() != m) {
      throw ParameterError("vote ranks " + std::to_string(vote.size()) +
                           " candidates, expected " + std::to_string(m));
    }
  }
  if (!approvals_.empty()) {
    if (approvals_.size() != votes_.size()) {
      throw ParameterError("approval thresholds do not match the vote count");
    }
    for (int threshold : approvals_) {
      if (threshold < 1 || threshold > m - 1) {
        throw ParameterError("approval threshold " + std::to_string(threshold) +
                             " outside 1..m-1");
      }
    }
  }
}

Election Election::with_vote(int voter, Preference vote) const {
  Election copy = *this;
  copy.votes_.at(voter) = std::move(vote);
  return copy;
}

Election Election::with_approvals(int voter, int approvals) const {
  std::vector<int> thresholds = approvals_;
  thresholds.at(voter) = approvals;
  return Election(candidates_, votes_, std::move(thresholds));
}

void ValidateRule(const Election& election, const Rule& rule) {
  rule.Validate(election.num_candidates());
  if (rule.kind() == Rule::Kind::kSpav && !election.has_approvals() &&
      election.num_voters() > 0) {
    throw ParameterError("spav needs an approval threshold on every vote");
  }
}

std::vector<std::int64_t> pairwise_wins(const Election& election) {
  const int m = election.num_candidates();
  std::vector<std::int64_t> table(static_cast<std::size_t>(m) * m, 0);
  for (const auto& vote : election.votes()) {
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        ++table[vote.at(a) * m + vote.at(b)];
      }
    }
  }
  return table;
}

int tally_size(const Rule& rule, int m) {
  return rule.pairwise() ? m * m : m;
}

void add_contribution(const Rule& rule, const Preference& vote, int approvals,
                      std::span<std::int64_t> tally, std::int64_t sign) {
  const int m = vote.size();
  if (rule.pairwise()) {
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        tally[vote.at(a) * m + vote.at(b)] += sign;
      }
    }
    return;
  }
  if (rule.kind() == Rule::Kind::kBorda) {
    for (int pos = 0; pos < m; ++pos) tally[vote.at(pos)] += sign * (m - 1 - pos);
    return;
  }
  int width = rule.kind() == Rule::Kind::kSpav ? approvals : *rule.approval_width(m);
  for (int pos = 0; pos < width; ++pos) tally[vote.at(pos)] += sign;
}

std::vector<std::int64_t> contribution(const Rule& rule, const Preference& vote,
                                       int approvals) {
  std::vector<std::int64_t> out(tally_size(rule, vote.size()), 0);
  add_contribution(rule, vote, approvals, out);
  return out;
}

std::vector<ScoreValue> scores_from_tally(const Rule& rule, int m,
                                          std::span<const std::int64_t> tally) {
  std::vector<std::int64_t> keys = ScoreKeys(rule, m, tally);
  std::int64_t den =
      rule.kind() == Rule::Kind::kCopeland ? rule.alpha_denominator() : 1;
  std::vector<ScoreValue> out;
  out.reserve(m);
  for (std::int64_t key : keys) out.emplace_back(key, den);
  return out;
}

std::vector<Candidate> winners_from_tally(const Rule& rule, int m,
                                          std::span<const std::int64_t> tally) {
  std::vector<std::int64_t> keys = ScoreKeys(rule, m, tally);
  std::vector<Candidate> out;
  if (keys.empty()) return out;
  std::int64_t best = *std::max_element(keys.begin(), keys.end());
  for (int c = 0; c < m; ++c) {
    if (keys[c] == best) out.push_back(c);
  }
  return out;
}

bool wins_from_tally(const Rule& rule, int m,
                     std::span<const std::int64_t> tally, Candidate c) {
  if (!rule.pairwise()) {
    for (int other = 0; other < m; ++other) {
      if (tally[other] > tally[c]) return false;
    }
    return true;
  }
  std::vector<std::int64_t> keys = ScoreKeys(rule, m, tally);
  return keys[c] == *std::max_element(keys.begin(), keys.end());
}

namespace {

std::vector<std::int64_t> Tally(const Election& election, const Rule& rule) {
  ValidateRule(election, rule);
  const int m = election.num_candidates();
  std::vector<std::int64_t> tally(tally_size(rule, m), 0);
  for (int i = 0; i < election.num_voters(); ++i) {
    int approvals = election.has_approvals() ? election.approvals(i) : 0;
    add_contribution(rule, election.vote(i), approvals, tally);
  }
  return tally;
}

}  // namespace

std::vector<ScoreValue> scores(const Election& election, const Rule& rule) {
  return scores_from_tally(rule, election.num_candidates(), Tally(election, rule));
}

ScoreValue score(const Election& election, const Rule& rule,
                 Candidate candidate) {
  if (candidate < 0 || candidate >= election.num_candidates()) {
    throw ParameterError("candidate index out of range");
  }
  return scores(election, rule)[candidate];
}

std::vector<Candidate> winners(const Election& election, const Rule& rule) {
  return winners_from_tally(rule, election.num_candidates(),
                            Tally(election, rule));
}

bool is_winner(const Election& election, const Rule& rule, Candidate c) {
  auto w = winners(election, rule);
  return std::binary_search(w.begin(), w.end(), c);
}

}  // namespace swapbribery
