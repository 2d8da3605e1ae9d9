#ifndef SWAPBRIBERY_ELECTION_H_
#define SWAPBRIBERY_ELECTION_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swapbribery {

// Candidates are addressed by index 0..m-1 everywhere inside the library.
// Names only matter at the I/O boundary.
using Candidate = int;

class CandidateSet {
 public:
  CandidateSet() = default;
  explicit CandidateSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Candidate c) const { return names_.at(c); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Candidate> find(std::string_view name) const;
  // Throws ParameterError for unknown names.
  Candidate index_of(std::string_view name) const;

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

 private:
  std::vector<std::string> names_;
};

// A strict linear order, most preferred first.
class Preference {
 public:
  Preference() = default;
  // Throws ParameterError unless `ranking` is a permutation of 0..size-1.
  explicit Preference(std::vector<Candidate> ranking);

  static Preference Identity(int m);

  int size() const { return static_cast<int>(ranking_.size()); }
  Candidate at(int position) const { return ranking_[position]; }
  int position_of(Candidate c) const { return position_[c]; }
  bool prefers(Candidate a, Candidate b) const {
    return position_[a] < position_[b];
  }
  const std::vector<Candidate>& ranking() const { return ranking_; }

  // Exchanges the candidates at `position` and `position + 1`.
  void swap_adjacent(int position);

  friend bool operator==(const Preference& a, const Preference& b) {
    return a.ranking_ == b.ranking_;
  }
  friend auto operator<=>(const Preference& a, const Preference& b) {
    return a.ranking_ <=> b.ranking_;
  }

 private:
  std::vector<Candidate> ranking_;
  std::vector<int> position_;
};

class Rule {
 public:
  enum class Kind { kPlurality, kKApproval, kVeto, kBorda, kCopeland, kMaximin, kSpav };

  static Rule Plurality() { return Rule(Kind::kPlurality); }
  static Rule KApproval(int k);
  static Rule Veto() { return Rule(Kind::kVeto); }
  static Rule Borda() { return Rule(Kind::kBorda); }
  // alpha = numerator / denominator, reduced to lowest terms.
  static Rule Copeland(std::int64_t numerator, std::int64_t denominator);
  static Rule Maximin() { return Rule(Kind::kMaximin); }
  static Rule Spav() { return Rule(Kind::kSpav); }

  Kind kind() const { return kind_; }
  int k() const { return k_; }
  std::int64_t alpha_numerator() const { return alpha_num_; }
  std::int64_t alpha_denominator() const { return alpha_den_; }

  // Throws ParameterError if the parameters are invalid for m candidates.
  void Validate(int m) const;

  // Number of top positions approved by each vote for the k-approval family
  // (plurality, k-approval, veto); nullopt for every other rule.
  std::optional<int> approval_width(int m) const;
  bool pairwise() const {
    return kind_ == Kind::kCopeland || kind_ == Kind::kMaximin;
  }

  // Grammar form: "plurality", "kapproval 2", "copeland 1/2", ...
  std::string ToString() const;

  friend bool operator==(const Rule&, const Rule&) = default;

 private:
  explicit Rule(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kPlurality;
  int k_ = 0;
  std::int64_t alpha_num_ = 0;
  std::int64_t alpha_den_ = 1;
};

// Exact rational score. Integral for every rule except Copeland.
class ScoreValue {
 public:
  ScoreValue() = default;
  ScoreValue(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  friend bool operator==(const ScoreValue&, const ScoreValue&) = default;
  friend std::strong_ordering operator<=>(const ScoreValue& a,
                                          const ScoreValue& b);
  std::string ToString() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A list of votes over one candidate set. SP-AV elections additionally carry
// one approval threshold per vote.
class Election {
 public:
  Election() = default;
  Election(CandidateSet candidates, std::vector<Preference> votes,
           std::vector<int> approvals = {});

  const CandidateSet& candidates() const { return candidates_; }
  int num_candidates() const { return candidates_.size(); }
  int num_voters() const { return static_cast<int>(votes_.size()); }
  const std::vector<Preference>& votes() const { return votes_; }
  const Preference& vote(int voter) const { return votes_.at(voter); }

  bool has_approvals() const { return !approvals_.empty(); }
  const std::vector<int>& approvals() const { return approvals_; }
  int approvals(int voter) const { return approvals_.at(voter); }

  Election with_vote(int voter, Preference vote) const;
  Election with_approvals(int voter, int approvals) const;

  friend bool operator==(const Election&, const Election&) = default;

 private:
  CandidateSet candidates_;
  std::vector<Preference> votes_;
  std::vector<int> approvals_;
};

// Checks that `rule` can be evaluated on `election` (parameter ranges, SP-AV
// thresholds present and within 1..m-1). Throws ParameterError.
void ValidateRule(const Election& election, const Rule& rule);

// Entry (i, j) is the number of voters ranking i above j; stored row-major.
std::vector<std::int64_t> pairwise_wins(const Election& election);

ScoreValue score(const Election& election, const Rule& rule,
                 Candidate candidate);
std::vector<ScoreValue> scores(const Election& election, const Rule& rule);

// All candidates of maximum score, ascending. Never empty when m >= 1.
std::vector<Candidate> winners(const Election& election, const Rule& rule);
bool is_winner(const Election& election, const Rule& rule, Candidate c);

// ---------------------------------------------------------------------------
// Additive tallies. Every supported rule's outcome is a function of the sum
// over voters of a fixed per-vote vector: per-candidate points for the
// positional rules, the m*m pairwise-preference table for Copeland and
// maximin. Solvers that enumerate profiles maintain this sum incrementally.

int tally_size(const Rule& rule, int m);

// `approvals` is only read for SP-AV.
void add_contribution(const Rule& rule, const Preference& vote, int approvals,
                      std::span<std::int64_t> tally, std::int64_t sign = 1);
std::vector<std::int64_t> contribution(const Rule& rule, const Preference& vote,
                                       int approvals);

std::vector<ScoreValue> scores_from_tally(const Rule& rule, int m,
                                          std::span<const std::int64_t> tally);
std::vector<Candidate> winners_from_tally(const Rule& rule, int m,
                                          std::span<const std::int64_t> tally);
bool wins_from_tally(const Rule& rule, int m,
                     std::span<const std::int64_t> tally, Candidate c);

}  // namespace swapbribery

#endif  // SWAPBRIBERY_ELECTION_H_
