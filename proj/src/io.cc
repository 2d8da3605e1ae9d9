#include "swapbribery/io.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "swapbribery/errors.h"

namespace swapbribery {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string token; in >> token;) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

std::int64_t ParseInt(const std::string& token, std::size_t line, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected an integer ") + what + ", got '" +
                               token + "'");
  }
  return value;
}

Cost ParseCost(const std::string& token, std::size_t line) {
  if (token == "x") return Cost::Forbidden();
  std::int64_t value = ParseInt(token, line, "cost");
  if (value < 0) throw ParseError(line, "negative cost " + token);
  return Cost(value);
}

void ExpectArgs(const Line& line, std::size_t count) {
  if (line.tokens.size() != count + 1) {
    throw ParseError(line.number, "'" + line.tokens[0] + "' takes " +
                                      std::to_string(count) + " argument(s)");
  }
}

Rule ParseRule(const Line& line) {
  const auto& t = line.tokens;
  if (t.size() < 2) throw ParseError(line.number, "missing rule name");
  const std::string& name = t[1];
  auto no_args = [&](Rule rule) {
    ExpectArgs(line, 1);
    return rule;
  };
  if (name == "plurality") return no_args(Rule::Plurality());
  if (name == "veto") return no_args(Rule::Veto());
  if (name == "borda") return no_args(Rule::Borda());
  if (name == "maximin") return no_args(Rule::Maximin());
  if (name == "spav") return no_args(Rule::Spav());
  try {
    if (name == "kapproval") {
      ExpectArgs(line, 2);
      return Rule::KApproval(static_cast<int>(ParseInt(t[2], line.number, "k")));
    }
    if (name == "copeland") {
      ExpectArgs(line, 2);
      auto slash = t[2].find('/');
      if (slash == std::string::npos) {
        throw ParseError(line.number, "copeland alpha must be written num/den");
      }
      return Rule::Copeland(ParseInt(t[2].substr(0, slash), line.number, "numerator"),
                            ParseInt(t[2].substr(slash + 1), line.number, "denominator"));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const ParameterError& e) {
    throw ParseError(line.number, e.what());
  }
  throw ParseError(line.number, "unknown rule '" + name + "'");
}

int ParseVoter(const std::string& token, std::size_t line, int n) {
  std::int64_t voter = ParseInt(token, line, "voter");
  if (voter < 1 || voter > n) {
    throw ParseError(line, "voter " + token + " out of range 1.." + std::to_string(n));
  }
  return static_cast<int>(voter - 1);
}

Candidate ParseCandidate(const CandidateSet& candidates, const std::string& token,
                         std::size_t line) {
  auto c = candidates.find(token);
  if (!c) throw ParseError(line, "unknown candidate '" + token + "'");
  return *c;
}

struct RosterHeader {
  std::optional<CandidateSet> candidates;
  std::optional<Candidate> preferred;
  std::size_t preferred_line = 0;
  std::optional<Rule> rule;
  std::size_t rule_line = 0;
};

// Handles candidates / preferred / rule. Returns false for other directives.
bool ParseHeaderLine(const Line& line, RosterHeader& header) {
  const std::string& d = line.tokens[0];
  if (d == "candidates") {
    if (header.candidates) throw ParseError(line.number, "duplicate 'candidates'");
    try {
      header.candidates = CandidateSet(
          std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end()));
    } catch (const ParameterError& e) {
      throw ParseError(line.number, e.what());
    }
    return true;
  }
  if (d == "preferred") {
    ExpectArgs(line, 1);
    if (!header.candidates) throw ParseError(line.number, "'preferred' before 'candidates'");
    if (header.preferred) throw ParseError(line.number, "duplicate 'preferred'");
    header.preferred = ParseCandidate(*header.candidates, line.tokens[1], line.number);
    header.preferred_line = line.number;
    return true;
  }
  if (d == "rule") {
    if (header.rule) throw ParseError(line.number, "duplicate 'rule'");
    header.rule = ParseRule(line);
    header.rule_line = line.number;
    return true;
  }
  return false;
}

void FinishHeader(const RosterHeader& header) {
  if (!header.candidates) throw ParseError(0, "missing 'candidates'");
  if (!header.preferred) throw ParseError(0, "missing 'preferred'");
  if (!header.rule) throw ParseError(0, "missing 'rule'");
  try {
    header.rule->Validate(header.candidates->size());
  } catch (const ParameterError& e) {
    throw ParseError(header.rule_line, e.what());
  }
}

std::string JoinNames(const CandidateSet& candidates, const std::vector<Candidate>& list) {
  std::string out;
  for (Candidate c : list) {
    out += ' ';
    out += candidates.name(c);
  }
  return out;
}

}  // namespace

BriberyInstance parse_instance(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  RosterHeader header;
  std::optional<std::int64_t> budget;
  struct VoteLine {
    std::size_t line;
    Preference vote;
    std::optional<int> approvals;
  };
  std::vector<VoteLine> votes;
  std::map<int, std::pair<std::size_t, SwapPriceFn>> swap;
  std::map<int, std::pair<std::size_t, std::vector<Cost>>> shift;
  std::map<int, std::pair<std::size_t, std::map<int, Cost>>> sigma;
  // Price directives refer to voters that may be declared later.
  struct Deferred {
    const Line* line;
    std::size_t rows_begin;
  };
  std::vector<Deferred> deferred;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& d = line.tokens[0];
    if (ParseHeaderLine(line, header)) continue;
    if (!header.candidates) {
      throw ParseError(line.number, "'" + d + "' before 'candidates'");
    }
    const CandidateSet& roster = *header.candidates;
    const int m = roster.size();
    if (d == "budget") {
      ExpectArgs(line, 1);
      if (budget) throw ParseError(line.number, "duplicate 'budget'");
      budget = ParseInt(line.tokens[1], line.number, "budget");
      if (*budget < 0) throw ParseError(line.number, "negative budget");
    } else if (d == "vote") {
      std::vector<std::string> names(line.tokens.begin() + 1, line.tokens.end());
      std::optional<int> approvals;
      if (names.size() >= 2 && names[names.size() - 2] == "approve") {
        approvals = static_cast<int>(ParseInt(names.back(), line.number, "approval count"));
        if (*approvals < 1 || *approvals > m - 1) {
          throw ParseError(line.number, "approval count " + names.back() +
                                            " outside 1.." + std::to_string(m - 1));
        }
        names.resize(names.size() - 2);
      }
      std::vector<Candidate> ranking;
      std::vector<bool> seen(m, false);
      for (const auto& name : names) {
        Candidate c = ParseCandidate(roster, name, line.number);
        if (seen[c]) throw ParseError(line.number, "vote lists '" + name + "' twice");
        seen[c] = true;
        ranking.push_back(c);
      }
      if (static_cast<int>(ranking.size()) != m) {
        throw ParseError(line.number, "vote does not rank every candidate");
      }
      votes.push_back({line.number, Preference(std::move(ranking)), approvals});
    } else if (d == "swapprices") {
      ExpectArgs(line, 1);
      if (i + m >= lines.size()) {
        throw ParseError(line.number, "swapprices needs " + std::to_string(m) + " rows");
      }
      deferred.push_back({&line, i + 1});
      for (int r = 0; r < m; ++r) {
        if (static_cast<int>(lines[i + 1 + r].tokens.size()) != m) {
          throw ParseError(lines[i + 1 + r].number,
                           "price row needs " + std::to_string(m) + " entries");
        }
      }
      i += m;
    } else if (d == "shiftprices" || d == "sigma") {
      if (line.tokens.size() < 2) throw ParseError(line.number, "missing voter number");
      deferred.push_back({&line, 0});
    } else {
      throw ParseError(line.number, "unknown directive '" + d + "'");
    }
  }
  FinishHeader(header);
  const CandidateSet& roster = *header.candidates;
  const int m = roster.size();
  const int n = static_cast<int>(votes.size());

  for (const Deferred& item : deferred) {
    const Line& line = *item.line;
    const std::string& d = line.tokens[0];
    const int voter = ParseVoter(line.tokens[1], line.number, n);
    if (d == "swapprices") {
      SwapPriceFn prices(m);
      for (int r = 0; r < m; ++r) {
        const Line& row = lines[item.rows_begin + r];
        for (int c = 0; c < m; ++c) {
          if (r != c) prices.set(r, c, ParseCost(row.tokens[c], row.number));
        }
      }
      if (!swap.emplace(voter, std::make_pair(line.number, prices)).second) {
        throw ParseError(line.number, "duplicate swap prices for voter " + line.tokens[1]);
      }
    } else if (d == "shiftprices") {
      std::vector<Cost> rho = {Cost::Zero()};
      for (std::size_t t = 2; t < line.tokens.size(); ++t) {
        rho.push_back(ParseCost(line.tokens[t], line.number));
        if (rho.back() < rho[rho.size() - 2]) {
          throw ParseError(line.number, "shift prices must be nondecreasing");
        }
      }
      if (!shift.emplace(voter, std::make_pair(line.number, rho)).second) {
        throw ParseError(line.number, "duplicate shift prices for voter " + line.tokens[1]);
      }
    } else {
      std::map<int, Cost> table;
      for (std::size_t t = 2; t < line.tokens.size(); ++t) {
        const std::string& token = line.tokens[t];
        auto colon = token.find(':');
        if (colon == std::string::npos) {
          throw ParseError(line.number, "sigma entries are written delta:cost");
        }
        int delta = static_cast<int>(ParseInt(token.substr(0, colon), line.number, "delta"));
        Cost cost = ParseCost(token.substr(colon + 1), line.number);
        if (delta == 0 && cost != Cost::Zero()) {
          throw ParseError(line.number, "sigma(0) must be 0");
        }
        if (!table.emplace(delta, cost).second) {
          throw ParseError(line.number, "delta " + std::to_string(delta) + " listed twice");
        }
      }
      if (!sigma.emplace(voter, std::make_pair(line.number, table)).second) {
        throw ParseError(line.number, "duplicate sigma for voter " + line.tokens[1]);
      }
    }
  }

  BriberyInstance instance;
  std::vector<Preference> ranked;
  std::vector<int> approvals;
  for (const auto& v : votes) {
    ranked.push_back(v.vote);
    if (v.approvals.has_value() != votes.front().approvals.has_value()) {
      throw ParseError(v.line, "either every vote or no vote carries 'approve'");
    }
    if (v.approvals) approvals.push_back(*v.approvals);
  }
  instance.election = Election(roster, std::move(ranked), std::move(approvals));
  instance.rule = *header.rule;
  instance.preferred = *header.preferred;
  if (!budget) throw ParseError(0, "missing 'budget'");
  instance.budget = *budget;
  if (header.rule->kind() == Rule::Kind::kSpav && n > 0 && !instance.election.has_approvals()) {
    throw ParseError(votes.front().line, "spav votes need 'approve <l>'");
  }

  auto require_all = [n](const auto& table, const char* what) {
    if (!table.empty() && static_cast<int>(table.size()) != n) {
      int missing = 0;
      while (table.count(missing)) ++missing;
      throw ParseError(table.begin()->second.first,
                       std::string(what) + " missing for voter " + std::to_string(missing + 1));
    }
  };
  require_all(swap, "swap prices");
  require_all(shift, "shift prices");
  require_all(sigma, "sigma");
  for (auto& [voter, entry] : swap) instance.swap_prices.push_back(entry.second);
  for (auto& [voter, entry] : shift) {
    const int above = instance.election.vote(voter).position_of(instance.preferred);
    if (static_cast<int>(entry.second.size()) - 1 != above) {
      throw ParseError(entry.first, "voter " + std::to_string(voter + 1) + " has " +
                                        std::to_string(above) +
                                        " candidates above the preferred one, so needs " +
                                        std::to_string(above) + " shift prices");
    }
    instance.shift_prices.emplace_back(entry.second);
  }
  for (auto& [voter, entry] : sigma) instance.threshold_prices.emplace_back(entry.second);
  if (!sigma.empty() && swap.empty() && n > 0) {
    throw ParseError(sigma.begin()->second.first, "sigma needs swap prices as well");
  }
  instance.Validate();
  return instance;
}

std::string write_instance(const BriberyInstance& instance) {
  instance.Validate();
  const Election& e = instance.election;
  const CandidateSet& roster = e.candidates();
  const int m = roster.size();
  std::ostringstream out;
  out << "candidates";
  for (const auto& name : roster.names()) out << ' ' << name;
  out << "\npreferred " << roster.name(instance.preferred) << "\nrule "
      << instance.rule.ToString() << "\nbudget " << instance.budget << '\n';
  for (int i = 0; i < e.num_voters(); ++i) {
    out << "vote" << JoinNames(roster, e.vote(i).ranking());
    if (e.has_approvals()) out << " approve " << e.approvals(i);
    out << '\n';
  }
  for (std::size_t i = 0; i < instance.swap_prices.size(); ++i) {
    out << "swapprices " << i + 1 << '\n';
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        if (c > 0) out << ' ';
        out << (r == c ? std::string("-") : instance.swap_prices[i](r, c).ToString());
      }
      out << '\n';
    }
  }
  for (std::size_t i = 0; i < instance.shift_prices.size(); ++i) {
    out << "shiftprices " << i + 1;
    const auto& rho = instance.shift_prices[i].prices();
    for (std::size_t s = 1; s < rho.size(); ++s) out << ' ' << rho[s].ToString();
    out << '\n';
  }
  for (std::size_t i = 0; i < instance.threshold_prices.size(); ++i) {
    out << "sigma " << i + 1;
    for (const auto& [delta, cost] : instance.threshold_prices[i].prices()) {
      if (delta != 0) out << ' ' << delta << ':' << cost.ToString();
    }
    out << '\n';
  }
  return out.str();
}

std::string write_solution(const BriberySolution& solution,
                           const BriberyInstance& instance, std::string_view solver,
                           bool enforce_budget) {
  const CandidateSet& roster = instance.election.candidates();
  try {
    Election after = replay(instance, solution);
    Cost cost = recompute_cost(instance, solution);
    std::vector<Candidate> won = winners(after, instance.rule);
    if (cost != solution.total_cost) {
      throw ConsistencyError("recorded cost " + solution.total_cost.ToString() +
                             " but replay costs " + cost.ToString());
    }
    if (won != solution.winners) {
      throw ConsistencyError("recorded winners differ from the replayed ones");
    }
    if (!std::binary_search(won.begin(), won.end(), instance.preferred)) {
      throw ConsistencyError("preferred candidate loses after replay");
    }
    if (enforce_budget && (cost.forbidden() || cost.value() > instance.budget)) {
      throw ConsistencyError("solution exceeds the budget");
    }
  } catch (const ConsistencyError&) {
    throw;
  } catch (const BriberyError& e) {
    throw ConsistencyError(std::string("solution does not replay: ") + e.what());
  }
  std::ostringstream out;
  out << "solver " << solver << '\n';
  for (const UnitSwap& s : solution.swaps.swaps) {
    out << "swap " << s.voter + 1 << ' ' << roster.name(s.upper) << ' '
        << roster.name(s.lower) << '\n';
  }
  for (std::size_t i = 0; i < solution.shifts.size(); ++i) {
    if (solution.shifts[i] != 0) out << "shift " << i + 1 << ' ' << solution.shifts[i] << '\n';
  }
  for (std::size_t i = 0; i < solution.threshold_deltas.size(); ++i) {
    if (solution.threshold_deltas[i] != 0) {
      out << "threshold " << i + 1 << ' ' << solution.threshold_deltas[i] << '\n';
    }
  }
  out << "cost " << solution.total_cost.ToString() << '\n';
  out << "winners" << JoinNames(roster, solution.winners) << '\n';
  out << "replay ok\n";
  return out.str();
}

SolutionDocument parse_solution(std::string_view text, const BriberyInstance& instance) {
  const CandidateSet& roster = instance.election.candidates();
  const int n = instance.election.num_voters();
  SolutionDocument doc;
  if (instance.kind() == BriberyKind::kShift) doc.solution.shifts.assign(n, 0);
  if (instance.kind() == BriberyKind::kMixed) doc.solution.threshold_deltas.assign(n, 0);
  bool have_cost = false;
  for (const Line& line : Tokenize(text)) {
    const std::string& d = line.tokens[0];
    if (d == "solver") {
      ExpectArgs(line, 1);
      doc.solver = line.tokens[1];
    } else if (d == "swap") {
      ExpectArgs(line, 3);
      doc.solution.swaps.swaps.push_back(
          {ParseVoter(line.tokens[1], line.number, n),
           ParseCandidate(roster, line.tokens[2], line.number),
           ParseCandidate(roster, line.tokens[3], line.number)});
    } else if (d == "shift" || d == "threshold") {
      ExpectArgs(line, 2);
      auto& target = d == "shift" ? doc.solution.shifts : doc.solution.threshold_deltas;
      if (target.empty()) {
        throw ParseError(line.number, "'" + d + "' does not apply to this instance");
      }
      target[ParseVoter(line.tokens[1], line.number, n)] =
          static_cast<int>(ParseInt(line.tokens[2], line.number, d.c_str()));
    } else if (d == "cost") {
      ExpectArgs(line, 1);
      doc.solution.total_cost = ParseCost(line.tokens[1], line.number);
      have_cost = true;
    } else if (d == "winners") {
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        doc.solution.winners.push_back(ParseCandidate(roster, line.tokens[t], line.number));
      }
      std::sort(doc.solution.winners.begin(), doc.solution.winners.end());
    } else if (d == "replay") {
      continue;
    } else {
      throw ParseError(line.number, "unknown directive '" + d + "'");
    }
  }
  if (!have_cost) throw ParseError(0, "missing 'cost'");
  doc.solution.swaps.total_cost = Cost();
  for (const UnitSwap& s : doc.solution.swaps.swaps) {
    if (instance.swap_prices.empty()) break;
    doc.solution.swaps.total_cost += instance.swap_prices[s.voter](s.upper, s.lower);
  }
  return doc;
}

X3CInstance parse_x3c(std::string_view text) {
  X3CInstance x3c;
  bool have_header = false;
  for (const Line& line : Tokenize(text)) {
    const std::string& d = line.tokens[0];
    if (d == "x3c") {
      ExpectArgs(line, 1);
      if (have_header) throw ParseError(line.number, "duplicate 'x3c'");
      x3c.k = static_cast<int>(ParseInt(line.tokens[1], line.number, "K"));
      if (x3c.k < 1) throw ParseError(line.number, "K must be at least 1");
      have_header = true;
    } else if (d == "set") {
      ExpectArgs(line, 3);
      if (!have_header) throw ParseError(line.number, "'set' before 'x3c'");
      std::array<int, 3> set{};
      for (int t = 0; t < 3; ++t) {
        set[t] = static_cast<int>(ParseInt(line.tokens[t + 1], line.number, "element")) - 1;
      }
      X3CInstance probe{x3c.k, {set}};
      try {
        probe.Validate();
      } catch (const ParameterError& e) {
        throw ParseError(line.number, e.what());
      }
      x3c.sets.push_back(set);
    } else {
      throw ParseError(line.number, "unknown directive '" + d + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing 'x3c'");
  return x3c;
}

std::string write_x3c(const X3CInstance& x3c) {
  std::ostringstream out;
  out << "x3c " << x3c.k << '\n';
  for (const auto& set : x3c.sets) {
    out << "set " << set[0] + 1 << ' ' << set[1] + 1 << ' ' << set[2] + 1 << '\n';
  }
  return out.str();
}

BBInstance parse_bb(std::string_view text) {
  BBInstance bb;
  bool have_header = false;
  for (const Line& line : Tokenize(text)) {
    const std::string& d = line.tokens[0];
    if (d == "bb") {
      ExpectArgs(line, 2);
      if (have_header) throw ParseError(line.number, "duplicate 'bb'");
      bb.n = static_cast<int>(ParseInt(line.tokens[1], line.number, "N"));
      bb.k = static_cast<int>(ParseInt(line.tokens[2], line.number, "K"));
      if (bb.n < 1 || bb.k < 0 || bb.k > bb.n) {
        throw ParseError(line.number, "need N >= 1 and 0 <= K <= N");
      }
      have_header = true;
    } else if (d == "edge") {
      ExpectArgs(line, 2);
      if (!have_header) throw ParseError(line.number, "'edge' before 'bb'");
      int u = static_cast<int>(ParseInt(line.tokens[1], line.number, "vertex")) - 1;
      int w = static_cast<int>(ParseInt(line.tokens[2], line.number, "vertex")) - 1;
      if (u < 0 || u >= bb.n || w < 0 || w >= bb.n) {
        throw ParseError(line.number, "edge endpoint outside 1.." + std::to_string(bb.n));
      }
      if (!bb.has_edge(u, w)) bb.edges.emplace_back(u, w);
    } else {
      throw ParseError(line.number, "unknown directive '" + d + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing 'bb'");
  return bb;
}

std::string write_bb(const BBInstance& bb) {
  std::ostringstream out;
  out << "bb " << bb.n << ' ' << bb.k << '\n';
  for (auto [u, w] : bb.edges) out << "edge " << u + 1 << ' ' << w + 1 << '\n';
  return out.str();
}

PossibleWinnerInstance parse_possible_winner(std::string_view text) {
  RosterHeader header;
  std::vector<std::pair<std::size_t, std::vector<CandidatePair>>> partials;
  for (const Line& line : Tokenize(text)) {
    if (ParseHeaderLine(line, header)) continue;
    if (line.tokens[0] != "partial") {
      throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
    }
    if (!header.candidates) throw ParseError(line.number, "'partial' before 'candidates'");
    std::vector<CandidatePair> pairs;
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      std::vector<Candidate> chain;
      std::string_view rest = line.tokens[t];
      while (true) {
        auto gt = rest.find('>');
        chain.push_back(ParseCandidate(*header.candidates, std::string(rest.substr(0, gt)),
                                       line.number));
        if (gt == std::string_view::npos) break;
        rest = rest.substr(gt + 1);
      }
      for (std::size_t c = 0; c + 1 < chain.size(); ++c) pairs.emplace_back(chain[c], chain[c + 1]);
    }
    partials.emplace_back(line.number, std::move(pairs));
  }
  FinishHeader(header);
  PossibleWinnerInstance pw;
  pw.candidates = *header.candidates;
  pw.rule = *header.rule;
  pw.preferred = *header.preferred;
  for (const auto& [number, pairs] : partials) {
    try {
      pw.votes.emplace_back(pw.candidates.size(), pairs);
    } catch (const ParameterError& e) {
      throw ParseError(number, e.what());
    }
  }
  return pw;
}

std::string write_possible_winner(const PossibleWinnerInstance& pw) {
  std::ostringstream out;
  out << "candidates";
  for (const auto& name : pw.candidates.names()) out << ' ' << name;
  out << "\npreferred " << pw.candidates.name(pw.preferred) << "\nrule "
      << pw.rule.ToString() << '\n';
  for (const auto& partial : pw.votes) {
    out << "partial";
    for (auto [a, b] : partial.pairs()) {
      out << ' ' << pw.candidates.name(a) << '>' << pw.candidates.name(b);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace swapbribery
