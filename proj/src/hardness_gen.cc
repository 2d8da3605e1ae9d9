#include "swapbribery/hardness_gen.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "internal.h"
#include "swapbribery/errors.h"

namespace swapbribery {

void X3CInstance::Validate() const {
  if (k < 1) throw ParameterError("X3C needs K >= 1");
  for (const auto& set : sets) {
    for (int x : set) {
      if (x < 0 || x >= ground_size()) {
        throw ParameterError("X3C set element " + std::to_string(x + 1) +
                             " outside the ground set 1.." +
                             std::to_string(ground_size()));
      }
    }
    if (set[0] == set[1] || set[0] == set[2] || set[1] == set[2]) {
      throw ParameterError("X3C set does not have three distinct elements");
    }
  }
}

void BBInstance::Validate() const {
  if (n < 1) throw ParameterError("biclique instance needs N >= 1");
  if (k < 0 || k > n) throw ParameterError("biclique instance needs 0 <= K <= N");
  for (auto [u, w] : edges) {
    if (u < 0 || u >= n || w < 0 || w >= n) {
      throw ParameterError("biclique edge endpoint out of range");
    }
  }
}

bool BBInstance::has_edge(int u, int w) const {
  return std::find(edges.begin(), edges.end(), std::make_pair(u, w)) != edges.end();
}

bool x3c_check(const X3CInstance& x3c, std::int64_t max_subsets) {
  x3c.Validate();
  const int m = static_cast<int>(x3c.sets.size());
  if (internal::Binomial(m, x3c.k) > max_subsets) {
    throw CapacityError("X3C check over C(" + std::to_string(m) + ", " +
                        std::to_string(x3c.k) + ") subfamilies exceeds the cap");
  }
  // Branch on the smallest uncovered element; every cover uses exactly one
  // set containing it.
  std::vector<bool> covered(x3c.ground_size(), false);
  std::function<bool(int)> search = [&](int remaining) {
    auto first = std::find(covered.begin(), covered.end(), false);
    if (first == covered.end()) return true;
    if (remaining == 0) return false;
    const int element = static_cast<int>(first - covered.begin());
    for (const auto& set : x3c.sets) {
      if (std::find(set.begin(), set.end(), element) == set.end()) continue;
      if (covered[set[0]] || covered[set[1]] || covered[set[2]]) continue;
      for (int x : set) covered[x] = true;
      bool found = search(remaining - 1);
      for (int x : set) covered[x] = false;
      if (found) return true;
    }
    return false;
  };
  return search(x3c.k);
}

bool balanced_biclique_check(const BBInstance& bb, std::int64_t max_subsets) {
  bb.Validate();
  if (internal::Binomial(bb.n, bb.k) > max_subsets) {
    throw CapacityError("biclique check exceeds the subset cap");
  }
  std::vector<bool> pick(bb.n, false);
  std::fill(pick.begin(), pick.begin() + bb.k, true);
  do {
    int common = 0;
    for (int w = 0; w < bb.n; ++w) {
      bool all = true;
      for (int u = 0; u < bb.n && all; ++u) {
        if (pick[u] && !bb.has_edge(u, w)) all = false;
      }
      if (all) ++common;
    }
    if (common >= bb.k) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

namespace {

// Roster and vote assembly by candidate index.
class Builder {
 public:
  Candidate Add(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<Candidate>(names_.size() - 1);
  }
  std::vector<Candidate> AddGroup(const std::string& prefix, int count) {
    std::vector<Candidate> out;
    for (int i = 1; i <= count; ++i) out.push_back(Add(prefix + std::to_string(i)));
    return out;
  }
  int size() const { return static_cast<int>(names_.size()); }
  CandidateSet roster() const { return CandidateSet(names_); }

 private:
  std::vector<std::string> names_;
};

// Concatenates candidate blocks into one vote.
Preference Join(std::initializer_list<std::vector<Candidate>> blocks) {
  std::vector<Candidate> ranking;
  for (const auto& block : blocks) ranking.insert(ranking.end(), block.begin(), block.end());
  return Preference(std::move(ranking));
}

std::vector<Candidate> Members(const std::array<int, 3>& set,
                               const std::vector<Candidate>& ground) {
  std::vector<Candidate> out;
  std::vector<int> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  for (int x : sorted) out.push_back(ground[x]);
  return out;
}

std::vector<Candidate> Without(const std::vector<Candidate>& all,
                               const std::vector<Candidate>& removed) {
  std::vector<Candidate> out;
  for (Candidate c : all) {
    if (std::find(removed.begin(), removed.end(), c) == removed.end()) out.push_back(c);
  }
  return out;
}

std::vector<Candidate> Reversed(std::vector<Candidate> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

void Expect(bool condition, const std::string& what) {
  if (!condition) throw ConsistencyError("generated instance violates: " + what);
}

std::optional<bool> LabelOf(const X3CInstance& x3c) {
  try {
    return x3c_check(x3c);
  } catch (const CapacityError&) {
    return std::nullopt;
  }
}

}  // namespace

ReductionInstance gen_x3c_3approval(const X3CInstance& x3c, int k) {
  x3c.Validate();
  if (x3c.k < 2) throw ParameterError("the k-approval construction needs K >= 2");
  if (k < 3) throw ParameterError("the k-approval construction needs k >= 3");
  const int num_sets = static_cast<int>(x3c.sets.size());
  Builder builder;
  const Candidate p = builder.Add("p");
  const std::vector<Candidate> ground = builder.AddGroup("b", x3c.ground_size());
  const std::vector<Candidate> set_dummies = builder.AddGroup("d", 3 * num_sets);

  std::vector<int> occurrences(x3c.ground_size(), 0);
  for (const auto& set : x3c.sets) {
    for (int x : set) ++occurrences[x];
  }
  const int top = std::max(1, *std::max_element(occurrences.begin(), occurrences.end()));

  // Top blocks of the padding votes: T for p, T + 1 - occ(b) for each b.
  std::vector<Candidate> padding_heads(top, p);
  for (int x = 0; x < x3c.ground_size(); ++x) {
    for (int r = 0; r < top + 1 - occurrences[x]; ++r) padding_heads.push_back(ground[x]);
  }
  const int num_votes = num_sets + static_cast<int>(padding_heads.size());
  const std::vector<Candidate> fresh =
      builder.AddGroup("f", 2 * static_cast<int>(padding_heads.size()));
  const std::vector<Candidate> prefix = builder.AddGroup("g", (k - 3) * num_votes);
  const int m = builder.size();

  // Everything except p and the given candidates, in index order.
  auto rest = [&](const std::vector<Candidate>& used) {
    std::vector<Candidate> out;
    for (Candidate c = 0; c < m; ++c) {
      if (c != p && std::find(used.begin(), used.end(), c) == used.end()) out.push_back(c);
    }
    return out;
  };

  std::vector<Preference> votes;
  std::vector<SwapPriceFn> prices;
  int prefix_used = 0;
  auto take_prefix = [&]() {
    std::vector<Candidate> out(prefix.begin() + prefix_used,
                               prefix.begin() + prefix_used + (k - 3));
    prefix_used += k - 3;
    return out;
  };
  auto forbid_prefix = [&](SwapPriceFn& price, const std::vector<Candidate>& pre) {
    for (Candidate g : pre) {
      for (Candidate c = 0; c < m; ++c) {
        if (c == g) continue;
        price.set(g, c, Cost::Forbidden());
        price.set(c, g, Cost::Forbidden());
      }
    }
  };

  for (int j = 0; j < num_sets; ++j) {
    const std::vector<Candidate> pre = take_prefix();
    const std::vector<Candidate> bs = Members(x3c.sets[j], ground);
    const std::vector<Candidate> ds = {set_dummies[3 * j], set_dummies[3 * j + 1],
                                       set_dummies[3 * j + 2]};
    std::vector<Candidate> used = pre;
    used.insert(used.end(), bs.begin(), bs.end());
    used.insert(used.end(), ds.begin(), ds.end());
    votes.push_back(Join({pre, bs, ds, rest(used), {p}}));
    SwapPriceFn price(m, Cost(2));
    for (int a = 0; a < 3; ++a) {
      for (int l = 0; l < 3; ++l) price.set(bs[a], ds[l], Cost::Zero());
    }
    price.set(bs[2], ds[0], Cost(1));
    forbid_prefix(price, pre);
    prices.push_back(std::move(price));
  }
  for (std::size_t r = 0; r < padding_heads.size(); ++r) {
    const std::vector<Candidate> pre = take_prefix();
    const Candidate head = padding_heads[r];
    std::vector<Candidate> used = pre;
    used.push_back(head);
    used.push_back(fresh[2 * r]);
    used.push_back(fresh[2 * r + 1]);
    if (head == p) {
      votes.push_back(Join({pre, {p, fresh[2 * r], fresh[2 * r + 1]}, rest(used)}));
    } else {
      votes.push_back(Join({pre, {head, fresh[2 * r], fresh[2 * r + 1]}, rest(used), {p}}));
    }
    prices.emplace_back(m, Cost::Forbidden());
  }

  ReductionInstance out;
  out.reduction = "x3c-3approval";
  out.instance.election = Election(builder.roster(), std::move(votes));
  out.instance.rule = Rule::KApproval(k);
  out.instance.preferred = p;
  out.instance.swap_prices = std::move(prices);
  out.instance.budget = x3c.k;
  out.instance.Validate();
  out.target_budget = x3c.k;
  out.expected_feasible = LabelOf(x3c);

  const auto points = scores(out.instance.election, out.instance.rule);
  Expect(points[p] == ScoreValue(top), "p has T points");
  for (Candidate b : ground) Expect(points[b] == ScoreValue(top + 1), "every b has T + 1 points");
  for (Candidate c = 0; c < m; ++c) {
    if (c != p && std::find(ground.begin(), ground.end(), c) == ground.end()) {
      Expect(points[c] <= ScoreValue(1), "dummies have at most one point");
    }
  }
  return out;
}

ReductionInstance gen_x3c_borda_shift(const X3CInstance& x3c) {
  x3c.Validate();
  const int num_sets = static_cast<int>(x3c.sets.size());
  const int kk = x3c.k;
  Builder builder;
  const Candidate p = builder.Add("p");
  const std::vector<Candidate> ground = builder.AddGroup("b", x3c.ground_size());

  std::vector<Preference> votes;
  for (const auto& set : x3c.sets) {
    const std::vector<Candidate> bs = Members(set, ground);
    votes.push_back(Join({bs, {p}, Without(ground, bs)}));
  }
  for (int i = 0; i < num_sets; ++i) votes.push_back(Join({Reversed(votes[i].ranking())}));
  votes.push_back(Join({ground, {p}}));
  votes.push_back(Join({Reversed(ground), {p}}));

  std::vector<ShiftPriceFn> rho;
  for (int i = 0; i < static_cast<int>(votes.size()); ++i) {
    const int headroom = votes[i].position_of(p);
    std::vector<Cost> prices = {Cost::Zero()};
    for (int s = 1; s <= headroom; ++s) prices.push_back(Cost(i < num_sets ? 1 : kk + 1));
    rho.emplace_back(std::move(prices));
  }

  ReductionInstance out;
  out.reduction = "x3c-borda-shift";
  out.instance.election = Election(builder.roster(), std::move(votes));
  out.instance.rule = Rule::Borda();
  out.instance.preferred = p;
  out.instance.shift_prices = std::move(rho);
  out.instance.budget = kk;
  out.instance.Validate();
  out.target_budget = kk;
  out.expected_feasible = LabelOf(x3c);

  const std::int64_t base = static_cast<std::int64_t>(3) * kk * num_sets;
  const auto points = scores(out.instance.election, out.instance.rule);
  Expect(points[p] == ScoreValue(base), "p scores L");
  for (Candidate b : ground) {
    Expect(points[b] == ScoreValue(base + 3 * kk + 1), "every b scores L + 3K + 1");
  }
  return out;
}

ReductionInstance gen_bb_kapproval(const BBInstance& bb) {
  bb.Validate();
  const int nn = bb.n;
  Builder builder;
  const Candidate p = builder.Add("p");
  const std::vector<Candidate> us = builder.AddGroup("u", nn);
  const std::vector<Candidate> ws = builder.AddGroup("w", nn);
  const int m = builder.size();

  SwapPriceFn price(m, Cost::Forbidden());
  for (int i = 0; i < nn; ++i) {
    for (int j = 0; j < nn; ++j) {
      price.set(us[i], us[j], Cost::Zero());
      price.set(ws[i], ws[j], Cost::Zero());
      price.set(us[i], ws[j], bb.has_edge(i, j) ? Cost::Zero() : Cost(nn - bb.k + 1));
    }
    price.set(ws[i], p, Cost(1));
    price.set(us[i], p, Cost::Zero());
  }

  ReductionInstance out;
  out.reduction = "bb-kapproval";
  out.instance.election = Election(builder.roster(), {Join({us, ws, {p}})});
  out.instance.rule = Rule::KApproval(nn + 1);
  out.instance.preferred = p;
  out.instance.swap_prices = {price};
  out.instance.budget = nn - bb.k;
  out.instance.Validate();
  out.target_budget = nn - bb.k;
  try {
    out.expected_feasible = balanced_biclique_check(bb);
  } catch (const CapacityError&) {
    out.expected_feasible = std::nullopt;
  }
  return out;
}

ReductionInstance gen_x3c_maximin_shift(const X3CInstance& x3c) {
  x3c.Validate();
  const int num_sets = static_cast<int>(x3c.sets.size());
  const int kk = x3c.k;
  const int ll = kk;
  Builder builder;
  const Candidate p = builder.Add("p");
  const Candidate t = builder.Add("t");
  const Candidate c = builder.Add("c");
  const std::vector<Candidate> ground = builder.AddGroup("b", x3c.ground_size());

  std::vector<Preference> votes;
  for (const auto& set : x3c.sets) {
    const std::vector<Candidate> bs = Members(set, ground);
    votes.push_back(Join({{t}, bs, {p}, Without(ground, bs), {c}}));
  }
  for (int i = 0; i < num_sets; ++i) votes.push_back(Join({Reversed(votes[i].ranking())}));
  for (int r = 0; r < ll; ++r) votes.push_back(Join({{p, c, t}, ground}));
  for (int r = 0; r < kk - 1; ++r) votes.push_back(Join({{t, p, c}, ground}));
  votes.push_back(Join({{t}, ground, {p, c}}));
  for (int r = 0; r < ll + kk; ++r) votes.push_back(Join({{c, t}, ground, {p}}));

  std::vector<ShiftPriceFn> rho;
  for (int i = 0; i < static_cast<int>(votes.size()); ++i) {
    const int headroom = votes[i].position_of(p);
    std::vector<Cost> prices = {Cost::Zero()};
    for (int s = 1; s <= headroom; ++s) {
      prices.push_back(i < num_sets ? Cost(1) : Cost::Forbidden());
    }
    rho.emplace_back(std::move(prices));
  }

  ReductionInstance out;
  out.reduction = "x3c-maximin-shift";
  out.instance.election = Election(builder.roster(), std::move(votes));
  out.instance.rule = Rule::Maximin();
  out.instance.preferred = p;
  out.instance.shift_prices = std::move(rho);
  out.instance.budget = kk;
  out.instance.Validate();
  out.target_budget = kk;
  out.expected_feasible = LabelOf(x3c);

  // Head-to-head counts minus M.
  const int m = builder.size();
  const auto wins = pairwise_wins(out.instance.election);
  auto net = [&](Candidate a, Candidate b) { return wins[a * m + b] - num_sets; };
  Expect(net(p, t) == ll && net(p, c) == ll + kk && net(t, p) == ll + 2 * kk &&
             net(t, c) == kk && net(c, p) == ll + kk && net(c, t) == 2 * ll + kk,
         "head-to-head counts among p, t, c");
  for (Candidate b : ground) {
    Expect(net(p, b) == ll + kk - 1 && net(t, b) == 2 * ll + 2 * kk &&
               net(c, b) == 2 * ll + 2 * kk - 1 && net(b, p) == ll + kk + 1 &&
               net(b, t) == 0 && net(b, c) == 1,
           "head-to-head counts against members of B");
    for (Candidate other : ground) {
      if (other != b) Expect(net(b, other) <= 2 * ll + 2 * kk, "counts within B");
    }
  }
  const auto points = scores(out.instance.election, out.instance.rule);
  Expect(points[p] == ScoreValue(num_sets + ll), "maximin score of p");
  Expect(points[t] == ScoreValue(num_sets + kk), "maximin score of t");
  Expect(points[c] == ScoreValue(num_sets + kk + ll), "maximin score of c");
  for (Candidate b : ground) Expect(points[b] <= ScoreValue(num_sets), "maximin scores of B");
  return out;
}

ReductionInstance gen_x3c_spav_mixed(const X3CInstance& x3c) {
  x3c.Validate();
  const int num_sets = static_cast<int>(x3c.sets.size());
  const int kk = x3c.k;
  Builder builder;
  const Candidate p = builder.Add("p");
  const Candidate e = builder.Add("e");
  const std::vector<Candidate> ground = builder.AddGroup("b", x3c.ground_size());
  const std::vector<Candidate> pads = builder.AddGroup("t", num_sets);
  const int m = builder.size();

  std::vector<Preference> votes;
  std::vector<int> thresholds;
  for (int i = 0; i < num_sets; ++i) {
    const std::vector<Candidate> bs = Members(x3c.sets[i], ground);
    votes.push_back(
        Join({{pads[i]}, bs, {p}, Without(ground, bs), Without(pads, {pads[i]}), {e}}));
    thresholds.push_back(1);
  }
  for (int r = 0; r < kk + 1; ++r) {
    votes.push_back(Join({{e}, ground, pads, {p}}));
    thresholds.push_back(1);
  }
  votes.push_back(Join({{p}, ground, pads, {e}}));
  thresholds.push_back(1);
  for (int r = 0; r < kk; ++r) {
    votes.push_back(Join({ground, pads, {e, p}}));
    thresholds.push_back(3 * kk);
  }

  ReductionInstance out;
  out.reduction = "x3c-spav";
  const int n = static_cast<int>(votes.size());
  for (int i = 0; i < n; ++i) {
    out.instance.swap_prices.emplace_back(m, Cost::Forbidden());
    out.instance.threshold_prices.push_back(
        ThresholdPriceFn::AbsoluteValue(1 - thresholds[i], m - 1 - thresholds[i]));
  }
  out.instance.election = Election(builder.roster(), std::move(votes), std::move(thresholds));
  out.instance.rule = Rule::Spav();
  out.instance.preferred = p;
  out.instance.budget = 3 * kk;
  out.instance.Validate();
  out.target_budget = 3 * kk;
  out.expected_feasible = LabelOf(x3c);

  const auto points = scores(out.instance.election, out.instance.rule);
  Expect(points[p] == ScoreValue(1), "p has one approval");
  Expect(points[e] == ScoreValue(kk + 1), "e has K + 1 approvals");
  for (Candidate b : ground) Expect(points[b] == ScoreValue(kk), "every b has K approvals");
  for (Candidate x : pads) Expect(points[x] == ScoreValue(1), "every t has one approval");
  return out;
}

X3CInstance random_x3c(int k, int num_sets, std::uint64_t seed, bool plant_cover) {
  if (k < 1 || num_sets < 0) throw ParameterError("random X3C needs K >= 1 and M >= 0");
  std::mt19937_64 rng(seed);
  X3CInstance x3c;
  x3c.k = k;
  const int ground = 3 * k;
  if (plant_cover) {
    std::vector<int> perm(ground);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < k && static_cast<int>(x3c.sets.size()) < num_sets; ++i) {
      x3c.sets.push_back({perm[3 * i], perm[3 * i + 1], perm[3 * i + 2]});
    }
  }
  while (static_cast<int>(x3c.sets.size()) < num_sets) {
    std::vector<int> perm(ground);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    x3c.sets.push_back({perm[0], perm[1], perm[2]});
  }
  std::shuffle(x3c.sets.begin(), x3c.sets.end(), rng);
  for (auto& set : x3c.sets) std::sort(set.begin(), set.end());
  return x3c;
}

BBInstance random_bb(int n, int k, double edge_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  BBInstance bb;
  bb.n = n;
  bb.k = k;
  for (int u = 0; u < n; ++u) {
    for (int w = 0; w < n; ++w) {
      if (coin(rng)) bb.edges.emplace_back(u, w);
    }
  }
  bb.Validate();
  return bb;
}

}  // namespace swapbribery
