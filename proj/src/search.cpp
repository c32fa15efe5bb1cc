#include "diamondlab/search.hpp"

#include <algorithm>
#include <numeric>

#include "diamondlab/error.hpp"
#include "diamondlab/parallel.hpp"

namespace diamondlab {

namespace {

constexpr int kSplitDepth = 6;

std::vector<ElementSet> sets_in_search_order(int n, bool skip_empty) {
  std::vector<ElementSet> out;
  for (std::uint32_t m = skip_empty ? 1 : 0; m < (std::uint32_t{1} << n); ++m) out.emplace_back(m);
  std::stable_sort(out.begin(), out.end(), size_then_bits_less);
  return out;
}

// Policies describe one search problem: candidate order, integer weights, an
// incremental feasibility test and an upper bound on the weight still
// obtainable from candidates [from, size).

class PatternFreePolicy {
 public:
  PatternFreePolicy(int n, const PatternPoset& pattern)
      : n_(n), pattern_(&pattern), candidates_(sets_in_search_order(n, false)) {}

  int size() const { return static_cast<int>(candidates_.size()); }
  std::uint64_t weight(int) const { return 1; }
  std::uint64_t scale() const { return 1; }
  ElementSet candidate(int i) const { return candidates_[i]; }

  bool feasible(int i) const {
    std::vector<ElementSet> sets = chosen_;
    sets.push_back(candidates_[i]);
    return !contains_pattern(Family(n_, std::move(sets)), *pattern_);
  }
  void push(int i) { chosen_.push_back(candidates_[i]); }
  void pop(int) { chosen_.pop_back(); }
  std::uint64_t bound(int from) const { return static_cast<std::uint64_t>(size() - from); }
  std::vector<ElementSet> base() const { return {}; }
  std::uint64_t base_weight() const { return 0; }

 private:
  int n_;
  const PatternPoset* pattern_;
  std::vector<ElementSet> candidates_;
  std::vector<ElementSet> chosen_;
};

// Diamond-free families containing the empty set. With the empty set present, a
// diamond exists iff some member has two nonempty members strictly below it, so
// each candidate tracks how many chosen members lie strictly below it.
class DiamondLubellPolicy {
 public:
  explicit DiamondLubellPolicy(int n) : candidates_(sets_in_search_order(n, true)) {
    Integer l = 1;
    for (int k = 0; k <= n; ++k) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), binomial(n, k).get_mpz_t());
    scale_ = l.get_ui();
    for (auto s : candidates_) weights_.push_back(scale_ / binomial(n, s.size()).get_ui());
    below_.assign(candidates_.size(), 0);
  }

  int size() const { return static_cast<int>(candidates_.size()); }
  std::uint64_t weight(int i) const { return weights_[i]; }
  std::uint64_t scale() const { return scale_; }
  ElementSet candidate(int i) const { return candidates_[i]; }

  bool feasible(int i) const { return below_[i] <= 1; }
  void push(int i) { adjust(i, +1); }
  void pop(int i) { adjust(i, -1); }

  std::uint64_t bound(int from) const {
    std::uint64_t total = 0;
    for (int j = from; j < size(); ++j)
      if (below_[j] <= 1) total += weights_[j];
    return total;
  }
  std::vector<ElementSet> base() const { return {ElementSet(0)}; }
  std::uint64_t base_weight() const { return scale_; }

 private:
  void adjust(int i, int delta) {
    const ElementSet s = candidates_[i];
    for (int j = i + 1; j < size(); ++j)
      if (s.proper_subset_of(candidates_[j])) below_[j] += delta;
  }

  std::vector<ElementSet> candidates_;
  std::vector<std::uint64_t> weights_;
  std::vector<int> below_;
  std::uint64_t scale_ = 1;
};

struct Incumbent {
  std::uint64_t value = 0;
  std::vector<int> chosen;
};

struct SubtreeOutcome {
  Incumbent best;
  bool improved = false;
  std::uint64_t nodes = 0;
  bool complete = true;
};

template <class Policy>
class Subtree {
 public:
  Subtree(Policy policy, std::uint64_t budget, Incumbent seed)
      : policy_(std::move(policy)), budget_(budget) {
    out_.best = std::move(seed);
  }

  SubtreeOutcome run(const std::vector<int>& prefix, int start) {
    value_ = policy_.base_weight();
    for (int i : prefix) {
      policy_.push(i);
      chosen_.push_back(i);
      value_ += policy_.weight(i);
    }
    dfs(start);
    return std::move(out_);
  }

 private:
  void dfs(int i) {
    if (++out_.nodes > budget_) {
      out_.complete = false;
      return;
    }
    if (value_ > out_.best.value) {
      out_.best.value = value_;
      out_.best.chosen = chosen_;
      out_.improved = true;
    }
    if (i == policy_.size()) return;
    if (value_ + policy_.bound(i) <= out_.best.value) return;
    if (policy_.feasible(i)) {
      policy_.push(i);
      chosen_.push_back(i);
      value_ += policy_.weight(i);
      dfs(i + 1);
      value_ -= policy_.weight(i);
      chosen_.pop_back();
      policy_.pop(i);
      if (!out_.complete) return;
    }
    dfs(i + 1);
  }

  Policy policy_;
  std::uint64_t budget_;
  std::vector<int> chosen_;
  std::uint64_t value_ = 0;
  SubtreeOutcome out_;
};

// Feasible include/exclude prefixes over the first `depth` candidates, in
// include-first order.
template <class Policy>
void collect_prefixes(Policy& policy, int i, int depth, std::vector<int>& current,
                      std::vector<std::vector<int>>& out, std::uint64_t& nodes) {
  ++nodes;
  if (i == depth) {
    out.push_back(current);
    return;
  }
  if (policy.feasible(i)) {
    policy.push(i);
    current.push_back(i);
    collect_prefixes(policy, i + 1, depth, current, out, nodes);
    current.pop_back();
    policy.pop(i);
  }
  collect_prefixes(policy, i + 1, depth, current, out, nodes);
}

template <class Policy>
SearchResult run_search(int n, const Policy& prototype, Incumbent seed, const SearchConfig& config) {
  const int depth = std::min(kSplitDepth, prototype.size());
  std::vector<std::vector<int>> prefixes;
  std::uint64_t nodes = 0;
  {
    Policy scratch = prototype;
    std::vector<int> current;
    collect_prefixes(scratch, 0, depth, current, prefixes, nodes);
  }
  const std::uint64_t per_subtree =
      config.exhaustive ? UINT64_MAX : std::max<std::uint64_t>(1, config.node_budget / prefixes.size());

  std::vector<SubtreeOutcome> outcomes(prefixes.size());
  parallel_for(prefixes.size(), config.threads, [&](std::size_t k) {
    outcomes[k] = Subtree<Policy>(prototype, per_subtree, seed).run(prefixes[k], depth);
  });

  Incumbent best = std::move(seed);
  bool complete = true;
  for (auto& o : outcomes) {
    nodes += o.nodes;
    complete = complete && o.complete;
    if (o.improved && o.best.value > best.value) best = std::move(o.best);
  }

  std::vector<ElementSet> sets = prototype.base();
  for (int i : best.chosen) sets.push_back(prototype.candidate(i));
  SearchResult result;
  result.objective = Rational(Integer(static_cast<unsigned long>(best.value)), Integer(static_cast<unsigned long>(prototype.scale())));
  result.objective.canonicalize();
  result.witness = Family(n, std::move(sets));
  result.nodes_explored = nodes;
  result.exhaustive = complete;
  return result;
}

}  // namespace

SearchResult la(int n, const PatternPoset& pattern, const SearchConfig& config) {
  if (n < 0 || n > 6) throw Error(ErrorCode::BadParameter, "la search supports 0 <= n <= 6");
  PatternFreePolicy policy(n, pattern);
  return run_search(n, policy, Incumbent{}, config);
}

SearchResult lubell_star(int n, const SearchConfig& config) {
  if (n < 0 || n > 6) throw Error(ErrorCode::BadParameter, "lubell_star search supports 0 <= n <= 6");
  DiamondLubellPolicy policy(n);
  // Seed: the empty set plus one middle layer (value 2 for n >= 2).
  Incumbent seed;
  seed.value = policy.base_weight();
  for (int i = 0; i < policy.size(); ++i)
    if (policy.candidate(i).size() == n / 2) {
      seed.chosen.push_back(i);
      seed.value += policy.weight(i);
    }
  return run_search(n, policy, seed, config);
}

Rational diamond_lubell_construction_value(int n) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "construction value needs n >= 2");
  Rational q(Integer(n * n / 4), Integer(n * (n - 1)));
  q.canonicalize();
  return 2 + q;
}

}  // namespace diamondlab
