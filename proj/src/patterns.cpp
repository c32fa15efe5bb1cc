#include "diamondlab/patterns.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "diamondlab/error.hpp"

namespace diamondlab {

PatternPoset::PatternPoset(int size, const std::vector<std::pair<int, int>>& relations, std::string name)
    : size_(size), name_(std::move(name)) {
  if (size < 1 || size > kMaxPatternSize)
    throw Error(ErrorCode::BadParameter, "pattern size must be in [1, 8], got " + std::to_string(size));
  for (auto [i, j] : relations) {
    if (i < 0 || j < 0 || i >= size || j >= size) throw Error(ErrorCode::BadParameter, "relation index out of range");
    if (i == j) throw Error(ErrorCode::BadParameter, "relation is not irreflexive");
    below_[j] |= static_cast<std::uint8_t>(1u << i);
  }
  // Warshall closure on the "below" masks.
  for (int k = 0; k < size_; ++k)
    for (int j = 0; j < size_; ++j)
      if ((below_[j] >> k) & 1u) below_[j] |= below_[k];
  for (int j = 0; j < size_; ++j)
    if ((below_[j] >> j) & 1u) throw Error(ErrorCode::BadParameter, "relations contain a cycle");
}

int PatternPoset::relation_count() const {
  int c = 0;
  for (int j = 0; j < size_; ++j) c += std::popcount(static_cast<unsigned>(below_[j]));
  return c;
}

int PatternPoset::depth_below(int j) const {
  int best = 0;
  for (int i = 0; i < size_; ++i)
    if (less(i, j)) best = std::max(best, depth_below(i) + 1);
  return best;
}

int PatternPoset::depth_above(int j) const {
  int best = 0;
  for (int k = 0; k < size_; ++k)
    if (less(j, k)) best = std::max(best, depth_above(k) + 1);
  return best;
}

PatternPoset make_pattern(PatternKind kind, int param) {
  std::vector<std::pair<int, int>> rel;
  switch (kind) {
    case PatternKind::Diamond:
      return PatternPoset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, "diamond");
    case PatternKind::Chain:
      if (param < 1 || param > kMaxPatternSize) throw Error(ErrorCode::BadParameter, "chain length must be in [1, 8]");
      for (int i = 0; i + 1 < param; ++i) rel.emplace_back(i, i + 1);
      return PatternPoset(param, rel, "P" + std::to_string(param));
    case PatternKind::Fork:
      if (param < 2 || param + 1 > kMaxPatternSize) throw Error(ErrorCode::BadParameter, "fork width must be in [2, 7]");
      for (int b = 1; b <= param; ++b) rel.emplace_back(0, b);
      return PatternPoset(param + 1, rel, "V" + std::to_string(param));
    case PatternKind::KDiamond:
      if (param < 1 || param + 2 > kMaxPatternSize) throw Error(ErrorCode::BadParameter, "k-diamond width must be in [1, 6]");
      for (int b = 1; b <= param; ++b) {
        rel.emplace_back(0, b);
        rel.emplace_back(b, param + 1);
      }
      return PatternPoset(param + 2, rel, "D" + std::to_string(param));
  }
  throw Error(ErrorCode::BadParameter, "unknown pattern kind");
}

PatternPoset parse_pattern(const std::string& literal) {
  if (literal == "diamond") return make_pattern(PatternKind::Diamond);
  if (literal.size() >= 2) {
    const std::string digits = literal.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) || digits.size() > 2)
      throw Error(ErrorCode::BadParameter, "bad pattern literal '" + literal + "'");
    int p = std::stoi(digits);
    switch (literal[0]) {
      case 'P': return make_pattern(PatternKind::Chain, p);
      case 'V': return make_pattern(PatternKind::Fork, p);
      case 'D': return make_pattern(PatternKind::KDiamond, p);
      default: break;
    }
  }
  throw Error(ErrorCode::BadParameter, "bad pattern literal '" + literal + "' (expected diamond, P<k>, V<r>, D<k>)");
}

namespace {

class Matcher {
 public:
  Matcher(const Family& family, const PatternPoset& pattern)
      : family_(family), pattern_(pattern), n_(family.universe()) {
    // Family members by size; pattern elements in a linear extension (fewer
    // predecessors first).
    by_size_.resize(family.size());
    std::iota(by_size_.begin(), by_size_.end(), std::size_t{0});
    const auto& m = family.members();
    std::stable_sort(by_size_.begin(), by_size_.end(),
                     [&](std::size_t a, std::size_t b) { return m[a].size() < m[b].size(); });
    order_.resize(pattern.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return std::popcount(static_cast<unsigned>(pattern.below_mask(a))) <
             std::popcount(static_cast<unsigned>(pattern.below_mask(b)));
    });
    for (int j = 0; j < pattern.size(); ++j) {
      min_size_.push_back(pattern.depth_below(j));
      max_size_.push_back(n_ - pattern.depth_above(j));
    }
    image_.assign(pattern.size(), kUnset);
    used_.assign(family.size(), 0);
  }

  std::optional<PatternWitness> run() {
    if (pattern_.size() > static_cast<int>(family_.size())) return std::nullopt;
    if (place(0)) return image_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool place(int depth) {
    if (depth == pattern_.size()) return true;
    const int j = order_[depth];
    const auto& m = family_.members();
    for (std::size_t idx : by_size_) {
      if (used_[idx]) continue;
      const ElementSet cand = m[idx];
      const int sz = cand.size();
      if (sz < min_size_[j]) continue;
      if (sz > max_size_[j]) break;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int i = order_[d];
        const ElementSet placed = m[image_[i]];
        if (pattern_.less(i, j) && !placed.proper_subset_of(cand)) ok = false;
        if (pattern_.less(j, i) && !cand.proper_subset_of(placed)) ok = false;
      }
      if (!ok) continue;
      used_[idx] = 1;
      image_[j] = idx;
      if (place(depth + 1)) return true;
      used_[idx] = 0;
      image_[j] = kUnset;
    }
    return false;
  }

  const Family& family_;
  const PatternPoset& pattern_;
  int n_;
  std::vector<std::size_t> by_size_;
  std::vector<int> order_;
  std::vector<int> min_size_, max_size_;
  PatternWitness image_;
  std::vector<std::uint8_t> used_;
};

}  // namespace

std::optional<PatternWitness> find_pattern(const Family& family, const PatternPoset& pattern) {
  return Matcher(family, pattern).run();
}

bool is_diamond_free(const Family& family) {
  const auto sets = family.by_size();
  std::vector<ElementSet> up;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    up.clear();
    for (std::size_t b = a + 1; b < sets.size(); ++b)
      if (sets[a].proper_subset_of(sets[b])) up.push_back(sets[b]);
    // `up` is ordered by size, so everything strictly below up[d] precedes it.
    for (std::size_t d = 0; d < up.size(); ++d) {
      int between = 0;
      for (std::size_t s = 0; s < d && between < 2; ++s)
        if (up[s].proper_subset_of(up[d])) ++between;
      if (between >= 2) return false;
    }
  }
  return true;
}

bool is_diamond_free_with_empty(const Family& family) {
  if (!family.contains_empty_set()) throw Error(ErrorCode::EmptySetMissing, "family does not contain the empty set");
  const auto& m = family.members();
  for (std::size_t d = 1; d < m.size(); ++d) {
    int below = 0;
    for (std::size_t s = 1; s < m.size() && below < 2; ++s)
      if (m[s].proper_subset_of(m[d])) ++below;
    if (below >= 2) return false;
  }
  return true;
}

int e_value(const PatternPoset& pattern, int n) {
  if (n < 0 || n > 12) throw Error(ErrorCode::BadParameter, "e_value requires 0 <= n <= 12");
  for (int m = 1; m <= n + 1; ++m)
    if (contains_pattern(middle_layers(n, m), pattern)) return m - 1;
  return n + 1;
}

}  // namespace diamondlab
