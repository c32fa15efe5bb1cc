#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diamondlab/lattice.hpp"

namespace diamondlab {

inline constexpr int kMaxPatternSize = 8;

/// A finite strict partial order on {0, ..., size-1}.
class PatternPoset {
 public:
  /// Builds the transitive closure of `relations` (pairs i < j). Throws
  /// BadParameter on a cycle, a self-relation, or more than kMaxPatternSize elements.
  PatternPoset(int size, const std::vector<std::pair<int, int>>& relations, std::string name = {});

  int size() const { return size_; }
  bool less(int i, int j) const { return (below_[j] >> i) & 1u; }
  std::uint8_t below_mask(int j) const { return below_[j]; }
  const std::string& name() const { return name_; }

  /// Number of strict relations i < j.
  int relation_count() const;

  /// Length of the longest chain ending at (resp. starting at) j, excluding j.
  int depth_below(int j) const;
  int depth_above(int j) const;

 private:
  int size_;
  std::array<std::uint8_t, kMaxPatternSize> below_{};
  std::string name_;
};

enum class PatternKind { Diamond, Chain, Fork, KDiamond };

/// diamond: A < B, C < D.  chain(k): P_k.  fork(r): A < B_1..B_r.  k_diamond(k): A < B_1..B_k < C.
PatternPoset make_pattern(PatternKind kind, int param = 0);

/// CLI literal: "diamond", "P<k>", "V<r>", "D<k>".
PatternPoset parse_pattern(const std::string& literal);

/// Witness: witness[i] is the index (into family.members()) of the image of
/// pattern element i.
using PatternWitness = std::vector<std::size_t>;

/// Weak containment: an injective map f with i < j in the pattern implying
/// f(i) strictly contained in f(j). Unrelated pattern elements may map to
/// comparable sets.
std::optional<PatternWitness> find_pattern(const Family& family, const PatternPoset& pattern);

inline bool contains_pattern(const Family& family, const PatternPoset& pattern) {
  return find_pattern(family, pattern).has_value();
}

/// Diamond test via pairs A < D with two members strictly between them.
bool is_diamond_free(const Family& family);

/// For families containing the empty set: diamond-free iff no member has two
/// nonempty proper subsets in the family.
bool is_diamond_free_with_empty(const Family& family);

/// Largest m such that the union of the m middle layers of 2^[n] avoids the
/// pattern (0 if even a single layer contains it). Requires n <= 12.
int e_value(const PatternPoset& pattern, int n);

}  // namespace diamondlab
