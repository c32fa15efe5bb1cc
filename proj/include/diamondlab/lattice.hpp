#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "diamondlab/rational.hpp"

namespace diamondlab {

/// Largest universe accepted for family work.
inline constexpr int kMaxFamilyUniverse = 24;
/// Largest universe for exhaustive full-chain enumeration (n! permutations).
inline constexpr int kMaxChainUniverse = 10;

/// A subset of [n]; bit i set means element i+1 is present.
struct ElementSet {
  std::uint32_t bits = 0;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t b) : bits(b) {}

  constexpr int size() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool contains(int element) const { return (bits >> (element - 1)) & 1u; }
  constexpr bool subset_of(ElementSet other) const { return (bits & ~other.bits) == 0; }
  constexpr bool proper_subset_of(ElementSet other) const {
    return bits != other.bits && subset_of(other);
  }

  /// Elements in ascending order, 1-based.
  std::vector<int> elements() const;

  static ElementSet from_elements(std::span<const int> elements);

  constexpr auto operator<=>(const ElementSet&) const = default;
};

/// Order used by the searches: by cardinality, then by bitmask.
constexpr bool size_then_bits_less(ElementSet a, ElementSet b) {
  int sa = a.size(), sb = b.size();
  return sa != sb ? sa < sb : a.bits < b.bits;
}

/// A deduplicated family of subsets of [n], members sorted by bitmask.
class Family {
 public:
  Family() = default;
  /// Sorts and deduplicates; throws BadParameter if a mask is outside 2^[n] or
  /// n exceeds kMaxFamilyUniverse.
  Family(int n, std::vector<ElementSet> members);
  static Family from_masks(int n, std::span<const std::uint32_t> masks);

  int universe() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<ElementSet>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(ElementSet s) const;
  bool contains_empty_set() const { return !members_.empty() && members_.front().bits == 0; }

  /// 0/1 lookup table over all 2^n subsets.
  std::vector<std::uint8_t> indicator() const;

  /// Members ordered by (size, bits).
  std::vector<ElementSet> by_size() const;

  Family with(ElementSet s) const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  int n_ = 0;
  std::vector<ElementSet> members_;
};

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// Falling factorial (x)_k = x(x-1)...(x-k+1), (x)_0 = 1.
Integer falling(long x, int k);
Rational falling(const Rational& x, int k);

/// Lubell function: sum over members of 1 / C(n, |F|).
Rational lubell(const Family& family);

/// Union of the k middle layers of 2^[n] (floor variant: sizes
/// floor((n-k+1)/2) .. floor((n+k-1)/2)). Requires 1 <= k <= n+1.
Family middle_layers(int n, int k);

/// All subsets of a given size.
Family layer(int n, int size);

/// Sum of the k largest binomial coefficients C(n, l).
Integer largest_binomial_sum(int n, int k);

/// counts[i] = number of full chains of 2^[n] meeting the family exactly i times.
struct PsiCensus {
  int n = 0;
  std::vector<std::uint64_t> counts;  // indices 0..n+1

  std::uint64_t total() const;
  /// Sum of i * counts[i] / n!, which equals the Lubell value of the family.
  Rational average_hits() const;

  friend bool operator==(const PsiCensus&, const PsiCensus&) = default;
};

/// Exhaustive census over all n! full chains (one per permutation of [n]).
/// Throws UniverseTooLarge when n > kMaxChainUniverse.
PsiCensus psi_census(const Family& family, unsigned threads = 1);

std::uint64_t factorial(int n);

// Text format: a line "n=<int>", then one set per line, elements comma-separated
// in ascending order, "{}" for the empty set. Blank lines and lines starting
// with '#' are ignored.
Family read_family(std::istream& in);
Family read_family_file(const std::string& path);
Family parse_family(const std::string& text);
void write_family(std::ostream& out, const Family& family);
std::string format_family(const Family& family);
std::string format_set(ElementSet s);

}  // namespace diamondlab
