#pragma once

#include <cstdint>

#include "diamondlab/lattice.hpp"
#include "diamondlab/patterns.hpp"
#include "diamondlab/rational.hpp"

namespace diamondlab {

struct SearchConfig {
  /// Ignore the node budget and run to completion.
  bool exhaustive = false;
  /// Total node budget, divided evenly across the fixed subtrees.
  std::uint64_t node_budget = 200'000'000;
  /// 0 = default_threads().
  unsigned threads = 0;
};

struct SearchResult {
  /// Family size for la(), Lubell value for lubell_star().
  Rational objective;
  Family witness;
  std::uint64_t nodes_explored = 0;
  /// True iff every subtree ran to completion, so objective is the exact optimum.
  bool exhaustive = false;
};

/// Largest P-free family in 2^[n], n <= 6. Sets are decided in (size, bits)
/// order, include-branch first; the reported witness is the first optimum in
/// that order.
SearchResult la(int n, const PatternPoset& pattern, const SearchConfig& config = {});

/// Maximum Lubell value of a diamond-free family in 2^[n] that contains the
/// empty set, n <= 6.
SearchResult lubell_star(int n, const SearchConfig& config = {});

/// 2 + floor(n^2/4) / (n(n-1)), the value of the known constructions (n >= 2).
Rational diamond_lubell_construction_value(int n);

}  // namespace diamondlab
