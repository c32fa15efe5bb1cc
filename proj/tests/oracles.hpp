#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code paths with the library beyond the value types.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "diamondlab/graph.hpp"
#include "diamondlab/lattice.hpp"
#include "diamondlab/patterns.hpp"

namespace oracle {

using diamondlab::Integer;
using diamondlab::Rational;

inline Rational q(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<Integer>> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[n][k];
}

inline Rational lubell(int n, const std::vector<std::uint32_t>& masks) {
  Rational sum = 0;
  for (auto m : masks) sum += Rational(1) / Rational(pascal(n, __builtin_popcount(m)));
  return sum;
}

/// Sum of the k largest binomial coefficients C(n, .).
inline Integer sigma(int n, int k) {
  std::vector<Integer> b;
  for (int i = 0; i <= n; ++i) b.push_back(pascal(n, i));
  std::sort(b.begin(), b.end(), [](const Integer& a, const Integer& c) { return a > c; });
  Integer s = 0;
  for (int i = 0; i < k && i < static_cast<int>(b.size()); ++i) s += b[i];
  return s;
}

/// Chain census by dynamic programming over subsets: ways[S][h] counts the
/// maximal chains from the empty set to S meeting the family h times.
inline std::vector<std::uint64_t> census(int n, const std::vector<std::uint32_t>& masks) {
  std::set<std::uint32_t> fam(masks.begin(), masks.end());
  const std::uint32_t size = 1u << n;
  std::vector<std::vector<std::uint64_t>> ways(size, std::vector<std::uint64_t>(n + 2, 0));
  ways[0][fam.count(0)] = 1;
  std::vector<std::uint32_t> order(size);
  for (std::uint32_t s = 0; s < size; ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  for (auto s : order)
    for (int e = 0; e < n; ++e) {
      if (s >> e & 1u) continue;
      const std::uint32_t t = s | (1u << e);
      const int hit = static_cast<int>(fam.count(t));
      for (int h = 0; h + hit <= n + 1; ++h) ways[t][h + hit] += ways[s][h];
    }
  return ways[size - 1];
}

inline bool proper_subset(std::uint32_t a, std::uint32_t b) { return a != b && (a & ~b) == 0; }

/// Diamond by trying every ordered 4-tuple of distinct members.
inline bool has_diamond(const std::vector<std::uint32_t>& f) {
  const std::size_t m = f.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = 0; d < m; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (proper_subset(f[a], f[b]) && proper_subset(f[a], f[c]) && proper_subset(f[b], f[d]) &&
              proper_subset(f[c], f[d]))
            return true;
        }
  return false;
}

/// Weak containment by trying every injective map (small families only).
inline bool contains(const std::vector<std::uint32_t>& f, const diamondlab::PatternPoset& p) {
  const int k = p.size();
  const int m = static_cast<int>(f.size());
  if (k > m) return false;
  std::vector<int> image(k, -1);
  std::vector<bool> used(m, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == k) {
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          if (p.less(a, b) && !proper_subset(f[image[a]], f[image[b]])) return false;
      return true;
    }
    for (int j = 0; j < m; ++j) {
      if (used[j]) continue;
      used[j] = true;
      image[i] = j;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Longest chain in the family (longest path in the containment DAG).
inline int longest_chain(const std::vector<std::uint32_t>& f) {
  std::vector<std::uint32_t> s = f;
  std::sort(s.begin(), s.end(), [](auto a, auto b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<int> best(s.size(), 1);
  int out = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (proper_subset(s[j], s[i])) best[i] = std::max(best[i], best[j] + 1);
    out = std::max(out, best[i]);
  }
  return out;
}

inline Integer falling(long x, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= x - i;
  return r;
}

inline int ebar(const diamondlab::Graph& g, std::uint32_t s) {
  int c = 0;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if ((s >> i & 1u) && (s >> j & 1u) && !g.has_edge(i, j)) ++c;
  return c;
}

inline int induced_edges(const diamondlab::Graph& g, std::uint32_t s) {
  int c = 0;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if ((s >> i & 1u) && (s >> j & 1u) && g.has_edge(i, j)) ++c;
  return c;
}

/// alpha[i] and beta[j] by scanning all vertex masks of size 3 and 4.
inline std::pair<std::vector<long>, std::vector<long>> census_counts(const diamondlab::Graph& g) {
  std::vector<long> alpha(4, 0), beta(7, 0);
  for (std::uint32_t s = 0; s < (1u << g.order()); ++s) {
    const int k = __builtin_popcount(s);
    if (k == 3) ++alpha[induced_edges(g, s)];
    if (k == 4) ++beta[induced_edges(g, s)];
  }
  return {alpha, beta};
}

/// Zero numerator vanishes; tests only call this with nonzero denominators otherwise.
inline Rational frac(const Integer& num, const Integer& den) {
  if (num == 0) return 0;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// f(n, G, W) straight from its displayed definition.
inline Rational f_value(int n, const diamondlab::StructureW& s) {
  const auto [alpha, beta] = census_counts(s.graph);
  Rational f = frac(2 * alpha[1] - 2 * alpha[2], falling(n, 3)) + frac(6 * beta[0], falling(n, 4));
  for (const auto& p : s.parts) {
    f += frac(__builtin_popcount(p.x) - __builtin_popcount(p.y), falling(n, 2));
    f += frac(4 * ebar(s.graph, p.y) - 2 * ebar(s.graph, p.x), falling(n, 3));
  }
  return f;
}

}  // namespace oracle
