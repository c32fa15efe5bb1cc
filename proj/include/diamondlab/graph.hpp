#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "diamondlab/lattice.hpp"
#include "diamondlab/rational.hpp"

namespace diamondlab {

inline constexpr int kMaxGraphVertices = 32;

constexpr std::uint32_t low_mask(int v) {
  return v >= 32 ? 0xFFFFFFFFu : static_cast<std::uint32_t>((std::uint64_t{1} << v) - 1);
}

/// Simple undirected graph on vertices 0..v-1 stored as neighbor bitmasks.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int v);
  static Graph from_edges(int v, const std::vector<std::pair<int, int>>& edges);
  /// Upper-triangle edge code: bit index of pair (i<j) follows row-major order.
  static Graph from_code(int v, std::uint64_t code);

  int order() const { return v_; }
  std::uint32_t vertices() const { return low_mask(v_); }
  std::uint32_t neighbors(int i) const { return adj_[i]; }
  bool has_edge(int i, int j) const { return (adj_[i] >> j) & 1u; }
  int degree(int i) const;
  int nondegree(int i) const { return v_ - 1 - degree(i); }

  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  int edge_count() const;
  /// e(S) and ebar(S): edges and nonedges with both ends in S.
  int edges_within(std::uint32_t s) const;
  int nonedges_within(std::uint32_t s) const;

  std::vector<std::pair<int, int>> edges() const;
  std::uint64_t code() const;
  Graph complement() const;
  /// Subgraph induced by the listed vertices, relabelled 0..k-1 in order.
  Graph induced(const std::vector<int>& vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int v_ = 0;
  std::vector<std::uint32_t> adj_;
};

/// Ordered bipartition (X, Y) of the vertex set.
struct Bipartition {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  static Bipartition from_x(std::uint32_t x, int v) { return {x, low_mask(v) & ~x}; }
  bool valid_for(int v) const { return (x & y) == 0 && (x | y) == low_mask(v); }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// The graph G on V = [n] - W and one bipartition (X_w, Y_w) per singleton w.
struct StructureW {
  Graph graph;
  std::vector<Bipartition> parts;
  /// Element of [n] behind each vertex, and behind each part (empty when the
  /// structure was not extracted from a family).
  std::vector<int> vertex_elements;
  std::vector<int> w_elements;

  int universe() const { return graph.order() + static_cast<int>(parts.size()); }
};

struct SubgraphCensus {
  /// alpha[i]: vertex triples inducing exactly i edges; beta[j]: quadruples with j edges.
  std::array<std::uint64_t, 4> alpha{};
  std::array<std::uint64_t, 7> beta{};

  friend bool operator==(const SubgraphCensus&, const SubgraphCensus&) = default;
};

SubgraphCensus subgraph_census(const Graph& graph);

/// Throws EmptySetMissing when the family lacks the empty set.
StructureW extract_structure(const Family& family);

/// (2 alpha1 - 2 alpha2)/(n)_3 + 6 beta0/(n)_4.
Rational structure_terms(int n, const SubgraphCensus& census);

/// (|X|-|Y|)/(n)_2 + (4 ebar(Y) - 2 ebar(X))/(n)_3.
Rational bracket(int n, const Graph& graph, const Bipartition& part);

/// The graph invariant bounding the Lubell value of a diamond-free family
/// containing the empty set:
///   f = (2a1 - 2a2)/(n)_3 + 6 b0/(n)_4 + sum_w [ (|X|-|Y|)/(n)_2 + (4 ebar(Y) - 2 ebar(X))/(n)_3 ].
/// Requires parts.size() == n - v. Terms with a zero numerator vanish even if
/// their falling factorial does; anything else over a zero denominator throws
/// BadDimensions.
Rational f_value(int n, const StructureW& structure);

/// ε for a 4-set H of G with k = |Y ∩ H| vertices on the Y side:
///   -(v/(n)_2)(2k/4) + ((v)_2/(2(n)_3)) (2 ebar(H) + 4 ebar(Y∩H) - 2 ebar(X∩H)) / 6.
Rational epsilon_term(int n, int v, int ebar_h, int y_count, int ebar_y, int ebar_x);

/// Density d(H) of one 4-set H (vertex mask) in the per-4-subgraph rewrite of f.
Rational density_of_quad(int n, const StructureW& structure, std::uint32_t quad);

/// f rewritten as the average over all 4-sets H of d(H). Equals f_value exactly.
/// Throws TooFewVertices when v < 4.
Rational per_H_sum(int n, const StructureW& structure);

struct BracketMax {
  Rational value;
  Bipartition part;
};

/// Maximum bracket over all 2^v bipartitions (first maximizer in increasing X
/// mask order). Requires v <= 22 (TooManyVertices) and n >= max(v, 3).
BracketMax max_bracket(int n, const Graph& graph);

/// Distinct (|X|-|Y|, 4 ebar(Y) - 2 ebar(X)) pairs over all bipartitions, each
/// with the smallest X mask realising it. (n)_3 * bracket = a(n-2) + b.
struct BracketPoint {
  int a;
  int b;
  std::uint32_t x;
};
std::vector<BracketPoint> bracket_profile(const Graph& graph);

/// ebar(X) for every subset X of the vertex set (index = mask).
std::vector<int> nonedge_table(const Graph& graph);

/// sup of f over all choices of n - v bipartitions: structure terms plus
/// (n - v) * max_bracket.
Rational worst_case_f(int n, const Graph& graph);

struct PsiBoundsReport {
  int n = 0;
  std::uint64_t psi1 = 0;
  std::uint64_t psi3 = 0;
  /// |Psi_1|/(n-3)! must be >= psi1_lower.
  Integer psi1_lower;
  /// |Psi_3|/(n-3)! must be <= psi3_upper.
  Rational psi3_upper;
  /// (|Psi_3| - |Psi_1|)/(n-3)! must be <= difference_upper.
  Rational difference_upper;
  bool psi1_holds = false;
  bool psi3_holds = false;
  bool difference_holds = false;

  bool holds() const { return psi1_holds && psi3_holds && difference_holds; }
};

/// Chain-census check of the Psi_1 lower bound, Psi_3 upper bound and their
/// difference bound. Requires the empty set (EmptySetMissing), diamond-freeness
/// (NotDiamondFree), 3 <= n <= 9.
PsiBoundsReport psi_bounds_check(const Family& family, unsigned threads = 1);

// Graph text format: "v=<int>", then one edge "i j" per line (1-indexed).
// A structure file may add lines "w x1 x2 ..." listing X_w for each w
// (a bare "w" means X_w is empty); n is v plus the number of w lines.
Graph read_graph(std::istream& in);
StructureW read_structure(std::istream& in);
StructureW read_structure_file(const std::string& path);
std::string format_graph(const Graph& graph);
std::string format_structure(const StructureW& structure);

}  // namespace diamondlab
