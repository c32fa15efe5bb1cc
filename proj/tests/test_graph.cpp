#include <sstream>

#include "doctest.h"
#include "diamondlab/error.hpp"
#include "diamondlab/graph.hpp"
#include "diamondlab/verify.hpp"
#include "oracles.hpp"

using namespace diamondlab;
using oracle::q;

namespace {

Family fam(int n, std::vector<std::uint32_t> masks) { return Family::from_masks(n, masks); }

Rational bracket_oracle(int n, const Graph& g, std::uint32_t x) {
  const std::uint32_t y = low_mask(g.order()) & ~x;
  return oracle::frac(std::popcount(x) - std::popcount(y), oracle::falling(n, 2)) +
         oracle::frac(4 * oracle::ebar(g, y) - 2 * oracle::ebar(g, x), oracle::falling(n, 3));
}

/// sup of f over every assignment of the n - v bipartitions.
Rational sup_over_w(int n, const Graph& g) {
  const int v = g.order();
  const int slots = n - v;
  const std::uint64_t choices = std::uint64_t{1} << v;
  std::uint64_t total = 1;
  for (int i = 0; i < slots; ++i) total *= choices;
  Rational best;
  for (std::uint64_t code = 0; code < total; ++code) {
    StructureW s;
    s.graph = g;
    std::uint64_t c = code;
    for (int i = 0; i < slots; ++i, c /= choices) s.parts.push_back(Bipartition::from_x(static_cast<std::uint32_t>(c % choices), v));
    Rational f = oracle::f_value(n, s);
    if (code == 0 || f > best) best = f;
  }
  return best;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(1) == 2);
  CHECK(g.nondegree(0) == 2);
  CHECK(g.edges_within(0b0111) == 2);
  CHECK(g.nonedges_within(0b1111) == 3);
  CHECK(Graph::from_code(4, g.code()) == g);
  CHECK(g.complement().edge_count() == 3);
  CHECK(g.induced({1, 2, 3}) == Graph::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(Graph(kMaxGraphVertices + 1), Error);
}

TEST_CASE("subgraph census") {
  auto e4 = subgraph_census(Graph(4));
  CHECK(e4.alpha[0] == 4);
  CHECK(e4.beta[0] == 1);
  CHECK(e4.alpha[1] + e4.alpha[2] + e4.alpha[3] == 0);
  auto k4 = subgraph_census(Graph(4).complement());
  CHECK(k4.alpha[3] == 4);
  CHECK(k4.beta[6] == 1);
  auto p4 = subgraph_census(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(p4.alpha[1] == 2);
  CHECK(p4.alpha[2] == 2);

  Rng rng(21);
  for (int rep = 0; rep < 200; ++rep) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 10), rng);
    auto c = subgraph_census(g);
    auto [alpha, beta] = oracle::census_counts(g);
    for (int i = 0; i < 4; ++i) CHECK(c.alpha[i] == static_cast<std::uint64_t>(alpha[i]));
    for (int j = 0; j < 7; ++j) CHECK(c.beta[j] == static_cast<std::uint64_t>(beta[j]));
  }
}

TEST_CASE("structure extraction") {
  auto a = extract_structure(fam(2, {0, 1, 2}));
  CHECK(a.graph.order() == 0);
  CHECK(a.parts.size() == 2);
  CHECK(a.parts[0] == Bipartition{0, 0});

  auto b = extract_structure(fam(2, {0, 1, 3}));
  CHECK(b.graph.order() == 1);
  REQUIRE(b.parts.size() == 1);
  CHECK(b.parts[0].x == 1u);
  CHECK(b.parts[0].y == 0u);
  CHECK(b.w_elements == std::vector<int>{1});
  CHECK(b.vertex_elements == std::vector<int>{2});

  auto c = extract_structure(fam(3, {0, 3, 6}));
  CHECK(c.parts.empty());
  CHECK(c.graph == Graph::from_edges(3, {{0, 1}, {1, 2}}));

  CHECK_THROWS_AS(extract_structure(fam(2, {1, 3})), Error);
}

TEST_CASE("f value examples") {
  StructureW a;
  a.graph = Graph(0);
  a.parts = {Bipartition{}, Bipartition{}};
  CHECK(f_value(2, a) == 0);

  StructureW b;
  b.graph = Graph(1);
  b.parts = {Bipartition{1, 0}};
  CHECK(f_value(2, b) == q(1, 2));

  // With no bipartitions only the structure terms remain.
  CHECK(structure_terms(6, subgraph_census(Graph(4).complement())) == 0);
  StructureW k4;
  k4.graph = Graph(4).complement();
  k4.parts.assign(2, Bipartition{0xF, 0});
  CHECK(f_value(6, k4) == q(8, 30));

  StructureW bad;
  bad.graph = Graph(3);
  CHECK_THROWS_AS(f_value(5, bad), Error);
}

TEST_CASE("f value against the direct formula") {
  Rng rng(33);
  for (int rep = 0; rep < 300; ++rep) {
    const int v = static_cast<int>(rng() % 9);
    const int n = std::max(v + static_cast<int>(rng() % 5), 4);
    StructureW s = random_structure(v, n, rng);
    CHECK(f_value(n, s) == oracle::f_value(n, s));
    CHECK(f_value(n, s) == structure_terms(n, subgraph_census(s.graph)) + [&] {
            Rational sum = 0;
            for (const auto& p : s.parts) sum += bracket(n, s.graph, p);
            return sum;
          }());
  }
}

TEST_CASE("per-H rewrite") {
  CHECK(structure_terms(8, subgraph_census(Graph(4))) == q(1, 280));
  CHECK(structure_terms(8, subgraph_census(Graph(4).complement())) == 0);
  StructureW e;
  e.graph = Graph(4);
  CHECK(per_H_sum(4, e) == q(1, 4));
  StructureW k;
  k.graph = Graph(4).complement();
  k.parts.assign(4, Bipartition{0, 0xF});
  CHECK(per_H_sum(8, k) == oracle::f_value(8, k));
  k.parts.clear();
  CHECK_THROWS_AS(per_H_sum(8, k), Error);
  StructureW small;
  small.graph = Graph(3);
  CHECK_THROWS_AS(per_H_sum(5, small), Error);
  Rng rng(44);
  for (int rep = 0; rep < 100; ++rep) {
    const int v = 4 + static_cast<int>(rng() % 4);
    const int n = v + static_cast<int>(rng() % (2 * v + 1));
    StructureW s = random_structure(v, n, rng);
    CHECK(per_H_sum(n, s) == oracle::f_value(n, s));
  }
}

TEST_CASE("handshake identity on every bipartition of small graphs") {
  for (int v = 1; v <= 5; ++v)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (v * (v - 1) / 2)); ++code) {
      Graph g = Graph::from_code(v, code);
      for (std::uint32_t x = 0; x <= low_mask(v); ++x) {
        const std::uint32_t y = low_mask(v) & ~x;
        int lhs = 0;
        for (int i = 0; i < v; ++i) lhs += (y >> i & 1u) ? g.degree(i) : g.nondegree(i);
        const int rhs = std::popcount(x) * std::popcount(y) + 2 * oracle::induced_edges(g, y) + 2 * oracle::ebar(g, x);
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("nonedge table") {
  Rng rng(8);
  for (int rep = 0; rep < 30; ++rep) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 8), rng);
    auto t = nonedge_table(g);
    REQUIRE(t.size() == (std::size_t{1} << g.order()));
    for (std::uint32_t s = 0; s < t.size(); ++s) CHECK(t[s] == oracle::ebar(g, s));
  }
}

TEST_CASE("max bracket") {
  for (int v = 1; v <= 6; ++v) {
    auto r = max_bracket(v + 3, Graph(v).complement());
    CHECK(r.part.x == low_mask(v));
    CHECK(r.value == Rational(v) / Rational(oracle::falling(v + 3, 2)));
  }
  auto e2 = max_bracket(4, Graph(2));
  CHECK(e2.value == q(1, 12));
  CHECK(e2.part.x == 3u);
  auto one = max_bracket(7, Graph(1));
  CHECK(one.part.x == 1u);
  CHECK(one.value == q(1, 42));
  CHECK_THROWS_AS(max_bracket(30, Graph(23)), Error);

  Rng rng(13);
  for (int rep = 0; rep < 100; ++rep) {
    const int v = static_cast<int>(rng() % 8);
    const int n = std::max(v, 3) + static_cast<int>(rng() % 30);
    Graph g = random_graph(v, rng);
    Rational best;
    std::uint32_t arg = 0;
    for (std::uint32_t x = 0; x <= low_mask(v); ++x) {
      Rational b = bracket_oracle(n, g, x);
      if (x == 0 || b > best) best = b, arg = x;
    }
    auto r = max_bracket(n, g);
    CHECK(r.value == best);
    CHECK(r.part.x == arg);
    Rational from_profile;
    bool first = true;
    for (const auto& p : bracket_profile(g)) {
      CHECK(bracket_oracle(n, g, p.x) * Rational(oracle::falling(n, 3)) == p.a * (n - 2) + p.b);
      Rational val = bracket_oracle(n, g, p.x);
      if (first || val > from_profile) from_profile = val;
      first = false;
    }
    CHECK(from_profile == best);
  }
}

TEST_CASE("worst case f equals the supremum over all W") {
  Rng rng(17);
  for (int v = 0; v <= 5; ++v)
    for (int extra = 0; extra <= (v == 5 ? 2 : 3); ++extra) {
      const int n = std::max(v + extra, 4);
      if (n - v > 3) continue;
      for (int rep = 0; rep < 3; ++rep) {
        Graph g = random_graph(v, rng);
        CHECK(worst_case_f(n, g) == sup_over_w(n, g));
      }
    }
}

TEST_CASE("tight and small cases of the f bound") {
  for (int n = 4; n <= 20; ++n) CHECK(worst_case_f(n, Graph(n)) == q(1, 4));
  for (int n = 11; n <= 40; ++n)
    for (int v = 0; v <= 3; ++v)
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (v * (v - 1) / 2)); ++code)
        CHECK(worst_case_f(n, Graph::from_code(v, code)) <= q(1, 4));
}

TEST_CASE("psi bounds check") {
  // Two adjacent layers plus the empty set always contain a diamond.
  std::vector<std::uint32_t> m = {0};
  for (auto s : middle_layers(4, 2)) m.push_back(s.bits);
  CHECK_THROWS_AS(psi_bounds_check(fam(4, m)), Error);
  m = {0};
  for (auto s : middle_layers(4, 1)) m.push_back(s.bits);
  CHECK(psi_bounds_check(fam(4, m)).holds());
  auto r = psi_bounds_check(fam(3, {0, 1, 3}));
  CHECK(r.holds());
  auto c = oracle::census(3, {0, 1, 3});
  CHECK(r.psi1 == c[1]);
  CHECK(r.psi3 == c[3]);
  CHECK_THROWS_AS(psi_bounds_check(fam(3, {1, 3})), Error);
  CHECK_THROWS_AS(psi_bounds_check(fam(3, {0, 1, 2, 3})), Error);
  CHECK_THROWS_AS(psi_bounds_check(fam(10, {0})), Error);
  Rng rng(2);
  for (int rep = 0; rep < 50; ++rep) CHECK(psi_bounds_check(random_diamond_free_family(6, rng)).holds());
}

TEST_CASE("graph and structure text formats") {
  std::istringstream in("v=4\n1 2\n# note\n2 3\nw 1 4\nw\n");
  StructureW s = read_structure(in);
  CHECK(s.graph == Graph::from_edges(4, {{0, 1}, {1, 2}}));
  REQUIRE(s.parts.size() == 2);
  CHECK(s.parts[0].x == 0b1001u);
  CHECK(s.parts[0].y == 0b0110u);
  CHECK(s.parts[1].x == 0u);
  CHECK(s.universe() == 6);
  CHECK(format_structure(s) == "v=4\n1 2\n2 3\nw 1 4\nw\n");
  std::istringstream again(format_structure(s));
  CHECK(read_structure(again).parts == s.parts);

  auto bad = [](const std::string& text) {
    std::istringstream is(text);
    return read_structure(is);
  };
  CHECK_THROWS_AS(bad("1 2\n"), Error);
  CHECK_THROWS_AS(bad("v=3\n1 4\n"), Error);
  CHECK_THROWS_AS(bad("v=3\n2 2\n"), Error);
  CHECK_THROWS_AS(bad("v=3\nw 5\n"), Error);
  std::istringstream g("v=3\nw 1\n");
  CHECK_THROWS_AS(read_graph(g), Error);
  CHECK_THROWS_AS(read_structure_file("/nonexistent/graph.txt"), Error);
}
