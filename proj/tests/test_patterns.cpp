#include "doctest.h"
#include "diamondlab/error.hpp"
#include "diamondlab/patterns.hpp"
#include "diamondlab/verify.hpp"
#include "oracles.hpp"

using namespace diamondlab;

namespace {

Family fam(int n, std::vector<std::uint32_t> masks) { return Family::from_masks(n, masks); }

std::vector<std::uint32_t> masks_of(const Family& f) {
  std::vector<std::uint32_t> out;
  for (auto s : f) out.push_back(s.bits);
  return out;
}

std::vector<std::uint32_t> subset_family(int n, std::uint64_t pick) {
  std::vector<std::uint32_t> m;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (pick >> s & 1u) m.push_back(s);
  return m;
}

}  // namespace

TEST_CASE("pattern construction") {
  auto d = make_pattern(PatternKind::Diamond);
  CHECK(d.size() == 4);
  CHECK(d.relation_count() == 5);
  CHECK(d.less(0, 1));
  CHECK(d.less(0, 2));
  CHECK(d.less(0, 3));
  CHECK(d.less(1, 3));
  CHECK(d.less(2, 3));
  CHECK_FALSE(d.less(1, 2));
  CHECK_FALSE(d.less(2, 1));
  auto c2 = make_pattern(PatternKind::Chain, 2);
  CHECK(c2.size() == 2);
  CHECK(c2.less(0, 1));
  auto v3 = make_pattern(PatternKind::Fork, 3);
  CHECK(v3.size() == 4);
  CHECK(v3.relation_count() == 3);
  for (int i = 1; i <= 3; ++i) CHECK(v3.less(0, i));
  CHECK(make_pattern(PatternKind::KDiamond, 3).relation_count() == 7);
  CHECK(make_pattern(PatternKind::Chain, 5).relation_count() == 10);
  CHECK_THROWS_AS(PatternPoset(2, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(PatternPoset(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(PatternPoset(9, {}), Error);
}

TEST_CASE("pattern literals") {
  CHECK(parse_pattern("diamond").relation_count() == 5);
  CHECK(parse_pattern("P4").size() == 4);
  CHECK(parse_pattern("V3").size() == 4);
  CHECK(parse_pattern("D5").size() == 7);
  CHECK_THROWS_AS(parse_pattern("Q2"), Error);
  CHECK_THROWS_AS(parse_pattern("P"), Error);
  CHECK_THROWS_AS(parse_pattern("P9"), Error);
}

TEST_CASE("containment examples") {
  auto d = make_pattern(PatternKind::Diamond);
  CHECK(contains_pattern(fam(2, {0, 1, 2, 3}), d));
  for (int n = 2; n <= 8; ++n) CHECK_FALSE(contains_pattern(middle_layers(n, 2), d));
  CHECK(contains_pattern(fam(3, {0, 1, 3, 7}), d));
  CHECK_FALSE(is_diamond_free(fam(2, {0, 1, 2, 3})));
  CHECK(is_diamond_free(fam(3, {0, 1, 2, 5, 6})));
  CHECK(is_diamond_free(fam(3, {0, 3, 7})));
}

TEST_CASE("witnesses are valid embeddings") {
  auto d = make_pattern(PatternKind::Diamond);
  Family f = fam(3, {0, 1, 3, 7});
  auto w = find_pattern(f, d);
  REQUIRE(w.has_value());
  REQUIRE(w->size() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (d.less(i, j)) CHECK(f.members()[(*w)[i]].proper_subset_of(f.members()[(*w)[j]]));
}

TEST_CASE("diamond checks agree with brute force on every family for n <= 3") {
  auto d = make_pattern(PatternKind::Diamond);
  for (int n = 0; n <= 3; ++n)
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << (1u << n)); ++pick) {
      auto m = subset_family(n, pick);
      Family f = fam(n, m);
      const bool truth = !oracle::has_diamond(m);
      CHECK(is_diamond_free(f) == truth);
      CHECK(contains_pattern(f, d) == !truth);
      if (f.contains_empty_set()) CHECK(is_diamond_free_with_empty(f) == truth);
    }
}

TEST_CASE("diamond checks agree with brute force on families with the empty set at n = 4") {
  auto d = make_pattern(PatternKind::Diamond);
  int free_count = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << 15); ++pick) {
    auto m = subset_family(4, pick << 1 | 1u);
    Family f = fam(4, m);
    const bool truth = !oracle::has_diamond(m);
    free_count += truth;
    CHECK(is_diamond_free(f) == truth);
    CHECK(is_diamond_free_with_empty(f) == truth);
    if (pick % 16 == 0) CHECK(contains_pattern(f, d) == !truth);
  }
  CHECK(static_cast<std::size_t>(free_count) == all_diamond_free_families(4).size());
}

TEST_CASE("general containment against injective-map brute force") {
  std::vector<PatternPoset> pats = {make_pattern(PatternKind::Chain, 3), make_pattern(PatternKind::Fork, 2),
                                    make_pattern(PatternKind::Fork, 3), make_pattern(PatternKind::KDiamond, 2),
                                    make_pattern(PatternKind::Diamond)};
  Rng rng(11);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 2);
    std::vector<std::uint32_t> m;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
      if (rng() % 4 == 0) m.push_back(s);
    if (m.size() > 8) m.resize(8);
    Family f = fam(n, m);
    for (const auto& p : pats) CHECK(contains_pattern(f, p) == oracle::contains(masks_of(f), p));
  }
}

TEST_CASE("chain freeness is the longest chain bound") {
  Rng rng(5);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<std::uint32_t> m;
    for (std::uint32_t s = 0; s < 32; ++s)
      if (rng() % 3 == 0) m.push_back(s);
    Family f = fam(5, m);
    const int longest = oracle::longest_chain(masks_of(f));
    for (int k = 2; k <= 6; ++k) CHECK(contains_pattern(f, make_pattern(PatternKind::Chain, k)) == (longest >= k));
  }
}

TEST_CASE("containment is monotone under adding sets") {
  Rng rng(3);
  auto d = make_pattern(PatternKind::Diamond);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<std::uint32_t> m;
    for (std::uint32_t s = 0; s < 16; ++s)
      if (rng() % 3 == 0) m.push_back(s);
    Family f = fam(4, m);
    if (!contains_pattern(f, d)) continue;
    CHECK(contains_pattern(f.with(ElementSet(static_cast<std::uint32_t>(rng() % 16))), d));
  }
}

TEST_CASE("e value") {
  CHECK(e_value(make_pattern(PatternKind::Diamond), 6) == 2);
  for (int n = 1; n <= 8; ++n) CHECK(e_value(make_pattern(PatternKind::Chain, 2), n) == 1);
  CHECK(e_value(make_pattern(PatternKind::Chain, 4), 8) == 3);
  CHECK_THROWS_AS(e_value(make_pattern(PatternKind::Diamond), 13), Error);
}
