#include <sstream>

#include "doctest.h"
#include "diamondlab/error.hpp"
#include "diamondlab/lattice.hpp"
#include "diamondlab/verify.hpp"
#include "oracles.hpp"

using namespace diamondlab;
using oracle::q;

namespace {

Family fam(int n, std::vector<std::uint32_t> masks) { return Family::from_masks(n, masks); }

std::vector<std::uint32_t> masks_of(const Family& f) {
  std::vector<std::uint32_t> out;
  for (auto s : f) out.push_back(s.bits);
  return out;
}

}  // namespace

TEST_CASE("binomial and falling factorial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(9, 0) == 1);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::pascal(n, k));
  CHECK(falling(5, 3) == 60);
  CHECK(falling(7, 0) == 1);
  CHECK(falling(4, 4) == 24);
  CHECK(falling(3, 4) == 0);
  CHECK(falling(q(1, 2), 2) == q(-1, 4));
  for (long x = -3; x <= 12; ++x)
    for (int k = 0; k <= 5; ++k) CHECK(falling(x, k) == oracle::falling(x, k));
}

TEST_CASE("rational rendering") {
  CHECK(to_string(Rational(1)) == "1/1");
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4)) == "4/1");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(parse_rational("10/4") == q(5, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(ratio(0, 0) == 0);
  CHECK_THROWS_AS(ratio(1, 0), Error);
}

TEST_CASE("family construction") {
  Family f = fam(3, {3, 0, 3, 1});
  CHECK(f.size() == 3);
  CHECK(f.contains_empty_set());
  CHECK(f.members().front().bits == 0);
  CHECK(f.contains(ElementSet(3)));
  CHECK_FALSE(f.contains(ElementSet(2)));
  CHECK_THROWS_AS(fam(2, {4}), Error);
  CHECK_THROWS_AS(Family(kMaxFamilyUniverse + 1, {}), Error);
  CHECK(ElementSet(0b101).elements() == std::vector<int>{1, 3});
}

TEST_CASE("lubell function") {
  for (int n = 0; n <= 6; ++n) CHECK(lubell(fam(n, {0})) == 1);
  CHECK(lubell(layer(5, 2)) == 1);
  CHECK(lubell(fam(5, masks_of(layer(5, 2)))) == oracle::lubell(5, masks_of(layer(5, 2))));
  auto two = masks_of(layer(5, 1));
  for (auto m : masks_of(layer(5, 4))) two.push_back(m);
  CHECK(lubell(fam(5, two)) == 2);
  CHECK(lubell(fam(2, {0, 1, 3})) == q(5, 2));
}

TEST_CASE("every antichain has lubell value at most 1") {
  for (int n = 1; n <= 4; ++n) {
    const std::uint32_t size = 1u << n;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << size); ++pick) {
      std::vector<std::uint32_t> m;
      for (std::uint32_t s = 0; s < size; ++s)
        if (pick >> s & 1u) m.push_back(s);
      if (oracle::longest_chain(m) > 1) continue;
      CHECK(lubell(fam(n, m)) <= 1);
    }
  }
}

TEST_CASE("middle layers") {
  CHECK(masks_of(middle_layers(4, 1)) == masks_of(layer(4, 2)));
  CHECK(middle_layers(4, 1).size() == 6);
  Family two = middle_layers(4, 2);
  CHECK(two.size() == 10);
  for (auto s : two) CHECK((s.size() == 1 || s.size() == 2));
  CHECK(middle_layers(2, 3).size() == 4);
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n + 1; ++k) {
      CHECK(Integer(static_cast<unsigned long>(middle_layers(n, k).size())) == oracle::sigma(n, k));
      CHECK(largest_binomial_sum(n, k) == oracle::sigma(n, k));
      CHECK(oracle::longest_chain(masks_of(middle_layers(n, k))) == k);
    }
  CHECK_THROWS_AS(middle_layers(3, 0), Error);
  CHECK_THROWS_AS(middle_layers(3, 5), Error);
}

TEST_CASE("psi census examples") {
  CHECK(psi_census(fam(2, {0})).counts == std::vector<std::uint64_t>{0, 2, 0, 0});
  auto c = psi_census(fam(2, {0, 1, 3})).counts;
  CHECK(c[3] == 1);
  CHECK(c[2] == 1);
  CHECK(psi_census(fam(2, {0, 1, 2, 3})).counts[3] == 2);
  CHECK_THROWS_AS(psi_census(fam(kMaxChainUniverse + 1, {0})), Error);
}

TEST_CASE("psi census against the subset dynamic program") {
  Rng rng(7);
  for (int n = 1; n <= 8; ++n)
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<std::uint32_t> m;
      for (std::uint32_t s = 0; s < (1u << n); ++s)
        if (rng() % 3 == 0) m.push_back(s);
      Family f = fam(n, m);
      PsiCensus one = psi_census(f, 1);
      PsiCensus four = psi_census(f, 4);
      CHECK(one == four);
      CHECK(one.counts == oracle::census(n, m));
      CHECK(one.total() == factorial(n));
      CHECK(one.average_hits() == lubell(f));
    }
}

TEST_CASE("family text format") {
  Family f = parse_family("# comment\nn=3\n{}\n\n1,3\n2\n");
  CHECK(f == fam(3, {0, 5, 2}));
  CHECK(format_family(f) == "n=3\n{}\n2\n1,3\n");
  CHECK(parse_family(format_family(f)) == f);
  CHECK(format_set(ElementSet(0)) == "{}");
  CHECK(format_set(ElementSet(3)) == "1,2");
  CHECK_THROWS_AS(parse_family("1,2\n"), Error);
  CHECK_THROWS_AS(parse_family("n=2\n1,3\n"), Error);
  CHECK_THROWS_AS(parse_family("n=2\nx\n"), Error);
  CHECK_THROWS_AS(read_family_file("/nonexistent/family.txt"), Error);
}
