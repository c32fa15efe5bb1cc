#include "diamondlab/verify.hpp"

#include <algorithm>
#include <bit>

#include "diamondlab/certificate.hpp"
#include "diamondlab/error.hpp"
#include "diamondlab/parallel.hpp"
#include "diamondlab/patterns.hpp"

namespace diamondlab {

namespace {

std::uint64_t draw(Rng& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

Family random_diamond_free_family(int n, Rng& rng) {
  if (n < 0 || n > 12) throw Error(ErrorCode::BadParameter, "random families need 0 <= n <= 12");
  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<std::uint32_t> order;
  for (std::uint32_t m = 1; m < size; ++m) order.push_back(m);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[draw(rng, i)]);
  const std::uint64_t keep_percent = 10 + draw(rng, 91);

  std::vector<int> below(size, 0);
  std::vector<std::uint32_t> members = {0};
  for (std::uint32_t s : order) {
    if (draw(rng, 100) >= keep_percent) continue;
    if (below[s] > 1) continue;
    bool ok = true;
    for (std::uint32_t t : members)
      if (t != s && (s & ~t) == 0 && below[t] >= 1) ok = false;
    if (!ok) continue;
    members.push_back(s);
    for (std::uint32_t t = 0; t < size; ++t)
      if (t != s && (s & ~t) == 0) ++below[t];
  }
  return Family::from_masks(n, members);
}

std::vector<Family> all_diamond_free_families(int n) {
  if (n < 0 || n > 4) throw Error(ErrorCode::BadParameter, "exhaustive corpus needs 0 <= n <= 4");
  std::vector<ElementSet> cands;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) cands.emplace_back(m);
  std::stable_sort(cands.begin(), cands.end(), size_then_bits_less);
  std::vector<int> below(cands.size(), 0);
  std::vector<ElementSet> current = {ElementSet(0)};
  std::vector<Family> out;
  // Sets are decided in size order, so all subsets of a candidate are decided first.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cands.size()) {
      out.emplace_back(n, current);
      return;
    }
    if (below[i] <= 1) {
      for (std::size_t j = i + 1; j < cands.size(); ++j)
        if (cands[i].proper_subset_of(cands[j])) ++below[j];
      current.push_back(cands[i]);
      self(self, i + 1);
      current.pop_back();
      for (std::size_t j = i + 1; j < cands.size(); ++j)
        if (cands[i].proper_subset_of(cands[j])) --below[j];
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  return out;
}

Graph random_graph(int v, Rng& rng) {
  Graph g(v);
  const std::uint64_t p = draw(rng, 101);
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (draw(rng, 100) < p) g.add_edge(i, j);
  return g;
}

StructureW random_structure(int v, int n, Rng& rng) {
  StructureW s;
  s.graph = random_graph(v, rng);
  for (int w = v; w < n; ++w) s.parts.push_back(Bipartition::from_x(static_cast<std::uint32_t>(rng()) & low_mask(v), v));
  return s;
}

std::string inline_family(const Family& family) {
  std::string out = "n=" + std::to_string(family.universe()) + ":";
  bool first = true;
  for (auto s : family) {
    out += (first ? " " : "; ") + format_set(s);
    first = false;
  }
  return out;
}

std::vector<Report> verify_lemma2(const Lemma2Options& options) {
  std::vector<Family> corpus;
  for (int n = 1; n <= options.exhaustive_n_max; ++n) {
    auto all = all_diamond_free_families(n);
    corpus.insert(corpus.end(), all.begin(), all.end());
  }
  Rng rng(options.seed);
  for (int n : options.random_n) {
    if (n < 1 || n > kMaxChainUniverse) throw Error(ErrorCode::BadParameter, "random corpus needs 1 <= n <= 10");
    for (int i = 0; i < options.random_count; ++i) corpus.push_back(random_diamond_free_family(n, rng));
  }

  struct Slot {
    Report census{"census_identity"}, lemma2{"lemma2"}, psi{"psi_bounds"};
  };
  std::vector<Slot> slots(corpus.size());
  parallel_for(corpus.size(), options.threads, [&](std::size_t i) {
    const Family& f = corpus[i];
    const int n = f.universe();
    Slot& s = slots[i];
    const std::string where = "#" + std::to_string(i) + " " + inline_family(f);
    const Rational lam = lubell(f);
    const PsiCensus c = psi_census(f, 1);
    const Rational nfact(Integer(static_cast<unsigned long>(factorial(n))));
    auto count = [&](std::size_t k) { return k < c.counts.size() ? Rational(Integer(static_cast<unsigned long>(c.counts[k]))) : Rational(0); };
    const Rational identity = 2 + (count(3) - count(1)) / nfact;
    bool high_empty = c.counts[0] == 0;
    for (std::size_t k = 4; k < c.counts.size(); ++k) high_empty = high_empty && c.counts[k] == 0;
    s.census.check(c.total() == factorial(n) && high_empty, where, "census shape is wrong");
    s.census.check(lam == identity, where, "lubell " + to_string(lam) + " != 2 + (psi3 - psi1)/n! = " + to_string(identity));
    s.census.check(lam == c.average_hits(), where, "lubell differs from average chain hits");

    const Rational f_val = f_value(n, extract_structure(f));
    s.lemma2.check(lam <= 2 + f_val, where, "lubell " + to_string(lam) + " > 2 + f = " + to_string(2 + f_val));

    if (n >= 3 && n <= 9) {
      const auto r = psi_bounds_check(f, 1);
      s.psi.check(r.psi1_holds, where, "psi1 lower bound fails");
      s.psi.check(r.psi3_holds, where, "psi3 upper bound fails");
      s.psi.check(r.difference_holds, where, "psi3 - psi1 bound fails");
    }
  });

  std::vector<Report> out = {Report("census_identity"), Report("lemma2"), Report("psi_bounds")};
  for (const auto& s : slots) {
    out[0].absorb(s.census);
    out[1].absorb(s.lemma2);
    out[2].absorb(s.psi);
  }
  for (auto& r : out) {
    r.info()["families"] = corpus.size();
    r.info()["exhaustive_n_max"] = options.exhaustive_n_max;
    std::string rn;
    for (int n : options.random_n) rn += (rn.empty() ? "" : ",") + std::to_string(n);
    r.info()["random_n"] = rn;
    r.info()["random_count"] = options.random_n.empty() ? 0 : options.random_count;
    r.info()["seed"] = std::to_string(options.seed);
  }
  return out;
}

Report verify_fh(int count, std::uint64_t seed, unsigned threads) {
  Rng rng(seed);
  std::vector<std::pair<int, StructureW>> cases;
  for (int i = 0; i < count; ++i) {
    const int v = 4 + static_cast<int>(draw(rng, 5));
    const int n = v + static_cast<int>(draw(rng, 2 * v + 1));
    cases.emplace_back(n, random_structure(v, n, rng));
  }
  std::vector<Report> slots(cases.size());
  parallel_for(cases.size(), threads, [&](std::size_t i) {
    const auto& [n, s] = cases[i];
    const Rational f = f_value(n, s), h = per_H_sum(n, s);
    slots[i].check(f == h, "#" + std::to_string(i) + " n=" + std::to_string(n) + " " + format_structure(s),
                   "f = " + to_string(f) + ", per-H sum = " + to_string(h));
  });
  Report rep("fH");
  for (const auto& s : slots) rep.absorb(s);
  rep.info()["structures"] = count;
  rep.info()["seed"] = std::to_string(seed);
  return rep;
}

Report verify_psi_bounds(int n, int count, std::uint64_t seed, unsigned threads) {
  if (n < 3 || n > 9) throw Error(ErrorCode::BadParameter, "psi bounds need 3 <= n <= 9");
  Rng rng(seed);
  std::vector<Family> corpus;
  for (int i = 0; i < count; ++i) corpus.push_back(random_diamond_free_family(n, rng));
  std::vector<Report> slots(corpus.size());
  parallel_for(corpus.size(), threads, [&](std::size_t i) {
    const auto r = psi_bounds_check(corpus[i], 1);
    const std::string where = "#" + std::to_string(i) + " " + inline_family(corpus[i]);
    slots[i].check(r.psi1_holds, where, "psi1 = " + std::to_string(r.psi1) + " below bound");
    slots[i].check(r.psi3_holds, where, "psi3 = " + std::to_string(r.psi3) + " above bound");
    slots[i].check(r.difference_holds, where, "psi3 - psi1 above bound");
  });
  Report rep("psi_bounds");
  for (const auto& s : slots) rep.absorb(s);
  rep.info()["n"] = n;
  rep.info()["families"] = count;
  rep.info()["seed"] = std::to_string(seed);
  return rep;
}

Report verify_sq_identity(int count, int v_max, std::uint64_t seed, unsigned threads) {
  if (v_max < 4 || v_max > kMaxGraphVertices) throw Error(ErrorCode::BadParameter, "sq identity needs 4 <= v_max <= 32");
  std::vector<Graph> graphs;
  for (int v = 2; v <= 5; ++v)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (v * (v - 1) / 2)); ++code)
      graphs.push_back(Graph::from_code(v, code));
  Rng rng(seed);
  for (int i = 0; i < count; ++i) graphs.push_back(random_graph(4 + static_cast<int>(draw(rng, v_max - 3)), rng));

  std::vector<Report> slots(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t i) {
    const Graph& g = graphs[i];
    const auto sq = sq_forms(g);
    const auto sums = c_weight_sums(g);
    const auto census = subgraph_census(g);
    const Integer a1(static_cast<unsigned long>(census.alpha[1])), a3(static_cast<unsigned long>(census.alpha[3]));
    const std::string where = "v=" + std::to_string(g.order()) + ",code=" + std::to_string(g.code());
    slots[i].check(sq.total() == sums[0] + 6 * a1 + 6 * a3, where,
                   "sq = " + to_string(sq.total()) + ", sum c + 6a1 + 6a3 = " + to_string(Integer(sums[0] + 6 * a1 + 6 * a3)));
    slots[i].check(sq.nonedge == sums[1] + 4 * a1, where, "nonedge part mismatch");
    slots[i].check(sq.edge == sums[2] + 2 * a1 + 6 * a3, where, "edge part mismatch");
    slots[i].check(sq.total() >= 0, where, "negative sum of squares");
  });
  Report rep("sq_identity");
  for (const auto& s : slots) rep.absorb(s);
  rep.info()["labeled_graphs_v_le_5"] = graphs.size() - static_cast<std::size_t>(count);
  rep.info()["random_graphs"] = count;
  rep.info()["random_v_max"] = v_max;
  rep.info()["seed"] = std::to_string(seed);
  return rep;
}

std::vector<Report> verify_tables(const std::string& which) {
  std::vector<Report> out;
  const bool all = which == "all";
  bool known = all;
  if (all || which == "eps") {
    out.push_back(epsilon_table_check(5, 30));
    known = true;
  }
  if (all || which == "dstar") {
    out.push_back(dstar_table());
    out.push_back(consistency_check(60));
    known = true;
  }
  if (all || which == "gamma_c") {
    out.push_back(gamma_check(60));
    known = true;
  }
  if (all || which == "simplified") {
    out.push_back(simplified_table_check(60));
    out.push_back(g_limit_check());
    known = true;
  }
  if (all || which == "gmax") {
    out.push_back(g_max_check());
    known = true;
  }
  if (!known) throw Error(ErrorCode::BadParameter, "unknown table group '" + which + "' (eps, dstar, gamma_c, simplified, gmax, all)");
  return out;
}

}  // namespace diamondlab
