#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "diamondlab/graph.hpp"
#include "diamondlab/lattice.hpp"
#include "diamondlab/report.hpp"

namespace diamondlab {

using Rng = std::mt19937_64;

/// Random diamond-free family containing the empty set: nonempty sets are
/// visited in random order and kept with a random density when that keeps
/// every member at most one nonempty proper subset in the family.
Family random_diamond_free_family(int n, Rng& rng);
/// Every diamond-free family of 2^[n] that contains the empty set (n <= 4).
std::vector<Family> all_diamond_free_families(int n);
/// G(v, p) with p itself drawn uniformly from {0, 1/100, ..., 1}.
Graph random_graph(int v, Rng& rng);
/// Random graph plus n - v uniformly random bipartitions.
StructureW random_structure(int v, int n, Rng& rng);

struct Lemma2Options {
  /// Exhaustive corpus for n = 1..exhaustive_n_max (0 to skip).
  int exhaustive_n_max = 4;
  /// Seeded random families: `random_count` at each listed n.
  std::vector<int> random_n = {6, 7};
  int random_count = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

/// Chain-census identity, the Lubell <= 2 + f bound and the psi-bound inequalities on
/// one corpus. Reports: "census_identity", "lemma2", "psi_bounds".
std::vector<Report> verify_lemma2(const Lemma2Options& options);

/// per_H_sum == f_value on `count` random structures, 4 <= v <= 8, v <= n <= 3v.
Report verify_fh(int count, std::uint64_t seed, unsigned threads = 0);

/// psi_bounds_check on random diamond-free families at n (3 <= n <= 9).
Report verify_psi_bounds(int n, int count, std::uint64_t seed, unsigned threads = 0);

/// Squared-form identity (total and both parts) and nonnegativity for all
/// labeled graphs with v <= 5 plus `count` random graphs with 4 <= v <= v_max.
Report verify_sq_identity(int count, int v_max, std::uint64_t seed, unsigned threads = 0);

/// Table groups: eps, dstar, gamma_c, simplified, gmax, all.
std::vector<Report> verify_tables(const std::string& which);

/// One-line rendering of a family: "n=3: {}; 1; 1,2".
std::string inline_family(const Family& family);

}  // namespace diamondlab
