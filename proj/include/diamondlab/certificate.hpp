#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "diamondlab/graph.hpp"
#include "diamondlab/rational.hpp"
#include "diamondlab/report.hpp"

namespace diamondlab {

/// The eleven isomorphism classes of graphs on four vertices.
enum class HClass { H0, H1, Hwedge, Hpar, Claw, Path, Tri, Cyc, Hq, H5, H6 };

inline constexpr std::array<HClass, 11> kAllClasses = {
    HClass::H0,   HClass::H1,  HClass::Hwedge, HClass::Hpar, HClass::Claw, HClass::Path,
    HClass::Tri,  HClass::Cyc, HClass::Hq,     HClass::H5,   HClass::H6};

/// Classes that carry a g_H row (all but H0 and H6).
inline constexpr std::array<HClass, 9> kGClasses = {HClass::H1,   HClass::Hwedge, HClass::Hpar,
                                                    HClass::Claw, HClass::Path,   HClass::Tri,
                                                    HClass::Cyc,  HClass::Hq,     HClass::H5};

std::string_view class_name(HClass h);
/// Inverse of class_name; throws BadParameter.
HClass parse_class(std::string_view name);

Graph representative(HClass h);
/// Class of a 4-vertex graph by (edge count, degree multiset). Throws BadDimensions.
HClass classify(const Graph& four);

struct ClassData {
  int alpha1 = 0;
  int alpha2 = 0;
  int beta0 = 0;
  int ebar = 0;
};
ClassData class_data(HClass h);

/// c(H)/γ, and its split into the nonedge-pair and edge-pair square sums.
int c_weight(HClass h);
int c_weight_nonedge(HClass h);
int c_weight_edge(HClass h);

/// ε for a 4-vertex graph H and Y∩H = ymask (bits 0..3); X∩H = H - Y.
/// Requires 4 <= v <= n (BadDimensions). Zero when ymask is empty.
Rational epsilon(int n, int v, const Graph& h, std::uint32_t ymask);

/// The five ε tables; each row k = |Y∩H| is -k v/(2 (n)_2) + (v)_2 N_k/(12 (n)_3).
enum class EpsTable { SparseComplement, Hpar, Hwedge, H1, H0 };
std::string_view eps_table_name(EpsTable t);
/// Table that covers class h (SparseComplement for the classes with ebar <= 3).
EpsTable eps_table_for(HClass h);
/// N_k for k = 1..4 (index k-1); SparseComplement depends on ebar(H).
std::array<int, 4> eps_numerators(EpsTable t, int ebar);
Rational eps_row(EpsTable t, int ebar, int k, int n, int v);
/// Whether row k is the exact maximum of ε over |Y∩H| = k (else only an upper bound).
bool eps_row_exact(EpsTable t, int k);

/// Sign column of a table row as tabulated, for v < n.
enum class SignClaim { None, NonPositive, Negative };
SignClaim eps_row_sign(EpsTable t, int k);

/// Upper bound on ε(n,w,G,H) over all bipartitions: zero except for H0, H1, Hwedge.
Rational claim_bound(HClass h, int n, int v);

/// d*(H) derived from the per-4-subgraph rewrite and the ε bounds.
Rational dstar(HClass h, int n, int v);
/// d*(H) exactly as tabulated (differs from dstar() for Claw, Cyc, Hq, H5).
Rational dstar_printed(HClass h, int n, int v);

/// γ = 1/96 - (n-v)v/(24 (n)_2).
Rational gamma(int n, int v);

/// Simplified d*(H) + γ c(H) - 1/4, row by row.
Rational simplified_row(HClass h, int n, int v);

struct SqForms {
  Integer nonedge;
  Integer edge;
  Integer total() const { return nonedge + edge; }
};
/// The two squared-form sums over ordered nonedge and edge pairs (γ factored out).
SqForms sq_forms(const Graph& g);
/// Σ over 4-subsets of c_weight(class) (total, nonedge part, edge part).
std::array<Integer, 3> c_weight_sums(const Graph& g);

/// g_H(x); throws BadParameter for H0 and H6. The H5 row uses constant -5/24.
Rational g_eval(HClass h, const Rational& x);
/// H5 row with the tabulated constant -7/24, kept for audit.
Rational g_eval_h5_printed(const Rational& x);

struct GMax {
  Rational value;
  Rational argmax;
};
/// Tabulated maximum of g_H on [2/3, 1]; nullopt for H0 and H6.
std::optional<GMax> g_claimed_max(HClass h);

/// Which d* variant a check uses.
enum class DstarVariant { Derived, Printed };
std::string_view variant_name(DstarVariant v);
Rational dstar(DstarVariant variant, HClass h, int n, int v);

// Verification drivers. Each returns a report whose violation list is expected
// to be empty.

/// Raw ε against the tables (exact maxima or bounds), row signs and the
/// ε bounds, for every class, every Y subset and n in [n_lo, n_hi], 4 <= v <= n.
Report epsilon_table_check(int n_lo = 5, int n_hi = 30);
/// max_H d*(H) <= (n-v)v/(n)_2 <= floor(n^2/4)/(n)_2 for 4 <= v <= (2n-1)/3,
/// both variants, plus the closed-form simplifications for H0, H1, Hwedge, Hpar, Tri.
Report case1_check(int n_lo = 6, int n_hi = 60);
/// d* + γc - 1/4 <= 0 for v >= 2n/3, 7 <= n <= n_max, with the exact equality set.
Report consistency_check(int n_max = 60);
/// Simplified rows equal dstar_printed + γc - 1/4 on the same grid.
Report simplified_table_check(int n_max = 60);
/// γ >= 0 on the grid, γ(n,n) = 1/96, and c split sums.
Report gamma_check(int n_max = 60);
/// Grid maxima (step 1/3000) never exceed the tabulated maxima, which are attained
/// exactly at the tabulated argmax.
Report g_max_check();
/// n·|row(n, xn) - g_H(x)| grows by at most a factor 3/2 when n doubles
/// (a wrong limit would double it).
Report g_limit_check();
/// d* tabulated rows, compared against the derived ones.
Report dstar_table();

/// Worst-case f over all W against 1/4 + 1/(4(n-3)) for every graph on
/// v <= min(v_max, 6) vertices (all labeled) and the isomorphism classes at v = 7,
/// max(11, v) <= n <= n_max.
Report lemma3_scan(int v_max = 7, int n_max = 40, unsigned threads = 0);

/// Isomorphism-class representatives (minimum upper-triangle code) on v <= 7 vertices.
std::vector<std::uint64_t> iso_class_codes(int v, unsigned threads = 1);
/// Minimum upper-triangle code over all relabellings (v <= 8).
std::uint64_t canonical_code(const Graph& g);

}  // namespace diamondlab
