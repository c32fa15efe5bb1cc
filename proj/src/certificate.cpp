#include "diamondlab/certificate.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <numeric>

#include "diamondlab/error.hpp"
#include "diamondlab/parallel.hpp"

namespace diamondlab {

namespace {

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational fall_ratio(int v, int n, int k) { return ratio(falling(v, k), falling(n, k)); }

int index_of(HClass h) { return static_cast<int>(h); }

constexpr std::array<std::string_view, 11> kNames = {"H0",   "H1",   "Hwedge", "Hpar", "Claw", "Path",
                                                     "Tri",  "Cyc",  "Hq",     "H5",   "H6"};

// c(H)/γ and its nonedge-pair part.
constexpr std::array<int, 11> kCWeight = {0, 4, 4, -8, 0, -4, 0, 0, -4, 4, 24};
constexpr std::array<int, 11> kCNonedge = {0, 0, 4, -16, 0, -4, 12, 0, 0, 0, 0};

// Tabulated first-term coefficients of (v)_3/(n)_3 (H0 uses (v)_4/(n)_4 instead).
const std::array<Rational, 11>& printed_coefficients() {
  static const std::array<Rational, 11> c = {q(1, 4), q(1, 6), q(1, 12), q(1, 3), q(-3, 4), q(0),
                                             q(1, 4), q(-1),   q(-1, 4), q(-1, 2), q(0)};
  return c;
}

void require_dims(int n, int v) {
  if (v < 4 || v > n)
    throw Error(ErrorCode::BadDimensions, "need 4 <= v <= n (n=" + std::to_string(n) + ", v=" + std::to_string(v) + ")");
}

std::string nv(int n, int v) { return "n=" + std::to_string(n) + ",v=" + std::to_string(v); }

}  // namespace

std::string_view class_name(HClass h) { return kNames[index_of(h)]; }

HClass parse_class(std::string_view name) {
  for (HClass h : kAllClasses)
    if (class_name(h) == name) return h;
  throw Error(ErrorCode::BadParameter, "unknown class '" + std::string(name) + "'");
}

Graph representative(HClass h) {
  using E = std::vector<std::pair<int, int>>;
  switch (h) {
    case HClass::H0: return Graph(4);
    case HClass::H1: return Graph::from_edges(4, E{{0, 1}});
    case HClass::Hwedge: return Graph::from_edges(4, E{{0, 1}, {1, 2}});
    case HClass::Hpar: return Graph::from_edges(4, E{{0, 1}, {2, 3}});
    case HClass::Claw: return Graph::from_edges(4, E{{0, 1}, {0, 2}, {0, 3}});
    case HClass::Path: return Graph::from_edges(4, E{{0, 1}, {1, 2}, {2, 3}});
    case HClass::Tri: return Graph::from_edges(4, E{{0, 1}, {1, 2}, {0, 2}});
    case HClass::Cyc: return Graph::from_edges(4, E{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    case HClass::Hq: return Graph::from_edges(4, E{{0, 2}, {0, 3}, {2, 3}, {1, 3}});
    case HClass::H5: return Graph::from_edges(4, E{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    case HClass::H6: return Graph::from_edges(4, E{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  }
  throw Error(ErrorCode::BadParameter, "unknown class");
}

HClass classify(const Graph& g) {
  if (g.order() != 4) throw Error(ErrorCode::BadDimensions, "classify needs a 4-vertex graph");
  std::array<int, 4> deg{};
  for (int i = 0; i < 4; ++i) deg[i] = g.degree(i);
  std::sort(deg.begin(), deg.end());
  const int key = deg[0] * 1000 + deg[1] * 100 + deg[2] * 10 + deg[3];
  switch (g.edge_count()) {
    case 0: return HClass::H0;
    case 1: return HClass::H1;
    case 2: return key == 1111 ? HClass::Hpar : HClass::Hwedge;
    case 3: return key == 1113 ? HClass::Claw : key == 1122 ? HClass::Path : HClass::Tri;
    case 4: return key == 2222 ? HClass::Cyc : HClass::Hq;
    case 5: return HClass::H5;
    default: return HClass::H6;
  }
}

ClassData class_data(HClass h) {
  const Graph g = representative(h);
  const auto c = subgraph_census(g);
  return {static_cast<int>(c.alpha[1]), static_cast<int>(c.alpha[2]), static_cast<int>(c.beta[0]),
          6 - g.edge_count()};
}

int c_weight(HClass h) { return kCWeight[index_of(h)]; }
int c_weight_nonedge(HClass h) { return kCNonedge[index_of(h)]; }
int c_weight_edge(HClass h) { return kCWeight[index_of(h)] - kCNonedge[index_of(h)]; }

Rational epsilon(int n, int v, const Graph& h, std::uint32_t ymask) {
  require_dims(n, v);
  if (h.order() != 4) throw Error(ErrorCode::BadDimensions, "epsilon needs a 4-vertex graph");
  ymask &= 0xFu;
  if (ymask == 0) return 0;
  const std::uint32_t xmask = 0xFu & ~ymask;
  return epsilon_term(n, v, h.nonedges_within(0xFu), std::popcount(ymask), h.nonedges_within(ymask),
                      h.nonedges_within(xmask));
}

std::string_view eps_table_name(EpsTable t) {
  switch (t) {
    case EpsTable::SparseComplement: return "ebar<=3";
    case EpsTable::Hpar: return "Hpar";
    case EpsTable::Hwedge: return "Hwedge";
    case EpsTable::H1: return "H1";
    case EpsTable::H0: return "H0";
  }
  return "?";
}

EpsTable eps_table_for(HClass h) {
  switch (h) {
    case HClass::H0: return EpsTable::H0;
    case HClass::H1: return EpsTable::H1;
    case HClass::Hwedge: return EpsTable::Hwedge;
    case HClass::Hpar: return EpsTable::Hpar;
    default: return EpsTable::SparseComplement;
  }
}

std::array<int, 4> eps_numerators(EpsTable t, int ebar) {
  switch (t) {
    case EpsTable::SparseComplement: return {2 * ebar, 2 * ebar + 4, 6 * ebar, 6 * ebar};
    case EpsTable::Hpar: return {4, 10, 20, 24};
    case EpsTable::Hwedge: return {6, 12, 20, 24};
    case EpsTable::H1: return {6, 14, 22, 30};
    case EpsTable::H0: return {6, 14, 24, 36};
  }
  return {};
}

Rational eps_row(EpsTable t, int ebar, int k, int n, int v) {
  require_dims(n, v);
  if (k < 1 || k > 4) throw Error(ErrorCode::BadParameter, "row index must be in [1, 4]");
  const int numer = eps_numerators(t, ebar)[k - 1];
  return ratio(Integer(-k * v), 2 * falling(n, 2)) + ratio(falling(v, 2) * numer, 12 * falling(n, 3));
}

bool eps_row_exact(EpsTable t, int k) {
  if (t == EpsTable::SparseComplement) return false;
  if (t == EpsTable::Hpar && k == 3) return false;
  return true;
}

SignClaim eps_row_sign(EpsTable t, int k) {
  using S = SignClaim;
  static constexpr std::array<std::array<S, 4>, 5> table = {{
      {S::NonPositive, S::Negative, S::NonPositive, S::Negative},
      {S::Negative, S::Negative, S::Negative, S::NonPositive},
      {S::NonPositive, S::Negative, S::None, S::NonPositive},
      {S::NonPositive, S::None, S::None, S::None},
      {S::NonPositive, S::None, S::None, S::None},
  }};
  return table[static_cast<int>(t)][k - 1];
}

Rational claim_bound(HClass h, int n, int v) {
  require_dims(n, v);
  const Rational r = q(v - 1, n - 2);
  const Rational base = q(v, 1) / Rational(falling(n, 2));
  switch (h) {
    case HClass::H0: return 3 * base * max(Rational(0), r - q(2, 3));
    case HClass::H1: return q(5, 2) * base * max(Rational(0), r - q(4, 5));
    case HClass::Hwedge: return q(5, 3) * base * max(Rational(0), r - q(9, 10));
    default: return 0;
  }
}

namespace {

// Terms shared by both d* variants: everything except the subgraph-count term.
Rational dstar_tail(HClass h, int n, int v) {
  const ClassData d = class_data(h);
  return ratio(Integer((n - v) * v), falling(n, 2)) -
         ratio(Integer(n - v) * falling(v, 2) * d.ebar, 6 * falling(n, 3)) + (n - v) * claim_bound(h, n, v);
}

}  // namespace

Rational dstar(HClass h, int n, int v) {
  require_dims(n, v);
  const ClassData d = class_data(h);
  return ratio(falling(v, 3) * (d.alpha1 - d.alpha2), 12 * falling(n, 3)) +
         ratio(falling(v, 4) * d.beta0, 4 * falling(n, 4)) + dstar_tail(h, n, v);
}

Rational dstar_printed(HClass h, int n, int v) {
  require_dims(n, v);
  const Rational& c = printed_coefficients()[index_of(h)];
  const Rational lead = h == HClass::H0 ? c * fall_ratio(v, n, 4) : c * fall_ratio(v, n, 3);
  return lead + dstar_tail(h, n, v);
}

std::string_view variant_name(DstarVariant v) { return v == DstarVariant::Derived ? "derived" : "printed"; }

Rational dstar(DstarVariant variant, HClass h, int n, int v) {
  return variant == DstarVariant::Derived ? dstar(h, n, v) : dstar_printed(h, n, v);
}

Rational gamma(int n, int v) {
  if (n < 2 || v < 0 || v > n) throw Error(ErrorCode::BadDimensions, "gamma needs 0 <= v <= n, n >= 2");
  return q(1, 96) - ratio(Integer((n - v) * v), 24 * falling(n, 2));
}

Rational simplified_row(HClass h, int n, int v) {
  require_dims(n, v);
  const Rational f3 = fall_ratio(v, n, 3);
  // (n-v) v / (n)_3 times the row's polynomial factor.
  auto tail = [&](long poly, long den) { return ratio(Integer(static_cast<long>(n - v) * v * poly), den * falling(n, 3)); };
  switch (h) {
    case HClass::H0: return q(-1, 4) + q(1, 4) * fall_ratio(v, n, 4) + tail(2L * v - n, 1);
    case HClass::H1: return q(-5, 24) + q(1, 6) * f3 + tail(std::max(5L * n - 5 * v - 5, 10L * v - 7 * n + 4), 6);
    case HClass::Hwedge: return q(-5, 24) + q(1, 12) * f3 + tail(std::max(5L * n - 4 * v - 6, 6L * v - 4 * n + 2), 6);
    case HClass::Hpar: return q(-1, 3) + q(1, 3) * f3 + tail(4L * n - 2 * v - 6, 3);
    case HClass::Claw: return q(-1, 4) - q(3, 4) * f3 + tail(2L * n - v - 3, 2);
    case HClass::Path: return q(-7, 24) + tail(7L * n - 3 * v - 11, 6);
    case HClass::Tri: return q(-1, 4) + q(1, 4) * f3 + tail(2L * n - v - 3, 2);
    case HClass::Cyc: return q(-1, 4) - f3 + tail(3L * n - v - 5, 3);
    case HClass::Hq: return q(-7, 24) - q(1, 4) * f3 + tail(7L * n - 2 * v - 12, 6);
    case HClass::H5: return q(-5, 24) - q(1, 2) * f3 + tail(5L * n - v - 9, 6);
    case HClass::H6: return 0;
  }
  return 0;
}

SqForms sq_forms(const Graph& g) {
  const int v = g.order();
  const std::uint32_t all = g.vertices();
  SqForms s;
  long nonedge = 0, edge = 0;
  for (int z1 = 0; z1 < v; ++z1)
    for (int z2 = 0; z2 < v; ++z2) {
      if (z1 == z2) continue;
      const std::uint32_t n1 = g.neighbors(z1), n2 = g.neighbors(z2);
      const std::uint32_t co1 = all & ~n1 & ~(1u << z1), co2 = all & ~n2 & ~(1u << z2);
      long d;
      if (g.has_edge(z1, z2)) {
        d = std::popcount(n1 & n2) - std::popcount(co1 & co2);
        edge += d * d;
      } else {
        d = std::popcount(n1 & co2) - std::popcount(co1 & n2);
        nonedge += d * d;
      }
    }
  s.nonedge = nonedge;
  s.edge = edge;
  return s;
}

std::array<Integer, 3> c_weight_sums(const Graph& g) {
  const int v = g.order();
  long total = 0, ne = 0, e = 0;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      for (int c = b + 1; c < v; ++c)
        for (int d = c + 1; d < v; ++d) {
          const HClass h = classify(g.induced({a, b, c, d}));
          total += c_weight(h);
          ne += c_weight_nonedge(h);
          e += c_weight_edge(h);
        }
  return {Integer(total), Integer(ne), Integer(e)};
}

Rational g_eval(HClass h, const Rational& x) {
  const Rational x3 = x * x * x;
  const Rational w = (1 - x) * x;
  switch (h) {
    case HClass::H1: return q(-5, 24) + x3 / 6 + w / 6 * max(5 - 5 * x, 10 * x - 7);
    case HClass::Hwedge: return q(-5, 24) + x3 / 12 + w / 6 * max(5 - 4 * x, 6 * x - 4);
    case HClass::Hpar: return q(-1, 3) + x3 / 3 + w * (4 - 2 * x) / 3;
    case HClass::Claw: return q(-1, 4) - q(3, 4) * x3 + w * (2 - x) / 2;
    case HClass::Path: return q(-7, 24) + w * (7 - 3 * x) / 6;
    case HClass::Tri: return q(-1, 4) + x3 / 4 + w * (2 - x) / 2;
    case HClass::Cyc: return q(-1, 4) - x3 + w * (3 - x) / 3;
    case HClass::Hq: return q(-7, 24) - x3 / 4 + w * (7 - 2 * x) / 6;
    case HClass::H5: return q(-5, 24) - x3 / 2 + w * (5 - x) / 6;
    default: break;
  }
  throw Error(ErrorCode::BadParameter, "no g row for " + std::string(class_name(h)));
}

Rational g_eval_h5_printed(const Rational& x) { return g_eval(HClass::H5, x) - q(1, 12); }

std::optional<GMax> g_claimed_max(HClass h) {
  switch (h) {
    case HClass::H1: return GMax{q(-1, 24), q(1)};
    case HClass::Hwedge: return GMax{q(-7, 72), q(2, 3)};
    case HClass::Hpar: return GMax{q(0), q(1)};
    case HClass::Claw: return GMax{q(-35, 108), q(2, 3)};
    case HClass::Path: return GMax{q(-23, 216), q(2, 3)};
    case HClass::Tri: return GMax{q(0), q(1)};
    case HClass::Cyc: return GMax{q(-121, 324), q(2, 3)};
    case HClass::Hq: return GMax{q(-101, 648), q(2, 3)};
    case HClass::H5: return GMax{q(-127, 648), q(2, 3)};
    default: return std::nullopt;
  }
}

Report epsilon_table_check(int n_lo, int n_hi) {
  if (n_lo < 4 || n_hi < n_lo) throw Error(ErrorCode::BadParameter, "epsilon grid needs 4 <= n_lo <= n_hi");
  Report rep("epsilon");
  long row_sign_breaks = 0;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int v = 4; v <= n; ++v)
      for (HClass h : kAllClasses) {
        const Graph g = representative(h);
        const EpsTable t = eps_table_for(h);
        const int ebar = class_data(h).ebar;
        const Rational bound = claim_bound(h, n, v);
        const std::string at = std::string(class_name(h)) + "," + nv(n, v);
        std::array<std::optional<Rational>, 5> best;
        for (std::uint32_t y = 0; y < 16; ++y) {
          const Rational e = epsilon(n, v, g, y);
          const int k = std::popcount(y);
          if (!best[k] || e > *best[k]) best[k] = e;
          if (y == 0) rep.check(e == 0, at + ",Y=0", "epsilon " + to_string(e) + " with empty Y");
          if (v < n) rep.check(e <= bound, at + ",Y=" + std::to_string(y), to_string(e) + " > bound " + to_string(bound));
        }
        for (int k = 1; k <= 4; ++k) {
          const Rational row = eps_row(t, ebar, k, n, v);
          const std::string where = at + ",k=" + std::to_string(k);
          if (eps_row_exact(t, k))
            rep.check(*best[k] == row, where, "max epsilon " + to_string(*best[k]) + " != row " + to_string(row));
          else
            rep.check(*best[k] <= row, where, "max epsilon " + to_string(*best[k]) + " > row " + to_string(row));
          if (v == n) continue;
          // Signs are checked on the attained maximum. The tabulated rows themselves
          // break their sign column at a few points, which are only counted.
          const SignClaim sign = eps_row_sign(t, k);
          if ((sign == SignClaim::Negative && row >= 0) || (sign == SignClaim::NonPositive && row > 0)) ++row_sign_breaks;
          const SignClaim needed = t == EpsTable::Hwedge && k == 2 ? SignClaim::NonPositive : sign;
          switch (needed) {
            case SignClaim::NonPositive: rep.check(*best[k] <= 0, where, "max epsilon " + to_string(*best[k]) + " > 0"); break;
            case SignClaim::Negative: rep.check(*best[k] < 0, where, "max epsilon " + to_string(*best[k]) + " >= 0"); break;
            case SignClaim::None: break;
          }
        }
      }
  rep.info()["grid"] = "n in [" + std::to_string(n_lo) + "," + std::to_string(n_hi) + "], 4 <= v <= n";
  rep.info()["tabulated_rows_breaking_sign_column"] = row_sign_breaks;
  rep.set_columns({"table", "k", "numerator", "row", "exact", "sign_for_v_lt_n"});
  for (EpsTable t : {EpsTable::SparseComplement, EpsTable::Hpar, EpsTable::Hwedge, EpsTable::H1, EpsTable::H0})
    for (int k = 1; k <= 4; ++k) {
      std::string numer;
      if (t == EpsTable::SparseComplement) {
        static constexpr std::array<std::string_view, 4> sym = {"2e", "2e+4", "6e", "6e"};
        numer = std::string(sym[k - 1]);
      } else {
        numer = std::to_string(eps_numerators(t, 0)[k - 1]);
      }
      const auto sign = eps_row_sign(t, k);
      rep.add_row({std::string(eps_table_name(t)), std::to_string(k), numer,
                   "-" + std::to_string(k) + "v/(2(n)_2) + " + numer + "(v)_2/(12(n)_3)",
                   eps_row_exact(t, k) ? "exact" : "bound",
                   sign == SignClaim::Negative ? "<0" : sign == SignClaim::NonPositive ? "<=0" : "-"});
    }
  return rep;
}

Report case1_check(int n_lo, int n_hi) {
  if (n_lo < 4 || n_hi < n_lo) throw Error(ErrorCode::BadParameter, "small-v grid needs 4 <= n_lo <= n_hi");
  Report rep("case1");
  for (int n = n_lo; n <= n_hi; ++n) {
    const Rational layer = q(n * n / 4) / Rational(falling(n, 2));
    for (int v = 4; 3 * v <= 2 * n - 1; ++v) {
      const Rational cap = ratio(Integer((n - v) * v), falling(n, 2));
      rep.check(cap <= layer, nv(n, v), "(n-v)v/(n)_2 exceeds floor(n^2/4)/(n)_2");
      for (DstarVariant var : {DstarVariant::Derived, DstarVariant::Printed}) {
        Rational best = dstar(var, HClass::H0, n, v);
        for (HClass h : kAllClasses) best = max(best, dstar(var, h, n, v));
        rep.check(best <= cap, std::string(variant_name(var)) + "," + nv(n, v),
                  "max d* " + to_string(best) + " > " + to_string(cap));
      }
      const Integer f2 = falling(v, 2);
      const Integer n3 = falling(n, 3);
      const long h0_poly = 1L * v * v + 4L * n * v - 17L * v - 4L * n * n + 12L * n + 6;
      const std::array<std::pair<HClass, Rational>, 5> closed = {{
          {HClass::H0, cap + ratio(f2 * h0_poly, 4 * falling(n, 4))},
          {HClass::H1, cap + ratio(f2 * (6L * v - 5 * n - 2), 6 * n3)},
          {HClass::Hwedge, cap + ratio(f2 * (9L * v - 8 * n - 2), 12 * n3)},
          {HClass::Hpar, cap + ratio(f2 * (3L * v - 2 * n - 2), 3 * n3)},
          {HClass::Tri, cap + ratio(f2 * (3L * v - 2 * n - 2), 4 * n3)},
      }};
      for (const auto& [h, value] : closed) {
        const std::string at = std::string(class_name(h)) + "," + nv(n, v);
        rep.check(dstar(h, n, v) == value, at, "closed form " + to_string(value) + " != d* " + to_string(dstar(h, n, v)));
        rep.check(value < cap, at, "closed form not below (n-v)v/(n)_2");
      }
      rep.check(9 * h0_poly <= -8L * n * n - 10L * n + 106 && -8L * n * n - 10L * n + 106 < 0, "H0," + nv(n, v),
                "H0 polynomial bound fails");
    }
  }
  rep.info()["grid"] = "n in [" + std::to_string(n_lo) + "," + std::to_string(n_hi) + "], 4 <= v <= (2n-1)/3";
  return rep;
}

namespace {

template <class Body>
void for_case2_grid(int n_max, Body&& body) {
  for (int n = 7; n <= n_max; ++n)
    for (int v = std::max(4, (2 * n + 2) / 3); v <= n; ++v) body(n, v);
}

bool in_equality_set(HClass h, int n, int v) {
  switch (h) {
    case HClass::H0: return v >= n - 1;
    case HClass::Hpar:
    case HClass::Tri: return v == n;
    case HClass::H6: return true;
    default: return false;
  }
}

}  // namespace

Report consistency_check(int n_max) {
  Report rep("consistency");
  for_case2_grid(n_max, [&](int n, int v) {
    const Rational gam = gamma(n, v);
    for (DstarVariant var : {DstarVariant::Derived, DstarVariant::Printed})
      for (HClass h : kAllClasses) {
        const Rational value = dstar(var, h, n, v) + gam * c_weight(h) - q(1, 4);
        const std::string at = std::string(variant_name(var)) + "," + std::string(class_name(h)) + "," + nv(n, v);
        rep.check(value <= 0, at, "d* + gamma c - 1/4 = " + to_string(value) + " > 0");
        rep.check((value == 0) == in_equality_set(h, n, v), at,
                  "equality pattern mismatch, value " + to_string(value));
      }
  });
  rep.info()["grid"] = "7 <= n <= " + std::to_string(n_max) + ", max(4, 2n/3) <= v <= n";
  rep.info()["equality_set"] = "H0 at v in {n-1, n}; Hpar, Tri at v = n; H6 everywhere";
  return rep;
}

Report simplified_table_check(int n_max) {
  Report rep("simplified");
  for_case2_grid(n_max, [&](int n, int v) {
    const Rational gam = gamma(n, v);
    for (HClass h : kAllClasses) {
      const Rational expect = dstar_printed(h, n, v) + gam * c_weight(h) - q(1, 4);
      const Rational row = simplified_row(h, n, v);
      rep.check(row == expect, std::string(class_name(h)) + "," + nv(n, v),
                "row " + to_string(row) + " != " + to_string(expect));
    }
  });
  rep.info()["grid"] = "7 <= n <= " + std::to_string(n_max) + ", max(4, 2n/3) <= v <= n";
  rep.set_columns({"class", "row_at_n60_v40", "row_at_n60_v60"});
  for (HClass h : kAllClasses)
    rep.add_row({std::string(class_name(h)), to_string(simplified_row(h, 60, 40)), to_string(simplified_row(h, 60, 60))});
  return rep;
}

Report gamma_check(int n_max) {
  Report rep("gamma_c");
  for_case2_grid(n_max, [&](int n, int v) { rep.check(gamma(n, v) >= 0, nv(n, v), "gamma " + to_string(gamma(n, v)) + " < 0"); });
  for (int n = 7; n <= n_max; ++n) rep.check(gamma(n, n) == q(1, 96), nv(n, n), "gamma(n,n) != 1/96");
  rep.set_columns({"class", "c_weight", "c_nonedge", "c_edge"});
  for (HClass h : kAllClasses) {
    rep.check(c_weight_nonedge(h) + c_weight_edge(h) == c_weight(h), std::string(class_name(h)), "split does not sum");
    rep.add_row({std::string(class_name(h)), std::to_string(c_weight(h)), std::to_string(c_weight_nonedge(h)),
                 std::to_string(c_weight_edge(h))});
  }
  rep.info()["gamma"] = "1/96 - (n-v)v/(24(n)_2)";
  return rep;
}

Report g_max_check() {
  Report rep("gmax");
  constexpr long kSteps = 3000;
  rep.set_columns({"class", "claimed_max", "claimed_argmax", "value_at_argmax", "grid_max", "grid_argmax"});
  for (HClass h : kGClasses) {
    const GMax claim = *g_claimed_max(h);
    const std::string name(class_name(h));
    Rational grid_max = g_eval(h, q(2, 3));
    Rational grid_arg = q(2, 3);
    for (long i = 2 * kSteps / 3; i <= kSteps; ++i) {
      const Rational x = q(i, kSteps);
      const Rational g = g_eval(h, x);
      rep.check(g <= claim.value, name + ",x=" + to_string(x), "g = " + to_string(g) + " exceeds " + to_string(claim.value));
      if (g > grid_max) {
        grid_max = g;
        grid_arg = x;
      }
    }
    const Rational at = g_eval(h, claim.argmax);
    rep.check(at == claim.value, name + ",argmax", "g(argmax) = " + to_string(at) + " != " + to_string(claim.value));
    for (const Rational& end : {q(2, 3), q(1)})
      rep.check(g_eval(h, end) <= claim.value, name + ",x=" + to_string(end), "endpoint exceeds claimed max");
    rep.add_row({name, to_string(claim.value), to_string(claim.argmax), to_string(at), to_string(grid_max), to_string(grid_arg)});
  }
  rep.info()["grid_step"] = "1/3000";
  rep.info()["h5_constant"] = "-5/24";
  rep.info()["h5_printed_constant"] = "-7/24";
  rep.info()["h5_printed_value_at_2/3"] = to_string(g_eval_h5_printed(q(2, 3)));
  return rep;
}

Report g_limit_check() {
  Report rep("glimit");
  rep.set_columns({"class", "x", "gap_n30", "gap_n60", "gap_n120"});
  for (HClass h : kGClasses)
    for (const Rational& x : {q(2, 3), q(5, 6), q(1)}) {
      std::array<Rational, 3> gap;
      const std::array<int, 3> ns = {30, 60, 120};
      for (int i = 0; i < 3; ++i) {
        const Rational xv = x * ns[i];
        const int v = static_cast<int>(xv.get_num().get_si() / xv.get_den().get_si());
        const Rational d = simplified_row(h, ns[i], v) - g_eval(h, x);
        gap[i] = ns[i] * abs(d);
      }
      const std::string at = std::string(class_name(h)) + ",x=" + to_string(x);
      for (int i = 0; i + 1 < 3; ++i)
        rep.check(gap[i + 1] <= q(3, 2) * gap[i], at, "n*|row - g| grows from " + to_string(gap[i]) + " to " + to_string(gap[i + 1]));
      rep.add_row({std::string(class_name(h)), to_string(x), to_string(gap[0]), to_string(gap[1]), to_string(gap[2])});
    }
  return rep;
}

Report dstar_table() {
  Report rep("dstar");
  long printed_exceeded = 0;
  for (int n = 5; n <= 30; ++n)
    for (int v = 4; v <= n; ++v)
      for (HClass h : kAllClasses) {
        const std::string at = std::string(class_name(h)) + "," + nv(n, v);
        const Rational derived = dstar(h, n, v), printed = dstar_printed(h, n, v);
        const bool differs = h == HClass::Claw || h == HClass::Cyc || h == HClass::Hq || h == HClass::H5;
        if (differs)
          rep.check(derived > printed, at, "derived row not above printed row");
        else
          rep.check(derived == printed, at, "derived " + to_string(derived) + " != printed " + to_string(printed));
        // Largest d(H) over all W: H on vertices 0..3 of an otherwise empty
        // graph, every w taking the ε-maximizing Y∩H.
        StructureW s;
        s.graph = Graph(v);
        for (auto [a, b] : representative(h).edges()) s.graph.add_edge(a, b);
        std::uint32_t best_y = 0;
        Rational best = 0;
        for (std::uint32_t y = 0; y < 16; ++y) {
          const Rational e = epsilon(n, v, representative(h), y);
          if (e > best) {
            best = e;
            best_y = y;
          }
        }
        s.parts.assign(n - v, Bipartition::from_x(low_mask(v) & ~best_y, v));
        const Rational d = density_of_quad(n, s, 0xFu);
        rep.check(d <= derived, at, "d(H) = " + to_string(d) + " exceeds derived d* " + to_string(derived));
        if (d > printed) ++printed_exceeded;
      }
  rep.info()["grid"] = "n in [5,30], 4 <= v <= n";
  rep.info()["cases_where_d_exceeds_printed_row"] = printed_exceeded;
  rep.set_columns({"class", "alpha1", "alpha2", "beta0", "ebar", "printed_lead", "derived_lead", "claim_bound"});
  for (HClass h : kAllClasses) {
    const ClassData d = class_data(h);
    const std::string lead = h == HClass::H0 ? "(v)_4/(n)_4" : "(v)_3/(n)_3";
    const Rational derived = h == HClass::H0 ? q(d.beta0, 4) : q(d.alpha1 - d.alpha2, 12);
    const std::string bound = h == HClass::H0       ? "3v/(n)_2*max{0,(v-1)/(n-2)-2/3}"
                              : h == HClass::H1     ? "5v/(2(n)_2)*max{0,(v-1)/(n-2)-4/5}"
                              : h == HClass::Hwedge ? "5v/(3(n)_2)*max{0,(v-1)/(n-2)-9/10}"
                                                    : "0";
    rep.add_row({std::string(class_name(h)), std::to_string(d.alpha1), std::to_string(d.alpha2), std::to_string(d.beta0),
                 std::to_string(d.ebar), to_string(printed_coefficients()[index_of(h)]) + " " + lead,
                 to_string(derived) + " " + lead, bound});
  }
  return rep;
}

namespace {

int pair_index(int v, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * (v - 1) - i * (i - 1) / 2 + (j - i - 1);
}

std::uint64_t relabelled_code(int v, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  for (auto [i, j] : edges) code |= std::uint64_t{1} << pair_index(v, perm[i], perm[j]);
  return code;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int v = g.order();
  if (v > 8) throw Error(ErrorCode::TooManyVertices, "canonical_code needs v <= 8");
  const auto edges = g.edges();
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = UINT64_MAX;
  do {
    best = std::min(best, relabelled_code(v, edges, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::uint64_t> iso_class_codes(int v, unsigned threads) {
  if (v < 0 || v > 7) throw Error(ErrorCode::BadParameter, "iso_class_codes needs 0 <= v <= 7");
  if (v <= 6) {
    const int pairs = v * (v - 1) / 2;
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::uint8_t> seen(std::size_t{1} << pairs, 0);
    std::vector<std::uint64_t> reps;
    for (std::uint64_t code = 0; code < seen.size(); ++code) {
      if (seen[code]) continue;
      reps.push_back(code);
      const auto edges = Graph::from_code(v, code).edges();
      for (const auto& p : perms) seen[relabelled_code(v, edges, p)] = 1;
    }
    return reps;
  }
  // v = 7: extend each 6-vertex class by a vertex with every neighbor set.
  const auto base = iso_class_codes(6, threads);
  std::vector<std::uint64_t> canon(base.size() * 64);
  parallel_for(canon.size(), threads, [&](std::size_t k) {
    const Graph g6 = Graph::from_code(6, base[k / 64]);
    Graph g(7);
    for (auto [i, j] : g6.edges()) g.add_edge(i, j);
    for (int i = 0; i < 6; ++i)
      if ((k % 64 >> i) & 1u) g.add_edge(i, 6);
    canon[k] = canonical_code(g);
  });
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return canon;
}

namespace {

struct Lemma3Slot {
  std::uint64_t cases = 0;
  Report violations;
  // Worst (f - 1/4) * 4(n-3) = num / den.
  long long worst_num = 0;
  long long worst_den = 0;
  std::string worst_where;
};

void scan_graph(const Graph& g, int n_max, Lemma3Slot& slot) {
  const int v = g.order();
  const auto census = subgraph_census(g);
  const long long a12 = 2 * static_cast<long long>(census.alpha[1]) - 2 * static_cast<long long>(census.alpha[2]);
  const long long b0 = static_cast<long long>(census.beta[0]);
  const auto profile = bracket_profile(g);
  for (int n = std::max(11, v); n <= n_max; ++n) {
    long long k = LLONG_MIN;
    for (const auto& p : profile) k = std::max(k, static_cast<long long>(p.a) * (n - 2) + p.b);
    // f * (n)_4 and the bound (n-2)/(4(n-3)) * (n)_4.
    const long long nn = n;
    const long long lhs = a12 * (nn - 3) + 6 * b0 + (nn - v) * k * (nn - 3);
    const long long n4 = nn * (nn - 1) * (nn - 2) * (nn - 3);
    const long long rhs4 = nn * (nn - 1) * (nn - 2) * (nn - 2);
    ++slot.cases;
    const std::string where = "v=" + std::to_string(v) + ",code=" + std::to_string(g.code()) + ",n=" + std::to_string(n);
    if (4 * lhs > rhs4) slot.violations.add_violation(where, "worst-case f exceeds 1/4 + 1/(4(n-3))");
    const long long num = 4 * lhs - n4;
    const long long den = nn * (nn - 1) * (nn - 2);
    if (slot.worst_den == 0 || static_cast<__int128>(num) * slot.worst_den > static_cast<__int128>(slot.worst_num) * den) {
      slot.worst_num = num;
      slot.worst_den = den;
      slot.worst_where = where;
    }
  }
}

}  // namespace

Report lemma3_scan(int v_max, int n_max, unsigned threads) {
  if (v_max < 0 || v_max > 7) throw Error(ErrorCode::BadParameter, "lemma3 scan needs 0 <= v_max <= 7");
  if (n_max < 11 || n_max > 10000) throw Error(ErrorCode::BadParameter, "lemma3 scan needs 11 <= n_max <= 10000");
  struct Item {
    int v;
    std::uint64_t first, last;  // labeled code range [first, last), or class indices for v = 7
  };
  constexpr std::uint64_t kChunk = 512;
  std::vector<Item> items;
  Report rep("lemma3");
  for (int v = 0; v <= std::min(v_max, 6); ++v) {
    const std::uint64_t count = std::uint64_t{1} << (v * (v - 1) / 2);
    for (std::uint64_t c = 0; c < count; c += kChunk) items.push_back({v, c, std::min(count, c + kChunk)});
    rep.info()["graphs_v" + std::to_string(v)] = count;
  }
  std::vector<std::uint64_t> classes7;
  if (v_max >= 7) {
    classes7 = iso_class_codes(7, threads);
    for (std::uint64_t c = 0; c < classes7.size(); c += kChunk / 8)
      items.push_back({7, c, std::min<std::uint64_t>(classes7.size(), c + kChunk / 8)});
    rep.info()["graphs_v7_iso_classes"] = classes7.size();
  }
  std::vector<Lemma3Slot> slots(items.size());
  parallel_for(items.size(), threads, [&](std::size_t i) {
    const Item& it = items[i];
    for (std::uint64_t c = it.first; c < it.last; ++c)
      scan_graph(Graph::from_code(it.v, it.v == 7 ? classes7[c] : c), n_max, slots[i]);
  });
  Lemma3Slot worst;
  for (auto& s : slots) {
    rep.add_cases(s.cases);
    rep.absorb(s.violations);
    if (s.worst_den != 0 &&
        (worst.worst_den == 0 ||
         static_cast<__int128>(s.worst_num) * worst.worst_den > static_cast<__int128>(worst.worst_num) * s.worst_den)) {
      worst.worst_num = s.worst_num;
      worst.worst_den = s.worst_den;
      worst.worst_where = s.worst_where;
    }
  }
  rep.info()["n_range"] = "max(11,v).." + std::to_string(n_max);
  rep.info()["bound"] = "1/4 + 1/(4(n-3))";
  if (worst.worst_den != 0) {
    rep.info()["worst_slack_ratio"] = to_string(q(worst.worst_num, worst.worst_den));
    rep.info()["worst_case"] = worst.worst_where;
  }
  return rep;
}

}  // namespace diamondlab
