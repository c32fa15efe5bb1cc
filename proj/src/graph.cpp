#include "diamondlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <sstream>

#include "diamondlab/error.hpp"
#include "diamondlab/patterns.hpp"

namespace diamondlab {

Graph::Graph(int v) : v_(v), adj_(static_cast<std::size_t>(std::max(v, 0)), 0) {
  if (v < 0 || v > kMaxGraphVertices)
    throw Error(ErrorCode::TooManyVertices, "graph order must be in [0, 32], got " + std::to_string(v));
}

Graph Graph::from_edges(int v, const std::vector<std::pair<int, int>>& edges) {
  Graph g(v);
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

Graph Graph::from_code(int v, std::uint64_t code) {
  Graph g(v);
  int bit = 0;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j, ++bit)
      if ((code >> bit) & 1u) g.add_edge(i, j);
  return g;
}

int Graph::degree(int i) const { return std::popcount(adj_[i]); }

void Graph::add_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= v_ || j >= v_ || i == j)
    throw Error(ErrorCode::BadParameter, "bad edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
  adj_[i] |= 1u << j;
  adj_[j] |= 1u << i;
}

void Graph::remove_edge(int i, int j) {
  adj_[i] &= ~(1u << j);
  adj_[j] &= ~(1u << i);
}

int Graph::edge_count() const { return edges_within(vertices()); }

int Graph::edges_within(std::uint32_t s) const {
  int twice = 0;
  for (std::uint32_t b = s; b != 0; b &= b - 1) twice += std::popcount(adj_[std::countr_zero(b)] & s);
  return twice / 2;
}

int Graph::nonedges_within(std::uint32_t s) const {
  const int k = std::popcount(s);
  return k * (k - 1) / 2 - edges_within(s);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < v_; ++i)
    for (int j = i + 1; j < v_; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

std::uint64_t Graph::code() const {
  std::uint64_t code = 0;
  int bit = 0;
  for (int i = 0; i < v_; ++i)
    for (int j = i + 1; j < v_; ++j, ++bit)
      if (has_edge(i, j)) code |= std::uint64_t{1} << bit;
  return code;
}

Graph Graph::complement() const {
  Graph g(v_);
  for (int i = 0; i < v_; ++i) g.adj_[i] = vertices() & ~adj_[i] & ~(1u << i);
  return g;
}

Graph Graph::induced(const std::vector<int>& vs) const {
  Graph g(static_cast<int>(vs.size()));
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (has_edge(vs[a], vs[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

SubgraphCensus subgraph_census(const Graph& g) {
  SubgraphCensus c;
  const int v = g.order();
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) {
      const int ab = g.has_edge(a, b);
      for (int d = b + 1; d < v; ++d) {
        const int abd = ab + g.has_edge(a, d) + g.has_edge(b, d);
        ++c.alpha[abd];
        for (int e = d + 1; e < v; ++e)
          ++c.beta[abd + g.has_edge(a, e) + g.has_edge(b, e) + g.has_edge(d, e)];
      }
    }
  return c;
}

StructureW extract_structure(const Family& family) {
  if (!family.contains_empty_set()) throw Error(ErrorCode::EmptySetMissing, "family does not contain the empty set");
  const int n = family.universe();
  StructureW s;
  std::vector<int> vertex_of(n + 1, -1);
  for (int e = 1; e <= n; ++e) {
    if (family.contains(ElementSet(1u << (e - 1)))) {
      s.w_elements.push_back(e);
    } else {
      vertex_of[e] = static_cast<int>(s.vertex_elements.size());
      s.vertex_elements.push_back(e);
    }
  }
  const int v = static_cast<int>(s.vertex_elements.size());
  if (v > kMaxGraphVertices) throw Error(ErrorCode::TooManyVertices, "too many non-singleton elements");
  s.graph = Graph(v);
  for (auto m : family) {
    if (m.size() != 2) continue;
    auto el = m.elements();
    if (vertex_of[el[0]] >= 0 && vertex_of[el[1]] >= 0) s.graph.add_edge(vertex_of[el[0]], vertex_of[el[1]]);
  }
  for (int w : s.w_elements) {
    std::uint32_t x = 0;
    for (int i = 0; i < v; ++i) {
      const std::uint32_t pair = (1u << (w - 1)) | (1u << (s.vertex_elements[i] - 1));
      if (family.contains(ElementSet(pair))) x |= 1u << i;
    }
    s.parts.push_back(Bipartition::from_x(x, v));
  }
  return s;
}

Rational structure_terms(int n, const SubgraphCensus& c) {
  const Integer a1(static_cast<unsigned long>(c.alpha[1])), a2(static_cast<unsigned long>(c.alpha[2]));
  const Integer b0(static_cast<unsigned long>(c.beta[0]));
  return ratio(2 * a1 - 2 * a2, falling(n, 3)) + ratio(6 * b0, falling(n, 4));
}

Rational bracket(int n, const Graph& g, const Bipartition& p) {
  const int dx = std::popcount(p.x) - std::popcount(p.y);
  const int eb = 4 * g.nonedges_within(p.y) - 2 * g.nonedges_within(p.x);
  return ratio(dx, falling(n, 2)) + ratio(eb, falling(n, 3));
}

namespace {

void check_structure(int n, const StructureW& s) {
  const int v = s.graph.order();
  if (v > n || static_cast<int>(s.parts.size()) != n - v)
    throw Error(ErrorCode::BadDimensions, "structure needs exactly n - v bipartitions (n=" + std::to_string(n) +
                                              ", v=" + std::to_string(v) + ", parts=" + std::to_string(s.parts.size()) + ")");
  for (const auto& p : s.parts)
    if (!p.valid_for(v)) throw Error(ErrorCode::BadDimensions, "part is not a bipartition of V");
}

}  // namespace

Rational f_value(int n, const StructureW& s) {
  check_structure(n, s);
  Rational total = structure_terms(n, subgraph_census(s.graph));
  for (const auto& p : s.parts) total += bracket(n, s.graph, p);
  return total;
}

Rational epsilon_term(int n, int v, int ebar_h, int y_count, int ebar_y, int ebar_x) {
  // -(v/(n)_2)(2k/4) = -k v / (2 (n)_2);  ((v)_2 / (2 (n)_3)) * N / 6 = (v)_2 N / (12 (n)_3).
  const Integer numer = 2 * ebar_h + 4 * ebar_y - 2 * ebar_x;
  return ratio(Integer(-y_count * v), 2 * falling(n, 2)) + ratio(falling(v, 2) * numer, 12 * falling(n, 3));
}

Rational density_of_quad(int n, const StructureW& s, std::uint32_t quad) {
  const Graph& g = s.graph;
  const int v = g.order();
  std::vector<int> vs;
  for (std::uint32_t b = quad; b != 0; b &= b - 1) vs.push_back(std::countr_zero(b));
  const auto local = subgraph_census(g.induced(vs));
  const int ebar_h = g.nonedges_within(quad);
  const Integer a1(static_cast<unsigned long>(local.alpha[1])), a2(static_cast<unsigned long>(local.alpha[2]));
  Rational d = ratio(falling(v, 3) * (a1 - a2), 12 * falling(n, 3)) +
               ratio(falling(v, 4) * static_cast<unsigned long>(local.beta[0]), 4 * falling(n, 4)) +
               ratio(Integer((n - v) * v), falling(n, 2)) -
               ratio(Integer(n - v) * falling(v, 2) * ebar_h, 6 * falling(n, 3));
  for (const auto& p : s.parts) {
    const std::uint32_t yh = p.y & quad, xh = p.x & quad;
    d += epsilon_term(n, v, ebar_h, std::popcount(yh), g.nonedges_within(yh), g.nonedges_within(xh));
  }
  return d;
}

Rational per_H_sum(int n, const StructureW& s) {
  check_structure(n, s);
  const int v = s.graph.order();
  if (v < 4) throw Error(ErrorCode::TooFewVertices, "per-4-subgraph sum needs v >= 4");
  Rational total = 0;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      for (int c = b + 1; c < v; ++c)
        for (int d = c + 1; d < v; ++d)
          total += density_of_quad(n, s, (1u << a) | (1u << b) | (1u << c) | (1u << d));
  total /= Rational(binomial(v, 4));
  return total;
}

std::vector<int> nonedge_table(const Graph& g) {
  const int v = g.order();
  if (v > 22) throw Error(ErrorCode::TooManyVertices, "bipartition enumeration needs v <= 22");
  std::vector<int> table(std::size_t{1} << v, 0);
  for (std::uint32_t x = 1; x < table.size(); ++x) {
    const int low = std::countr_zero(x);
    const std::uint32_t rest = x & (x - 1);
    table[x] = table[rest] + std::popcount(rest) - std::popcount(g.neighbors(low) & rest);
  }
  return table;
}

std::vector<BracketPoint> bracket_profile(const Graph& g) {
  const int v = g.order();
  const auto ebar = nonedge_table(g);
  const std::uint32_t all = g.vertices();
  std::vector<BracketPoint> pts;
  pts.reserve(ebar.size());
  for (std::uint32_t x = 0; x < ebar.size(); ++x) {
    const int a = 2 * std::popcount(x) - v;
    const int b = 4 * ebar[all & ~x] - 2 * ebar[x];
    pts.push_back({a, b, x});
  }
  std::stable_sort(pts.begin(), pts.end(), [](const BracketPoint& p, const BracketPoint& q) {
    return p.a != q.a ? p.a < q.a : p.b < q.b;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const BracketPoint& p, const BracketPoint& q) { return p.a == q.a && p.b == q.b; }),
            pts.end());
  // For each a only the largest b can ever be a maximizer.
  std::vector<BracketPoint> best;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (i + 1 == pts.size() || pts[i + 1].a != pts[i].a) best.push_back(pts[i]);
  return best;
}

BracketMax max_bracket(int n, const Graph& g) {
  const int v = g.order();
  if (v > 22) throw Error(ErrorCode::TooManyVertices, "max_bracket needs v <= 22");
  if (n < v) throw Error(ErrorCode::BadDimensions, "max_bracket needs n >= v");
  BracketMax out{Rational(0), Bipartition::from_x(0, v)};
  if (n < 3) {
    bool first = true;
    for (std::uint32_t x = 0; x <= low_mask(v); ++x) {
      const auto p = Bipartition::from_x(x, v);
      Rational val = bracket(n, g, p);
      if (first || val > out.value) out = {val, p};
      first = false;
      if (x == low_mask(v)) break;
    }
    return out;
  }
  const auto ebar = nonedge_table(g);
  const std::uint32_t all = g.vertices();
  long best = 0;
  std::uint32_t arg = 0;
  bool first = true;
  for (std::uint32_t x = 0; x < ebar.size(); ++x) {
    const long key = static_cast<long>(2 * std::popcount(x) - v) * (n - 2) + 4 * ebar[all & ~x] - 2 * ebar[x];
    if (first || key > best) {
      best = key;
      arg = x;
      first = false;
    }
  }
  out.value = ratio(Integer(best), falling(n, 3));
  out.part = Bipartition::from_x(arg, v);
  return out;
}

Rational worst_case_f(int n, const Graph& g) {
  if (n < g.order()) throw Error(ErrorCode::BadDimensions, "worst_case_f needs n >= v");
  return structure_terms(n, subgraph_census(g)) + (n - g.order()) * max_bracket(n, g).value;
}

PsiBoundsReport psi_bounds_check(const Family& family, unsigned threads) {
  const int n = family.universe();
  if (!family.contains_empty_set()) throw Error(ErrorCode::EmptySetMissing, "family does not contain the empty set");
  if (n < 3) throw Error(ErrorCode::BadDimensions, "psi bounds need n >= 3");
  if (n > 9) throw Error(ErrorCode::UniverseTooLarge, "psi bounds need n <= 9");
  if (!is_diamond_free(family)) throw Error(ErrorCode::NotDiamondFree, "family contains a diamond");

  const auto s = extract_structure(family);
  const Graph& g = s.graph;
  const auto c = subgraph_census(g);
  const auto census = psi_census(family, threads);
  const long wcount = static_cast<long>(s.parts.size());

  PsiBoundsReport r;
  r.n = n;
  r.psi1 = census.counts[1];
  r.psi3 = census.counts[3];

  Integer lower = 2 * Integer(static_cast<unsigned long>(c.alpha[2]));
  Integer upper3 = 2 * Integer(static_cast<unsigned long>(c.alpha[1]));
  Integer diff = 2 * (Integer(static_cast<unsigned long>(c.alpha[1])) - Integer(static_cast<unsigned long>(c.alpha[2])));
  for (const auto& p : s.parts) {
    const long x = std::popcount(p.x), y = std::popcount(p.y);
    const long ey = g.edges_within(p.y), ebx = g.nonedges_within(p.x), eby = g.nonedges_within(p.y);
    lower += x * y + 2 * ey + 2 * ebx + (wcount - 1) * y;
    upper3 += x * (n - 2) + y * (y - 1) - 2 * ey;
    diff += (x - y) * (n - 2) + 4 * eby - 2 * ebx;
  }
  const Rational beta_term = ratio(6 * Integer(static_cast<unsigned long>(c.beta[0])), Integer(n - 3));
  r.psi1_lower = lower;
  r.psi3_upper = Rational(upper3) + beta_term;
  r.difference_upper = Rational(diff) + beta_term;

  const Integer scale(static_cast<unsigned long>(factorial(n - 3)));
  const Integer p1(static_cast<unsigned long>(r.psi1)), p3(static_cast<unsigned long>(r.psi3));
  r.psi1_holds = p1 >= scale * lower;
  r.psi3_holds = Rational(p3, scale) <= r.psi3_upper;
  r.difference_holds = Rational(p3 - p1, scale) <= r.difference_upper;
  return r;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<int> parse_ints(const std::string& text, const std::string& line) {
  std::istringstream ss(text);
  std::vector<int> out;
  std::string tok;
  while (ss >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad integer '" + tok + "' in line '" + line + "'");
    }
  }
  return out;
}

StructureW read_structure_impl(std::istream& in, bool allow_parts) {
  std::string line;
  int v = -1;
  StructureW s;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (v < 0) {
      if (line.rfind("v=", 0) != 0) throw Error(ErrorCode::Parse, "graph file must start with 'v=<int>'");
      auto vals = parse_ints(line.substr(2), line);
      if (vals.size() != 1 || vals[0] < 0 || vals[0] > kMaxGraphVertices)
        throw Error(ErrorCode::Parse, "v must be in [0, 32]");
      v = vals[0];
      s.graph = Graph(v);
      continue;
    }
    if (line[0] == 'w') {
      if (!allow_parts) throw Error(ErrorCode::Parse, "unexpected bipartition line in a graph file");
      std::uint32_t x = 0;
      for (int i : parse_ints(line.substr(1), line)) {
        if (i < 1 || i > v) throw Error(ErrorCode::Parse, "vertex out of range in '" + line + "'");
        x |= 1u << (i - 1);
      }
      s.parts.push_back(Bipartition::from_x(x, v));
      continue;
    }
    auto ij = parse_ints(line, line);
    if (ij.size() != 2 || ij[0] < 1 || ij[1] < 1 || ij[0] > v || ij[1] > v || ij[0] == ij[1])
      throw Error(ErrorCode::Parse, "bad edge line '" + line + "'");
    s.graph.add_edge(ij[0] - 1, ij[1] - 1);
  }
  if (v < 0) throw Error(ErrorCode::Parse, "missing 'v=<int>' header");
  return s;
}

}  // namespace

Graph read_graph(std::istream& in) { return read_structure_impl(in, false).graph; }

StructureW read_structure(std::istream& in) { return read_structure_impl(in, true); }

StructureW read_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return read_structure(in);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "v=" << g.order() << '\n';
  for (auto [i, j] : g.edges()) out << i + 1 << ' ' << j + 1 << '\n';
  return out.str();
}

std::string format_structure(const StructureW& s) {
  std::ostringstream out;
  out << format_graph(s.graph);
  for (const auto& p : s.parts) {
    out << 'w';
    for (std::uint32_t b = p.x; b != 0; b &= b - 1) out << ' ' << std::countr_zero(b) + 1;
    out << '\n';
  }
  return out.str();
}

}  // namespace diamondlab
