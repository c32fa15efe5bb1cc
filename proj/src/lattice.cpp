#include "diamondlab/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "diamondlab/error.hpp"
#include "diamondlab/parallel.hpp"

namespace diamondlab {

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

ElementSet ElementSet::from_elements(std::span<const int> elements) {
  std::uint32_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > 32) throw Error(ErrorCode::BadParameter, "element out of range: " + std::to_string(e));
    bits |= 1u << (e - 1);
  }
  return ElementSet(bits);
}

Family::Family(int n, std::vector<ElementSet> members) : n_(n), members_(std::move(members)) {
  if (n < 0 || n > kMaxFamilyUniverse)
    throw Error(ErrorCode::BadParameter, "universe size must be in [0, 24], got " + std::to_string(n));
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (auto s : members_)
    if (s.bits >= limit) throw Error(ErrorCode::BadParameter, "set " + format_set(s) + " is not a subset of [n]");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Family Family::from_masks(int n, std::span<const std::uint32_t> masks) {
  std::vector<ElementSet> sets;
  sets.reserve(masks.size());
  for (auto m : masks) sets.emplace_back(m);
  return Family(n, std::move(sets));
}

bool Family::contains(ElementSet s) const { return std::binary_search(members_.begin(), members_.end(), s); }

std::vector<std::uint8_t> Family::indicator() const {
  std::vector<std::uint8_t> table(std::size_t{1} << n_, 0);
  for (auto s : members_) table[s.bits] = 1;
  return table;
}

std::vector<ElementSet> Family::by_size() const {
  auto out = members_;
  std::stable_sort(out.begin(), out.end(), size_then_bits_less);
  return out;
}

Family Family::with(ElementSet s) const {
  auto m = members_;
  m.push_back(s);
  return Family(n_, std::move(m));
}

Integer binomial(long n, long k) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer falling(long x, int k) {
  if (k < 0) throw Error(ErrorCode::BadParameter, "falling factorial requires k >= 0");
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= x - i;
  return r;
}

Rational falling(const Rational& x, int k) {
  if (k < 0) throw Error(ErrorCode::BadParameter, "falling factorial requires k >= 0");
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x - i;
  return r;
}

Rational lubell(const Family& family) {
  const int n = family.universe();
  std::vector<long> per_layer(n + 1, 0);
  for (auto s : family) ++per_layer[s.size()];
  Rational total = 0;
  for (int k = 0; k <= n; ++k)
    if (per_layer[k] != 0) total += Rational(Integer(per_layer[k]), binomial(n, k));
  total.canonicalize();
  return total;
}

Family layer(int n, int size) {
  std::vector<ElementSet> sets;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m)
    if (std::popcount(m) == size) sets.emplace_back(m);
  return Family(n, std::move(sets));
}

Family middle_layers(int n, int k) {
  if (n < 0 || n > kMaxFamilyUniverse) throw Error(ErrorCode::BadParameter, "n out of range");
  if (k < 1 || k > n + 1) throw Error(ErrorCode::BadParameter, "middle_layers requires 1 <= k <= n+1");
  const int lo = (n - k + 1) / 2;
  const int hi = (n + k - 1) / 2;
  std::vector<ElementSet> sets;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    int s = std::popcount(m);
    if (s >= lo && s <= hi) sets.emplace_back(m);
  }
  return Family(n, std::move(sets));
}

Integer largest_binomial_sum(int n, int k) {
  std::vector<Integer> coeffs;
  for (int l = 0; l <= n; ++l) coeffs.push_back(binomial(n, l));
  std::sort(coeffs.begin(), coeffs.end(), [](const Integer& a, const Integer& b) { return a > b; });
  Integer sum = 0;
  for (int i = 0; i < k && i < static_cast<int>(coeffs.size()); ++i) sum += coeffs[i];
  return sum;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t PsiCensus::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

Rational PsiCensus::average_hits() const {
  Integer weighted = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) weighted += Integer(static_cast<unsigned long>(counts[i])) * static_cast<unsigned long>(i);
  return ratio(weighted, Integer(static_cast<unsigned long>(factorial(n))));
}

PsiCensus psi_census(const Family& family, unsigned threads) {
  const int n = family.universe();
  if (n > kMaxChainUniverse)
    throw Error(ErrorCode::UniverseTooLarge, "chain census needs n <= 10, got " + std::to_string(n));
  const auto member = family.indicator();
  const int base_hit = member[0];

  PsiCensus census{n, std::vector<std::uint64_t>(n + 2, 0)};
  if (n == 0) {
    census.counts[base_hit] = 1;
    return census;
  }

  // One task per first element; each task walks the permutations of the rest.
  std::vector<std::vector<std::uint64_t>> partial(n, std::vector<std::uint64_t>(n + 2, 0));
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t first) {
    std::vector<int> rest;
    for (int e = 0; e < n; ++e)
      if (e != static_cast<int>(first)) rest.push_back(e);
    const std::uint32_t start = 1u << first;
    const int start_hits = base_hit + member[start];
    auto& counts = partial[first];
    do {
      std::uint32_t prefix = start;
      int hits = start_hits;
      for (int e : rest) {
        prefix |= 1u << e;
        hits += member[prefix];
      }
      ++counts[hits];
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  for (const auto& p : partial)
    for (int i = 0; i < n + 2; ++i) census.counts[i] += p[i];
  return census;
}

std::string format_set(ElementSet s) {
  if (s.empty()) return "{}";
  std::string out;
  for (int e : s.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& tok, const std::string& line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "bad integer '" + tok + "' in line '" + line + "'");
  }
}

}  // namespace

Family read_family(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<ElementSet> sets;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (n < 0) {
      if (line.rfind("n=", 0) != 0) throw Error(ErrorCode::Parse, "family file must start with 'n=<int>'");
      n = parse_int(trim(line.substr(2)), line);
      if (n < 0 || n > kMaxFamilyUniverse) throw Error(ErrorCode::Parse, "n must be in [0, 24]");
      continue;
    }
    std::string body = line;
    if (body.front() == '{') {
      if (body.back() != '}') throw Error(ErrorCode::Parse, "unbalanced braces in '" + line + "'");
      body = trim(body.substr(1, body.size() - 2));
    }
    std::vector<int> elems;
    if (!body.empty()) {
      std::stringstream ss(body);
      std::string tok;
      while (std::getline(ss, tok, ',')) elems.push_back(parse_int(trim(tok), line));
    }
    for (int e : elems)
      if (e < 1 || e > n) throw Error(ErrorCode::Parse, "element " + std::to_string(e) + " outside [n]");
    if (!std::is_sorted(elems.begin(), elems.end()) || std::adjacent_find(elems.begin(), elems.end()) != elems.end())
      throw Error(ErrorCode::Parse, "elements must be strictly ascending in '" + line + "'");
    sets.push_back(ElementSet::from_elements(elems));
  }
  if (n < 0) throw Error(ErrorCode::Parse, "missing 'n=<int>' header");
  return Family(n, std::move(sets));
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return read_family(in);
}

Family parse_family(const std::string& text) {
  std::istringstream in(text);
  return read_family(in);
}

void write_family(std::ostream& out, const Family& family) {
  out << "n=" << family.universe() << '\n';
  for (auto s : family) out << format_set(s) << '\n';
}

std::string format_family(const Family& family) {
  std::ostringstream out;
  write_family(out, family);
  return out.str();
}

}  // namespace diamondlab
