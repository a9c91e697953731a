#include "matchstat/matching.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

namespace matchstat {

namespace {

int parse_label(std::string_view tok, std::string_view whole) {
  int value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 1) {
    throw ParseError("invalid vertex label '" + std::string(tok) + "' in edge '" +
                     std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Matching Matching::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) return Matching();
  std::vector<std::pair<int, int>> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - pos));
    std::size_t dash = tok.find('-');
    if (tok.empty() || dash == std::string_view::npos) {
      throw ParseError("invalid edge token '" + std::string(tok) + "'");
    }
    int a = parse_label(trim(tok.substr(0, dash)), tok);
    int b = parse_label(trim(tok.substr(dash + 1)), tok);
    edges.emplace_back(a, b);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_edges(edges);
}

Matching Matching::from_edges(const std::vector<std::pair<int, int>>& edges) {
  const int two_n = static_cast<int>(edges.size()) * 2;
  Matching m;
  m.mate_.assign(static_cast<std::size_t>(two_n), -1);
  for (auto [a, b] : edges) {
    if (a == b) throw ParseError("vertex " + std::to_string(a) + " repeated");
    for (int v : {a, b}) {
      if (v < 1 || v > two_n) {
        throw ParseError("vertex " + std::to_string(v) +
                         " out of range 1.." + std::to_string(two_n));
      }
      if (m.mate_[static_cast<std::size_t>(v - 1)] != -1) {
        throw ParseError("vertex " + std::to_string(v) + " repeated");
      }
    }
    m.mate_[static_cast<std::size_t>(a - 1)] = b - 1;
    m.mate_[static_cast<std::size_t>(b - 1)] = a - 1;
  }
  // Range + repetition checks above already force the labels to cover
  // [1,2n] exactly; -1 can no longer appear.
  return m;
}

Matching Matching::fully_nested(int n) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, 2 * n + 1 - i);
  return from_edges(edges);
}

Matching Matching::fully_adjacent(int n) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) edges.emplace_back(2 * i - 1, 2 * i);
  return from_edges(edges);
}

Matching Matching::permutational(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : pi) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, n + pi[static_cast<std::size_t>(i - 1)]);
  return from_edges(edges);
}

int Matching::partner(int v) const {
  if (v < 1 || v > vertex_count()) throw std::out_of_range("vertex out of range");
  return mate_[static_cast<std::size_t>(v - 1)] + 1;
}

std::vector<std::pair<int, int>> Matching::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v = 0; v < vertex_count(); ++v) {
    if (mate_[static_cast<std::size_t>(v)] > v) out.emplace_back(v + 1, mate_[static_cast<std::size_t>(v)] + 1);
  }
  return out;
}

std::string Matching::format() const {
  std::string out;
  bool first = true;
  for (auto [a, b] : edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(a);
    out += '-';
    out += std::to_string(b);
  }
  return out;
}

int Matching::crossings() const { return cross_nest(*this).cr; }

int Matching::nestings() const { return cross_nest(*this).ne; }

int Matching::camels() const {
  const auto es = edges();
  int count = 0;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      // es[i].first < es[j].first; separated means the whole second edge
      // lies to the right of the first.
      if (es[i].second < es[j].first) ++count;
    }
  }
  return count;
}

CrossNest cross_nest(const Matching& m) {
  const auto es = m.edges();
  CrossNest out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      // a1 < a2 always holds here.
      const int b1 = es[i].second, a2 = es[j].first, b2 = es[j].second;
      if (a2 < b1 && b1 < b2) ++out.cr;
      if (b2 < b1) ++out.ne;
    }
  }
  return out;
}

Matching Matching::insert_first_edge(int gap) const {
  const int two_n = vertex_count();
  if (gap < 1 || gap > two_n + 1) {
    throw std::out_of_range("gap " + std::to_string(gap) + " not in 1.." +
                            std::to_string(two_n + 1));
  }
  Matching child;
  child.mate_.assign(static_cast<std::size_t>(two_n) + 2, -1);
  // Old 0-based vertex i shifts right by 1 before the insertion point and by
  // 2 from it on; the new edge is {0, gap} in 0-based labels.
  for (int i = 0; i < two_n; ++i) {
    const int ni = i < gap - 1 ? i + 1 : i + 2;
    const int p = mate_[static_cast<std::size_t>(i)];
    const int np = p < gap - 1 ? p + 1 : p + 2;
    child.mate_[static_cast<std::size_t>(ni)] = np;
  }
  child.mate_[0] = gap;
  child.mate_[static_cast<std::size_t>(gap)] = 0;
  return child;
}

std::pair<Matching, int> Matching::remove_first_edge() const {
  if (empty()) throw std::domain_error("cannot remove the first edge of the empty matching");
  const int x = mate_[0];  // 0-based partner of vertex 1
  Matching parent;
  parent.mate_.assign(static_cast<std::size_t>(vertex_count()) - 2, -1);
  for (int i = 1; i < vertex_count(); ++i) {
    if (i == x) continue;
    const int ni = i < x ? i - 1 : i - 2;
    const int p = mate_[static_cast<std::size_t>(i)];
    const int np = p < x ? p - 1 : p - 2;
    parent.mate_[static_cast<std::size_t>(ni)] = np;
  }
  return {parent, x};
}

std::vector<Matching> Matching::children() const {
  std::vector<Matching> out;
  out.reserve(static_cast<std::size_t>(gap_count()));
  for (int g = 1; g <= gap_count(); ++g) out.push_back(insert_first_edge(g));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matching& m) { return os << m.format(); }

GapProfile gap_profile(const Matching& m) {
  const int gaps = m.gap_count();
  GapProfile gp;
  gp.cover.assign(static_cast<std::size_t>(gaps), 0);
  gp.left.assign(static_cast<std::size_t>(gaps), 0);
  // Edge (a,b) covers the gaps strictly inside the arc: 1-based gap indices
  // a+1..b, i.e. 0-based a..b-1. It lies left of gap j (1-based) iff b < j.
  std::vector<int> ends(static_cast<std::size_t>(gaps), 0);
  for (auto [a, b] : m.edges()) {
    gp.cover[static_cast<std::size_t>(a)] += 1;
    gp.cover[static_cast<std::size_t>(b)] -= 1;
    ends[static_cast<std::size_t>(b)] += 1;  // contributes to left[j] for j >= b (0-based)
  }
  int covering = 0, finished = 0;
  for (int j = 0; j < gaps; ++j) {
    covering += gp.cover[static_cast<std::size_t>(j)];
    gp.cover[static_cast<std::size_t>(j)] = covering;
    finished += ends[static_cast<std::size_t>(j)];
    gp.left[static_cast<std::size_t>(j)] = finished;
  }
  return gp;
}

mpz_class level_size(int n, int l) {
  if (n < 0 || l < 0) throw std::invalid_argument("level_size: negative argument");
  mpz_class out = 1;
  for (int i = 0; i < l; ++i) out *= 2 * n + 1 + 2 * i;
  return out;
}

mpz_class double_factorial_odd(int n) { return level_size(0, n); }

mpz_class catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: negative argument");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  return b / (n + 1);
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

int hardware_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

std::vector<Matching> level_matchings(const Matching& root, int depth, std::uint64_t cap) {
  const mpz_class expected = level_size(root.size(), depth);
  if (expected > mpz_class(static_cast<unsigned long>(cap))) {
    throw CapExceeded("level of size " + expected.get_str() + " exceeds cap " +
                      std::to_string(cap));
  }
  std::vector<Matching> out;
  out.reserve(expected.get_ui());
  for_each_level(root, depth, [&](const Matching& m) { out.push_back(m); });
  return out;
}

std::vector<Matching> all_matchings(int n, std::uint64_t cap) {
  return level_matchings(Matching(), n, cap);
}

}  // namespace matchstat
