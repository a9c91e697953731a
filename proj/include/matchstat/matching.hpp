#pragma once

#include <atomic>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "matchstat/common.hpp"

namespace matchstat {

// A perfect matching on [2n], stored as a 0-based partner array (no fixed
// points, involutive). n = 0 is the empty matching.
//
// Text form: "a1-b1,a2-b2,..." with ai < bi, edges sorted by first vertex,
// 1-based labels; the empty string is the empty matching. This is the unit
// of CLI and JSON interchange.
//
// Ordering is lexicographic on the partner array, which coincides with
// lexicographic order on the canonical (flattened) edge list for matchings
// of equal size; class representatives rely on this.
class Matching {
 public:
  Matching() = default;

  static Matching parse(std::string_view text);
  static Matching from_edges(const std::vector<std::pair<int, int>>& edges);

  // M_n = {{1,2n},{2,2n-1},...,{n,n+1}}: all pairs of edges nested.
  static Matching fully_nested(int n);
  // N_n = {{1,2},{3,4},...,{2n-1,2n}}: all pairs of edges separated.
  static Matching fully_adjacent(int n);
  // {{i, n + pi[i-1]} : i in [n]} for a permutation pi of [n].
  static Matching permutational(const std::vector<int>& pi);

  int size() const { return static_cast<int>(mate_.size()) / 2; }  // n
  int vertex_count() const { return static_cast<int>(mate_.size()); }
  bool empty() const { return mate_.empty(); }
  // Gaps are 1-based: before, between and after the vertices; 2n+1 of them.
  int gap_count() const { return vertex_count() + 1; }

  int partner(int v) const;  // 1-based in and out
  std::vector<std::pair<int, int>> edges() const;  // canonical order
  std::string format() const;

  int crossings() const;
  int nestings() const;
  int camels() const;  // separated pairs, counted directly

  // The child of this matching obtained by inserting a new first edge whose
  // second endpoint lands in the given gap (1 <= gap <= 2n+1).
  Matching insert_first_edge(int gap) const;
  // Inverse of insert_first_edge: (parent, gap). Throws on the empty matching.
  std::pair<Matching, int> remove_first_edge() const;
  // The 2n+1 children, in gap order.
  std::vector<Matching> children() const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend std::strong_ordering operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<std::int32_t> mate_;
};

std::ostream& operator<<(std::ostream& os, const Matching& m);

// cover[j]: number of edges covering gap j+1; left[j]: number of edges lying
// entirely to the left of gap j+1. Both have length 2n+1.
struct GapProfile {
  std::vector<int> cover;
  std::vector<int> left;
};

GapProfile gap_profile(const Matching& m);

struct CrossNest {
  int cr = 0;
  int ne = 0;
  friend bool operator==(const CrossNest&, const CrossNest&) = default;
};

// Both statistics in one pair scan.
CrossNest cross_nest(const Matching& m);

// |T(M,l)| = (2n+1)(2n+3)...(2n+2l-1) for M with n edges. Exact.
mpz_class level_size(int n, int l);
// (2n-1)!! = |M(n)|; double_factorial_odd(0) = 1.
mpz_class double_factorial_odd(int n);
mpz_class catalan(int n);
mpz_class binomial(unsigned long n, unsigned long k);

// Walks T(root, depth) and invokes fn on each matching of the final level.
// Enumeration order is unspecified by contract (this implementation is
// depth-first in gap order).
template <class Fn>
void for_each_level(const Matching& root, int depth, Fn&& fn) {
  if (depth == 0) {
    fn(root);
    return;
  }
  const int gaps = root.gap_count();
  for (int g = 1; g <= gaps; ++g) {
    for_each_level(root.insert_first_edge(g), depth - 1, fn);
  }
}

// All of M(n) = T(empty, n).
template <class Fn>
void for_each_matching(int n, Fn&& fn) {
  for_each_level(Matching(), n, std::forward<Fn>(fn));
}

int hardware_threads();

// Partitioned parallel level walk: splits the subtree by the first gap
// choices until there are enough tasks, then runs workers with per-thread
// State accumulators. Returns one State per worker; merging is the caller's
// (order-independent) job. per_matching(State&, const Matching&) must not
// touch shared state.
template <class State, class Fn>
std::vector<State> level_map(const Matching& root, int depth, int threads, Fn per_matching) {
  if (threads < 1) threads = hardware_threads();
  if (threads == 1 || depth <= 1) {
    std::vector<State> states(1);
    for_each_level(root, depth, [&](const Matching& m) { per_matching(states[0], m); });
    return states;
  }

  std::vector<Matching> tasks{root};
  int remaining = depth;
  while (remaining > 1 && tasks.size() < static_cast<std::size_t>(4 * threads)) {
    std::vector<Matching> next;
    next.reserve(tasks.size() * static_cast<std::size_t>(tasks.front().gap_count()));
    for (const Matching& m : tasks) {
      for (int g = 1; g <= m.gap_count(); ++g) next.push_back(m.insert_first_edge(g));
    }
    tasks = std::move(next);
    --remaining;
  }

  std::vector<State> states(static_cast<std::size_t>(threads));
  std::atomic<std::size_t> cursor{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  const int tail_depth = remaining;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      State& local = states[static_cast<std::size_t>(t)];
      for (std::size_t i; (i = cursor.fetch_add(1)) < tasks.size();) {
        for_each_level(tasks[i], tail_depth, [&](const Matching& m) { per_matching(local, m); });
      }
    });
  }
  for (auto& th : pool) th.join();
  return states;
}

// Materialized levels, guarded by cap.
std::vector<Matching> level_matchings(const Matching& root, int depth,
                                      std::uint64_t cap = kDefaultCap);
std::vector<Matching> all_matchings(int n, std::uint64_t cap = kDefaultCap);

}  // namespace matchstat
