#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "matchstat/common.hpp"
#include "matchstat/group.hpp"
#include "matchstat/matching.hpp"

namespace matchstat {

// crs(M): edges covering each gap (first/last terms 0, steps of at most 1);
// nes(M): edges left of each gap (nondecreasing, 0 to n). Length 2n+1.
std::vector<int> crossing_sequence(const Matching& m);
std::vector<int> nesting_sequence(const Matching& m);

// Decides similarity: two matchings are similar under a spec iff their keys
// are equal, i.e. the statistic values agree and the attached sequences agree
// as multisets.
struct SimilarityKey {
  GroupElement value;
  std::vector<GroupElement> bag;  // sorted terms of seq(M)

  friend bool operator==(const SimilarityKey&, const SimilarityKey&) = default;
  friend auto operator<=>(const SimilarityKey&, const SimilarityKey&) = default;
};

SimilarityKey similarity_key(const Matching& m, const GroupSpec& spec);

// Keys of M and N under the same spec. Throws on size mismatch.
bool are_similar(const Matching& m, const Matching& n, const GroupSpec& spec);
// Key of M under (alpha,beta) against key of N under (beta,alpha).
bool are_swap_similar(const Matching& m, const Matching& n, const GroupSpec& spec);

struct SimilarityClass {
  SimilarityKey key;
  std::vector<Matching> members;  // sorted; members.front() is the representative
};

// Partition of M(n) by key; classes ordered by key. swapped groups by the
// key computed under (beta,alpha).
std::vector<SimilarityClass> partition_classes(int n, const GroupSpec& spec,
                                               bool swapped = false,
                                               std::uint64_t cap = kDefaultCap,
                                               int threads = 1);

// 2^(n-2) (C(n,2) + 2), evaluated as 2^n (C(n,2)+2) / 4 with an exact
// divisibility assertion.
mpz_class cr_class_count_formula(int n);
// 2*4^(n-1) - (3n-1)/(2n+2) * C(2n,n), exact.
mpz_class ne_class_count_formula(int n);
// Classes of matchings with at least one nesting:
// 2*4^(n-1) - (3n+1)/(2n+2) * C(2n,n) = ne_class_count_formula(n) - catalan(n).
mpz_class ne_positive_class_count_formula(int n);

enum class Mod2Stat { kCr2, kNe2 };

struct Mod2Classes {
  std::uint64_t brute_count = 0;
  std::vector<std::uint64_t> brute_sizes;  // descending
  mpz_class formula_count;                 // predicted class count
  std::vector<mpz_class> formula_sizes;    // predicted sizes (cr2 only); empty otherwise
};

// Mod-2 similarity classes, both by exhaustive partition and by the closed
// forms: cr2 has one class at n=1 and two of sizes ((2n-1)!! +- 1)/2 for
// n >= 2; ne2 has 1, 3, and 2n classes for n = 1, 2, >= 3.
Mod2Classes mod2_classes(int n, Mod2Stat stat, std::uint64_t cap = kDefaultCap, int threads = 1);

// True iff every edge has its first vertex in [n]; these are exactly the
// matchings with no separated pair, n! in number.
bool is_permutational(const Matching& m);

}  // namespace matchstat
