#include "matchstat/similarity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace matchstat {

std::vector<int> crossing_sequence(const Matching& m) { return gap_profile(m).cover; }

std::vector<int> nesting_sequence(const Matching& m) { return gap_profile(m).left; }

SimilarityKey similarity_key(const Matching& m, const GroupSpec& spec) {
  GroupSequence s = seq(m, spec);
  SimilarityKey key;
  key.value = s.terms.front();  // first term = statistic
  key.bag = std::move(s.terms);
  std::sort(key.bag.begin(), key.bag.end());
  return key;
}

namespace {

void require_same_size(const Matching& m, const Matching& n) {
  if (m.size() != n.size()) {
    throw std::invalid_argument("matchings have different sizes (" + std::to_string(m.size()) +
                                " vs " + std::to_string(n.size()) + ")");
  }
}

}  // namespace

bool are_similar(const Matching& m, const Matching& n, const GroupSpec& spec) {
  require_same_size(m, n);
  return similarity_key(m, spec) == similarity_key(n, spec);
}

bool are_swap_similar(const Matching& m, const Matching& n, const GroupSpec& spec) {
  require_same_size(m, n);
  return similarity_key(m, spec) == similarity_key(n, spec.swapped());
}

std::vector<SimilarityClass> partition_classes(int n, const GroupSpec& spec, bool swapped,
                                               std::uint64_t cap, int threads) {
  const GroupSpec effective = swapped ? spec.swapped() : spec;
  const mpz_class total = double_factorial_odd(n);
  if (total > mpz_class(static_cast<unsigned long>(cap))) {
    throw CapExceeded("partitioning M(" + std::to_string(n) + ") of size " + total.get_str() +
                      " exceeds cap " + std::to_string(cap));
  }
  using ClassMap = std::map<SimilarityKey, std::vector<Matching>>;
  auto states = level_map<ClassMap>(Matching(), n, threads,
                                    [&effective](ClassMap& acc, const Matching& m) {
                                      acc[similarity_key(m, effective)].push_back(m);
                                    });
  ClassMap merged;
  for (auto& state : states) {
    for (auto& [key, members] : state) {
      auto& dst = merged[key];
      dst.insert(dst.end(), std::make_move_iterator(members.begin()),
                 std::make_move_iterator(members.end()));
    }
  }
  std::vector<SimilarityClass> out;
  out.reserve(merged.size());
  for (auto& [key, members] : merged) {
    std::sort(members.begin(), members.end());
    out.push_back(SimilarityClass{key, std::move(members)});
  }
  return out;
}

mpz_class cr_class_count_formula(int n) {
  if (n < 1) throw std::invalid_argument("cr_class_count_formula: n must be >= 1");
  mpz_class value = (mpz_class(1) << n) * (binomial(static_cast<unsigned long>(n), 2) + 2);
  if (value % 4 != 0) throw std::logic_error("cr class count: 2^n (C(n,2)+2) not divisible by 4");
  return value / 4;
}

mpz_class ne_class_count_formula(int n) {
  if (n < 1) throw std::invalid_argument("ne_class_count_formula: n must be >= 1");
  const mpz_class correction = binomial(2 * static_cast<unsigned long>(n),
                                        static_cast<unsigned long>(n)) * (3 * n - 1);
  if (correction % (2 * n + 2) != 0) {
    throw std::logic_error("ne class count: (3n-1) C(2n,n) not divisible by 2n+2");
  }
  mpz_class pow4 = mpz_class(1) << (2 * (n - 1));
  return 2 * pow4 - correction / (2 * n + 2);
}

mpz_class ne_positive_class_count_formula(int n) {
  return ne_class_count_formula(n) - catalan(n);
}

Mod2Classes mod2_classes(int n, Mod2Stat stat, std::uint64_t cap, int threads) {
  if (n < 1) throw std::invalid_argument("mod2_classes: n must be >= 1");
  const GroupSpec spec = GroupSpec::preset(stat == Mod2Stat::kCr2 ? "cr2" : "ne2");
  Mod2Classes out;
  auto classes = partition_classes(n, spec, false, cap, threads);
  out.brute_count = classes.size();
  out.brute_sizes.reserve(classes.size());
  for (const auto& c : classes) out.brute_sizes.push_back(c.members.size());
  std::sort(out.brute_sizes.rbegin(), out.brute_sizes.rend());

  if (stat == Mod2Stat::kCr2) {
    out.formula_count = n == 1 ? 1 : 2;
    const mpz_class df = double_factorial_odd(n);
    out.formula_sizes.push_back((df + 1) / 2);
    if (n >= 2) out.formula_sizes.push_back((df - 1) / 2);
  } else {
    out.formula_count = n == 1 ? 1 : (n == 2 ? 3 : 2 * n);
  }
  return out;
}

bool is_permutational(const Matching& m) {
  const int n = m.size();
  for (auto [a, b] : m.edges()) {
    (void)b;
    if (a > n) return false;
  }
  return true;
}

}  // namespace matchstat
