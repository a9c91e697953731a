#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "matchstat/common.hpp"
#include "matchstat/matching.hpp"

namespace matchstat {

// An element of Z^k or (Z_m)^k. The containing GroupSpec owns the modulus;
// elements are kept reduced to [0, m) coordinatewise when m > 0. The total
// order is lexicographic on coordinates and is used only as a multiset
// canonicalization key.
struct GroupElement {
  std::vector<std::int64_t> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// The concrete abelian group together with the weights (alpha, beta) that
// define the statistic cr*alpha + ne*beta.
class GroupSpec {
 public:
  GroupSpec();  // the "cr" spec: Z, alpha=1, beta=0
  GroupSpec(int dimension, std::int64_t modulus, GroupElement alpha, GroupElement beta);

  // Presets: cr, ne, cn, nc, camel, cr2, ne2.
  static GroupSpec preset(std::string_view name);
  static const std::vector<std::string>& preset_names();
  static GroupSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;  // {"k":…,"m":…,"alpha":[…],"beta":[…]}

  int dimension() const { return dimension_; }
  std::int64_t modulus() const { return modulus_; }
  const GroupElement& alpha() const { return alpha_; }
  const GroupElement& beta() const { return beta_; }
  const std::string& name() const { return name_; }

  GroupSpec swapped() const;  // (beta, alpha), same group

  GroupElement zero() const;
  GroupElement reduce(GroupElement a) const;
  GroupElement add(GroupElement a, const GroupElement& b) const;
  GroupElement sub(GroupElement a, const GroupElement& b) const;
  GroupElement scale(std::int64_t c, GroupElement a) const;

  // "3" for k=1, "(3,2)" for k>1.
  std::string format(const GroupElement& a) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&);

 private:
  int dimension_;
  std::int64_t modulus_;
  GroupElement alpha_;
  GroupElement beta_;
  std::string name_;
};

// A finite sequence over the group; seq(M) for M with n edges has 2n+1 terms.
struct GroupSequence {
  std::vector<GroupElement> terms;

  std::size_t length() const { return terms.size(); }
  friend bool operator==(const GroupSequence&, const GroupSequence&) = default;
  friend auto operator<=>(const GroupSequence&, const GroupSequence&) = default;
};

// Multiset with multiplicities recorded by repetition; equality ignores
// insertion order. Kept as a lazily sorted vector.
template <class T>
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(std::vector<T> items) : items_(std::move(items)), dirty_(true) {}

  void insert(T value) {
    items_.push_back(std::move(value));
    dirty_ = true;
  }
  void merge(Multiset other) {
    auto& src = other.items_;
    items_.insert(items_.end(), std::make_move_iterator(src.begin()),
                  std::make_move_iterator(src.end()));
    dirty_ = !items_.empty();
  }
  std::size_t size() const { return items_.size(); }
  const std::vector<T>& sorted() const {
    normalize();
    return items_;
  }
  friend bool operator==(const Multiset& a, const Multiset& b) {
    return a.sorted() == b.sorted();
  }

 private:
  void normalize() const {
    if (dirty_) {
      std::sort(items_.begin(), items_.end());
      dirty_ = false;
    }
  }
  mutable std::vector<T> items_;
  mutable bool dirty_ = false;
};

using ElementMultiset = Multiset<GroupElement>;
using SequenceMultiset = Multiset<GroupSequence>;

// cr(M)*alpha + ne(M)*beta.
GroupElement statistic(const Matching& m, const GroupSpec& spec);

// The one-step rewriting map on sequences:
//   x_i (x_1..x_i + x_i - x_1 + alpha) (x_i..x_l + x_i - x_1 + beta)
// index is 1-based and matches the insertion gap of the corresponding child.
GroupSequence r_step(const GroupSequence& x, int index, const GroupSpec& spec);

// All l rewrites of x (a multiset of l sequences of length l+2), and its
// extension to multisets of sequences.
SequenceMultiset r_all(const GroupSequence& x, const GroupSpec& spec);
SequenceMultiset r_all(const SequenceMultiset& xs, const GroupSpec& spec);
// l-fold iteration; guarded by cap on the number of sequences produced.
SequenceMultiset r_iterate(const GroupSequence& x, int l, const GroupSpec& spec,
                           std::uint64_t cap = kDefaultCap);

enum class SeqMethod { kRecursive, kDirect };

// The sequence attached to M along its construction path. Both methods agree;
// kRecursive replays r_step along the first-edge removals, kDirect evaluates
// term_j = statistic(M) + cover_j*alpha + left_j*beta from the gap profile.
GroupSequence seq(const Matching& m, const GroupSpec& spec, SeqMethod method = SeqMethod::kDirect);

// Number of weakly increasing r-tuples over [length]: C(length+r-1, r).
// Throws CapExceeded when the count overflows or exceeds cap.
std::uint64_t weak_tuple_count(std::size_t length, int r, std::uint64_t cap = kDefaultCap);

// f^r_gamma: multiset of x_{a_1}+...+x_{a_r} - (r-1) x_1 + gamma over weakly
// increasing index tuples; f^0_0 = {x_1}, f^1_0 = term multiset.
ElementMultiset f_r_gamma(const GroupSequence& x, int r, const GroupElement& gamma,
                          const GroupSpec& spec, std::uint64_t cap = kDefaultCap);
ElementMultiset f_r_gamma(const SequenceMultiset& xs, int r, const GroupElement& gamma,
                          const GroupSpec& spec, std::uint64_t cap = kDefaultCap);

// g^r: multiset of x_{a_1}+...+x_{a_r} over weakly increasing tuples, r >= 1.
ElementMultiset g_r(const GroupSequence& x, int r, const GroupSpec& spec,
                    std::uint64_t cap = kDefaultCap);

// The term multiset of a sequence (f^1_0).
ElementMultiset terms_multiset(const GroupSequence& x);

enum class DistMethod { kBrute, kSequence };

// Distribution of the statistic on level `depth` of the subtree rooted at m.
// kBrute enumerates the level and recounts crossings/nestings per matching;
// kSequence never materializes the last rewriting step: the first terms of
// R(x) are exactly the terms of x, so it collects the terms of the
// (depth-1)-fold iterate instead.
ElementMultiset level_distribution(const Matching& m, int depth, const GroupSpec& spec,
                                   DistMethod method, std::uint64_t cap = kDefaultCap,
                                   int threads = 1);

}  // namespace matchstat
