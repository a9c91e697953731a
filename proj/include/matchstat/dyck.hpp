#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchstat/common.hpp"
#include "matchstat/matching.hpp"

namespace matchstat {

// A Dyck path of semilength n as a word over {U, D} with nonnegative
// prefixes. Also accepts "()"-style words on parse.
class DyckPath {
 public:
  DyckPath() = default;

  static DyckPath parse(std::string_view text);

  const std::string& word() const { return steps_; }
  int semilength() const { return static_cast<int>(steps_.size()) / 2; }
  int step_count() const { return static_cast<int>(steps_.size()); }
  bool up(int i) const { return steps_[static_cast<std::size_t>(i)] == 'U'; }  // 0-based

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  friend DyckPath to_dyck(const Matching&);
  friend DyckPath path_from_profile(const std::vector<int>&);
  template <class Fn>
  friend void for_each_dyck_path(int, Fn&&);
  static DyckPath unchecked(std::string steps);

  std::string steps_;
};

// A pair of matched steps: 1-based indices of the supporting up- and
// down-step. Each path of semilength n has exactly n tunnels.
struct Tunnel {
  int up = 0;
  int down = 0;
  friend bool operator==(const Tunnel&, const Tunnel&) = default;
  friend auto operator<=>(const Tunnel&, const Tunnel&) = default;
};

// Composition (a_1,...,a_m) of n: half the number of steps in each horizontal
// strip; m is the maximum altitude.
using Profile = std::vector<int>;

// The surjection onto Dyck paths: step i is U iff i is a first vertex.
DyckPath to_dyck(const Matching& m);

std::vector<int> altitude_sequence(const DyckPath& d);  // length 2n+1
Profile profile(const DyckPath& d);
std::vector<int> down_sequence(const DyckPath& d);  // length 2n+1

// Tunnels by stack pairing of steps, sorted by up index.
std::vector<Tunnel> tunnels(const DyckPath& d);
// Ordered pairs (t1,t2) of distinct tunnels with t1 covering t2; equals the
// number of nestings of the noncrossing preimage.
long long tunnel_cover_count(const DyckPath& d);

// The unique crossing-free matching mapping to d: edges are the tunnels.
Matching noncrossing_preimage(const DyckPath& d);

// Some path with the given profile: climb to the top, then bounce out each
// strip from the top down. Deterministic.
DyckPath path_from_profile(const Profile& a);
// S(a) = sum (i-1) a_i = tunnel_cover_count of any path with profile a.
long long profile_weight(const Profile& a);
// Crossing numbers attained on the preimage of a path with profile a:
// the full range {0, ..., S(a)}, returned as (0, S(a)).
std::pair<long long, long long> realizable_crossings(const Profile& a);

// All Dyck paths of semilength n, lexicographically (U before D).
template <class Fn>
void for_each_dyck_path(int n, Fn&& fn) {
  std::string word;
  word.reserve(static_cast<std::size_t>(2 * n));
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (ups == n && downs == n) {
      fn(DyckPath::unchecked(word));
      return;
    }
    if (ups < n) {
      word.push_back('U');
      self(self, ups + 1, downs);
      word.pop_back();
    }
    if (downs < ups) {
      word.push_back('D');
      self(self, ups, downs + 1);
      word.pop_back();
    }
  };
  rec(rec, 0, 0);
}

std::vector<DyckPath> dyck_paths(int n, std::uint64_t cap = kDefaultCap);

// All 2^(n-1) compositions of n, lexicographically.
std::vector<Profile> compositions(int n);

}  // namespace matchstat
