#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matchstat/matching.hpp"

namespace matchstat {

enum class PairKind { kNesting, kCrossing };
enum class WidthSide { kFirst, kSecond };

// A minimum-width pair of the requested kind. e is the edge with the smaller
// first vertex; side tells which endpoint distance realizes the width.
struct MinWidthPair {
  std::pair<int, int> e;
  std::pair<int, int> f;
  int width = 0;
  WidthSide side = WidthSide::kFirst;
};

// Smallest-width pair of the given kind; ties broken by the lexicographically
// least (min vertex, second min vertex). Empty when no such pair exists.
std::optional<MinWidthPair> min_width_pair(const Matching& m, PairKind kind);

// Switches the vertices of a minimum-width nesting, trading one nesting for
// one crossing; first and second vertex sets (hence the Dyck image) are
// unchanged. Throws std::domain_error when m has no nesting.
Matching nc_transform(const Matching& m);
// The inverse move on a minimum-width crossing.
Matching cn_transform(const Matching& m);

// k applications of the chosen transform; returns the whole trace
// [m, m_1, ..., m_k]. kind is the pair consumed (kNesting = n-c direction).
std::vector<Matching> transform_steps(const Matching& m, PairKind kind, int k);

}  // namespace matchstat
