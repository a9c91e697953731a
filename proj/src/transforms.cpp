#include "matchstat/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace matchstat {

std::optional<MinWidthPair> min_width_pair(const Matching& m, PairKind kind) {
  const auto es = m.edges();
  std::optional<MinWidthPair> best;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto [a1, b1] = es[i];
      const auto [a2, b2] = es[j];  // a1 < a2
      bool match = false;
      int w_first = a2 - a1, w_second = 0;
      if (kind == PairKind::kCrossing) {
        match = a2 < b1 && b1 < b2;  // a1 < a2 < b1 < b2
        w_second = b2 - b1;
      } else {
        match = b2 < b1;  // a1 < a2 < b2 < b1
        w_second = b1 - b2;
      }
      if (!match) continue;
      const int width = std::min(w_first, w_second);
      if (!best || width < best->width ||
          (width == best->width && std::make_pair(a1, a2) < std::make_pair(best->e.first, best->f.first))) {
        best = MinWidthPair{es[i], es[j], width,
                            w_first <= w_second ? WidthSide::kFirst : WidthSide::kSecond};
      }
    }
  }
  return best;
}

namespace {

Matching switch_pair(const Matching& m, const MinWidthPair& p) {
  // Whichever side realizes the width, exchanging it turns {e, f} into the
  // same opposite-kind pair on the four vertices.
  auto edges = m.edges();
  for (auto& edge : edges) {
    if (edge == p.e) edge = {p.e.first, p.f.second};
    else if (edge == p.f) edge = {p.f.first, p.e.second};
  }
  for (auto& edge : edges) {
    if (edge.first > edge.second) std::swap(edge.first, edge.second);
  }
  std::sort(edges.begin(), edges.end());
  return Matching::from_edges(edges);
}

}  // namespace

Matching nc_transform(const Matching& m) {
  const auto pair = min_width_pair(m, PairKind::kNesting);
  if (!pair) throw std::domain_error("nc_transform: matching has no nesting");
  return switch_pair(m, *pair);
}

Matching cn_transform(const Matching& m) {
  const auto pair = min_width_pair(m, PairKind::kCrossing);
  if (!pair) throw std::domain_error("cn_transform: matching has no crossing");
  return switch_pair(m, *pair);
}

std::vector<Matching> transform_steps(const Matching& m, PairKind kind, int k) {
  if (k < 0) throw std::invalid_argument("negative step count");
  std::vector<Matching> trace{m};
  trace.reserve(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i < k; ++i) {
    trace.push_back(kind == PairKind::kNesting ? nc_transform(trace.back())
                                               : cn_transform(trace.back()));
  }
  return trace;
}

}  // namespace matchstat
