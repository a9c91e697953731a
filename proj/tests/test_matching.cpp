#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "matchstat/matching.hpp"

using namespace matchstat;

namespace {

// Independent oracle: count crossing/nesting/separated pairs by the raw
// four-vertex conditions, straight off the edge list.
struct PairCounts {
  int cr = 0, ne = 0, ca = 0;
};

PairCounts count_pairs_oracle(const Matching& m) {
  PairCounts out;
  const auto es = m.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (i == j) continue;
      const int a = es[i].first, b = es[i].second, c = es[j].first, d = es[j].second;
      if (a < c && c < b && b < d) out.cr++;
      if (a < c && d < b) out.ne++;
      if (b < c) out.ca++;
    }
  }
  return out;
}

const char* kFigure1 = "1-4,2-7,3-8,5-6,9-10";

}  // namespace

TEST_CASE("parse and format round-trip") {
  CHECK(Matching::parse("").format() == "");
  CHECK(Matching::parse("1-2").format() == "1-2");
  CHECK(Matching::parse("2-1").format() == "1-2");
  CHECK(Matching::parse(" 1-4 , 2-3 ").format() == "1-4,2-3");
  CHECK(Matching::parse(kFigure1).format() == kFigure1);
  CHECK(Matching::parse(kFigure1).size() == 5);
}

TEST_CASE("parse errors name the offending token") {
  CHECK_THROWS_WITH_AS(Matching::parse("1-2,2-3"), doctest::Contains("vertex 2 repeated"),
                       ParseError);
  CHECK_THROWS_AS(Matching::parse("1-2,3-5"), ParseError);   // 5 out of range for n=2
  CHECK_THROWS_AS(Matching::parse("1-1"), ParseError);       // self-loop
  CHECK_THROWS_AS(Matching::parse("1-2,x-4"), ParseError);   // bad label
  CHECK_THROWS_AS(Matching::parse("1"), ParseError);         // no dash
  CHECK_THROWS_AS(Matching::parse("0-1"), ParseError);       // labels are 1-based
}

TEST_CASE("crossings, nestings and camels on fixed matchings") {
  CHECK(Matching().crossings() == 0);
  CHECK(Matching().nestings() == 0);
  CHECK(Matching().camels() == 0);

  const Matching fig1 = Matching::parse(kFigure1);
  CHECK(fig1.crossings() == 3);
  CHECK(fig1.nestings() == 2);
  CHECK(fig1.camels() == 5);  // C(5,2) - 3 - 2

  CHECK(Matching::parse("1-3,2-4").crossings() == 1);
  CHECK(Matching::parse("1-4,2-3").nestings() == 1);
  CHECK(Matching::fully_nested(3).nestings() == 3);
  CHECK(Matching::parse("1-2,3-4").camels() == 1);
}

TEST_CASE("statistics agree with the ordered-pair oracle") {
  for (int n = 0; n <= 5; ++n) {
    for_each_matching(n, [](const Matching& m) {
      const PairCounts oracle = count_pairs_oracle(m);
      // The oracle counts ordered pairs; each unordered crossing/nesting
      // appears once there, each camel once as well.
      CHECK(m.crossings() == oracle.cr);
      CHECK(m.nestings() == oracle.ne);
      CHECK(m.camels() == oracle.ca);
    });
  }
}

TEST_CASE("cr + ne + ca = C(n,2)") {
  for (int n = 0; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for_each_matching(n, [&](const Matching& m) {
      REQUIRE(m.crossings() + m.nestings() + m.camels() == pairs);
    });
  }
}

TEST_CASE("insert_first_edge examples") {
  const Matching root;
  CHECK(root.insert_first_edge(1) == Matching::parse("1-2"));

  const Matching one = Matching::parse("1-2");
  CHECK(one.insert_first_edge(1) == Matching::parse("1-2,3-4"));
  CHECK(one.insert_first_edge(2) == Matching::parse("1-3,2-4"));
  CHECK(one.insert_first_edge(3) == Matching::parse("1-4,2-3"));
  CHECK(one.insert_first_edge(2).crossings() == 1);
  CHECK(one.insert_first_edge(3).nestings() == 1);

  CHECK_THROWS_AS(one.insert_first_edge(0), std::out_of_range);
  CHECK_THROWS_AS(one.insert_first_edge(4), std::out_of_range);
}

TEST_CASE("remove_first_edge examples and inverse") {
  auto [p1, g1] = Matching::parse("1-3,2-4").remove_first_edge();
  CHECK(p1 == Matching::parse("1-2"));
  CHECK(g1 == 2);
  auto [p2, g2] = Matching::parse("1-2").remove_first_edge();
  CHECK(p2 == Matching());
  CHECK(g2 == 1);
  auto [p3, g3] = Matching::parse("1-4,2-3").remove_first_edge();
  CHECK(p3 == Matching::parse("1-2"));
  CHECK(g3 == 3);
  CHECK_THROWS_AS(Matching().remove_first_edge(), std::domain_error);
}

TEST_CASE("remove o insert is the identity on (M, gap)") {
  for (int n = 0; n <= 5; ++n) {
    for_each_matching(n, [](const Matching& m) {
      for (int g = 1; g <= m.gap_count(); ++g) {
        const auto [back, gap] = m.insert_first_edge(g).remove_first_edge();
        REQUIRE(back == m);
        REQUIRE(gap == g);
      }
    });
  }
}

TEST_CASE("children and level sizes") {
  CHECK(Matching().children().size() == 1);
  CHECK(Matching::parse("1-2").children().size() == 3);

  CHECK(all_matchings(3).size() == 15);
  CHECK(level_matchings(Matching::parse("1-2"), 2).size() == 15);  // 3*5
  CHECK(level_matchings(Matching::parse("1-2,3-4"), 0) ==
        std::vector<Matching>{Matching::parse("1-2,3-4")});
}

TEST_CASE("level_size closed form") {
  CHECK(level_size(0, 0) == 1);
  CHECK(level_size(0, 5) == 945);
  CHECK(level_size(3, 2) == 63);
  CHECK(double_factorial_odd(8) == 2027025);
  for (int n = 0; n <= 8; ++n) CHECK(level_size(0, n) == double_factorial_odd(n));
  // Stays exact far beyond machine range.
  CHECK(level_size(0, 40) % 79 == 0);
  CHECK(catalan(8) == 1430);
}

TEST_CASE("enumeration yields (2n-1)!! distinct matchings") {
  for (int n = 0; n <= 6; ++n) {
    std::set<Matching> seen;
    std::uint64_t count = 0;
    for_each_matching(n, [&](const Matching& m) {
      ++count;
      seen.insert(m);
      REQUIRE(m.size() == n);
    });
    CHECK(count == double_factorial_odd(n));
    CHECK(seen.size() == count);
  }
}

TEST_CASE("noncrossing and nonnesting counts are Catalan") {
  for (int n = 0; n <= 6; ++n) {
    std::uint64_t noncrossing = 0, nonnesting = 0;
    for_each_matching(n, [&](const Matching& m) {
      noncrossing += m.crossings() == 0;
      nonnesting += m.nestings() == 0;
    });
    CHECK(noncrossing == catalan(n));
    CHECK(nonnesting == catalan(n));
  }
}

TEST_CASE("gap profile on fixed matchings") {
  const GapProfile gp = gap_profile(Matching::parse("1-3,2-4"));
  CHECK(gp.cover == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(gp.left == std::vector<int>{0, 0, 0, 1, 2});

  const GapProfile empty = gap_profile(Matching());
  CHECK(empty.cover == std::vector<int>{0});
  CHECK(empty.left == std::vector<int>{0});

  const GapProfile m3 = gap_profile(Matching::parse("1-4,2-5,3-6"));
  CHECK(m3.cover == std::vector<int>{0, 1, 2, 3, 2, 1, 0});
  CHECK(m3.left == std::vector<int>{0, 0, 0, 0, 1, 2, 3});
}

TEST_CASE("statistic increments along insertion match the gap profile") {
  for (int n = 0; n <= 5; ++n) {
    for_each_matching(n, [](const Matching& m) {
      const GapProfile gp = gap_profile(m);
      const CrossNest base = cross_nest(m);
      for (int g = 1; g <= m.gap_count(); ++g) {
        const CrossNest child = cross_nest(m.insert_first_edge(g));
        REQUIRE(child.cr - base.cr == gp.cover[static_cast<std::size_t>(g - 1)]);
        REQUIRE(child.ne - base.ne == gp.left[static_cast<std::size_t>(g - 1)]);
      }
    });
  }
}

TEST_CASE("canonical matchings") {
  CHECK(Matching::fully_nested(2) == Matching::parse("1-4,2-3"));
  CHECK(Matching::fully_adjacent(2) == Matching::parse("1-2,3-4"));
  CHECK(Matching::fully_nested(0) == Matching());
  CHECK(Matching::permutational({2, 1}) == Matching::parse("1-4,2-3"));
  CHECK(Matching::permutational({1, 2}) == Matching::parse("1-3,2-4"));
  CHECK_THROWS_AS(Matching::permutational({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Matching::permutational({0, 2}), std::invalid_argument);
}

TEST_CASE("parallel level enumeration is a multiset-equal reordering") {
  using Hist = std::map<std::string, std::uint64_t>;
  auto collect = [](int threads) {
    auto states = level_map<Hist>(Matching(), 5, threads, [](Hist& h, const Matching& m) {
      h[m.format()] += 1;
    });
    Hist merged;
    for (auto& s : states) {
      for (auto& [k, v] : s) merged[k] += v;
    }
    return merged;
  };
  const Hist solo = collect(1);
  const Hist fanned = collect(4);
  CHECK(solo.size() == 945);
  CHECK(solo == fanned);
}

TEST_CASE("cap guard") {
  CHECK_THROWS_AS(all_matchings(8, 1000), CapExceeded);
  CHECK_NOTHROW(all_matchings(4, 1000));
}
