#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "matchstat/group.hpp"
#include "matchstat/matching.hpp"
#include "matchstat/similarity.hpp"

using namespace matchstat;

namespace {

GroupSequence make_seq(std::vector<std::vector<std::int64_t>> rows) {
  GroupSequence s;
  for (auto& row : rows) s.terms.push_back(GroupElement{std::move(row)});
  return s;
}

ElementMultiset singleton_set(std::vector<std::int64_t> coords) {
  ElementMultiset out;
  out.insert(GroupElement{std::move(coords)});
  return out;
}

GroupSequence random_sequence(const GroupSpec& spec, int length, std::mt19937& rng) {
  std::uniform_int_distribution<std::int64_t> pick(-4, 4);
  GroupSequence s;
  for (int i = 0; i < length; ++i) {
    GroupElement e;
    for (int d = 0; d < spec.dimension(); ++d) e.coords.push_back(pick(rng));
    s.terms.push_back(spec.reduce(std::move(e)));
  }
  return s;
}

// Shuffle that keeps the first term fixed in value: permute everything, then
// rotate one occurrence of the original first term back to the front.
GroupSequence first_preserving_shuffle(const GroupSequence& u, std::mt19937& rng) {
  GroupSequence v = u;
  std::shuffle(v.terms.begin(), v.terms.end(), rng);
  auto it = std::find(v.terms.begin(), v.terms.end(), u.terms.front());
  std::rotate(v.terms.begin(), it, it + 1);
  return v;
}

const std::vector<std::string> kCoreSpecs = {"cr", "ne", "cn", "cr2"};

}  // namespace

TEST_CASE("presets and json round-trip") {
  const GroupSpec cn = GroupSpec::preset("cn");
  CHECK(cn.dimension() == 2);
  CHECK(cn.modulus() == 0);
  CHECK(cn.alpha() == GroupElement{{1, 0}});
  CHECK(cn.beta() == GroupElement{{0, 1}});
  CHECK(GroupSpec::preset("cr2").modulus() == 2);
  CHECK(GroupSpec::preset("camel").alpha() == GroupSpec::preset("camel").beta());
  CHECK_THROWS_AS(GroupSpec::preset("bogus"), std::invalid_argument);

  const GroupSpec back = GroupSpec::from_json(cn.to_json());
  CHECK(back == cn);
  CHECK(cn.swapped().alpha() == cn.beta());
}

TEST_CASE("group arithmetic respects the modulus") {
  const GroupSpec z2 = GroupSpec::preset("cr2");
  CHECK(z2.add(GroupElement{{1}}, GroupElement{{1}}) == GroupElement{{0}});
  CHECK(z2.sub(GroupElement{{0}}, GroupElement{{1}}) == GroupElement{{1}});
  CHECK(z2.scale(-3, GroupElement{{1}}) == GroupElement{{1}});
  const GroupSpec z(1, 0, GroupElement{{1}}, GroupElement{{0}});
  CHECK(z.scale(-3, GroupElement{{2}}) == GroupElement{{-6}});
}

TEST_CASE("statistic on fixed matchings") {
  const GroupSpec cn = GroupSpec::preset("cn");
  CHECK(statistic(Matching(), cn) == cn.zero());
  CHECK(statistic(Matching::parse("1-4,2-7,3-8,5-6,9-10"), cn) == GroupElement{{3, 2}});
  CHECK(statistic(Matching::parse("1-3,2-4"), GroupSpec::preset("cr2")) == GroupElement{{1}});
}

TEST_CASE("r_step matches the displayed rewriting") {
  const GroupSpec trivial(1, 0, GroupElement{{0}}, GroupElement{{0}});
  CHECK(r_step(make_seq({{0}}), 1, trivial) == make_seq({{0}, {0}, {0}}));

  const GroupSpec cn = GroupSpec::preset("cn");
  CHECK(r_step(make_seq({{0, 0}}), 1, cn) == make_seq({{0, 0}, {1, 0}, {0, 1}}));

  // Applying the i=2 rewrite to the sequence of the one-edge matching gives
  // the sequence of 1-3,2-4: (a, 2a, 3a, 2a+b, a+2b).
  const GroupSequence root_child = make_seq({{0, 0}, {1, 0}, {0, 1}});
  CHECK(r_step(root_child, 2, cn) ==
        make_seq({{1, 0}, {2, 0}, {3, 0}, {2, 1}, {1, 2}}));

  CHECK_THROWS_AS(r_step(root_child, 0, cn), std::out_of_range);
  CHECK_THROWS_AS(r_step(root_child, 4, cn), std::out_of_range);
}

TEST_CASE("r_all sizes and lengths") {
  const GroupSpec cr = GroupSpec::preset("cr");
  const GroupSequence root = make_seq({{0}});
  const SequenceMultiset once = r_all(root, cr);
  CHECK(once.size() == 1);
  CHECK(once.sorted().front() == make_seq({{0}, {1}, {0}}));

  const SequenceMultiset twice = r_all(once, cr);
  CHECK(twice.size() == 3);
  for (const GroupSequence& s : twice.sorted()) CHECK(s.length() == 5);

  for (int len = 1; len <= 9; len += 4) {
    GroupSequence x;
    for (int i = 0; i < len; ++i) x.terms.push_back(GroupElement{{i}});
    CHECK(r_all(x, cr).size() == static_cast<std::size_t>(len));
  }
}

TEST_CASE("seq on fixed matchings") {
  const GroupSpec cn = GroupSpec::preset("cn");
  CHECK(seq(Matching(), cn) == make_seq({{0, 0}}));
  CHECK(seq(Matching::parse("1-2"), cn) == make_seq({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(seq(Matching::parse("1-3,2-4"), cn) ==
        make_seq({{1, 0}, {2, 0}, {3, 0}, {2, 1}, {1, 2}}));
  CHECK(seq(Matching::parse("1-3,2-4"), cn, SeqMethod::kRecursive) ==
        seq(Matching::parse("1-3,2-4"), cn, SeqMethod::kDirect));
}

TEST_CASE("recursive and direct seq agree everywhere") {
  for (const auto& name : kCoreSpecs) {
    const GroupSpec spec = GroupSpec::preset(name);
    for (int n = 0; n <= 4; ++n) {
      for_each_matching(n, [&](const Matching& m) {
        const GroupSequence direct = seq(m, spec, SeqMethod::kDirect);
        REQUIRE(direct == seq(m, spec, SeqMethod::kRecursive));
        REQUIRE(direct.length() == static_cast<std::size_t>(2 * n + 1));
        REQUIRE(direct.terms.front() == statistic(m, spec));
      });
    }
  }
}

TEST_CASE("sequence multisets of whole levels follow the rewriting iterates") {
  const GroupSpec cn = GroupSpec::preset("cn");
  for (int n = 0; n <= 3; ++n) {
    for (int l = 0; l <= 3 - n; ++l) {
      for_each_matching(n, [&](const Matching& m) {
        SequenceMultiset brute;
        for_each_level(m, l, [&](const Matching& leaf) { brute.insert(seq(leaf, cn)); });
        REQUIRE(brute == r_iterate(seq(m, cn), l, cn));
      });
    }
  }
}

TEST_CASE("f_r_gamma basics") {
  const GroupSpec cr = GroupSpec::preset("cr");
  const GroupSequence x = make_seq({{0}, {1}, {1}});

  CHECK(f_r_gamma(x, 0, cr.zero(), cr) == singleton_set({0}));
  CHECK(f_r_gamma(x, 0, GroupElement{{5}}, cr) == singleton_set({5}));

  ElementMultiset terms;
  for (auto v : {0, 1, 1}) terms.insert(GroupElement{{v}});
  CHECK(f_r_gamma(x, 1, cr.zero(), cr) == terms);
  CHECK(terms_multiset(x) == terms);

  ElementMultiset pairs;
  for (auto v : {0, 1, 1, 2, 2, 2}) pairs.insert(GroupElement{{v}});
  CHECK(f_r_gamma(x, 2, cr.zero(), cr) == pairs);

  CHECK(f_r_gamma(make_seq({{0}, {1}, {0}}), 1, cr.zero(), cr) ==
        f_r_gamma(make_seq({{0}, {0}, {1}}), 1, cr.zero(), cr));
}

TEST_CASE("f_r_gamma and g_r have C(l+r-1, r) values") {
  const GroupSpec spec = GroupSpec::preset("ne");
  std::mt19937 rng(7);
  for (int len = 1; len <= 6; ++len) {
    const GroupSequence x = random_sequence(spec, len, rng);
    for (int r = 0; r <= 4; ++r) {
      const auto expected = binomial(static_cast<unsigned long>(len + r - 1),
                                     static_cast<unsigned long>(r));
      CHECK(f_r_gamma(x, r, spec.zero(), spec).size() == expected);
      if (r >= 1) CHECK(g_r(x, r, spec).size() == expected);
    }
  }
  CHECK(weak_tuple_count(5, 2) == 15);
  CHECK_THROWS_AS(weak_tuple_count(1000, 4, 1000), CapExceeded);
}

TEST_CASE("g_r examples") {
  const GroupSpec cr = GroupSpec::preset("cr");
  ElementMultiset expected;
  for (int i = 0; i < 3; ++i) expected.insert(GroupElement{{2}});
  CHECK(g_r(make_seq({{1}, {1}}), 2, cr) == expected);
  CHECK(g_r(make_seq({{1}, {2}}), 2, cr) == g_r(make_seq({{2}, {1}}), 2, cr));
  CHECK_THROWS_AS(g_r(make_seq({{1}}), 0, cr), std::invalid_argument);
}

TEST_CASE("randomized multiset lemmas over Z5 and Z^2") {
  std::mt19937 rng(20240817);
  const GroupSpec z5(1, 5, GroupElement{{1}}, GroupElement{{2}});
  const GroupSpec z2d(2, 0, GroupElement{{1, 0}}, GroupElement{{0, 1}});
  std::uniform_int_distribution<std::int64_t> pick(-4, 4);
  int instances = 0;
  for (const GroupSpec& spec : {z5, z2d}) {
    for (int trial = 0; trial < 40; ++trial) {
      const int len = 2 + static_cast<int>(rng() % 5);  // 2..6
      const GroupSequence u = random_sequence(spec, len, rng);

      // Equal term multisets make every g^r agree.
      GroupSequence perm = u;
      std::shuffle(perm.terms.begin(), perm.terms.end(), rng);
      for (int r = 1; r <= 4; ++r) {
        REQUIRE(g_r(u, r, spec) == g_r(perm, r, spec));
        ++instances;
      }

      // Shared first term and term multiset make every f^r_gamma agree.
      const GroupSequence v = first_preserving_shuffle(u, rng);
      GroupElement gamma;
      for (int d = 0; d < spec.dimension(); ++d) gamma.coords.push_back(pick(rng));
      gamma = spec.reduce(std::move(gamma));
      for (int r = 0; r <= 4; ++r) {
        REQUIRE(f_r_gamma(u, r, gamma, spec) == f_r_gamma(v, r, gamma, spec));
        ++instances;
      }

      // And the agreement survives one rewriting step, in both the plain and
      // the swapped form.
      const SequenceMultiset ru = r_all(u, spec);
      const SequenceMultiset rv = r_all(v, spec);
      const SequenceMultiset rv_swapped = r_all(v, spec.swapped());
      for (int r = 0; r <= 3; ++r) {
        REQUIRE(f_r_gamma(ru, r, gamma, spec) == f_r_gamma(rv, r, gamma, spec));
        REQUIRE(f_r_gamma(ru, r, gamma, spec) == f_r_gamma(rv_swapped, r, gamma, spec));
        instances += 2;
      }
    }
  }
  CHECK(instances >= 1000);
}

TEST_CASE("one rewriting step preserves the agreement of matching-derived pairs") {
  // Pairs with equal (first term, term multiset) keep equal f^r_gamma images
  // after applying the rewriting to their sequences, in the plain and the
  // swapped form.
  for (const char* name : {"cr", "cn"}) {
    const GroupSpec spec = GroupSpec::preset(name);
    const GroupSpec swapped = spec.swapped();
    const std::vector<GroupElement> gammas = {spec.zero(), spec.alpha(), spec.beta(),
                                              spec.add(spec.alpha(), spec.beta())};
    for (int n = 1; n <= 3; ++n) {
      const auto ms = all_matchings(n);
      std::vector<SimilarityKey> keys, swapped_keys;
      for (const Matching& m : ms) {
        keys.push_back(similarity_key(m, spec));
        swapped_keys.push_back(similarity_key(m, swapped));
      }
      std::uint64_t plain_pairs = 0, swapped_pairs = 0;
      for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = 0; j < ms.size(); ++j) {
          if (keys[i] == keys[j]) {
            ++plain_pairs;
            const auto ri = r_all(seq(ms[i], spec), spec);
            const auto rj = r_all(seq(ms[j], spec), spec);
            for (int r = 0; r <= 3; ++r) {
              for (const GroupElement& gamma : gammas) {
                REQUIRE(f_r_gamma(ri, r, gamma, spec) == f_r_gamma(rj, r, gamma, spec));
              }
            }
          }
          if (keys[i] == swapped_keys[j]) {
            ++swapped_pairs;
            const auto ri = r_all(seq(ms[i], spec), spec);
            const auto rj = r_all(seq(ms[j], swapped), swapped);
            for (int r = 0; r <= 3; ++r) {
              for (const GroupElement& gamma : gammas) {
                REQUIRE(f_r_gamma(ri, r, gamma, spec) == f_r_gamma(rj, r, gamma, spec));
              }
            }
          }
        }
      }
      CHECK(plain_pairs >= ms.size());  // at least the diagonal
      if (std::string(name) == "cr") CHECK(swapped_pairs >= 1);  // (M_n, N_n)
    }
  }
}

TEST_CASE("level distributions: fixed examples") {
  const GroupSpec cr = GroupSpec::preset("cr");
  ElementMultiset expected2;
  for (auto v : {0, 0, 1}) expected2.insert(GroupElement{{v}});
  CHECK(level_distribution(Matching(), 2, cr, DistMethod::kBrute) == expected2);

  ElementMultiset expected3;
  for (auto [value, count] : std::vector<std::pair<int, int>>{{0, 5}, {1, 6}, {2, 3}, {3, 1}}) {
    for (int i = 0; i < count; ++i) expected3.insert(GroupElement{{value}});
  }
  CHECK(level_distribution(Matching(), 3, cr, DistMethod::kBrute) == expected3);
  CHECK(level_distribution(Matching(), 3, cr, DistMethod::kSequence) == expected3);

  ElementMultiset children;
  for (auto v : {1, 1, 1, 2, 2, 2, 3}) children.insert(GroupElement{{v}});
  CHECK(level_distribution(Matching::parse("1-2,3-5,4-6"), 1, cr, DistMethod::kBrute) == children);
}

TEST_CASE("brute and sequence level distributions coincide") {
  for (const auto& name : kCoreSpecs) {
    const GroupSpec spec = GroupSpec::preset(name);
    for (int n = 0; n <= 3; ++n) {
      for (int l = 0; l <= 3; ++l) {
        for_each_matching(n, [&](const Matching& m) {
          REQUIRE(level_distribution(m, l, spec, DistMethod::kBrute) ==
                  level_distribution(m, l, spec, DistMethod::kSequence));
        });
      }
    }
  }
}

TEST_CASE("level distribution cap guard") {
  const GroupSpec cr = GroupSpec::preset("cr");
  CHECK_THROWS_AS(level_distribution(Matching(), 6, cr, DistMethod::kBrute, 100), CapExceeded);
  CHECK_THROWS_AS(level_distribution(Matching(), 6, cr, DistMethod::kSequence, 100), CapExceeded);
}
