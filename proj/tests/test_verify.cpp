#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matchstat/verify.hpp"

using namespace matchstat;

namespace {

VerifyOptions small(int n = -1, int depth = -1) {
  VerifyOptions opts;
  opts.n = n;
  opts.depth = depth;
  return opts;
}

nlohmann::ordered_json without_runtime(const Report& r) {
  auto j = r.to_json();
  j.erase("runtime_ms");
  return j;
}

}  // namespace

TEST_CASE("two-level criterion on the root against itself, swapped") {
  const Report r = check_theorem1(Matching(), Matching(), GroupSpec::preset("cr"), true, 3);
  CHECK(r.status == CheckStatus::kPass);
  CHECK(r.details["premise_holds"] == true);
  CHECK(r.details["conclusion_holds"] == true);
}

TEST_CASE("two-level criterion on the last-three-edges pair") {
  const Report r = check_theorem1(Matching::parse("1-2,3-5,4-6"), Matching::parse("1-3,2-4,5-6"),
                                  GroupSpec::preset("cr"), false, 2);
  CHECK(r.status == CheckStatus::kPass);
  CHECK(r.details["premise_holds"] == true);
  CHECK(r.details["conclusion_holds"] == true);
}

TEST_CASE("premise fails fast on dissimilar matchings") {
  const Report r = check_theorem1(Matching::parse("1-3,2-4"), Matching::parse("1-4,2-3"),
                                  GroupSpec::preset("cr"), false, 2);
  CHECK(r.status == CheckStatus::kPass);  // vacuous: nothing to contradict
  CHECK(r.details["premise_holds"] == false);
}

TEST_CASE("named checks pass at small sizes") {
  for (const char* id : {"desainte", "symmetric", "crequalne", "crequalcr"}) {
    const Report r = check_named(id, small(4, 3));
    CAPTURE(id);
    CHECK(r.status == CheckStatus::kPass);
  }
  CHECK(check_named("camel", small(3, 3)).status == CheckStatus::kPass);
  CHECK(check_named("crMneN", small(3, 2)).status == CheckStatus::kPass);
  CHECK(check_named("modtwo", small(4)).status == CheckStatus::kPass);
  CHECK(check_named("riordan_parity", small(5)).status == CheckStatus::kPass);
  CHECK(check_named("class_counts", small(4)).status == CheckStatus::kPass);
  CHECK(check_named("oeis", small(4)).status == CheckStatus::kPass);
  CHECK(check_named("fig1", small()).status == CheckStatus::kPass);
}

TEST_CASE("the fixed-path regression warns about the published cover count") {
  const Report r = check_named("fig3", small());
  CHECK(r.status == CheckStatus::kWarn);
  CHECK(r.details["tunnel_cover_count"] == 7);
  CHECK(r.details["published_cover_count"] == 8);
  CHECK(r.details["als_ok"] == true);
  CHECK(r.details["profile_ok"] == true);
  CHECK(r.details["dos_ok"] == true);
}

TEST_CASE("unknown ids are rejected") {
  CHECK_THROWS_AS(check_named("nonsense", small()), std::invalid_argument);
}

TEST_CASE("reports are reproducible") {
  const Report a = check_named("crMneN", small(3, 2));
  const Report b = check_named("crMneN", small(3, 2));
  CHECK(without_runtime(a).dump() == without_runtime(b).dump());
  const Report c = check_named("class_counts", small(3));
  const Report d = check_named("class_counts", small(3));
  CHECK(without_runtime(c).dump() == without_runtime(d).dump());
}

TEST_CASE("report json carries the interface fields") {
  const auto j = check_named("fig1", small()).to_json();
  for (const char* field : {"id", "params", "status", "details", "counterexamples", "runtime_ms"}) {
    CHECK(j.contains(field));
  }
  CHECK(j["id"] == "fig1");
  CHECK(j["status"] == "PASS");
}

TEST_CASE("the battery covers every known id") {
  const auto reports = run_all(small(3, 2));
  CHECK(reports.size() == known_check_ids().size());
  for (const auto& r : reports) {
    CAPTURE(r.id);
    CHECK(r.status != CheckStatus::kFail);
  }
}
