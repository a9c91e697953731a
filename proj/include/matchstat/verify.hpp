#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchstat/common.hpp"
#include "matchstat/group.hpp"
#include "matchstat/matching.hpp"

namespace matchstat {

enum class CheckStatus { kPass, kFail, kWarn };

const char* to_string(CheckStatus s);

// The outcome of one check. Reports are deterministic for fixed inputs apart
// from runtime_ms; the harness only asserts identities it computed both
// sides of.
struct Report {
  std::string id;
  nlohmann::ordered_json params;
  CheckStatus status = CheckStatus::kPass;
  nlohmann::ordered_json details;
  std::vector<std::string> counterexamples;
  long long runtime_ms = 0;

  nlohmann::ordered_json to_json() const;
};

struct VerifyOptions {
  int n = -1;      // -1: per-check default
  int depth = -1;  // -1: per-check default
  std::uint64_t cap = kDefaultCap;
  int threads = 1;
};

// Checks both halves of the two-level criterion on a concrete pair: whether
// the statistic distributions agree on levels 0 and 1 (the premise) and,
// independently by brute force, on every level up to max_depth. A pair with
// a true premise and a false conclusion fails the report.
Report check_theorem1(const Matching& m, const Matching& n, const GroupSpec& spec, bool swapped,
                      int max_depth, std::uint64_t cap = kDefaultCap, int threads = 1);

// Named desk-scale checks. Ids: desainte, symmetric, crequalne, crequalcr,
// camel, crMneN, modtwo, riordan_parity, class_counts, oeis, fig1, fig3.
Report check_named(const std::string& id, const VerifyOptions& opts = {});

const std::vector<std::string>& known_check_ids();

// Every named check with default parameters.
std::vector<Report> run_all(const VerifyOptions& opts = {});

}  // namespace matchstat
