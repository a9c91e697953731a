// Command-line front door: every library operation behind machine-readable
// subcommands. Exit codes: 0 success/PASS, 1 FAIL, 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchstat/dyck.hpp"
#include "matchstat/group.hpp"
#include "matchstat/matching.hpp"
#include "matchstat/similarity.hpp"
#include "matchstat/transforms.hpp"
#include "matchstat/verify.hpp"

namespace {

using matchstat::GroupElement;
using matchstat::GroupSpec;
using matchstat::Matching;
using nlohmann::ordered_json;

enum class Format { kHuman, kJson, kCsv };

struct CommonOpts {
  bool json = false;
  bool csv = false;
  int threads = matchstat::hardware_threads();
  std::uint64_t cap = matchstat::kDefaultCap;

  Format format() const { return json ? Format::kJson : (csv ? Format::kCsv : Format::kHuman); }
};

std::uint64_t env_cap() {
  if (const char* env = std::getenv("MATCHSTAT_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw matchstat::ParseError("MATCHSTAT_CAP is not a number: '" + std::string(env) + "'");
    }
  }
  return matchstat::kDefaultCap;
}

void add_common(CLI::App* sub, CommonOpts& opts, bool with_threads = true) {
  auto* json = sub->add_flag("--json", opts.json, "JSON output");
  sub->add_flag("--csv", opts.csv, "CSV output")->excludes(json);
  if (with_threads) {
    sub->add_option("--threads", opts.threads, "Worker threads (default: all cores)");
  }
  sub->add_option("--cap", opts.cap, "Enumeration size cap (default: MATCHSTAT_CAP or 10^7)");
}

ordered_json element_json(const GroupSpec& spec, const GroupElement& e) {
  if (spec.dimension() == 1) return e.coords[0];
  return ordered_json(e.coords);
}

template <class T>
std::string join(const std::vector<T>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

int run_stats(const std::string& text, const CommonOpts& opts) {
  const Matching m = Matching::parse(text);
  const matchstat::CrossNest cn = cross_nest(m);
  const auto crs = crossing_sequence(m);
  const auto nes = nesting_sequence(m);
  const matchstat::DyckPath d = to_dyck(m);
  const matchstat::Profile pr = profile(d);
  const long long weight = m.empty() ? 0 : matchstat::profile_weight(pr);
  switch (opts.format()) {
    case Format::kJson: {
      ordered_json j{{"n", m.size()},     {"cr", cn.cr},         {"ne", cn.ne},
                     {"ca", m.camels()},  {"crs", crs},          {"nes", nes},
                     {"dyck", d.word()},  {"profile", pr},       {"S", weight}};
      std::cout << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      std::cout << "n,cr,ne,ca,crs,nes,dyck,profile,S\n"
                << m.size() << ',' << cn.cr << ',' << cn.ne << ',' << m.camels() << ','
                << join(crs, ' ') << ',' << join(nes, ' ') << ',' << d.word() << ','
                << join(pr, ' ') << ',' << weight << '\n';
      break;
    case Format::kHuman:
      std::cout << "n=" << m.size() << "\ncr=" << cn.cr << "\nne=" << cn.ne
                << "\nca=" << m.camels() << "\ncrs=" << join(crs, ',')
                << "\nnes=" << join(nes, ',') << "\ndyck=" << d.word()
                << "\nprofile=" << join(pr, ',') << "\nS=" << weight << '\n';
      break;
  }
  return 0;
}

int run_level(const std::string& text, int depth, const std::string& stat,
              const std::string& method, const CommonOpts& opts) {
  const Matching m = Matching::parse(text);
  const GroupSpec spec = GroupSpec::preset(stat);
  const auto dist = level_distribution(
      m, depth, spec,
      method == "sequence" ? matchstat::DistMethod::kSequence : matchstat::DistMethod::kBrute,
      opts.cap, opts.threads);
  std::map<GroupElement, std::uint64_t> table;
  for (const GroupElement& e : dist.sorted()) table[e] += 1;
  switch (opts.format()) {
    case Format::kJson: {
      ordered_json j = ordered_json::object();
      for (const auto& [e, count] : table) j[spec.format(e)] = count;
      std::cout << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      std::cout << "value,count\n";
      for (const auto& [e, count] : table) std::cout << spec.format(e) << ',' << count << '\n';
      break;
    case Format::kHuman:
      for (const auto& [e, count] : table) std::cout << spec.format(e) << ' ' << count << '\n';
      break;
  }
  return 0;
}

int run_similar(const std::string& text_m, const std::string& text_n, const std::string& stat,
                bool swapped, int check_depth, const CommonOpts& opts) {
  const Matching m = Matching::parse(text_m);
  const Matching n = Matching::parse(text_n);
  const GroupSpec spec = GroupSpec::preset(stat);
  const GroupSpec rhs_spec = swapped ? spec.swapped() : spec;
  const auto key_m = similarity_key(m, spec);
  const auto key_n = similarity_key(n, rhs_spec);
  const bool similar = key_m == key_n;

  std::vector<bool> levels_equal;
  bool consistent = true;
  if (check_depth >= 0) {
    for (int l = 0; l <= check_depth; ++l) {
      const auto lhs = level_distribution(m, l, spec, matchstat::DistMethod::kBrute, opts.cap,
                                          opts.threads);
      const auto rhs = level_distribution(n, l, rhs_spec, matchstat::DistMethod::kBrute, opts.cap,
                                          opts.threads);
      levels_equal.push_back(lhs == rhs);
    }
    const bool all_equal =
        std::all_of(levels_equal.begin(), levels_equal.end(), [](bool b) { return b; });
    // Keys equal iff the distributions agree on every level; levels 0 and 1
    // alone already decide, so any depth >= 1 makes the cross-check binding.
    consistent = check_depth >= 1 ? similar == all_equal : (!similar || all_equal);
  }

  auto bag_json = [&](const matchstat::SimilarityKey& key, const GroupSpec& s) {
    ordered_json bag = ordered_json::array();
    for (const GroupElement& e : key.bag) bag.push_back(element_json(s, e));
    return bag;
  };
  switch (opts.format()) {
    case Format::kJson: {
      ordered_json j{{"similar", similar},
                     {"stat", stat},
                     {"swapped", swapped},
                     {"value_m", element_json(spec, key_m.value)},
                     {"value_n", element_json(rhs_spec, key_n.value)},
                     {"bag_m", bag_json(key_m, spec)},
                     {"bag_n", bag_json(key_n, rhs_spec)}};
      if (check_depth >= 0) {
        j["levels_equal"] = levels_equal;
        j["consistent"] = consistent;
      }
      std::cout << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      std::cout << "similar,consistent\n" << (similar ? "true" : "false") << ','
                << (consistent ? "true" : "false") << '\n';
      break;
    case Format::kHuman:
      std::cout << "similar=" << (similar ? "true" : "false") << '\n';
      std::cout << "value_m=" << spec.format(key_m.value)
                << " value_n=" << rhs_spec.format(key_n.value) << '\n';
      if (check_depth >= 0) {
        std::cout << "checked_depth=" << check_depth << " levels_equal=";
        for (bool b : levels_equal) std::cout << (b ? '1' : '0');
        std::cout << " consistent=" << (consistent ? "true" : "false") << '\n';
      }
      break;
  }
  if (!consistent) {
    std::cerr << "ALERT: brute-force level check contradicts the similarity key decision\n";
    return 1;
  }
  return similar ? 0 : 1;
}

mpz_class class_count_formula(const std::string& stat, int n) {
  if (stat == "cr") return matchstat::cr_class_count_formula(n);
  if (stat == "ne") return matchstat::ne_class_count_formula(n);
  if (stat == "cr2") return n == 1 ? 1 : 2;
  return n == 1 ? 1 : (n == 2 ? 3 : 2 * n);  // ne2
}

int run_classes(int n, const std::string& stat, const CommonOpts& opts) {
  const GroupSpec spec = GroupSpec::preset(stat);
  const auto classes = partition_classes(n, spec, false, opts.cap, opts.threads);
  const mpz_class formula = class_count_formula(stat, n);
  const bool pass = mpz_class(classes.size()) == formula;
  const std::string summary = "n=" + std::to_string(n) + " stat=" + stat +
                              " brute=" + std::to_string(classes.size()) +
                              " formula=" + formula.get_str() + (pass ? " PASS" : " FAIL");
  switch (opts.format()) {
    case Format::kJson: {
      ordered_json arr = ordered_json::array();
      for (const auto& cls : classes) {
        ordered_json bag = ordered_json::array();
        for (const GroupElement& e : cls.key.bag) bag.push_back(element_json(spec, e));
        arr.push_back(ordered_json{
            {"key", ordered_json{{"value", element_json(spec, cls.key.value)}, {"bag", bag}}},
            {"size", cls.members.size()},
            {"representative", cls.members.front().format()}});
      }
      std::cout << arr.dump() << '\n';
      std::cerr << summary << '\n';
      break;
    }
    case Format::kCsv: {
      std::cout << "value,bag,size,representative\n";
      for (const auto& cls : classes) {
        std::string bag;
        for (std::size_t i = 0; i < cls.key.bag.size(); ++i) {
          if (i) bag += ' ';
          bag += spec.format(cls.key.bag[i]);
        }
        std::cout << spec.format(cls.key.value) << ',' << bag << ',' << cls.members.size()
                  << ",\"" << cls.members.front().format() << "\"\n";
      }
      std::cerr << summary << '\n';
      break;
    }
    case Format::kHuman:
      std::cout << summary << '\n';
      break;
  }
  return pass ? 0 : 1;
}

int run_enumerate(int n, const CommonOpts& opts) {
  auto ms = matchstat::all_matchings(n, opts.cap);
  std::sort(ms.begin(), ms.end());
  switch (opts.format()) {
    case Format::kJson: {
      ordered_json arr = ordered_json::array();
      for (const Matching& m : ms) arr.push_back(m.format());
      std::cout << arr.dump() << '\n';
      break;
    }
    case Format::kCsv:
      std::cout << "matching\n";
      for (const Matching& m : ms) std::cout << '"' << m.format() << "\"\n";
      break;
    case Format::kHuman:
      for (const Matching& m : ms) std::cout << m.format() << '\n';
      break;
  }
  return 0;
}

int run_verify(const std::string& id, int n, int depth, const CommonOpts& opts) {
  matchstat::VerifyOptions vopts;
  vopts.n = n;
  vopts.depth = depth;
  vopts.cap = opts.cap;
  vopts.threads = opts.threads;
  std::vector<matchstat::Report> reports;
  if (id == "all") {
    reports = matchstat::run_all(vopts);
  } else {
    reports.push_back(matchstat::check_named(id, vopts));
  }
  bool any_fail = false;
  if (opts.format() == Format::kJson) {
    if (id == "all") {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(r.to_json());
      std::cout << arr.dump() << '\n';
    } else {
      std::cout << reports.front().to_json().dump() << '\n';
    }
    for (const auto& r : reports) any_fail = any_fail || r.status == matchstat::CheckStatus::kFail;
  } else {
    for (const auto& r : reports) {
      std::cout << '[' << to_string(r.status) << "] " << r.id << " (" << r.runtime_ms << " ms)";
      if (r.status != matchstat::CheckStatus::kPass) {
        std::cout << ' ' << r.details.dump();
        for (const auto& ce : r.counterexamples) std::cout << "\n  counterexample: " << ce;
      }
      std::cout << '\n';
      any_fail = any_fail || r.status == matchstat::CheckStatus::kFail;
    }
  }
  return any_fail ? 1 : 0;
}

int run_transform(const std::string& text, const std::string& kind, int steps,
                  const CommonOpts& opts) {
  const Matching m = Matching::parse(text);
  const matchstat::PairKind pair_kind =
      kind == "nc" ? matchstat::PairKind::kNesting : matchstat::PairKind::kCrossing;
  const auto trace = transform_steps(m, pair_kind, steps);
  const matchstat::CrossNest cn = cross_nest(trace.back());
  switch (opts.format()) {
    case Format::kJson: {
      ordered_json step_list = ordered_json::array();
      for (const Matching& step : trace) step_list.push_back(step.format());
      ordered_json j{{"input", m.format()}, {"kind", kind},           {"steps", step_list},
                     {"result", trace.back().format()}, {"cr", cn.cr}, {"ne", cn.ne}};
      std::cout << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      std::cout << "step,matching,cr,ne\n";
      for (std::size_t i = 0; i < trace.size(); ++i) {
        const matchstat::CrossNest step_cn = cross_nest(trace[i]);
        std::cout << i << ",\"" << trace[i].format() << "\"," << step_cn.cr << ','
                  << step_cn.ne << '\n';
      }
      break;
    case Format::kHuman:
      std::cout << trace.back().format() << '\n';
      break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossing/nesting statistics of perfect matchings: enumeration, similarity "
               "classes, Dyck encodings and identity checks"};
  app.require_subcommand(1);

  std::string matching_text, matching_text_n, stat = "cr", method = "brute", kind, verify_id;
  int depth = 0, check_depth = -1, n = 0, steps = 1, verify_n = -1, verify_depth = -1;

  CommonOpts stats_opts, level_opts, similar_opts, classes_opts, enum_opts, verify_opts,
      transform_opts;
  const std::uint64_t default_cap = env_cap();
  for (auto* opts : {&stats_opts, &level_opts, &similar_opts, &classes_opts, &enum_opts,
                     &verify_opts, &transform_opts}) {
    opts->cap = default_cap;
  }

  auto* stats = app.add_subcommand("stats", "cr, ne, ca, crs, nes and the Dyck image");
  stats->add_option("matching", matching_text, "Matching, e.g. \"1-4,2-3\" (empty = root)");
  add_common(stats, stats_opts, false);

  auto* level = app.add_subcommand("level", "Statistic distribution on a subtree level");
  level->add_option("matching", matching_text, "Root matching (empty = whole M(depth))");
  level->add_option("--depth", depth, "Level depth")->required();
  level->add_option("--stat", stat, "Statistic preset")
      ->check(CLI::IsMember(GroupSpec::preset_names()));
  level->add_option("--method", method, "brute or sequence")
      ->check(CLI::IsMember({"brute", "sequence"}));
  add_common(level, level_opts);

  auto* similar = app.add_subcommand("similar", "Decide similarity of two matchings");
  similar->add_option("m", matching_text, "First matching")->required();
  similar->add_option("n", matching_text_n, "Second matching")->required();
  similar->add_option("--stat", stat, "Statistic preset")
      ->check(CLI::IsMember(GroupSpec::preset_names()));
  similar->add_flag("--swapped", "Compare against the (beta, alpha) key of the second matching");
  similar->add_option("--check-depth", check_depth,
                      "Also brute-force the level distributions up to this depth");
  add_common(similar, similar_opts);

  auto* classes = app.add_subcommand("classes", "Partition M(n) into similarity classes");
  classes->add_option("n", n, "Number of edges")->required();
  classes->add_option("--stat", stat, "cr, ne, cr2 or ne2")
      ->check(CLI::IsMember({"cr", "ne", "cr2", "ne2"}));
  add_common(classes, classes_opts);

  auto* enumerate = app.add_subcommand("enumerate", "List all matchings on [2n]");
  enumerate->add_option("n", n, "Number of edges")->required();
  add_common(enumerate, enum_opts, false);

  auto* verify = app.add_subcommand("verify", "Run a named identity check (or 'all')");
  verify->add_option("id", verify_id, "Check id or 'all'")->required();
  verify->add_option("--n", verify_n, "Override the check's default n");
  verify->add_option("--depth", verify_depth, "Override the check's default depth");
  add_common(verify, verify_opts);

  auto* transform = app.add_subcommand("transform", "Apply n-c or c-n transformations");
  transform->add_option("matching", matching_text, "Matching to transform")->required();
  transform->add_option("--kind", kind, "nc (nesting -> crossing) or cn")
      ->required()
      ->check(CLI::IsMember({"nc", "cn"}));
  transform->add_option("--steps", steps, "Number of applications (default 1)");
  add_common(transform, transform_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(stats)) return run_stats(matching_text, stats_opts);
    if (app.got_subcommand(level)) return run_level(matching_text, depth, stat, method, level_opts);
    if (app.got_subcommand(similar)) {
      return run_similar(matching_text, matching_text_n, stat,
                         similar->count("--swapped") > 0, check_depth, similar_opts);
    }
    if (app.got_subcommand(classes)) return run_classes(n, stat, classes_opts);
    if (app.got_subcommand(enumerate)) return run_enumerate(n, enum_opts);
    if (app.got_subcommand(verify)) {
      return run_verify(verify_id, verify_n, verify_depth, verify_opts);
    }
    if (app.got_subcommand(transform)) {
      return run_transform(matching_text, kind, steps, transform_opts);
    }
  } catch (const matchstat::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const matchstat::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
