#include "matchstat/group.hpp"

#include <stdexcept>

namespace matchstat {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

GroupSpec::GroupSpec() : GroupSpec(1, 0, GroupElement{{1}}, GroupElement{{0}}) { name_ = "cr"; }

GroupSpec::GroupSpec(int dimension, std::int64_t modulus, GroupElement alpha, GroupElement beta)
    : dimension_(dimension),
      modulus_(modulus),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      name_("custom") {
  if (dimension_ < 1) throw std::invalid_argument("group dimension must be >= 1");
  if (modulus_ < 0) throw std::invalid_argument("modulus must be >= 0");
  if (static_cast<int>(alpha_.coords.size()) != dimension_ ||
      static_cast<int>(beta_.coords.size()) != dimension_) {
    throw std::invalid_argument("alpha/beta dimension mismatch");
  }
  alpha_ = reduce(std::move(alpha_));
  beta_ = reduce(std::move(beta_));
}

GroupSpec GroupSpec::preset(std::string_view name) {
  GroupSpec spec;
  if (name == "cr") {
    spec = GroupSpec(1, 0, {{1}}, {{0}});
  } else if (name == "ne") {
    spec = GroupSpec(1, 0, {{0}}, {{1}});
  } else if (name == "cn") {
    spec = GroupSpec(2, 0, {{1, 0}}, {{0, 1}});
  } else if (name == "nc") {
    spec = GroupSpec(2, 0, {{0, 1}}, {{1, 0}});
  } else if (name == "camel") {
    spec = GroupSpec(1, 0, {{1}}, {{1}});
  } else if (name == "cr2") {
    spec = GroupSpec(1, 2, {{1}}, {{0}});
  } else if (name == "ne2") {
    spec = GroupSpec(1, 2, {{0}}, {{1}});
  } else {
    throw std::invalid_argument("unknown statistic preset '" + std::string(name) + "'");
  }
  spec.name_ = std::string(name);
  return spec;
}

const std::vector<std::string>& GroupSpec::preset_names() {
  static const std::vector<std::string> names = {"cr", "ne", "cn", "nc", "camel", "cr2", "ne2"};
  return names;
}

GroupSpec GroupSpec::from_json(const nlohmann::json& j) {
  GroupElement alpha{j.at("alpha").get<std::vector<std::int64_t>>()};
  GroupElement beta{j.at("beta").get<std::vector<std::int64_t>>()};
  return GroupSpec(j.at("k").get<int>(), j.at("m").get<std::int64_t>(), std::move(alpha),
                   std::move(beta));
}

nlohmann::json GroupSpec::to_json() const {
  return nlohmann::json{
      {"k", dimension_}, {"m", modulus_}, {"alpha", alpha_.coords}, {"beta", beta_.coords}};
}

GroupSpec GroupSpec::swapped() const {
  GroupSpec out(dimension_, modulus_, beta_, alpha_);
  out.name_ = name_ + "-swapped";
  return out;
}

GroupElement GroupSpec::zero() const {
  return GroupElement{std::vector<std::int64_t>(static_cast<std::size_t>(dimension_), 0)};
}

GroupElement GroupSpec::reduce(GroupElement a) const {
  if (modulus_ > 0) {
    for (auto& c : a.coords) c = mod_reduce(c, modulus_);
  }
  return a;
}

GroupElement GroupSpec::add(GroupElement a, const GroupElement& b) const {
  for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
  return reduce(std::move(a));
}

GroupElement GroupSpec::sub(GroupElement a, const GroupElement& b) const {
  for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] -= b.coords[i];
  return reduce(std::move(a));
}

GroupElement GroupSpec::scale(std::int64_t c, GroupElement a) const {
  if (modulus_ > 0) c = mod_reduce(c, modulus_);
  for (auto& x : a.coords) x *= c;
  return reduce(std::move(a));
}

std::string GroupSpec::format(const GroupElement& a) const {
  if (dimension_ == 1) return std::to_string(a.coords[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a.coords[i]);
  }
  out += ')';
  return out;
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  return a.dimension_ == b.dimension_ && a.modulus_ == b.modulus_ && a.alpha_ == b.alpha_ &&
         a.beta_ == b.beta_;
}

GroupElement statistic(const Matching& m, const GroupSpec& spec) {
  const CrossNest cn = cross_nest(m);
  return spec.add(spec.scale(cn.cr, spec.alpha()), spec.scale(cn.ne, spec.beta()));
}

GroupSequence r_step(const GroupSequence& x, int index, const GroupSpec& spec) {
  const int len = static_cast<int>(x.length());
  if (index < 1 || index > len) {
    throw std::out_of_range("r_step index " + std::to_string(index) + " not in 1.." +
                            std::to_string(len));
  }
  const GroupElement& xi = x.terms[static_cast<std::size_t>(index - 1)];
  const GroupElement base = spec.sub(xi, x.terms[0]);  // x_i - x_1
  const GroupElement up = spec.add(base, spec.alpha());
  const GroupElement down = spec.add(base, spec.beta());
  GroupSequence out;
  out.terms.reserve(static_cast<std::size_t>(len) + 2);
  out.terms.push_back(xi);
  for (int j = 1; j <= index; ++j) {
    out.terms.push_back(spec.add(up, x.terms[static_cast<std::size_t>(j - 1)]));
  }
  for (int j = index; j <= len; ++j) {
    out.terms.push_back(spec.add(down, x.terms[static_cast<std::size_t>(j - 1)]));
  }
  return out;
}

SequenceMultiset r_all(const GroupSequence& x, const GroupSpec& spec) {
  SequenceMultiset out;
  for (int i = 1; i <= static_cast<int>(x.length()); ++i) out.insert(r_step(x, i, spec));
  return out;
}

SequenceMultiset r_all(const SequenceMultiset& xs, const GroupSpec& spec) {
  SequenceMultiset out;
  for (const GroupSequence& x : xs.sorted()) out.merge(r_all(x, spec));
  return out;
}

SequenceMultiset r_iterate(const GroupSequence& x, int l, const GroupSpec& spec,
                           std::uint64_t cap) {
  // |R^l(x)| = len (len+2) ... (len+2l-2); check the product up front.
  std::uint64_t total = 1;
  for (int i = 0; i < l; ++i) {
    total *= x.length() + 2 * static_cast<std::uint64_t>(i);
    if (total > cap) {
      throw CapExceeded("r_iterate would produce more than " + std::to_string(cap) +
                        " sequences");
    }
  }
  SequenceMultiset out;
  out.insert(x);
  for (int i = 0; i < l; ++i) out = r_all(out, spec);
  return out;
}

GroupSequence seq(const Matching& m, const GroupSpec& spec, SeqMethod method) {
  if (method == SeqMethod::kRecursive) {
    std::vector<int> gaps;
    gaps.reserve(static_cast<std::size_t>(m.size()));
    Matching cur = m;
    while (!cur.empty()) {
      auto [parent, gap] = cur.remove_first_edge();
      gaps.push_back(gap);
      cur = std::move(parent);
    }
    GroupSequence s{{spec.zero()}};
    for (auto it = gaps.rbegin(); it != gaps.rend(); ++it) s = r_step(s, *it, spec);
    return s;
  }
  const GapProfile gp = gap_profile(m);
  const GroupElement s0 = statistic(m, spec);
  GroupSequence out;
  out.terms.reserve(gp.cover.size());
  for (std::size_t j = 0; j < gp.cover.size(); ++j) {
    GroupElement t = spec.add(spec.scale(gp.cover[j], spec.alpha()),
                              spec.scale(gp.left[j], spec.beta()));
    out.terms.push_back(spec.add(std::move(t), s0));
  }
  return out;
}

std::uint64_t weak_tuple_count(std::size_t length, int r, std::uint64_t cap) {
  if (r < 0) throw std::invalid_argument("negative tuple order");
  // C(length + r - 1, r), overflow-guarded against cap.
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * (length + static_cast<std::size_t>(r) - static_cast<std::size_t>(i));
    acc /= static_cast<unsigned>(i);
    if (acc > cap) {
      throw CapExceeded("weakly increasing tuple count exceeds cap " + std::to_string(cap));
    }
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

// Enumerates weakly increasing r-tuples over [1, len] and feeds the term sums
// to emit(sum_of_terms).
template <class Emit>
void for_each_weak_tuple_sum(const GroupSequence& x, int r, const GroupSpec& spec, Emit&& emit) {
  const int len = static_cast<int>(x.length());
  if (r == 0) {
    emit(spec.zero());
    return;
  }
  std::vector<int> idx(static_cast<std::size_t>(r), 1);
  for (;;) {
    GroupElement sum = spec.zero();
    for (int i : idx) sum = spec.add(std::move(sum), x.terms[static_cast<std::size_t>(i - 1)]);
    emit(std::move(sum));
    int p = r - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == len) --p;
    if (p < 0) break;
    const int v = idx[static_cast<std::size_t>(p)] + 1;
    for (int q = p; q < r; ++q) idx[static_cast<std::size_t>(q)] = v;
  }
}

}  // namespace

ElementMultiset f_r_gamma(const GroupSequence& x, int r, const GroupElement& gamma,
                          const GroupSpec& spec, std::uint64_t cap) {
  if (x.length() == 0) throw std::invalid_argument("f_r_gamma on empty sequence");
  weak_tuple_count(x.length(), r, cap);
  // shift = gamma - (r-1) x_1
  const GroupElement shift = spec.add(spec.scale(-(r - 1), x.terms[0]), gamma);
  ElementMultiset out;
  for_each_weak_tuple_sum(x, r, spec, [&](GroupElement sum) {
    out.insert(spec.add(std::move(sum), shift));
  });
  return out;
}

ElementMultiset f_r_gamma(const SequenceMultiset& xs, int r, const GroupElement& gamma,
                          const GroupSpec& spec, std::uint64_t cap) {
  ElementMultiset out;
  for (const GroupSequence& x : xs.sorted()) out.merge(f_r_gamma(x, r, gamma, spec, cap));
  return out;
}

ElementMultiset g_r(const GroupSequence& x, int r, const GroupSpec& spec, std::uint64_t cap) {
  if (r < 1) throw std::invalid_argument("g_r requires r >= 1");
  if (x.length() == 0) throw std::invalid_argument("g_r on empty sequence");
  weak_tuple_count(x.length(), r, cap);
  ElementMultiset out;
  for_each_weak_tuple_sum(x, r, spec, [&](GroupElement sum) { out.insert(std::move(sum)); });
  return out;
}

ElementMultiset terms_multiset(const GroupSequence& x) {
  ElementMultiset out;
  for (const GroupElement& t : x.terms) out.insert(t);
  return out;
}

ElementMultiset level_distribution(const Matching& m, int depth, const GroupSpec& spec,
                                   DistMethod method, std::uint64_t cap, int threads) {
  const mpz_class expected = level_size(m.size(), depth);
  if (expected > mpz_class(static_cast<unsigned long>(cap))) {
    throw CapExceeded("level distribution of size " + expected.get_str() + " exceeds cap " +
                      std::to_string(cap));
  }
  if (method == DistMethod::kBrute) {
    auto states = level_map<ElementMultiset>(
        m, depth, threads,
        [&spec](ElementMultiset& acc, const Matching& leaf) { acc.insert(statistic(leaf, spec)); });
    ElementMultiset out;
    for (auto& s : states) out.merge(std::move(s));
    return out;
  }
  // Sequence method: s(T(M, depth)) equals the terms of R^(depth-1)(seq(M)).
  const GroupSequence base = seq(m, spec);
  if (depth == 0) return f_r_gamma(base, 0, spec.zero(), spec, cap);
  const SequenceMultiset iter = r_iterate(base, depth - 1, spec, cap);
  ElementMultiset out;
  for (const GroupSequence& x : iter.sorted()) out.merge(terms_multiset(x));
  return out;
}

}  // namespace matchstat
