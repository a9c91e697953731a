#include "matchstat/dyck.hpp"

#include <algorithm>
#include <stdexcept>

namespace matchstat {

DyckPath DyckPath::unchecked(std::string steps) {
  DyckPath d;
  d.steps_ = std::move(steps);
  return d;
}

DyckPath DyckPath::parse(std::string_view text) {
  std::string steps;
  steps.reserve(text.size());
  int height = 0;
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    if (c == 'U' || c == 'u' || c == '(') {
      steps.push_back('U');
      ++height;
    } else if (c == 'D' || c == 'd' || c == ')') {
      steps.push_back('D');
      if (--height < 0) throw ParseError("path dips below the axis at step " +
                                         std::to_string(steps.size()));
    } else {
      throw ParseError(std::string("invalid step character '") + c + "'");
    }
  }
  if (height != 0) throw ParseError("unbalanced path: " + std::to_string(height) +
                                    " unmatched up-step(s)");
  return unchecked(std::move(steps));
}

DyckPath to_dyck(const Matching& m) {
  std::string steps(static_cast<std::size_t>(m.vertex_count()), 'D');
  for (int v = 1; v <= m.vertex_count(); ++v) {
    if (m.partner(v) > v) steps[static_cast<std::size_t>(v - 1)] = 'U';
  }
  return DyckPath::unchecked(std::move(steps));
}

std::vector<int> altitude_sequence(const DyckPath& d) {
  std::vector<int> als;
  als.reserve(static_cast<std::size_t>(d.step_count()) + 1);
  int h = 0;
  als.push_back(0);
  for (int i = 0; i < d.step_count(); ++i) {
    h += d.up(i) ? 1 : -1;
    als.push_back(h);
  }
  return als;
}

Profile profile(const DyckPath& d) {
  // Strip i (1-based) holds the steps moving between altitudes i-1 and i;
  // a_i is half their count.
  int max_h = 0, h = 0;
  for (int i = 0; i < d.step_count(); ++i) {
    h += d.up(i) ? 1 : -1;
    max_h = std::max(max_h, h);
  }
  Profile a(static_cast<std::size_t>(max_h), 0);
  h = 0;
  for (int i = 0; i < d.step_count(); ++i) {
    const int strip = d.up(i) ? h + 1 : h;
    a[static_cast<std::size_t>(strip - 1)] += 1;
    h += d.up(i) ? 1 : -1;
  }
  for (int& half : a) half /= 2;
  return a;
}

std::vector<int> down_sequence(const DyckPath& d) {
  std::vector<int> dos;
  dos.reserve(static_cast<std::size_t>(d.step_count()) + 1);
  int downs = 0;
  dos.push_back(0);
  for (int i = 0; i < d.step_count(); ++i) {
    if (!d.up(i)) ++downs;
    dos.push_back(downs);
  }
  return dos;
}

std::vector<Tunnel> tunnels(const DyckPath& d) {
  std::vector<Tunnel> out;
  out.reserve(static_cast<std::size_t>(d.semilength()));
  std::vector<int> stack;
  for (int i = 1; i <= d.step_count(); ++i) {
    if (d.up(i - 1)) {
      stack.push_back(i);
    } else {
      out.push_back(Tunnel{stack.back(), i});
      stack.pop_back();
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long tunnel_cover_count(const DyckPath& d) {
  // A tunnel opened at stack depth k is covered by exactly the k tunnels
  // still open below it.
  long long covered = 0;
  long long depth = 0;
  for (int i = 0; i < d.step_count(); ++i) {
    if (d.up(i)) {
      covered += depth;
      ++depth;
    } else {
      --depth;
    }
  }
  return covered;
}

Matching noncrossing_preimage(const DyckPath& d) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(d.semilength()));
  for (const Tunnel& t : tunnels(d)) edges.emplace_back(t.up, t.down);
  return Matching::from_edges(edges);
}

namespace {

void validate_profile(const Profile& a) {
  if (a.empty()) return;
  for (int part : a) {
    if (part < 1) throw std::invalid_argument("profile parts must be >= 1");
  }
}

}  // namespace

DyckPath path_from_profile(const Profile& a) {
  validate_profile(a);
  const int m = static_cast<int>(a.size());
  std::string steps;
  steps.append(static_cast<std::size_t>(m), 'U');
  for (int i = m; i >= 1; --i) {
    for (int rep = 1; rep < a[static_cast<std::size_t>(i - 1)]; ++rep) steps += "DU";
    steps.push_back('D');
  }
  return DyckPath::unchecked(std::move(steps));
}

long long profile_weight(const Profile& a) {
  validate_profile(a);
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(i) * a[i];
  return s;
}

std::pair<long long, long long> realizable_crossings(const Profile& a) {
  return {0, profile_weight(a)};
}

std::vector<DyckPath> dyck_paths(int n, std::uint64_t cap) {
  const mpz_class expected = catalan(n);
  if (expected > mpz_class(static_cast<unsigned long>(cap))) {
    throw CapExceeded("D(" + std::to_string(n) + ") of size " + expected.get_str() +
                      " exceeds cap " + std::to_string(cap));
  }
  std::vector<DyckPath> out;
  out.reserve(expected.get_ui());
  for_each_dyck_path(n, [&](const DyckPath& d) { out.push_back(d); });
  return out;
}

std::vector<Profile> compositions(int n) {
  std::vector<Profile> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  Profile cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = 1; part <= rest; ++part) {
      cur.push_back(part);
      self(self, rest - part);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

}  // namespace matchstat
