#include "ccc/poset.hpp"

#include "ccc/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace ccc {
namespace {

void check_distinct(const std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw DuplicateLabel("duplicate label '" + l + "'");
}

// Warshall on bit rows.
void close_transitively(std::vector<Subset>& up) {
  const auto n = up.size();
  for (std::size_t i = 0; i < n; ++i) up[i].insert(i);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];
}

}  // namespace

FinitePoset FinitePoset::build(std::vector<std::string> labels,
                               const std::vector<std::pair<std::string, std::string>>& pairs,
                               OrderMode mode) {
  check_distinct(labels);
  const auto n = labels.size();
  std::vector<Subset> up(n, Subset(n));
  auto find = [&](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw UnknownLabel("unknown element '" + l + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  for (const auto& [a, b] : pairs) up[find(a)].insert(find(b));
  return from_up_sets(std::move(labels), std::move(up), mode);
}

FinitePoset FinitePoset::from_up_sets(std::vector<std::string> labels, std::vector<Subset> up,
                                      OrderMode mode) {
  check_distinct(labels);
  const auto n = labels.size();
  close_transitively(up);
  FinitePoset p;
  p.labels_ = std::move(labels);
  p.mode_ = mode;
  p.down_.assign(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) up[i].for_each([&](std::size_t j) { p.down_[j].insert(i); });
  p.up_ = std::move(up);
  if (mode == OrderMode::partial) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p.leq(i, j) && p.leq(j, i))
          throw AntisymmetryViolation(p.labels_[i] + " <= " + p.labels_[j] + " <= " + p.labels_[i]);
  }
  return p;
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = i; j < n; ++j) up[i].insert(j);
  }
  return from_up_sets(std::move(labels), std::move(up), OrderMode::partial);
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return from_up_sets(std::move(labels), std::vector<Subset>(n, Subset(n)), OrderMode::partial);
}

std::optional<std::size_t> FinitePoset::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool FinitePoset::is_antisymmetric() const {
  for (std::size_t i = 0; i < size(); ++i)
    if ((up_[i] & down_[i]).count() != 1) return false;
  return true;
}

Subset FinitePoset::up_closure(const Subset& s) const {
  Subset r(size());
  s.for_each([&](std::size_t i) { r |= up_[i]; });
  return r;
}

Subset FinitePoset::down_closure(const Subset& s) const {
  Subset r(size());
  s.for_each([&](std::size_t i) { r |= down_[i]; });
  return r;
}

Subset FinitePoset::upper_bounds(const Subset& s) const {
  Subset r = whole();
  s.for_each([&](std::size_t i) { r &= up_[i]; });
  return r;
}

Subset FinitePoset::lower_bounds(const Subset& s) const {
  Subset r = whole();
  s.for_each([&](std::size_t i) { r &= down_[i]; });
  return r;
}

bool FinitePoset::is_up_set(const Subset& s) const { return up_closure(s) == s; }
bool FinitePoset::is_down_set(const Subset& s) const { return down_closure(s) == s; }

Subset FinitePoset::maximal(const Subset& s) const {
  Subset r(size());
  s.for_each([&](std::size_t i) {
    if ((up_[i] & s).is_subset_of(down_[i])) r.insert(i);
  });
  return r;
}

Subset cut(const FinitePoset& p, const Subset& s) { return p.lower_bounds(p.upper_bounds(s)); }

bool is_directed(const FinitePoset& p, const Subset& s) {
  if (s.empty()) return false;
  const auto m = s.members();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (!(p.up(m[a]) & p.up(m[b])).intersects(s)) return false;
  return true;
}

bool is_chain(const FinitePoset& p, const Subset& s) {
  const auto m = s.members();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (!p.leq(m[a], m[b]) && !p.leq(m[b], m[a])) return false;
  return true;
}

std::optional<std::size_t> sup(const FinitePoset& p, const Subset& s) {
  const Subset ub = p.upper_bounds(s);
  std::optional<std::size_t> least;
  ub.for_each([&](std::size_t i) {
    if (!least && ub.is_subset_of(p.up(i))) least = i;
  });
  return least;
}

bool is_monotone(const FinitePoset& p, const FinitePoset& q, const MapTable& f) {
  if (f.size() != p.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (f[i] >= q.size()) return false;
    bool ok = true;
    p.up(i).for_each([&](std::size_t j) { ok = ok && q.leq(f[i], f[j]); });
    if (!ok) return false;
  }
  return true;
}

void for_each_monotone(const FinitePoset& p, const FinitePoset& q,
                       const std::function<bool(const MapTable&)>& visit) {
  const auto n = p.size();
  MapTable f(n, 0);
  if (n == 0) {
    visit(f);
    return;
  }
  if (q.size() == 0) return;
  // Assign in declaration order; check against every already assigned element.
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == n) return visit(f);
    for (std::size_t v = 0; v < q.size(); ++v) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (p.leq(j, i) && !q.leq(f[j], v)) ok = false;
        if (p.leq(i, j) && !q.leq(v, f[j])) ok = false;
      }
      if (!ok) continue;
      f[i] = v;
      if (!rec(i + 1)) return false;
    }
    return true;
  };
  rec(0);
}

std::vector<MapTable> enumerate_monotone(const FinitePoset& p, const FinitePoset& q) {
  std::vector<MapTable> out;
  for_each_monotone(p, q, [&](const MapTable& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

void for_each_directed_subset(const FinitePoset& p, const std::function<void(const Subset&)>& visit) {
  const auto n = p.size();
  if (n > 24) throw SizeCap("directed subset enumeration limited to 24 points");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Subset s = Subset::from_mask(n, mask);
    if (is_directed(p, s)) visit(s);
  }
}

std::vector<Subset> enumerate_directed_subsets(const FinitePoset& p) {
  std::vector<Subset> out;
  for_each_directed_subset(p, [&](const Subset& s) { out.push_back(s); });
  return out;
}

FinitePoset pointwise_order(const std::vector<MapTable>& maps, const FinitePoset& q,
                            std::vector<std::string> labels) {
  const auto n = maps.size();
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool le = true;
      for (std::size_t i = 0; i < maps[a].size() && le; ++i) le = q.leq(maps[a][i], maps[b][i]);
      if (le) up[a].insert(b);
    }
  return FinitePoset::from_up_sets(std::move(labels), std::move(up), q.mode());
}

std::string map_label(const MapTable& f, const std::vector<std::string>& target_labels) {
  std::string s = "<";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += target_labels[f[i]];
  }
  return s + ">";
}

}  // namespace ccc
