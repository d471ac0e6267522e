#include "ccc/topology.hpp"

#include "ccc/errors.hpp"

#include <algorithm>
#include <set>

namespace ccc {
namespace {

std::string show(const Subset& s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += labels[i];
    first = false;
  });
  return out + "}";
}

FiniteTopology from_subbase(std::vector<std::string> ground, const std::vector<Subset>& subbase) {
  const auto n = ground.size();
  std::vector<Subset> up(n, Subset::full(n));
  for (const auto& u : subbase) u.for_each([&](std::size_t x) { up[x] &= u; });
  return FiniteTopology::from_specialization(
      FinitePoset::from_up_sets(std::move(ground), std::move(up), OrderMode::pre));
}

}  // namespace

FiniteTopology FiniteTopology::make(std::vector<std::string> ground, const std::vector<Subset>& opens,
                                    bool complete, const Limits& limits) {
  const auto n = ground.size();
  if (n > limits.max_points)
    throw SizeCap("explicit topology on " + std::to_string(n) + " points exceeds cap " +
                  std::to_string(limits.max_points));
  for (const auto& u : opens)
    if (u.width() != n) throw NotATopology("open set over a different ground set");
  if (complete) return from_subbase(std::move(ground), opens);

  std::set<Subset> family(opens.begin(), opens.end());
  if (!family.count(Subset(n))) throw NotATopology("empty set missing");
  if (!family.count(Subset::full(n))) throw NotATopology("ground set missing");
  for (auto a = family.begin(); a != family.end(); ++a)
    for (auto b = std::next(a); b != family.end(); ++b) {
      if (!family.count(*a | *b))
        throw NotATopology("union of " + show(*a, ground) + " and " + show(*b, ground) + " missing");
      if (!family.count(*a & *b))
        throw NotATopology("intersection of " + show(*a, ground) + " and " + show(*b, ground) +
                           " missing");
    }
  FiniteTopology t = from_subbase(std::move(ground), std::vector<Subset>(family.begin(), family.end()));
  // Finite topologies are Alexandroff: the family is exactly the up-sets.
  if (t.count_opens(limits) != family.size())
    throw std::logic_error("finite topology failed the Alexandroff collapse");
  return t;
}

FiniteTopology FiniteTopology::from_specialization(const FinitePoset& order) {
  FiniteTopology t;
  t.order_ = order;
  return t;
}

FiniteTopology FiniteTopology::discrete(std::vector<std::string> ground) {
  const auto n = ground.size();
  return from_specialization(
      FinitePoset::from_up_sets(std::move(ground), std::vector<Subset>(n, Subset(n)), OrderMode::pre));
}

FiniteTopology FiniteTopology::indiscrete(std::vector<std::string> ground) {
  const auto n = ground.size();
  return from_specialization(FinitePoset::from_up_sets(
      std::move(ground), std::vector<Subset>(n, Subset::full(n)), OrderMode::pre));
}

FiniteTopology FiniteTopology::sierpinski() {
  return from_specialization(FinitePoset::build({"bot", "top"}, {{"bot", "top"}}, OrderMode::pre));
}

FiniteTopology FiniteTopology::point() { return discrete({"*"}); }

Subset FiniteTopology::interior(const Subset& s) const {
  Subset r(size());
  for (std::size_t x = 0; x < size(); ++x)
    if (nbhd(x).is_subset_of(s)) r.insert(x);
  return r;
}

std::vector<Subset> FiniteTopology::opens(const Limits& limits) const {
  const auto n = size();
  if (n > limits.max_points)
    throw SizeCap("listing opens of " + std::to_string(n) + " points exceeds cap " +
                  std::to_string(limits.max_points));
  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Subset u = Subset::from_mask(n, mask);
    if (is_open(u)) out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::size_t FiniteTopology::count_opens(const Limits& limits) const {
  const auto n = size();
  if (n > limits.max_points) throw SizeCap("counting opens beyond cap");
  std::size_t c = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    if (is_open(Subset::from_mask(n, mask))) ++c;
  return c;
}

bool FiniteTopology::finer_or_equal(const FiniteTopology& other) const {
  for (std::size_t x = 0; x < size(); ++x)
    if (!nbhd(x).is_subset_of(other.nbhd(x))) return false;
  return true;
}

FiniteTopology FiniteTopology::relabel(std::vector<std::string> labels) const {
  std::vector<Subset> up;
  for (std::size_t x = 0; x < size(); ++x) up.push_back(nbhd(x));
  return from_specialization(FinitePoset::from_up_sets(std::move(labels), std::move(up), OrderMode::pre));
}

FinitePoset specialization(const FiniteTopology& t) { return t.specialization(); }

FiniteTopology order_topology(const FinitePoset& p, OrderTopology kind, const Limits& limits) {
  const auto n = p.size();
  if (kind == OrderTopology::alexandroff) return FiniteTopology::from_specialization(p);
  if (!p.is_antisymmetric())
    throw PreconditionViolated("upper and Scott topologies require a partial order");
  if (kind == OrderTopology::upper) {
    std::vector<Subset> subbase;
    for (std::size_t x = 0; x < n; ++x) subbase.push_back(p.down(x).complement());
    return from_subbase(p.labels(), subbase);
  }
  if (n > limits.max_points) throw SizeCap("Scott topology by definition exceeds cap");
  std::vector<std::pair<Subset, std::size_t>> directed_with_sup;
  for_each_directed_subset(p, [&](const Subset& d) {
    if (auto s = sup(p, d)) directed_with_sup.emplace_back(d, *s);
  });
  std::vector<Subset> opens;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Subset u = Subset::from_mask(n, mask);
    if (!p.is_up_set(u)) continue;
    bool ok = true;
    for (const auto& [d, s] : directed_with_sup)
      if (u.contains(s) && !d.intersects(u)) {
        ok = false;
        break;
      }
    if (ok) opens.push_back(std::move(u));
  }
  return FiniteTopology::make(p.labels(), opens, false, limits);
}

bool continuous(const MapTable& f, const FiniteTopology& x, const FiniteTopology& y) {
  if (f.size() != x.size()) throw PreconditionViolated("map is not total on its source");
  for (auto v : f)
    if (v >= y.size()) throw PreconditionViolated("map leaves its target");
  for (std::size_t b = 0; b < y.size(); ++b) {
    Subset pre(x.size());
    for (std::size_t a = 0; a < x.size(); ++a)
      if (y.nbhd(b).contains(f[a])) pre.insert(a);
    if (!x.is_open(pre)) return false;
  }
  return true;
}

std::size_t product_index(std::size_t i, std::size_t j, std::size_t ny) { return i * ny + j; }

FiniteTopology product(const FiniteTopology& x, const FiniteTopology& y) {
  const auto nx = x.size();
  const auto ny = y.size();
  const auto n = nx * ny;
  std::vector<std::string> labels;
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      labels.push_back("(" + x.label(i) + "," + y.label(j) + ")");
      auto& u = up[product_index(i, j, ny)];
      x.nbhd(i).for_each([&](std::size_t a) {
        y.nbhd(j).for_each([&](std::size_t b) { u.insert(product_index(a, b, ny)); });
      });
    }
  return FiniteTopology::from_specialization(
      FinitePoset::from_up_sets(std::move(labels), std::move(up), OrderMode::pre));
}

FiniteTopology final_topology(std::vector<std::string> ground, const std::vector<Probe>& probes) {
  const auto n = ground.size();
  std::vector<HornRule> rules;
  for (const auto& pr : probes) {
    if (pr.map.size() != pr.source.size()) throw PreconditionViolated("probe is not total");
    for (std::size_t s = 0; s < pr.source.size(); ++s) {
      if (pr.map[s] >= n) throw PreconditionViolated("probe leaves the ground set");
      Subset img(n);
      pr.source.nbhd(s).for_each([&](std::size_t t) { img.insert(pr.map[t]); });
      rules.push_back({pr.map[s], std::move(img)});
    }
  }
  return topology_from_rules(std::move(ground), rules);
}

FiniteTopology topology_from_rules(std::vector<std::string> ground, const std::vector<HornRule>& rules) {
  const auto n = ground.size();
  std::vector<Subset> by_trigger(n, Subset(n));
  for (const auto& r : rules) by_trigger[r.trigger] |= r.required;
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t x = 0; x < n; ++x) {
    Subset cur = Subset::singleton(n, x);
    Subset done(n);
    while (!(cur - done).empty()) {
      Subset fresh = cur - done;
      done |= fresh;
      fresh.for_each([&](std::size_t p) { cur |= by_trigger[p]; });
    }
    up[x] = std::move(cur);
  }
  return FiniteTopology::from_specialization(
      FinitePoset::from_up_sets(std::move(ground), std::move(up), OrderMode::pre));
}

}  // namespace ccc
