#include "ccc/cspace.hpp"

#include "ccc/errors.hpp"
#include "ccc/report.hpp"

#include <algorithm>
#include <map>

namespace ccc {

namespace {

std::uint64_t point_bound(OmegaPoint p) { return p.chain ? p.index + 1 : 0; }

}  // namespace

CSpaceVerdict is_c_space(const FiniteTopology& x) {
  const auto opens = x.opens();
  const auto& order = x.specialization();
  for (std::size_t p = 0; p < x.size(); ++p)
    for (const auto& u : opens) {
      if (!u.contains(p)) continue;
      bool found = false;
      u.for_each([&](std::size_t y) { found = found || x.interior(order.up(y)).contains(p); });
      if (!found) return {false, x.label(p), format_subset(u, x.labels())};
    }
  return {};
}

CSpaceVerdict is_c_space(const OmegaTopology& x) {
  if (!x.generators_form_base()) throw Unsupported("c-space check needs a base");
  const auto k = x.horizon() + 2;
  for (const auto& p : representatives(x.order(), k)) {
    const auto kp = std::max(k, point_bound(p));
    const auto around = x.neighbourhoods(p, kp + 3);
    for (const auto& u : x.neighbourhoods(p, kp + 1)) {
      bool found = false;
      for (const auto& y : representatives(x.order(), kp + 3)) {
        if (!u.contains(y)) continue;
        const auto up = x.up(y);
        found = std::any_of(around.begin(), around.end(), [&](const SchematicSet& b) { return b.is_subset_of(up); });
        if (found) break;
      }
      if (!found) return {false, x.order().label(p), to_string(u, x.order())};
    }
  }
  return {};
}

Subset eventual_lower_bounds(const FiniteTopology& x, const FiniteNet& net) {
  Subset out(x.size());
  for (std::size_t y = 0; y < x.size(); ++y)
    if (net.eventually_in(x.specialization().up(y))) out.insert(y);
  return out;
}

SchematicSet eventual_lower_bounds(const OmegaTopology& x, const SchematicNet& net) {
  const auto k = std::max(x.horizon(), net.bound()) + 2;
  return tabulate(x.order(), k, [&](OmegaPoint y) { return net.eventually_in(x.up(y)); });
}

bool in_s_class(const FiniteTopology& x, const FiniteNet& net, std::size_t point) {
  const auto el = eventual_lower_bounds(x, net);
  bool found = false;
  for_each_directed_subset(x.specialization(), [&](const Subset& d) {
    if (!found && d.is_subset_of(el) && converges(x, FiniteNet::directed(x.specialization(), d), point))
      found = true;
  });
  return found;
}

bool in_s_class(const OmegaTopology& x, const SchematicNet& net, OmegaPoint point) {
  const auto el = eventual_lower_bounds(x, net);
  const auto k = std::max({x.horizon(), net.bound(), point_bound(point)}) + 2;
  // A directed subset either has a maximum m (converging to the points
  // below m) or meets the chain cofinally.
  for (const auto& m : el.members(k))
    if (x.leq(point, m)) return true;
  if (!el.tail()) return false;
  const SchematicSet tail(Subset(x.fin_size()), {}, *el.tail());
  if (!is_directed(x.order(), tail)) return false;
  return converges(x, tail, point);
}

ConvergenceClass s_class(const FiniteTopology& x) {
  const auto n = x.size();
  if (n > 12) throw SizeCap("S class enumeration is limited to 12 points");
  std::vector<ClassPair> pairs;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto net = FiniteNet::tail(Subset::from_mask(n, mask));
    for (std::size_t p = 0; p < n; ++p)
      if (in_s_class(x, net, p)) pairs.push_back({net, p});
  }
  return ConvergenceClass(n, std::move(pairs));
}

FiniteTopology s_topology(const FiniteTopology& x) { return determined_topology(x.labels(), s_class(x)); }

OmegaTopology s_topology(const OmegaTopology& x) {
  // Constant nets force up-sets. A net whose lower bounds contain a
  // cofinal part of the chain converging to p is eventually above some
  // chain point of any up-set containing p and a tail; the ramp is the
  // weakest such net, so its S pairs give the tail rule.
  const auto ramp = SchematicNet::ramp(1, 0);
  return up_tail_topology(
      x.order(), x.horizon(), [x](OmegaPoint a, OmegaPoint b) { return x.leq(a, b); },
      [x, ramp](OmegaPoint p) { return in_s_class(x, ramp, p); },
      x.generic_order() == OmegaTopology::GenericOrder::chain, "S(" + x.description() + ")");
}

std::string to_string(STopological v) {
  switch (v) {
    case STopological::topological: return "topological";
    case STopological::refuted: return "refuted";
    case STopological::undetermined: return "undetermined";
  }
  return "undetermined";
}

STopologicalVerdict s_class_topological(const FiniteTopology& x) {
  STopologicalVerdict out;
  const auto n = x.size();
  if (n > 12) throw SizeCap("S class enumeration is limited to 12 points");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto net = FiniteNet::tail(Subset::from_mask(n, mask));
    for (std::size_t p = 0; p < n; ++p) {
      ++out.checked;
      if (converges(x, net, p) != in_s_class(x, net, p)) {
        out.verdict = STopological::refuted;
        out.witness = "eventual set " + format_subset(net.eventual(), x.labels()) + " at " + x.label(p);
        return out;
      }
    }
  }
  out.verdict = STopological::topological;
  return out;
}

STopologicalVerdict s_class_topological(const OmegaTopology& x, const std::vector<SClassQuery>& witnesses) {
  STopologicalVerdict out;
  bool agree = true;
  for (const auto& q : witnesses) {
    ++out.checked;
    const bool conv = converges(x, q.net, q.point);
    const bool in_s = in_s_class(x, q.net, q.point);
    if (conv && !in_s) {
      out.verdict = STopological::refuted;
      out.witness = to_string(q.net, x.order()) + " -> " + x.order().label(q.point);
      return out;
    }
    agree = agree && conv == in_s;
  }
  if (agree && x.generators_form_base() && is_c_space(x).c_space) out.verdict = STopological::topological;
  return out;
}

std::vector<SClassQuery> standard_battery(const OmegaTopology& x) {
  const auto k = x.horizon() + 3;
  const auto pts = representatives(x.order(), k);
  std::vector<SchematicNet> nets;
  for (const auto& p : pts) nets.push_back(SchematicNet::constant(p));
  for (std::uint64_t a = 1; a <= 2; ++a)
    for (std::uint64_t b = 0; b <= 2; ++b) nets.push_back(SchematicNet::ramp(a, b));
  for (std::size_t f = 0; f < x.fin_size(); ++f) {
    nets.push_back(SchematicNet({OmegaPoint::fin(f), Ramp{2, 0}}));
    nets.push_back(SchematicNet({Ramp{2, 1}, OmegaPoint::fin(f)}));
  }
  std::vector<SClassQuery> out;
  for (const auto& n : nets)
    for (const auto& p : pts) out.push_back({n, p});
  return out;
}

}  // namespace ccc
