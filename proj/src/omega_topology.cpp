#include "ccc/omega_topology.hpp"

#include "ccc/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

namespace ccc {
namespace {

template <class K, class V>
class Memo {
 public:
  template <class F>
  V get(const K& key, F&& compute) const {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    V value = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    map_.emplace(key, value);
    return value;
  }

 private:
  mutable std::mutex mutex_;
  mutable std::map<K, V> map_;
};

std::uint64_t point_bound(OmegaPoint x) { return x.chain ? x.index + 1 : 0; }

std::uint64_t templates_bound(const std::vector<SchemaTemplate>& ts) {
  std::uint64_t b = 0;
  for (const auto& t : ts) b = std::max(b, t.bound());
  return b;
}

// Topology generated by templates that form a base.
class TemplateModel : public OmegaModel {
 public:
  bool is_open(const SchematicSet& u) const override {
    const auto k = std::max(horizon, u.bound()) + 2;
    const auto insts = instances(k + 1);
    for (const auto& x : u.members(k)) {
      bool covered = std::any_of(insts.begin(), insts.end(),
                                 [&](const SchematicSet& b) { return b.contains(x) && b.is_subset_of(u); });
      if (!covered) return false;
    }
    return true;
  }
};

// U is open iff U is an up-set of the given preorder and, when chain points
// beyond the horizon form a chain, U has a tail as soon as it contains a
// trigger point.
class UpTailModel : public OmegaModel {
 public:
  std::function<bool(OmegaPoint, OmegaPoint)> inner_leq;
  std::function<bool(OmegaPoint)> trigger;
  bool chain_directed = true;

  SchematicSet up_of(OmegaPoint x) const {
    return ups_.get(x, [&] {
      return tabulate(order, std::max(horizon, point_bound(x)) + 2,
                      [&](OmegaPoint y) { return inner_leq(x, y); });
    });
  }

  bool triggered(OmegaPoint x) const {
    return triggers_.get(x, [&] { return trigger(x); });
  }

  bool is_open(const SchematicSet& u) const override {
    const auto k = std::max(horizon, u.bound()) + 2;
    const auto pts = u.members(k);
    for (const auto& x : pts)
      if (!up_of(x).is_subset_of(u)) return false;
    if (chain_directed && !u.tail())
      for (const auto& x : pts)
        if (triggered(x)) return false;
    return true;
  }

  bool leq(OmegaPoint x, OmegaPoint y) const override { return inner_leq(x, y); }

  bool chain_limit(OmegaPoint x) const override {
    const auto u = up_of(x);
    return is_open(u) ? u.tail().has_value() : true;
  }

 private:
  Memo<OmegaPoint, SchematicSet> ups_;
  Memo<OmegaPoint, bool> triggers_;
};

// Subbase {X - down f} and codown(n) of a presentation order.
class UpperModel : public OmegaModel {
 public:
  bool is_open(const SchematicSet& u) const override {
    const auto k = std::max(horizon, u.bound()) + 2;
    const auto pts = u.members(k);
    for (const auto& x : pts) {
      auto up = tabulate(order, std::max(horizon, point_bound(x)) + 2,
                         [&](OmegaPoint y) { return order.leq(x, y); });
      if (!up.is_subset_of(u)) return false;
    }
    if (!u.complement().tail()) return true;
    // A cofinal part of the complement must sit below one element outside up(x).
    for (const auto& x : pts) {
      bool found = false;
      for (std::size_t f = 0; f < order.fin_size() && !found; ++f)
        found = order.above_chain(f) && !order.leq(x, OmegaPoint::fin(f));
      if (!found) return false;
    }
    return true;
  }
};

OmegaTopology extract_up_tail(std::shared_ptr<UpTailModel> m);

}  // namespace

// --------------------------------------------------------------- OmegaModel

std::vector<SchematicSet> OmegaModel::instances(std::uint64_t k) const {
  std::vector<SchematicSet> out;
  out.push_back(SchematicSet::whole(order.fin_size()));
  for (const auto& t : generators) {
    if (t.param == ParamKind::none) {
      out.push_back(t.instance(order, 0));
      continue;
    }
    for (std::uint64_t n = t.param_from; n <= std::max(k, t.param_from); ++n) out.push_back(t.instance(order, n));
  }
  return out;
}

std::uint64_t OmegaModel::bound(OmegaPoint x) const { return point_bound(x); }

bool OmegaModel::leq(OmegaPoint x, OmegaPoint y) const {
  const auto k = std::max({horizon, point_bound(x), point_bound(y)}) + 2;
  for (const auto& b : instances(k))
    if (b.contains(x) && !b.contains(y)) return false;
  return true;
}

bool OmegaModel::chain_limit(OmegaPoint x) const {
  const auto k = std::max(horizon, point_bound(x)) + 2;
  for (const auto& b : instances(k))
    if (b.contains(x) && !b.tail()) return false;
  return true;
}

// ------------------------------------------------------------- OmegaTopology

OmegaTopology OmegaTopology::of(const OmegaSpace& space) {
  auto m = std::make_shared<TemplateModel>();
  m->order = space.order();
  m->generators = space.base();
  m->horizon = space.horizon();
  m->description = "template space";
  return OmegaTopology(std::move(m));
}

const std::vector<SchemaTemplate>& OmegaTopology::generators() const {
  if (model_->extraction_failure) throw BaseExtractionIncomplete(*model_->extraction_failure);
  return model_->generators;
}

bool OmegaTopology::is_open(const SchematicSet& u) const {
  if (u.fin_width() != fin_size()) throw PreconditionViolated("set over a different finite part");
  return model_->is_open(u);
}

SchematicSet OmegaTopology::up(OmegaPoint x) const {
  return tabulate(order(), std::max(horizon(), point_bound(x)) + 2, [&](OmegaPoint y) { return leq(x, y); });
}

bool OmegaTopology::is_t0() const {
  const auto pts = representatives(order(), horizon() + 4);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (leq(pts[i], pts[j]) && leq(pts[j], pts[i])) return false;
  return true;
}

OmegaTopology::GenericOrder OmegaTopology::generic_order() const {
  const auto g1 = OmegaPoint::nat(horizon() + 3);
  const auto g2 = OmegaPoint::nat(horizon() + 4);
  const bool up = leq(g1, g2);
  const bool down = leq(g2, g1);
  if (up && !down) return GenericOrder::chain;
  if (!up && !down) return GenericOrder::antichain;
  return GenericOrder::collapsed;
}

std::vector<SchematicSet> OmegaTopology::neighbourhoods(OmegaPoint x, std::uint64_t k) const {
  std::vector<SchematicSet> out;
  for (auto& b : model_->instances(k))
    if (b.contains(x)) out.push_back(std::move(b));
  return out;
}

// --------------------------------------------------------------- OmegaSpace

std::uint64_t OmegaSpace::horizon() const { return std::max(order_.horizon(), templates_bound(base_)); }

OmegaSpace OmegaSpace::build(OmegaOrder order, std::vector<SchemaTemplate> base, bool order_compatible) {
  const auto w = order.fin_size();
  for (const auto& t : base)
    if (t.fixed_fin.width() != w) throw TemplateIllFormed("template over a different finite part");
  OmegaSpace s;
  s.order_ = std::move(order);
  s.base_ = std::move(base);
  auto top = OmegaTopology::of(s);
  const auto& m = top.model();
  // Base axiom: each point of B1 & B2 lies in some B3 inside B1 & B2.
  const auto k = s.horizon() + 2;
  const auto insts = m.instances(k + 2);
  const auto wide = m.instances(k + 5);
  for (std::size_t i = 0; i < insts.size(); ++i)
    for (std::size_t j = i; j < insts.size(); ++j) {
      const auto meet = insts[i] & insts[j];
      for (const auto& x : meet.members(k + 4)) {
        bool ok = std::any_of(wide.begin(), wide.end(),
                              [&](const SchematicSet& b) { return b.contains(x) && b.is_subset_of(meet); });
        if (!ok)
          throw TemplateIllFormed("templates do not form a base: no member around " + s.order_.label(x) +
                                  " inside " + to_string(meet, s.order_));
      }
    }
  if (order_compatible) {
    for (const auto& x : representatives(s.order_, k + 2))
      for (const auto& y : representatives(s.order_, k + 2))
        if (top.leq(x, y) != s.order_.leq(x, y))
          throw TemplateIllFormed("specialization differs from the declared order at " + s.order_.label(x) +
                                  ", " + s.order_.label(y));
  }
  return s;
}

namespace {

OmegaOrder inf_order(bool above_chain) {
  return OmegaOrder::build(FinitePoset::build({"inf"}, {}, OrderMode::partial),
                           {{std::nullopt, above_chain ? std::optional<std::uint64_t>(kAllChain) : std::nullopt}});
}

SchemaTemplate family(Subset fixed, ParamKind kind) {
  SchemaTemplate t;
  t.fixed_fin = std::move(fixed);
  t.param = kind;
  return t;
}

}  // namespace

OmegaSpace OmegaSpace::beta() {
  return build(inf_order(false), {family(Subset(1), ParamKind::up), family(Subset::full(1), ParamKind::up)}, true);
}

OmegaSpace OmegaSpace::gamma() { return build(inf_order(true), {family(Subset(1), ParamKind::up)}, true); }

OmegaSpace OmegaSpace::delta() {
  return build(inf_order(false), {family(Subset(1), ParamKind::point), family(Subset::full(1), ParamKind::up)});
}

OmegaSpace OmegaSpace::scott_omega_plus_one() { return gamma(); }

OmegaSpace OmegaSpace::example_E() {
  auto fin = FinitePoset::build({"inf", "a", "bot"}, {{"bot", "a"}, {"a", "inf"}}, OrderMode::partial);
  auto order = OmegaOrder::build(fin, {{}, {}, {0, std::nullopt}});
  const Subset inf = Subset::of(3, {0});
  const Subset inf_a = Subset::of(3, {0, 1});
  return build(order,
               {SchemaTemplate::constant(SchematicSet(inf, {}, std::nullopt)), family(Subset(3), ParamKind::up),
                family(inf, ParamKind::up), family(inf_a, ParamKind::up)},
               true);
}

// --------------------------------------------------------------- directedness

bool is_directed(const OmegaOrder& order, const SchematicSet& d) {
  if (d.is_empty()) return false;
  const auto k = std::max(order.horizon(), d.bound()) + 3;
  const auto elems = d.members(k);
  const auto cands = d.members(k + 2);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      bool bounded = std::any_of(cands.begin(), cands.end(), [&](OmegaPoint r) {
        return order.leq(elems[i], r) && order.leq(elems[j], r);
      });
      if (!bounded) return false;
    }
  return true;
}

std::optional<OmegaPoint> maximum(const OmegaOrder& order, const SchematicSet& d) {
  const auto k = std::max(order.horizon(), d.bound()) + 3;
  const auto elems = d.members(k);
  for (const auto& m : elems) {
    if (d.tail() && m.chain) continue;
    if (std::all_of(elems.begin(), elems.end(), [&](OmegaPoint e) { return order.leq(e, m); })) return m;
  }
  return std::nullopt;
}

bool has_upper_bound(const OmegaOrder& order, const SchematicSet& d) {
  if (!is_directed(order, d)) throw NotDirected("set is not directed");
  const auto k = std::max(order.horizon(), d.bound()) + 3;
  const auto elems = d.members(k);
  for (const auto& y : representatives(order, k + 2)) {
    if (d.tail() && y.chain) continue;
    if (std::all_of(elems.begin(), elems.end(), [&](OmegaPoint e) { return order.leq(e, y); })) return true;
  }
  return false;
}

bool converges(const OmegaTopology& x, const OmegaNet& net, OmegaPoint point) {
  if (const auto* n = std::get_if<SchematicNet>(&net)) {
    const auto k = std::max({x.horizon(), n->bound(), point_bound(point)}) + 2;
    for (const auto& b : x.neighbourhoods(point, k + 1))
      if (!n->eventually_in(b)) return false;
    return true;
  }
  const auto& d = std::get<SchematicSet>(net);
  if (!is_directed(x.order(), d)) throw NotDirected("set is not directed in the presentation order");
  // Either a maximum m (eventually constant at m) or a cofinal part of the
  // chain (eventually inside exactly the neighbourhoods with a tail).
  if (auto m = maximum(x.order(), d)) return x.leq(point, *m);
  return x.chain_limit(point);
}

// ---------------------------------------------------------------- coreflection

namespace {

std::shared_ptr<UpTailModel> up_tail_model(const OmegaOrder& order, std::uint64_t horizon, std::string description) {
  auto m = std::make_shared<UpTailModel>();
  m->order = order;
  m->horizon = horizon;
  m->description = std::move(description);
  return m;
}

// Templates: the up-set of each representative point when it is open,
// otherwise that up-set joined with generic up-sets; plus the generic
// up-sets themselves. Verified against the oracle before use.
OmegaTopology extract_up_tail(std::shared_ptr<UpTailModel> m) {
  const auto& order = m->order;
  const auto w = order.fin_size();
  const auto k = m->horizon + 2;
  const auto generic = m->up_of(OmegaPoint::nat(k + 1));
  Subset gfin = generic.fin();
  std::vector<std::uint64_t> gchain;
  for (std::uint64_t n = 0; n <= k; ++n)
    if (generic.contains(OmegaPoint::nat(n))) gchain.push_back(n);
  const auto param = m->chain_directed ? ParamKind::tail : ParamKind::point;

  std::vector<SchemaTemplate> gens;
  auto add = [&](SchemaTemplate t) {
    if (std::find(gens.begin(), gens.end(), t) == gens.end()) gens.push_back(std::move(t));
  };
  for (const auto& p : representatives(order, k)) {
    const auto u = m->up_of(p);
    if (m->is_open(u)) {
      add(SchemaTemplate::constant(u));
      continue;
    }
    SchemaTemplate t;
    t.fixed_fin = u.fin() | gfin;
    t.fixed_chain = gchain;
    t.fixed_chain.insert(t.fixed_chain.end(), u.chain().begin(), u.chain().end());
    t.param = ParamKind::tail;
    t.param_from = k + 1;
    add(std::move(t));
  }
  SchemaTemplate g;
  g.fixed_fin = gfin;
  g.fixed_chain = gchain;
  g.param = param;
  g.param_from = k + 1;
  add(g);
  m->generators = gens;

  auto tm = std::make_shared<TemplateModel>();
  tm->order = order;
  tm->generators = gens;
  tm->horizon = m->horizon;
  auto fail = [&](const std::string& why) { m->extraction_failure = "base extraction incomplete: " + why; };
  for (const auto& b : tm->instances(k + 3))
    if (!m->is_open(b)) {
      fail("template instance " + to_string(b, order) + " is not open");
      return OmegaTopology(m);
    }
  // Battery: representative up-sets, their tail extensions, pairwise unions
  // and seeded random schematic sets.
  std::vector<SchematicSet> battery;
  for (const auto& p : representatives(order, k + 2)) {
    const auto u = m->up_of(p);
    battery.push_back(u);
    battery.push_back(u | SchematicSet(Subset(w), {}, k + 2));
  }
  const auto base_size = battery.size();
  for (std::size_t i = 0; i < base_size; ++i)
    for (std::size_t j = i + 1; j < base_size; ++j) battery.push_back(battery[i] | battery[j]);
  std::mt19937_64 rng(0x5eed);
  for (int r = 0; r < 64; ++r) {
    Subset fin = Subset::from_mask(w, rng());
    std::vector<std::uint64_t> chain;
    for (std::uint64_t n = 0; n <= k + 2; ++n)
      if (rng() % 2) chain.push_back(n);
    std::optional<std::uint64_t> tail;
    if (rng() % 2) tail = rng() % (k + 3);
    battery.emplace_back(fin, chain, tail);
  }
  for (const auto& s : battery)
    if (m->is_open(s) != tm->is_open(s)) {
      fail("templates disagree with the oracle on " + to_string(s, order));
      return OmegaTopology(m);
    }
  for (const auto& x : representatives(order, k + 2))
    for (const auto& y : representatives(order, k + 2))
      if (tm->leq(x, y) != m->leq(x, y)) {
        fail("templates disagree with the oracle on the order at " + order.label(x));
        return OmegaTopology(m);
      }
  return OmegaTopology(m);
}

}  // namespace

OmegaTopology coreflect_omega(const OmegaTopology& x, Op op) {
  if (op == Op::I) op = Op::D;
  if (op == Op::Ip) op = Op::Dp;
  if (op == Op::One || op == Op::S) throw Unsupported("coreflect_omega supports D, D', I, I', N, N'");
  if (!x.is_t0()) throw PreconditionViolated("coreflect_omega requires a T0 space");
  auto m = up_tail_model(x.order(), x.horizon(), std::string(op_name(op)) + "(" + x.description() + ")");
  m->inner_leq = [x](OmegaPoint a, OmegaPoint b) { return x.leq(a, b); };
  m->chain_directed = x.generic_order() == OmegaTopology::GenericOrder::chain;
  const auto h = x.horizon();
  auto generic_below = [x, h](OmegaPoint p) { return x.leq(OmegaPoint::nat(std::max(h, point_bound(p)) + 3), p); };
  switch (op) {
    case Op::D: m->trigger = [x](OmegaPoint p) { return x.chain_limit(p); }; break;
    case Op::N: m->trigger = [x](OmegaPoint p) { return converges(x, SchematicNet::ramp(1, 0), p); }; break;
    case Op::Dp:
      m->trigger = [x, generic_below](OmegaPoint p) { return x.chain_limit(p) && generic_below(p); };
      break;
    case Op::Np:
      m->trigger = [x, generic_below](OmegaPoint p) {
        return converges(x, SchematicNet::ramp(1, 0), p) && generic_below(p);
      };
      break;
    default: break;
  }
  return extract_up_tail(std::move(m));
}

OmegaTopology up_tail_topology(const OmegaOrder& order, std::uint64_t horizon,
                               std::function<bool(OmegaPoint, OmegaPoint)> leq,
                               std::function<bool(OmegaPoint)> trigger, bool chain_directed,
                               std::string description) {
  auto m = up_tail_model(order, horizon, std::move(description));
  m->inner_leq = std::move(leq);
  m->trigger = std::move(trigger);
  m->chain_directed = chain_directed;
  return extract_up_tail(std::move(m));
}

OmegaTopology order_topology_omega(const OmegaOrder& order, OmegaOrderTopology kind) {
  switch (kind) {
    case OmegaOrderTopology::alexandroff:
    case OmegaOrderTopology::scott: {
      const bool scott = kind == OmegaOrderTopology::scott;
      auto m = up_tail_model(order, order.horizon(), scott ? "scott" : "alexandroff");
      m->inner_leq = [order](OmegaPoint a, OmegaPoint b) { return order.leq(a, b); };
      const auto s = order.chain_sup();
      // The sup of any directed set without maximum is the sup of N.
      m->trigger = [scott, s](OmegaPoint p) { return scott && s && !p.chain && p.index == *s; };
      return extract_up_tail(std::move(m));
    }
    case OmegaOrderTopology::upper: {
      auto m = std::make_shared<UpperModel>();
      m->order = order;
      m->horizon = order.horizon();
      m->description = "upper";
      m->generators_form_base = false;
      const auto k = order.horizon() + 2;
      for (std::size_t f = 0; f < order.fin_size(); ++f) {
        auto down = tabulate(order, k, [&](OmegaPoint y) { return order.leq(y, OmegaPoint::fin(f)); });
        m->generators.push_back(SchemaTemplate::constant(down.complement()));
      }
      SchemaTemplate t;
      t.fixed_fin = Subset(order.fin_size());
      t.param = ParamKind::codown;
      m->generators.push_back(t);
      return OmegaTopology(m);
    }
    case OmegaOrderTopology::weak_scott:
      return coreflect_omega(order_topology_omega(order, OmegaOrderTopology::upper), Op::D);
  }
  throw Unsupported("unknown order topology");
}

// ------------------------------------------------------------------ compare

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::equal: return "equal";
    case Comparison::finer: return "strictly finer";
    case Comparison::coarser: return "strictly coarser";
    case Comparison::incomparable: return "incomparable";
  }
  return "?";
}

CompareResult compare(const OmegaTopology& t1, const OmegaTopology& t2) {
  if (!(t1.order() == t2.order())) throw PreconditionViolated("topologies over different grounds");
  const auto k = std::max(t1.horizon(), t2.horizon()) + 3;
  auto first_non_open = [&](const OmegaTopology& a, const OmegaTopology& b) -> std::optional<SchematicSet> {
    (void)a.generators();
    for (const auto& s : a.model().instances(k))
      if (!b.is_open(s)) return s;
    return std::nullopt;
  };
  const auto w1 = first_non_open(t1, t2);
  const auto w2 = first_non_open(t2, t1);
  if (!w1 && !w2) return {Comparison::equal, std::nullopt};
  if (w1 && !w2) return {Comparison::finer, w1};
  if (!w1 && w2) return {Comparison::coarser, w2};
  return {Comparison::incomparable, w1};
}

FiniteTopology truncate(const OmegaTopology& x, std::uint64_t n) {
  const auto& order = x.order();
  const auto w = order.fin_size();
  std::vector<std::string> labels = order.fin().labels();
  for (std::uint64_t i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
  const auto size = labels.size();
  (void)x.generators();
  std::vector<Subset> restricted;
  for (const auto& b : x.model().instances(std::max(x.horizon(), n) + 3)) {
    Subset s(size);
    b.fin().for_each([&](std::size_t f) { s.insert(f); });
    for (std::uint64_t i = 0; i <= n; ++i)
      if (b.contains(OmegaPoint::nat(i))) s.insert(w + i);
    restricted.push_back(std::move(s));
  }
  Limits limits;
  limits.max_points = size;
  return FiniteTopology::make(std::move(labels), restricted, true, limits);
}

}  // namespace ccc
