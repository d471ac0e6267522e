#include "ccc/convergence.hpp"

#include "ccc/errors.hpp"

#include <algorithm>

namespace ccc {

std::string_view op_name(Op op) {
  switch (op) {
    case Op::D: return "D";
    case Op::Dp: return "D'";
    case Op::I: return "I";
    case Op::Ip: return "I'";
    case Op::N: return "N";
    case Op::Np: return "N'";
    case Op::One: return "1";
    case Op::S: return "S";
  }
  return "?";
}

std::optional<Op> parse_op(std::string_view s) {
  for (Op op : {Op::D, Op::Dp, Op::I, Op::Ip, Op::N, Op::Np, Op::One, Op::S})
    if (op_name(op) == s) return op;
  return std::nullopt;
}

bool is_primed(Op op) { return op == Op::Dp || op == Op::Ip || op == Op::Np; }

bool operator<(const FiniteNet& a, const FiniteNet& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (!(a.support_ == b.support_)) return a.support_ < b.support_;
  return a.eventual_ < b.eventual_;
}

FiniteNet FiniteNet::tail(Subset s) {
  if (s.empty()) throw PreconditionViolated("tail net needs a nonempty set");
  FiniteNet n;
  n.kind_ = Kind::tail;
  n.support_ = s;
  n.eventual_ = std::move(s);
  return n;
}

FiniteNet FiniteNet::directed(const FinitePoset& order, Subset d) {
  if (!is_directed(order, d)) throw NotDirected("net index set is not directed");
  FiniteNet n;
  n.kind_ = Kind::directed;
  // Intersection of all tails up(e) & D; itself a tail since D is finite.
  Subset ev = d;
  d.for_each([&](std::size_t e) { ev &= order.up(e); });
  n.support_ = std::move(d);
  n.eventual_ = std::move(ev);
  return n;
}

FiniteNet FiniteNet::sequence(const FinitePoset& order, Subset range, Subset recurrent) {
  if (range.empty() || !is_chain(order, range))
    throw NotDirected("monotone sequence range must be a nonempty pre-chain");
  if (recurrent.empty() || !recurrent.is_subset_of(range))
    throw PreconditionViolated("recurrent part must be a nonempty part of the range");
  bool top = true;
  recurrent.for_each([&](std::size_t r) { top = top && range.is_subset_of(order.down(r)); });
  if (!top) throw PreconditionViolated("recurrent part must lie in the top class of the range");
  FiniteNet n;
  n.kind_ = Kind::sequence;
  n.support_ = std::move(range);
  n.eventual_ = std::move(recurrent);
  return n;
}

FiniteNet image(const FiniteNet& net, const MapTable& f, const FinitePoset& target) {
  const auto m = target.size();
  auto img = [&](const Subset& s) {
    Subset r(m);
    s.for_each([&](std::size_t i) { r.insert(f[i]); });
    return r;
  };
  switch (net.kind()) {
    case FiniteNet::Kind::tail: return FiniteNet::tail(img(net.eventual()));
    case FiniteNet::Kind::directed: return FiniteNet::directed(target, img(net.support()));
    case FiniteNet::Kind::sequence:
      return FiniteNet::sequence(target, img(net.support()), img(net.eventual()));
  }
  return net;
}

ConvergenceClass::ConvergenceClass(std::size_t width, std::vector<ClassPair> pairs)
    : width_(width), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool ConvergenceClass::contains(const ClassPair& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

bool ConvergenceClass::is_subset_of(const ConvergenceClass& other) const {
  return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
}

void ConvergenceClass::insert(ClassPair p) {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || !(*it == p)) pairs_.insert(it, std::move(p));
}

bool converges(const FiniteTopology& x, const FiniteNet& net, std::size_t point) {
  // Conditions are monotone in the neighbourhood, so the minimal one decides.
  const Subset& u = x.nbhd(point);
  if (net.kind() != FiniteNet::Kind::directed) return net.eventually_in(u);
  const auto& order = x.specialization();
  bool found = false;
  net.support().for_each([&](std::size_t d) {
    if (!found && (order.up(d) & net.support()).is_subset_of(u)) found = true;
  });
  return found;
}

namespace {

bool below_some(const FinitePoset& order, const Subset& s, std::size_t x) {
  return order.up(x).intersects(s);
}

bool all_below(const FinitePoset& order, const Subset& s, std::size_t x) {
  return s.is_subset_of(order.down(x));
}

bool primed_condition(const FiniteTopology& t, const FiniteNet& net, std::size_t x) {
  const auto& order = t.specialization();
  return below_some(order, net.support(), x) ||
         (converges(t, net, x) && all_below(order, net.support(), x));
}

}  // namespace

bool in_op_class(const FiniteTopology& t, Op op, const FiniteNet& net, std::size_t x) {
  const auto& order = t.specialization();
  switch (op) {
    case Op::D:
      return net.kind() == FiniteNet::Kind::directed && converges(t, net, x);
    case Op::Dp:
      return net.kind() == FiniteNet::Kind::directed && primed_condition(t, net, x);
    case Op::I:
      return net.kind() == FiniteNet::Kind::directed && is_chain(order, net.support()) &&
             converges(t, net, x);
    case Op::Ip:
      return net.kind() == FiniteNet::Kind::directed && is_chain(order, net.support()) &&
             primed_condition(t, net, x);
    case Op::N:
      return net.kind() == FiniteNet::Kind::sequence && converges(t, net, x);
    case Op::Np:
      return net.kind() == FiniteNet::Kind::sequence && primed_condition(t, net, x);
    case Op::One:
      return net.kind() == FiniteNet::Kind::tail && net.support() == Subset::singleton(t.size(), x);
    case Op::S:
      return net.kind() == FiniteNet::Kind::tail && net.support().count() == 1 &&
             order.leq(x, net.support().first());
  }
  return false;
}

namespace {

std::vector<FiniteNet> candidate_nets(const FiniteTopology& t, Op op, ClassMode mode) {
  const auto& order = t.specialization();
  const auto n = t.size();
  std::vector<FiniteNet> nets;
  if (op == Op::One || op == Op::S) {
    for (std::size_t y = 0; y < n; ++y) nets.push_back(FiniteNet::tail(Subset::singleton(n, y)));
    return nets;
  }
  const bool seq = op == Op::N || op == Op::Np;
  const bool chains = op == Op::I || op == Op::Ip;
  auto add_sequences = [&](const Subset& range) {
    Subset top = range;
    range.for_each([&](std::size_t r) {
      if (!all_below(order, range, r)) top.erase(r);
    });
    const auto tm = top.members();
    if (tm.size() > 20) throw SizeCap("specialization class too large");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << tm.size()); ++mask) {
      Subset rec(n);
      for (std::size_t i = 0; i < tm.size(); ++i)
        if ((mask >> i) & 1u) rec.insert(tm[i]);
      nets.push_back(FiniteNet::sequence(order, range, rec));
    }
  };
  if (mode == ClassMode::canonical) {
    Subset seen(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (seen.contains(x)) continue;
      const Subset cls = order.up(x) & order.down(x);
      seen |= cls;
      // Inside one class the rule for a set is the conjunction of the rules
      // for its points, so singletons and the whole class suffice.
      std::vector<Subset> supports;
      cls.for_each([&](std::size_t y) { supports.push_back(Subset::singleton(n, y)); });
      if (cls.count() > 1) supports.push_back(cls);
      for (const auto& m : supports) {
        if (seq) nets.push_back(FiniteNet::sequence(order, m, m));
        else nets.push_back(FiniteNet::directed(order, m));
      }
    }
    return nets;
  }
  for_each_directed_subset(order, [&](const Subset& d) {
    if (seq || chains) {
      if (!is_chain(order, d)) return;
      if (seq) {
        add_sequences(d);
        return;
      }
    }
    nets.push_back(FiniteNet::directed(order, d));
  });
  return nets;
}

}  // namespace

ConvergenceClass op_class(const FiniteTopology& t, Op op, ClassMode mode) {
  std::vector<ClassPair> pairs;
  for (auto& net : candidate_nets(t, op, mode))
    for (std::size_t x = 0; x < t.size(); ++x)
      if (in_op_class(t, op, net, x)) pairs.push_back({net, x});
  return ConvergenceClass(t.size(), std::move(pairs));
}

FiniteTopology determined_topology(const std::vector<std::string>& ground, const ConvergenceClass& c) {
  std::vector<HornRule> rules;
  rules.reserve(c.size());
  for (const auto& p : c.pairs()) rules.push_back({p.point, p.net.eventual()});
  return topology_from_rules(ground, rules);
}

FiniteTopology coreflect(const FiniteTopology& x, Op op, const Limits& limits) {
  if (x.size() > limits.max_carrier)
    throw SizeCap("coreflection of " + std::to_string(x.size()) + " points exceeds carrier cap");
  const auto mode = x.size() <= limits.max_points ? ClassMode::exhaustive : ClassMode::canonical;
  return determined_topology(x.labels(), op_class(x, op, mode));
}

bool is_determined(const FiniteTopology& x, Op op, const Limits& limits) {
  return coreflect(x, op, limits) == x;
}

TransfiniteClosure closure_transfinite(const FinitePoset& p, const ConvergenceClass& c, const Subset& f) {
  const auto n = p.size();
  for (const auto& pair : c.pairs()) {
    if (pair.net.kind() != FiniteNet::Kind::directed || !is_directed(p, pair.net.support()))
      throw HypothesisViolated("class contains a net that is not a directed subset");
    if (!cut(p, pair.net.support()).contains(pair.point))
      throw HypothesisViolated("class contains a pair whose point is outside the cut of its set");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(x, y) && !c.contains({FiniteNet::directed(p, Subset::singleton(n, y)), x}))
        throw HypothesisViolated("class lacks ({" + p.label(y) + "}," + p.label(x) + ")");

  TransfiniteClosure out;
  out.stages.push_back(f);
  Subset acc = f;
  for (;;) {
    Subset next(n);
    for (const auto& pair : c.pairs())
      if (pair.net.support().is_subset_of(acc)) next.insert(pair.point);
    out.stages.push_back(next);
    if (next.is_subset_of(acc)) break;
    acc |= next;
  }
  out.star = acc;
  return out;
}

}  // namespace ccc
