#include "ccc/suite.hpp"

#include "ccc/category.hpp"
#include "ccc/convergence.hpp"
#include "ccc/cspace.hpp"
#include "ccc/enumerate.hpp"
#include "ccc/errors.hpp"
#include "ccc/omega_topology.hpp"

#include <random>

namespace ccc {

namespace {

LawReport make(std::string law) { return {std::move(law), 0, Verdict::pass, std::nullopt}; }

void expect(LawReport& r, bool ok, const std::string& what) {
  ++r.instances;
  if (!ok) r.fail(what);
}

std::string show(const SchematicSet& s, const OmegaTopology& t) { return to_string(s, t.order()); }

SchematicSet fin_set(const OmegaTopology& t, std::initializer_list<const char*> labels) {
  Subset s(t.fin_size());
  for (const auto* l : labels) s.insert(*t.order().fin().index_of(l));
  return {s, {}, std::nullopt};
}

LawReport example_e() {
  auto r = make("example E: D fixes E and D' opens {inf, a}");
  const auto e = OmegaTopology::of(OmegaSpace::example_E());
  const auto c = compare(coreflect_omega(e, Op::D), e);
  expect(r, c.verdict == Comparison::equal, "D(E) is " + to_string(c.verdict));
  const auto ia = fin_set(e, {"inf", "a"});
  expect(r, coreflect_omega(e, Op::Dp).is_open(ia), "{inf, a} not open in D'(E)");
  expect(r, !e.is_open(ia), "{inf, a} open in E");
  return r;
}

LawReport beta_gamma() {
  auto r = make("beta and gamma: D' opens {inf} in beta, D fixes beta, D' fixes gamma");
  const auto beta = OmegaTopology::of(OmegaSpace::beta());
  const auto gamma = OmegaTopology::of(OmegaSpace::gamma());
  const auto inf = fin_set(beta, {"inf"});
  const auto bp = coreflect_omega(beta, Op::Dp);
  expect(r, bp.is_open(inf), "{inf} not open in D'(beta)");
  expect(r, !beta.is_open(inf), "{inf} open in beta");
  const auto c = compare(bp, beta);
  expect(r, c.verdict == Comparison::finer && c.witness && *c.witness == inf,
         "D'(beta) vs beta: " + to_string(c.verdict));
  expect(r, compare(coreflect_omega(beta, Op::D), beta).verdict == Comparison::equal, "D moves beta");
  expect(r, compare(coreflect_omega(gamma, Op::Dp), gamma).verdict == Comparison::equal, "D' moves gamma");
  return r;
}

LawReport delta_discrete() {
  auto r = make("delta: the D-coreflection is discrete");
  const auto delta = OmegaTopology::of(OmegaSpace::delta());
  const auto d = coreflect_omega(delta, Op::D);
  // All singletons open up to past the horizon; beyond it every chain point
  // behaves like the last one checked.
  for (const auto& p : representatives(delta.order(), d.horizon() + 6)) {
    const auto s = SchematicSet::point(delta.fin_size(), p);
    expect(r, d.is_open(s), show(s, delta) + " not open");
  }
  expect(r, compare(d, delta).verdict == Comparison::finer, "D(delta) not strictly finer than delta");
  return r;
}

LawReport dcpo_coincidence() {
  auto r = make("omega+1 and omega: scott equals weak scott, scott against alexandroff");
  const auto w1 = OmegaOrder::omega_plus_one();
  const auto s1 = order_topology_omega(w1, OmegaOrderTopology::scott);
  const auto ws1 = order_topology_omega(w1, OmegaOrderTopology::weak_scott);
  const auto a1 = order_topology_omega(w1, OmegaOrderTopology::alexandroff);
  expect(r, compare(s1, ws1).verdict == Comparison::equal, "scott and weak scott differ on omega+1");
  const auto c = compare(s1, a1);
  expect(r, c.verdict == Comparison::coarser, "scott vs alexandroff on omega+1: " + to_string(c.verdict));
  const auto w = OmegaOrder::omega();
  const auto c0 = compare(order_topology_omega(w, OmegaOrderTopology::scott),
                          order_topology_omega(w, OmegaOrderTopology::alexandroff));
  expect(r, c0.verdict == Comparison::equal, "scott vs alexandroff on omega: " + to_string(c0.verdict));
  return r;
}

LawReport transfinite(std::mt19937_64& rng) {
  auto r = make("transfinite closure equals topological closure");
  for (const auto& space : enumerate_spaces_up_to(4, true)) {
    const auto& p = space.specialization();
    const auto n = p.size();
    std::vector<ClassPair> base, optional;
    for_each_directed_subset(p, [&](const Subset& d) {
      const auto net = FiniteNet::directed(p, d);
      cut(p, d).for_each([&](std::size_t x) {
        (d.count() == 1 ? base : optional).push_back({net, x});
      });
    });
    // Each optional pair (D, x) has x below max D, so ({max D}, x) is in the
    // base and the pair adds no rule; still every class is checked directly
    // when there are few of them and sampled otherwise.
    for (const auto& pr : optional) {
      const auto top = p.maximal(pr.net.support());
      expect(r, top.count() == 1 && p.leq(pr.point, top.first()), "pair without a dominating singleton");
    }
    auto check = [&](const std::vector<ClassPair>& pairs) {
      const ConvergenceClass c(n, pairs);
      const auto t = determined_topology(space.labels(), c);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto f = Subset::from_mask(n, mask);
        const auto star = closure_transfinite(p, c, f).star;
        expect(r, star == t.closure(f), "F* differs from the closure on " + describe(space));
      }
    };
    if (optional.size() <= 10) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << optional.size()); ++mask) {
        auto pairs = base;
        for (std::size_t i = 0; i < optional.size(); ++i)
          if ((mask >> i) & 1u) pairs.push_back(optional[i]);
        check(pairs);
      }
    } else {
      check(base);
      auto all = base;
      all.insert(all.end(), optional.begin(), optional.end());
      check(all);
      for (int s = 0; s < 64; ++s) {
        auto pairs = base;
        for (const auto& pr : optional)
          if (rng() & 1u) pairs.push_back(pr);
        check(pairs);
      }
    }
  }
  return r;
}

// Continuous maps preserve class membership.
void consistency(LawReport& r, const FiniteTopology& x, const FiniteTopology& y, Op op, const Limits& limits) {
  const auto cls = op_class(x, op);
  for (const auto& f : hom_set(x, y, limits).maps)
    for (const auto& pr : cls.pairs()) {
      const auto img = image(pr.net, f, y.specialization());
      expect(r, in_op_class(y, op, img, f[pr.point]),
             std::string(op_name(op)) + " pair not preserved by " + map_label(f, y.labels()));
    }
}

LawReport coreflection_laws(std::mt19937_64& rng, const Limits& limits) {
  auto r = make("coreflection laws of the six operations");
  const auto small = enumerate_spaces_up_to(3, true);
  const auto four = sample(enumerate_spaces(4, true), 8, rng);
  auto spaces = small;
  spaces.insert(spaces.end(), four.begin(), four.end());
  for (const auto& x : spaces)
    for (Op op : kSixOps) {
      const auto px = coreflect(x, op, limits);
      expect(r, coreflect(px, op, limits) == px, std::string(op_name(op)) + " not idempotent on " + describe(x));
      expect(r, op_class(x, op).is_subset_of(op_class(px, op)),
             std::string(op_name(op)) + " class shrinks on " + describe(x));
      r.absorb(check_coreflection_universal(x, op, small, limits));
    }
  for (const auto& x : small)
    for (const auto& y : small)
      for (Op op : kSixOps) consistency(r, x, y, op, limits);
  for (const auto& x : four)
    for (const auto& y : sample(spaces, 4, rng))
      for (Op op : kSixOps) consistency(r, x, y, op, limits);
  return r;
}

LawReport cartesian_closure(std::mt19937_64& rng, const Limits& limits) {
  auto r = make("cartesian closure laws");
  const auto two = enumerate_spaces_up_to(2, true);
  const auto three = enumerate_spaces_up_to(3, true);
  for (Op op : {Op::D, Op::Dp}) {
    for (const auto& x : two)
      for (const auto& y : two)
        for (const auto& z : two) {
          r.absorb(check_exponential_law(x, y, z, op, limits));
          r.absorb(check_product_universal(x, y, op, 2, limits));
        }
    for (int i = 0; i < 30; ++i) {
      std::uniform_int_distribution<std::size_t> pick(0, three.size() - 1);
      const auto& x = three[pick(rng)];
      const auto& y = three[pick(rng)];
      const auto& z = three[pick(rng)];
      r.absorb(check_exponential_law(x, y, z, op, limits));
    }
  }
  return r;
}

LawReport separate_continuity(const Limits& limits) {
  auto r = make("separate and joint continuity agree");
  const auto two = enumerate_spaces_up_to(2, true);
  for (const auto& x : two)
    for (const auto& y : two)
      for (const auto& z : two) r.absorb(check_separate_continuity(x, y, z, limits));
  return r;
}

LawReport t0_and_orders(const Limits& limits) {
  auto r = make("T0 preservation and specialization orders");
  const auto three = enumerate_spaces_up_to(3, true);
  for (Op op : {Op::D, Op::Dp})
    for (const auto& x : three)
      for (const auto& y : three) {
        r.absorb(check_T0_preservation(x, y, op, limits));
        r.absorb(check_order_agreement(x, y, op, limits));
      }
  return r;
}

LawReport probes(const Limits& limits) {
  auto r = make("probe-generated topology equals the D-coreflection");
  for (const auto& x : enumerate_spaces_up_to(3, true))
    expect(r, probe_generated(x, Op::D, 3, limits) == coreflect(x, Op::D, limits), "differs on " + describe(x));
  return r;
}

LawReport c_spaces() {
  auto r = make("c-spaces and the eventual-lower-bound class");
  const auto e = OmegaTopology::of(OmegaSpace::example_E());
  const auto scott = OmegaTopology::of(OmegaSpace::scott_omega_plus_one());
  expect(r, !is_c_space(e).c_space, "E reported as a c-space");
  expect(r, is_c_space(scott).c_space, "Scott omega+1 not a c-space");
  for (const auto& x : enumerate_spaces_up_to(4, false))
    expect(r, s_topology(x) == coreflect(x, Op::D), "S and D differ on " + describe(x));
  for (const auto& space : {OmegaSpace::beta(), OmegaSpace::gamma(), OmegaSpace::delta(), OmegaSpace::example_E()}) {
    const auto x = OmegaTopology::of(space);
    expect(r, compare(s_topology(x), coreflect_omega(x, Op::D)).verdict == Comparison::equal,
           "S and D differ on " + x.description());
  }
  const SchematicNet alt({OmegaPoint::fin(*e.order().fin().index_of("a")), Ramp{2, 0}});
  const auto a = OmegaPoint::fin(*e.order().fin().index_of("a"));
  expect(r, converges(e, alt, a), "alternating net does not converge to a");
  expect(r, !in_s_class(e, alt, a), "alternating net lies in the S class");
  expect(r, s_class_topological(e, {{alt, a}}).verdict == STopological::refuted, "S_E not refuted");
  return r;
}

LawReport no_upper_bound() {
  auto r = make("N has no upper bound in omega");
  const SchematicSet nat(Subset(0), {}, 0);
  expect(r, !has_upper_bound(OmegaOrder::omega(), nat), "upper bound found for N in omega");
  expect(r, has_upper_bound(OmegaOrder::omega_plus_one(), SchematicSet(Subset(1), {}, 0)),
         "no upper bound for N in omega+1");
  return r;
}

}  // namespace

std::vector<LawReport> run_suite(const SuiteOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<LawReport> out;
  out.push_back(example_e());
  out.push_back(beta_gamma());
  out.push_back(delta_discrete());
  out.push_back(dcpo_coincidence());
  out.push_back(transfinite(rng));
  out.push_back(coreflection_laws(rng, options.limits));
  out.push_back(cartesian_closure(rng, options.limits));
  out.push_back(separate_continuity(options.limits));
  out.push_back(t0_and_orders(options.limits));
  out.push_back(probes(options.limits));
  out.push_back(c_spaces());
  out.push_back(check_pointwise_not_directed(16));
  out.push_back(no_upper_bound());
  return out;
}

nlohmann::ordered_json suite_json(const std::vector<LawReport>& reports) {
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  j["suite"] = arr;
  j["passed"] = suite_passed(reports);
  return j;
}

bool suite_passed(const std::vector<LawReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

}  // namespace ccc
