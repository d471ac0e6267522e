#include "ccc/errors.hpp"
#include "ccc/omega.hpp"
#include "ccc/omega_topology.hpp"

#include <doctest.h>

#include <random>

using namespace ccc;

namespace {

OmegaPoint nat(std::uint64_t n) { return OmegaPoint::nat(n); }
OmegaPoint fin(std::size_t i) { return OmegaPoint::fin(i); }

SchematicSet set(std::size_t w, std::initializer_list<std::size_t> f, std::vector<std::uint64_t> chain,
                 std::optional<std::uint64_t> tail = std::nullopt) {
  return {Subset::of(w, f), std::move(chain), tail};
}

std::vector<std::pair<std::string, OmegaTopology>> bundled() {
  return {{"beta", OmegaTopology::of(OmegaSpace::beta())},
          {"gamma", OmegaTopology::of(OmegaSpace::gamma())},
          {"delta", OmegaTopology::of(OmegaSpace::delta())},
          {"E", OmegaTopology::of(OmegaSpace::example_E())}};
}

SchematicSet random_set(std::mt19937_64& rng, std::size_t w, std::uint64_t max) {
  std::vector<std::uint64_t> chain;
  for (std::uint64_t n = 0; n <= max; ++n)
    if (rng() % 3 == 0) chain.push_back(n);
  std::optional<std::uint64_t> tail;
  if (rng() % 2) tail = rng() % (max + 1);
  return {Subset::from_mask(w, rng()), chain, tail};
}

}  // namespace

TEST_CASE("omega orders") {
  auto w1 = OmegaOrder::omega_plus_one();
  CHECK(w1.leq(nat(7), fin(0)));
  CHECK_FALSE(w1.leq(fin(0), nat(7)));
  CHECK(w1.chain_sup() == std::optional<std::size_t>(0));
  CHECK_FALSE(OmegaOrder::omega().chain_sup().has_value());

  auto two = FinitePoset::build({"f", "g"}, {}, OrderMode::partial);
  CHECK_THROWS_AS(OmegaOrder::build(two, {{2, 5}, {}}), OrderInconsistent);
  auto forced = OmegaOrder::build(two, {{3, std::nullopt}, {std::nullopt, 5}});
  CHECK(forced.leq(fin(0), fin(1)));
  auto gf = FinitePoset::build({"f", "g"}, {{"g", "f"}}, OrderMode::partial);
  CHECK_THROWS_AS(OmegaOrder::build(gf, {{3, std::nullopt}, {std::nullopt, 5}}), OrderInconsistent);
  // Thresholds propagate along the finite order.
  auto chain_fg = FinitePoset::build({"f", "g"}, {{"f", "g"}}, OrderMode::partial);
  auto prop = OmegaOrder::build(chain_fg, {{4, std::nullopt}, {}});
  CHECK(prop.leq(fin(1), nat(4)) == false);
  CHECK(prop.leq(fin(0), nat(4)));
  auto prop2 = OmegaOrder::build(chain_fg, {{}, {4, std::nullopt}});
  CHECK(prop2.leq(fin(0), nat(4)));
  CHECK_THROWS_AS(OmegaOrder::build(FinitePoset::build({"7"}, {}, OrderMode::partial), {{}}), DuplicateLabel);
}

TEST_CASE("schematic sets agree with pointwise semantics") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    auto a = random_set(rng, 2, 8);
    auto b = random_set(rng, 2, 8);
    for (std::uint64_t n = 0; n < 20; ++n) {
      const auto p = nat(n);
      CHECK((a | b).contains(p) == (a.contains(p) || b.contains(p)));
      CHECK((a & b).contains(p) == (a.contains(p) && b.contains(p)));
      CHECK(a.complement().contains(p) == !a.contains(p));
    }
    for (std::size_t f = 0; f < 2; ++f) CHECK(a.complement().contains(fin(f)) == !a.contains(fin(f)));
    bool sub = true;
    for (std::uint64_t n = 0; n < 20; ++n) sub = sub && (!a.contains(nat(n)) || b.contains(nat(n)));
    sub = sub && a.fin().is_subset_of(b.fin());
    CHECK(a.is_subset_of(b) == sub);
    CHECK(a.complement().complement() == a);
  }
  CHECK(set(1, {}, {3, 4}, 5) == set(1, {}, {}, 3));
  CHECK(set(1, {}, {1, 7}, 6) == set(1, {}, {1}, 6));
}

TEST_CASE("bundled spaces: openness") {
  auto beta = OmegaTopology::of(OmegaSpace::beta());
  auto gamma = OmegaTopology::of(OmegaSpace::gamma());
  auto e = OmegaTopology::of(OmegaSpace::example_E());
  CHECK_FALSE(beta.is_open(set(1, {0}, {})));
  CHECK(beta.is_open(set(1, {}, {}, 4)));
  CHECK(beta.is_open(set(1, {0}, {}, 4)));
  CHECK(beta.is_open(set(1, {0}, {2}, 4)) == false);
  CHECK(gamma.is_open(set(1, {0}, {}, 5)));
  CHECK_FALSE(gamma.is_open(set(1, {}, {}, 5)));
  CHECK_FALSE(e.is_open(set(3, {0, 1}, {})));
  for (const auto& [name, t] : bundled()) {
    CHECK(t.is_t0());
    CHECK_NOTHROW(t.generators());
  }
}

TEST_CASE("example E opens are exactly the listed family") {
  // E (inf=0, a=1, bot=2): E, empty, {inf}, up n, up n + inf, up n + {inf, a}.
  auto e = OmegaTopology::of(OmegaSpace::example_E());
  auto listed = [](const SchematicSet& s) {
    if (s == SchematicSet::whole(3) || s.is_empty() || s == set(3, {0}, {})) return true;
    if (!s.tail() || !s.chain().empty()) return false;
    return s.fin() == Subset(3) || s.fin() == Subset::of(3, {0}) || s.fin() == Subset::of(3, {0, 1});
  };
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1500; ++trial) {
    auto s = random_set(rng, 3, 6);
    CHECK(e.is_open(s) == listed(s));
  }
  for (std::uint64_t n = 0; n < 8; ++n) {
    CHECK(e.is_open(set(3, {}, {}, n)));
    CHECK(e.is_open(set(3, {0}, {}, n)));
    CHECK(e.is_open(set(3, {0, 1}, {}, n)));
    CHECK_FALSE(e.is_open(set(3, {1}, {}, n)));
  }
  // Specialization: bot below everything, a below inf, chain points only
  // below larger chain points.
  CHECK(e.leq(fin(2), fin(1)));
  CHECK(e.leq(fin(2), nat(3)));
  CHECK(e.leq(fin(1), fin(0)));
  CHECK_FALSE(e.leq(nat(3), fin(0)));
  CHECK_FALSE(e.leq(nat(3), fin(1)));
  CHECK(e.leq(nat(3), nat(9)));
}

TEST_CASE("templates that are not a base are rejected") {
  SchemaTemplate a = SchemaTemplate::constant(set(1, {0}, {0}));
  SchemaTemplate b = SchemaTemplate::constant(set(1, {0}, {1}));
  CHECK_THROWS_AS(OmegaSpace::build(OmegaOrder::omega_plus_one(), {a, b}), TemplateIllFormed);
  CHECK_THROWS_AS(OmegaSpace::build(OmegaOrder::omega_plus_one(), {SchemaTemplate::constant(set(2, {}, {}))}),
                  TemplateIllFormed);
  // delta's order is not the chain order, so it cannot be flagged compatible.
  auto d = OmegaSpace::delta();
  CHECK_THROWS_AS(OmegaSpace::build(d.order(), d.base(), true), TemplateIllFormed);
}

TEST_CASE("convergence in bundled spaces") {
  auto beta = OmegaTopology::of(OmegaSpace::beta());
  auto delta = OmegaTopology::of(OmegaSpace::delta());
  auto e = OmegaTopology::of(OmegaSpace::example_E());
  const SchematicSet nat1 = set(1, {}, {}, 0);
  CHECK(converges(beta, nat1, fin(0)));
  CHECK(converges(delta, nat1, fin(0)));
  CHECK_FALSE(converges(delta, nat1, nat(3)));
  CHECK(converges(beta, nat1, nat(3)));
  SchematicNet alt({fin(1), Ramp{2, 0}});
  CHECK(converges(e, alt, fin(1)));
  CHECK_FALSE(converges(e, alt, fin(0)));
  CHECK(converges(e, alt, fin(2)));
  CHECK_THROWS_AS(converges(beta, set(1, {0}, {}, 0), fin(0)), NotDirected);
  // Directed set with a maximum converges to the points below it.
  CHECK(converges(beta, set(1, {}, {1, 4}), nat(2)));
  CHECK_FALSE(converges(beta, set(1, {}, {1, 4}), nat(5)));
  // Net and directed-set routes agree on the chain.
  for (const auto& [name, t] : bundled())
    for (const auto& p : representatives(t.order(), 6))
      CHECK(converges(t, SchematicNet::ramp(1, 0), p) == converges(t, SchematicSet(Subset(t.fin_size()), {}, 0), p));
}

TEST_CASE("coreflections of bundled spaces") {
  auto beta = OmegaTopology::of(OmegaSpace::beta());
  auto gamma = OmegaTopology::of(OmegaSpace::gamma());
  auto delta = OmegaTopology::of(OmegaSpace::delta());
  auto e = OmegaTopology::of(OmegaSpace::example_E());

  CHECK(compare(coreflect_omega(beta, Op::D), beta).verdict == Comparison::equal);
  auto bp = coreflect_omega(beta, Op::Dp);
  CHECK(bp.is_open(set(1, {0}, {})));
  auto cb = compare(bp, beta);
  CHECK(cb.verdict == Comparison::finer);
  CHECK(*cb.witness == set(1, {0}, {}));
  CHECK(compare(coreflect_omega(gamma, Op::Dp), gamma).verdict == Comparison::equal);
  CHECK(compare(coreflect_omega(gamma, Op::D), gamma).verdict == Comparison::equal);

  auto dd = coreflect_omega(delta, Op::D);
  CHECK(dd.is_open(set(1, {0}, {})));
  CHECK(dd.is_open(set(1, {}, {3})));
  CHECK(compare(dd, delta).verdict == Comparison::finer);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) CHECK(dd.is_open(random_set(rng, 1, 6)));

  CHECK(compare(coreflect_omega(e, Op::D), e).verdict == Comparison::equal);
  auto ep = coreflect_omega(e, Op::Dp);
  CHECK(ep.is_open(set(3, {0, 1}, {})));
  CHECK_FALSE(e.is_open(set(3, {0, 1}, {})));

  for (const auto& [name, t] : bundled()) {
    CAPTURE(name);
    for (Op op : {Op::D, Op::Dp, Op::N, Op::Np}) {
      auto c = coreflect_omega(t, op);
      CHECK_FALSE(c.model().extraction_failure.has_value());
      auto cc = coreflect_omega(c, op);
      CHECK(compare(cc, c).verdict == Comparison::equal);
      // Soundness: every open of t stays open.
      auto cmp = compare(c, t).verdict;
      CHECK((cmp == Comparison::equal || cmp == Comparison::finer));
      // Opens of coreflections are up-sets.
      for (const auto& p : representatives(t.order(), 5)) CHECK(c.up(p) == t.up(p));
      // Directed pairs of the operator's class survive.
      if (t.generic_order() == OmegaTopology::GenericOrder::chain) {
        const SchematicSet chain(Subset(t.fin_size()), {}, 0);
        for (const auto& p : representatives(t.order(), 5)) {
          const bool below = p.chain || t.leq(nat(t.horizon() + 6), p);
          if (converges(t, chain, p) && (!is_primed(op) || below)) CHECK(converges(c, chain, p));
        }
      }
    }
    CHECK(compare(coreflect_omega(t, Op::N), coreflect_omega(t, Op::D)).verdict == Comparison::equal);
    CHECK(compare(coreflect_omega(t, Op::Np), coreflect_omega(t, Op::Dp)).verdict == Comparison::equal);
    CHECK(compare(coreflect_omega(t, Op::I), coreflect_omega(t, Op::D)).verdict == Comparison::equal);
  }
}

TEST_CASE("order topologies on omega orders") {
  auto w1 = OmegaOrder::omega_plus_one();
  auto w = OmegaOrder::omega();
  auto a1 = order_topology_omega(w1, OmegaOrderTopology::alexandroff);
  auto s1 = order_topology_omega(w1, OmegaOrderTopology::scott);
  auto ws1 = order_topology_omega(w1, OmegaOrderTopology::weak_scott);
  auto u1 = order_topology_omega(w1, OmegaOrderTopology::upper);
  CHECK(compare(s1, ws1).verdict == Comparison::equal);
  auto as = compare(a1, s1);
  CHECK(as.verdict == Comparison::finer);
  CHECK(a1.is_open(set(1, {0}, {})));
  CHECK_FALSE(s1.is_open(set(1, {0}, {})));
  CHECK(compare(s1, OmegaTopology::of(OmegaSpace::scott_omega_plus_one())).verdict == Comparison::equal);
  CHECK(compare(u1, s1).verdict == Comparison::equal);
  CHECK(u1.is_open(set(1, {0}, {}, 3)));
  CHECK_FALSE(u1.is_open(set(1, {0}, {})));
  CHECK(compare(order_topology_omega(w, OmegaOrderTopology::alexandroff),
                order_topology_omega(w, OmegaOrderTopology::scott)).verdict == Comparison::equal);
  // Order-compatible directed spaces sit between the weak Scott and the
  // Alexandroff topology of their order.
  for (const auto& space : {OmegaSpace::beta(), OmegaSpace::gamma(), OmegaSpace::example_E()}) {
    auto t = OmegaTopology::of(space);
    auto up = order_topology_omega(space.order(), OmegaOrderTopology::upper);
    auto ws = order_topology_omega(space.order(), OmegaOrderTopology::weak_scott);
    auto al = order_topology_omega(space.order(), OmegaOrderTopology::alexandroff);
    auto v1 = compare(ws, up).verdict;
    CHECK((v1 == Comparison::equal || v1 == Comparison::finer));
    auto v2 = compare(t, ws).verdict;
    CHECK((v2 == Comparison::equal || v2 == Comparison::finer));
    auto v3 = compare(al, t).verdict;
    CHECK((v3 == Comparison::equal || v3 == Comparison::finer));
  }
}

TEST_CASE("truncation") {
  auto beta = OmegaTopology::of(OmegaSpace::beta());
  auto t = truncate(beta, 2);
  REQUIRE(t.size() == 4);
  CHECK(t.labels() == std::vector<std::string>{"inf", "0", "1", "2"});
  CHECK(t.specialization().leq(1, 2));
  CHECK(t.specialization().leq(2, 3));
  CHECK_FALSE(t.specialization().leq(0, 3));
  CHECK_FALSE(t.specialization().leq(3, 0));
  // Subspace semantics: up 3 + inf restricts to {inf}.
  CHECK(t.is_open(Subset::of(4, {0})));
  auto g0 = truncate(OmegaTopology::of(OmegaSpace::gamma()), 0);
  CHECK(g0.size() == 2);
  CHECK(g0.is_open(Subset::of(2, {0})));
  CHECK_FALSE(g0.is_open(Subset::of(2, {1})));
  for (const auto& [name, x] : bundled())
    for (std::uint64_t n = 0; n <= 5; ++n) {
      auto tr = truncate(x, n);
      const auto w = x.fin_size();
      auto index = [&](OmegaPoint p) { return p.chain ? w + p.index : p.index; };
      for (const auto& p : representatives(x.order(), n))
        for (const auto& q : representatives(x.order(), n))
          CHECK(tr.specialization().leq(index(p), index(q)) == x.leq(p, q));
      for (const auto& b : x.model().instances(n + 3)) {
        Subset s(tr.size());
        for (const auto& p : representatives(x.order(), n))
          if (b.contains(p)) s.insert(index(p));
        CHECK(tr.is_open(s));
      }
    }
}

TEST_CASE("upper bounds") {
  auto w = OmegaOrder::omega();
  CHECK_FALSE(has_upper_bound(w, SchematicSet(Subset(0), {}, 0)));
  CHECK(has_upper_bound(OmegaOrder::omega_plus_one(), SchematicSet(Subset(1), {}, 0)));
  CHECK(has_upper_bound(w, SchematicSet(Subset(0), {0, 3}, std::nullopt)));
  auto beta = OmegaSpace::beta();
  CHECK_THROWS_AS(has_upper_bound(beta.order(), set(1, {0}, {1})), NotDirected);
}
