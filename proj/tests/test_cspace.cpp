#include "ccc/cspace.hpp"
#include "ccc/enumerate.hpp"
#include "ccc/errors.hpp"

#include <doctest.h>

using namespace ccc;

namespace {

OmegaPoint nat(std::uint64_t n) { return OmegaPoint::nat(n); }
OmegaPoint fin(std::size_t i) { return OmegaPoint::fin(i); }

std::vector<std::pair<std::string, OmegaTopology>> bundled() {
  return {{"beta", OmegaTopology::of(OmegaSpace::beta())},
          {"gamma", OmegaTopology::of(OmegaSpace::gamma())},
          {"delta", OmegaTopology::of(OmegaSpace::delta())},
          {"E", OmegaTopology::of(OmegaSpace::example_E())}};
}

}  // namespace

TEST_CASE("c-spaces") {
  for (const auto& x : enumerate_spaces_up_to(4, false)) CHECK(is_c_space(x).c_space);
  const auto e = OmegaTopology::of(OmegaSpace::example_E());
  const auto v = is_c_space(e);
  CHECK_FALSE(v.c_space);
  CHECK(v.point == std::optional<std::string>("a"));
  REQUIRE(v.neighbourhood);
  CHECK(v.neighbourhood->find("inf") != std::string::npos);
  CHECK(is_c_space(OmegaTopology::of(OmegaSpace::gamma())).c_space);
  CHECK(is_c_space(order_topology_omega(OmegaOrder::omega(), OmegaOrderTopology::scott)).c_space);
  CHECK_FALSE(is_c_space(OmegaTopology::of(OmegaSpace::beta())).c_space);
  CHECK_FALSE(is_c_space(OmegaTopology::of(OmegaSpace::delta())).c_space);
  CHECK_THROWS_AS(is_c_space(order_topology_omega(OmegaOrder::omega_plus_one(), OmegaOrderTopology::upper)),
                  Unsupported);
}

TEST_CASE("eventual lower bounds") {
  for (const auto& x : enumerate_spaces_up_to(4, false)) {
    const auto n = x.size();
    for (std::size_t p = 0; p < n; ++p)
      CHECK(eventual_lower_bounds(x, FiniteNet::tail(Subset::singleton(n, p))) == x.specialization().down(p));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      const auto el = eventual_lower_bounds(x, FiniteNet::tail(Subset::from_mask(n, mask)));
      CHECK(x.specialization().is_down_set(el));
    }
  }
  const auto beta = OmegaTopology::of(OmegaSpace::beta());
  CHECK(eventual_lower_bounds(beta, SchematicNet::ramp(1, 0)) == SchematicSet(Subset(1), {}, 0));
  const auto e = OmegaTopology::of(OmegaSpace::example_E());
  // Only bot lies below a and below the chain.
  CHECK(eventual_lower_bounds(e, SchematicNet({fin(1), Ramp{2, 0}})) == SchematicSet(Subset::of(3, {2}), {}, std::nullopt));
  for (const auto& [name, x] : bundled()) {
    for (const auto& p : representatives(x.order(), 5)) {
      const auto el = eventual_lower_bounds(x, SchematicNet::constant(p));
      for (const auto& y : representatives(x.order(), 8)) CHECK(el.contains(y) == x.leq(y, p));
    }
    for (const auto& q : standard_battery(x)) {
      const auto el = eventual_lower_bounds(x, q.net);
      for (const auto& a : representatives(x.order(), 7))
        for (const auto& b : representatives(x.order(), 7))
          if (el.contains(b) && x.leq(a, b)) CHECK(el.contains(a));
    }
  }
}

TEST_CASE("S class membership") {
  for (const auto& x : enumerate_spaces_up_to(3, false))
    for (std::size_t p = 0; p < x.size(); ++p)
      CHECK(in_s_class(x, FiniteNet::tail(Subset::singleton(x.size(), p)), p));
  const auto beta = OmegaTopology::of(OmegaSpace::beta());
  CHECK(in_s_class(beta, SchematicNet::ramp(1, 0), fin(0)));
  const auto e = OmegaTopology::of(OmegaSpace::example_E());
  const SchematicNet alt({fin(1), Ramp{2, 0}});
  CHECK(converges(e, alt, fin(1)));
  CHECK_FALSE(in_s_class(e, alt, fin(1)));
  for (const auto& [name, x] : bundled())
    for (const auto& p : representatives(x.order(), 4)) CHECK(in_s_class(x, SchematicNet::constant(p), p));
}

TEST_CASE("S topology equals the directed coreflection") {
  for (const auto& x : enumerate_spaces_up_to(4, false)) CHECK(s_topology(x) == coreflect(x, Op::D));
  for (const auto& [name, x] : bundled()) {
    CAPTURE(name);
    const auto s = s_topology(x);
    CHECK_FALSE(s.model().extraction_failure.has_value());
    CHECK(compare(s, coreflect_omega(x, Op::D)).verdict == Comparison::equal);
  }
  const auto e = OmegaTopology::of(OmegaSpace::example_E());
  CHECK(compare(s_topology(e), e).verdict == Comparison::equal);
  const auto beta = OmegaTopology::of(OmegaSpace::beta());
  CHECK(compare(s_topology(beta), beta).verdict == Comparison::equal);
}

TEST_CASE("S class topological") {
  for (const auto& x : enumerate_spaces_up_to(4, true)) {
    const auto v = s_class_topological(x);
    CHECK(v.verdict == STopological::topological);
    CHECK((v.verdict == STopological::topological) == is_c_space(x).c_space);
  }
  const auto e = OmegaTopology::of(OmegaSpace::example_E());
  const auto ve = s_class_topological(e, standard_battery(e));
  CHECK(ve.verdict == STopological::refuted);
  REQUIRE(ve.witness);
  CHECK(ve.witness->find("a") != std::string::npos);
  const auto gamma = OmegaTopology::of(OmegaSpace::gamma());
  CHECK(s_class_topological(gamma, standard_battery(gamma)).verdict == STopological::topological);
  const auto beta = OmegaTopology::of(OmegaSpace::beta());
  CHECK(s_class_topological(beta, standard_battery(beta)).verdict != STopological::topological);
  // On c-spaces convergence and S membership agree over the battery.
  for (const auto& x : {gamma, order_topology_omega(OmegaOrder::omega(), OmegaOrderTopology::scott)}) {
    REQUIRE(is_c_space(x).c_space);
    for (const auto& q : standard_battery(x)) CHECK(converges(x, q.net, q.point) == in_s_class(x, q.net, q.point));
  }
  CHECK(to_string(STopological::undetermined) == "undetermined");
}
