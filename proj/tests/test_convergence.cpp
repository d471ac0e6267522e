#include "ccc/convergence.hpp"
#include "ccc/enumerate.hpp"
#include "ccc/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ccc;

namespace {

// Oracle: eventually-in straight from tails of the index set.
bool literal_eventually_in(const FinitePoset& order, const FiniteNet& net, const Subset& u) {
  if (net.kind() != FiniteNet::Kind::directed) return net.eventual().is_subset_of(u);
  bool found = false;
  net.support().for_each([&](std::size_t d) {
    if ((order.up(d) & net.support()).is_subset_of(u)) found = true;
  });
  return found;
}

bool literal_converges(const FiniteTopology& t, const FiniteNet& net, std::size_t x) {
  for (const auto& u : t.opens())
    if (u.contains(x) && !literal_eventually_in(t.specialization(), net, u)) return false;
  return true;
}

// Oracle: the determined family by testing every subset.
std::vector<Subset> brute_determined(const FiniteTopology& t, const ConvergenceClass& c) {
  std::vector<Subset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << t.size()); ++m) {
    Subset u = Subset::from_mask(t.size(), m);
    bool ok = true;
    for (const auto& p : c.pairs())
      if (u.contains(p.point) && !literal_eventually_in(t.specialization(), p.net, u)) ok = false;
    if (ok) out.push_back(u);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Op> all_ops() { return {Op::D, Op::Dp, Op::I, Op::Ip, Op::N, Op::Np, Op::One, Op::S}; }

}  // namespace

TEST_CASE("op names round-trip") {
  for (Op op : all_ops()) CHECK(parse_op(op_name(op)) == op);
  CHECK_FALSE(parse_op("X").has_value());
}

TEST_CASE("net construction") {
  auto c3 = FinitePoset::chain(3);
  CHECK_THROWS_AS(FiniteNet::tail(Subset(3)), PreconditionViolated);
  CHECK_THROWS_AS(FiniteNet::directed(FinitePoset::antichain(2), Subset::full(2)), NotDirected);
  auto d = FiniteNet::directed(c3, Subset::of(3, {0, 2}));
  CHECK(d.eventual() == Subset::of(3, {2}));
  CHECK_THROWS_AS(FiniteNet::sequence(c3, Subset::of(3, {0, 2}), Subset::of(3, {0})), PreconditionViolated);
  auto ind = FiniteTopology::indiscrete({"a", "b"}).specialization();
  auto seq = FiniteNet::sequence(ind, Subset::full(2), Subset::of(2, {1}));
  CHECK(seq.eventual() == Subset::of(2, {1}));
  auto dn = FiniteNet::directed(ind, Subset::full(2));
  CHECK(dn.eventual() == Subset::full(2));
}

TEST_CASE("convergence examples") {
  auto s = FiniteTopology::sierpinski();
  for (const auto& t : enumerate_spaces_up_to(3, false))
    for (std::size_t x = 0; x < t.size(); ++x) CHECK(converges(t, FiniteNet::tail(Subset::singleton(t.size(), x)), x));
  CHECK(converges(s, FiniteNet::directed(s.specialization(), Subset::of(2, {1})), 0));
  auto disc = FiniteTopology::discrete({"a", "b"});
  auto ab = FiniteNet::tail(Subset::full(2));
  CHECK_FALSE(converges(disc, ab, 0));
  CHECK_FALSE(converges(disc, ab, 1));
}

TEST_CASE("convergence agrees with the literal definition") {
  for (const auto& t : enumerate_spaces_up_to(4, false)) {
    const auto n = t.size();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
      Subset s = Subset::from_mask(n, m);
      for (std::size_t x = 0; x < n; ++x) {
        CHECK(converges(t, FiniteNet::tail(s), x) == literal_converges(t, FiniteNet::tail(s), x));
        if (is_directed(t.specialization(), s)) {
          auto d = FiniteNet::directed(t.specialization(), s);
          CHECK(converges(t, d, x) == literal_converges(t, d, x));
          for (const auto& u : t.opens()) CHECK(d.eventually_in(u) == literal_eventually_in(t.specialization(), d, u));
        }
      }
    }
  }
}

TEST_CASE("op_class examples") {
  auto s = FiniteTopology::sierpinski();
  const auto& o = s.specialization();
  auto d = op_class(s, Op::D);
  CHECK(d.contains({FiniteNet::directed(o, Subset::of(2, {1})), 0}));
  CHECK(d.contains({FiniteNet::directed(o, Subset::of(2, {1})), 1}));
  CHECK(d.contains({FiniteNet::directed(o, Subset::of(2, {0})), 0}));
  CHECK_FALSE(d.contains({FiniteNet::directed(o, Subset::of(2, {0})), 1}));
  auto pt = FiniteTopology::point();
  for (Op op : {Op::D, Op::Dp, Op::I, Op::Ip}) {
    auto c = op_class(pt, op);
    REQUIRE(c.size() == 1);
    CHECK(c.pairs()[0].point == 0);
  }
  for (const auto& t : enumerate_spaces_up_to(4, true)) {
    CHECK(op_class(t, Op::Dp).is_subset_of(op_class(t, Op::D)));
    CHECK(op_class(t, Op::Ip).is_subset_of(op_class(t, Op::I)));
    CHECK(op_class(t, Op::Np).is_subset_of(op_class(t, Op::N)));
    CHECK(op_class(t, Op::I).is_subset_of(op_class(t, Op::D)));
    for (const auto& p : op_class(t, Op::D).pairs()) CHECK(converges(t, p.net, p.point));
  }
}

TEST_CASE("determined topology matches brute force") {
  std::mt19937_64 rng(5);
  for (const auto& t : enumerate_spaces_up_to(4, false))
    for (Op op : all_ops()) {
      auto c = op_class(t, op);
      CHECK(determined_topology(t.labels(), c).opens() == brute_determined(t, c));
      // random subclasses
      std::vector<ClassPair> some;
      for (const auto& p : c.pairs())
        if (rng() % 2) some.push_back(p);
      ConvergenceClass sub(t.size(), some);
      CHECK(determined_topology(t.labels(), sub).opens() == brute_determined(t, sub));
      // antitone: smaller class, finer topology
      CHECK(determined_topology(t.labels(), sub).finer_or_equal(determined_topology(t.labels(), c)));
    }
}

TEST_CASE("classes 1 and S") {
  for (const auto& t : enumerate_spaces_up_to(4, false)) {
    CHECK(determined_topology(t.labels(), op_class(t, Op::One)) == FiniteTopology::discrete(t.labels()));
    CHECK(determined_topology(t.labels(), op_class(t, Op::S)) == FiniteTopology::from_specialization(t.specialization()));
  }
  CHECK(determined_topology({"a", "b"}, ConvergenceClass(2)) == FiniteTopology::discrete({"a", "b"}));
  CHECK_FALSE(is_determined(FiniteTopology::sierpinski(), Op::One));
}

TEST_CASE("coreflections on finite spaces") {
  for (const auto& t : enumerate_spaces_up_to(4, false)) {
    for (Op op : kSixOps) {
      auto c = coreflect(t, op);
      CHECK(c.finer_or_equal(t));
      CHECK(coreflect(c, op) == c);
      CHECK(c == t);  // finite spaces are determined for all six operations
    }
    CHECK(coreflect(t, Op::Dp).finer_or_equal(coreflect(t, Op::D)));
  }
  CHECK(coreflect(FiniteTopology::sierpinski(), Op::Dp) == FiniteTopology::sierpinski());
  auto ind = FiniteTopology::indiscrete({"a", "b"});
  CHECK(coreflect(ind, Op::D) == ind);
  for (Op op : kSixOps) CHECK(is_determined(FiniteTopology::discrete({"a", "b", "c"}), op));
}

TEST_CASE("canonical and exhaustive classes give the same topology") {
  for (const auto& t : enumerate_spaces_up_to(4, false))
    for (Op op : all_ops()) {
      auto ex = op_class(t, op, ClassMode::exhaustive);
      auto can = op_class(t, op, ClassMode::canonical);
      CHECK(can.is_subset_of(ex));
      CHECK(determined_topology(t.labels(), can) == determined_topology(t.labels(), ex));
    }
}

TEST_CASE("continuity transfer and consistency") {
  auto spaces = enumerate_spaces_up_to(3, false);
  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      std::vector<MapTable> maps;
      std::size_t total = 1;
      for (std::size_t i = 0; i < x.size(); ++i) total *= y.size();
      for (std::size_t code = 0; code < total; ++code) {
        MapTable f(x.size());
        std::size_t c = code;
        for (auto& v : f) {
          v = c % y.size();
          c /= y.size();
        }
        maps.push_back(f);
      }
      for (Op op : {Op::D, Op::One, Op::S}) {
        auto cls = op_class(x, op);
        auto ex = determined_topology(x.labels(), cls);
        for (const auto& f : maps) {
          bool preserves = std::all_of(cls.pairs().begin(), cls.pairs().end(), [&](const ClassPair& p) {
            Subset img(y.size());
            p.net.eventual().for_each([&](std::size_t i) { img.insert(f[i]); });
            return converges(y, FiniteNet::tail(img), f[p.point]);
          });
          CHECK(continuous(f, ex, y) == preserves);
        }
      }
      if (!x.is_t0() || !y.is_t0()) continue;
      for (const auto& f : maps) {
        if (!continuous(f, x, y)) continue;
        for (Op op : kSixOps)
          for (const auto& p : op_class(x, op).pairs())
            CHECK(in_op_class(y, op, image(p.net, f, y.specialization()), f[p.point]));
      }
    }
}

TEST_CASE("transfinite closure") {
  auto sandwich_bottom = [](const FinitePoset& p) {
    std::vector<ClassPair> pairs;
    for (std::size_t x = 0; x < p.size(); ++x)
      p.up(x).for_each([&](std::size_t y) {
        pairs.push_back({FiniteNet::directed(p, Subset::singleton(p.size(), y)), x});
      });
    return ConvergenceClass(p.size(), pairs);
  };
  auto c2 = FinitePoset::chain(2);
  auto a0 = sandwich_bottom(c2);
  CHECK(closure_transfinite(c2, a0, Subset::of(2, {1})).star == Subset::full(2));
  CHECK(closure_transfinite(c2, a0, Subset(2)).star.empty());

  ConvergenceClass missing(2, {{FiniteNet::directed(c2, Subset::of(2, {0})), 0}});
  CHECK_THROWS_AS(closure_transfinite(c2, missing, Subset::of(2, {1})), HypothesisViolated);
  auto bad = a0;
  bad.insert({FiniteNet::directed(c2, Subset::of(2, {0})), 1});
  CHECK_THROWS_AS(closure_transfinite(c2, bad, Subset::of(2, {0})), HypothesisViolated);

  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) {
      auto c = sandwich_bottom(p);
      auto top = determined_topology(p.labels(), c);
      CHECK(top.specialization() == FiniteTopology::from_specialization(p).specialization());
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        Subset f = Subset::from_mask(n, m);
        auto r = closure_transfinite(p, c, f);
        CHECK(r.star == top.closure(f));
        CHECK(r.stages.size() <= n + 2);
      }
    }
}
