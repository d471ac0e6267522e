#include "ccc/convergence.hpp"
#include "ccc/enumerate.hpp"
#include "ccc/errors.hpp"
#include "ccc/topology.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ccc;

namespace {

// Oracle: the open family given by an explicit predicate over all subsets.
template <class Pred>
std::vector<Subset> opens_where(std::size_t n, Pred&& pred) {
  std::vector<Subset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Subset u = Subset::from_mask(n, m);
    if (pred(u)) out.push_back(u);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Oracle: continuity by preimages of every open.
bool brute_continuous(const MapTable& f, const FiniteTopology& x, const FiniteTopology& y) {
  for (const auto& v : y.opens()) {
    Subset pre(x.size());
    for (std::size_t a = 0; a < x.size(); ++a)
      if (v.contains(f[a])) pre.insert(a);
    if (!x.is_open(pre)) return false;
  }
  return true;
}

std::vector<MapTable> all_maps(std::size_t n, std::size_t m) {
  std::vector<MapTable> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= m;
  for (std::size_t code = 0; code < total; ++code) {
    MapTable f(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = c % m;
      c /= m;
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("make_topology validates strictly") {
  auto one = FiniteTopology::make({"x"}, {Subset(1), Subset::full(1)});
  CHECK(one.size() == 1);
  auto s = FiniteTopology::make({"bot", "top"}, {Subset(2), Subset::of(2, {1}), Subset::full(2)});
  CHECK(s == FiniteTopology::sierpinski());
  CHECK_THROWS_AS(FiniteTopology::make({"a", "b"}, {Subset(2), Subset::of(2, {0}), Subset::of(2, {1})}),
                  NotATopology);
  CHECK_THROWS_AS(FiniteTopology::make({"a", "b"}, {Subset::of(2, {0}), Subset::full(2)}), NotATopology);
  CHECK_THROWS_AS(FiniteTopology::make({"a", "b", "c"},
                                       {Subset(3), Subset::of(3, {0, 1}), Subset::of(3, {1, 2}),
                                        Subset::of(3, {0, 1, 2})}),
                  NotATopology);
  auto completed = FiniteTopology::make({"a", "b", "c"}, {Subset::of(3, {0, 1}), Subset::of(3, {1, 2})}, true);
  CHECK(completed.is_open(Subset::of(3, {1})));
  CHECK(completed.opens().size() == 5);
  Limits tiny;
  tiny.max_points = 2;
  CHECK_THROWS_AS(FiniteTopology::make({"a", "b", "c"}, {}, true, tiny), SizeCap);
}

TEST_CASE("every enumerated family round-trips through make") {
  for (const auto& t : enumerate_spaces_up_to(4, false)) {
    auto family = t.opens();
    CHECK(FiniteTopology::make(t.labels(), family) == t);
    CHECK(family.front().empty());
    CHECK(family.back() == Subset::full(t.size()));
  }
}

TEST_CASE("specialization") {
  auto s = FiniteTopology::sierpinski();
  CHECK(s.specialization().leq(0, 1));
  CHECK_FALSE(s.specialization().leq(1, 0));
  auto d = FiniteTopology::discrete({"a", "b"});
  CHECK_FALSE(d.specialization().leq(0, 1));
  auto ind = FiniteTopology::indiscrete({"a", "b"});
  CHECK(ind.specialization().leq(0, 1));
  CHECK(ind.specialization().leq(1, 0));
  // Definition: x below y iff every open containing x contains y.
  for (const auto& t : enumerate_spaces_up_to(3, false)) {
    auto opens = t.opens();
    for (std::size_t x = 0; x < t.size(); ++x)
      for (std::size_t y = 0; y < t.size(); ++y) {
        bool def = std::all_of(opens.begin(), opens.end(),
                               [&](const Subset& u) { return !u.contains(x) || u.contains(y); });
        CHECK(def == t.specialization().leq(x, y));
      }
  }
}

TEST_CASE("order topologies collapse on finite posets") {
  auto c2 = FinitePoset::chain(2);
  auto a = order_topology(c2, OrderTopology::alexandroff);
  CHECK(a.opens() == std::vector<Subset>{Subset(2), Subset::of(2, {1}), Subset::full(2)});
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) {
      auto alex = order_topology(p, OrderTopology::alexandroff);
      auto up = order_topology(p, OrderTopology::upper);
      auto sc = order_topology(p, OrderTopology::scott);
      CHECK(alex.opens() == opens_where(n, [&](const Subset& u) { return p.is_up_set(u); }));
      CHECK(sc == alex);
      CHECK(up == alex);
      CHECK(sc.finer_or_equal(up));
      CHECK(alex.finer_or_equal(sc));
      CHECK(alex.specialization() == FiniteTopology::from_specialization(p).specialization());
    }
  CHECK_THROWS_AS(order_topology(FinitePoset::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}, OrderMode::pre),
                                 OrderTopology::scott),
                  PreconditionViolated);
}

TEST_CASE("continuity") {
  auto s = FiniteTopology::sierpinski();
  CHECK(continuous({1, 1}, s, s));
  CHECK(continuous({0, 1}, s, s));
  CHECK_FALSE(continuous({1, 0}, s, s));
  auto spaces = enumerate_spaces_up_to(3, false);
  for (const auto& x : spaces)
    for (const auto& y : spaces)
      for (const auto& f : all_maps(x.size(), y.size())) {
        const bool c = continuous(f, x, y);
        CHECK(c == brute_continuous(f, x, y));
        CHECK(c == is_monotone(x.specialization(), y.specialization(), f));
      }
}

TEST_CASE("products") {
  auto s = FiniteTopology::sierpinski();
  auto pt = FiniteTopology::point();
  CHECK(homeomorphic(product(s, pt), s));
  auto ss = product(s, s);
  CHECK(ss.size() == 4);
  CHECK(ss.opens().size() == 6);
  for (const auto& x : enumerate_spaces_up_to(3, false))
    for (const auto& y : enumerate_spaces_up_to(2, false)) {
      auto p = product(x, y);
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
          for (std::size_t k = 0; k < x.size(); ++k)
            for (std::size_t l = 0; l < y.size(); ++l)
              CHECK(p.specialization().leq(product_index(i, j, y.size()), product_index(k, l, y.size())) ==
                    (x.specialization().leq(i, k) && y.specialization().leq(j, l)));
      // Rectangles of opens form a base.
      auto expected = opens_where(p.size(), [&](const Subset& u) {
        for (std::size_t i = 0; i < x.size(); ++i)
          for (std::size_t j = 0; j < y.size(); ++j) {
            if (!u.contains(product_index(i, j, y.size()))) continue;
            bool covered = false;
            for (const auto& a : x.opens())
              for (const auto& b : y.opens()) {
                if (!a.contains(i) || !b.contains(j)) continue;
                bool inside = true;
                a.for_each([&](std::size_t ai) {
                  b.for_each([&](std::size_t bj) { inside = inside && u.contains(product_index(ai, bj, y.size())); });
                });
                covered = covered || inside;
              }
            if (!covered) return false;
          }
        return true;
      });
      CHECK(p.opens() == expected);
    }
  auto d = product(FiniteTopology::discrete({"a", "b"}), FiniteTopology::discrete({"c", "d"}));
  CHECK(d == FiniteTopology::discrete(d.labels()));
}

TEST_CASE("final topologies") {
  auto ground = std::vector<std::string>{"a", "b", "c"};
  CHECK(final_topology(ground, {}) == FiniteTopology::discrete(ground));
  auto s = FiniteTopology::sierpinski();
  CHECK(final_topology(s.labels(), {{s, {0, 1}}}) == s);

  // Oracle: U open iff every probe preimage open; result is the finest
  // topology making the probes continuous.
  std::mt19937_64 rng(3);
  auto spaces = enumerate_spaces_up_to(3, false);
  for (const auto& target : enumerate_spaces_up_to(3, false)) {
    std::vector<Probe> probes;
    for (const auto& src : sample(spaces, 3, rng)) {
      auto maps = all_maps(src.size(), target.size());
      for (const auto& f : sample(maps, 2, rng)) probes.push_back({src, f});
    }
    auto fin = final_topology(target.labels(), probes);
    auto expected = opens_where(target.size(), [&](const Subset& u) {
      for (const auto& pr : probes) {
        Subset pre(pr.source.size());
        for (std::size_t a = 0; a < pr.source.size(); ++a)
          if (u.contains(pr.map[a])) pre.insert(a);
        if (!pr.source.is_open(pre)) return false;
      }
      return true;
    });
    CHECK(fin.opens() == expected);
    for (const auto& pr : probes) CHECK(continuous(pr.map, pr.source, fin));
    for (const auto& other : enumerate_spaces(target.size(), false)) {
      bool all = std::all_of(probes.begin(), probes.end(),
                             [&](const Probe& pr) { return continuous(pr.map, pr.source, other); });
      if (all) CHECK(fin.finer_or_equal(other));
    }
  }
}

TEST_CASE("closure and interior") {
  auto s = FiniteTopology::sierpinski();
  CHECK(s.closure(Subset::of(2, {1})) == Subset::full(2));
  CHECK(s.closure(Subset::of(2, {0})) == Subset::of(2, {0}));
  CHECK(s.interior(Subset::of(2, {0})).empty());
}
