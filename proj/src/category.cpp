#include "ccc/category.hpp"

#include "ccc/enumerate.hpp"
#include "ccc/errors.hpp"
#include "ccc/omega_topology.hpp"

#include <map>
#include <set>

namespace ccc {

namespace {

void check_caps(const FiniteTopology& x, const FiniteTopology& y, const Limits& limits) {
  if (x.size() > limits.max_carrier || y.size() > limits.max_carrier)
    throw SizeCap("hom set operands exceed " + std::to_string(limits.max_carrier) + " points");
}

void require_determined(const FiniteTopology& x, Op which, const Limits& limits) {
  if (!is_determined(x, which, limits))
    throw NotDetermined("operand is not " + std::string(op_name(which)) + "-determined");
}

std::string show_map(const MapTable& f, const FiniteTopology& target) { return map_label(f, target.labels()); }

// Every map from a ground of size n into m points, in lexicographic order.
template <class F>
void for_each_map(std::size_t n, std::size_t m, F&& visit) {
  if (m == 0) {
    if (n == 0) visit(MapTable{});
    return;
  }
  MapTable f(n, 0);
  for (;;) {
    visit(f);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++f[i] < m) break;
      f[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

FiniteTopology product_order_space(const FiniteTopology& x, const FiniteTopology& y) {
  const auto nx = x.size(), ny = y.size();
  std::vector<std::string> labels;
  std::vector<Subset> up;
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < ny; ++b) {
      labels.push_back("(" + x.label(a) + "," + y.label(b) + ")");
      Subset u(nx * ny);
      for (std::size_t c = 0; c < nx; ++c)
        for (std::size_t d = 0; d < ny; ++d)
          if (x.specialization().leq(a, c) && y.specialization().leq(b, d)) u.insert(product_index(c, d, ny));
      up.push_back(std::move(u));
    }
  const auto mode = x.is_t0() && y.is_t0() ? OrderMode::partial : OrderMode::pre;
  return FiniteTopology::from_specialization(FinitePoset::from_up_sets(labels, up, mode));
}

}  // namespace

HomSet hom_set(const FiniteTopology& x, const FiniteTopology& y, const Limits& limits) {
  check_caps(x, y, limits);
  HomSet h{x, y, {}};
  for_each_monotone(x.specialization(), y.specialization(), [&](const MapTable& f) {
    if (continuous(f, x, y)) h.maps.push_back(f);
    return true;
  });
  return h;
}

FiniteTopology pointwise_space(const FiniteTopology& x, const FiniteTopology& y, const Limits& limits) {
  const auto h = hom_set(x, y, limits);
  const auto n = h.maps.size();
  if (n > limits.max_carrier)
    throw SizeCap("function space of " + std::to_string(n) + " maps exceeds carrier cap");
  std::vector<std::string> labels;
  for (const auto& f : h.maps) labels.push_back(show_map(f, y));
  // Minimal neighbourhood of f: intersection of the subbasic opens
  // {g : g(p) in U} containing f; the least such U is the neighbourhood of
  // f(p).
  std::vector<Subset> nbhd(n, Subset::full(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < x.size(); ++p)
      for (std::size_t k = 0; k < n; ++k)
        if (!y.nbhd(h.maps[i][p]).contains(h.maps[k][p])) nbhd[i].erase(k);
  const auto mode = y.is_t0() ? OrderMode::partial : OrderMode::pre;
  return FiniteTopology::from_specialization(FinitePoset::from_up_sets(std::move(labels), std::move(nbhd), mode));
}

FiniteTopology tensor(const FiniteTopology& x, const FiniteTopology& y, Op which, const Limits& limits) {
  require_determined(x, which, limits);
  require_determined(y, which, limits);
  return coreflect(product(x, y), which, limits);
}

FiniteTopology exponential(const FiniteTopology& x, const FiniteTopology& y, Op which, const Limits& limits) {
  require_determined(x, which, limits);
  require_determined(y, which, limits);
  return coreflect(pointwise_space(x, y, limits), which, limits);
}

LawReport check_exponential_law(const FiniteTopology& x, const FiniteTopology& y, const FiniteTopology& z,
                                Op which, const Limits& limits) {
  LawReport r{"exponential law", 0, Verdict::pass, std::nullopt};
  require_determined(z, which, limits);
  const auto hxy = hom_set(x, y, limits);
  const auto e = exponential(x, y, which, limits);
  const auto nx = x.size();
  std::map<MapTable, std::size_t> index;
  for (std::size_t i = 0; i < hxy.maps.size(); ++i) index[hxy.maps[i]] = i;

  const auto ex = tensor(e, x, which, limits);
  MapTable ev(e.size() * nx);
  for (std::size_t f = 0; f < e.size(); ++f)
    for (std::size_t p = 0; p < nx; ++p) ev[product_index(f, p, nx)] = hxy.maps[f][p];
  ++r.instances;
  if (!continuous(ev, ex, y)) r.fail("evaluation is not continuous on " + describe(ex));

  const auto zx = tensor(z, x, which, limits);
  const auto g_maps = hom_set(zx, y, limits).maps;
  const auto h_maps = hom_set(z, e, limits).maps;
  ++r.instances;
  if (g_maps.size() != h_maps.size())
    r.fail("|hom(Z*X,Y)| = " + std::to_string(g_maps.size()) + " but |hom(Z,[X->Y])| = " +
           std::to_string(h_maps.size()));

  auto uncurry = [&](const MapTable& h) {
    MapTable g(z.size() * nx);
    for (std::size_t c = 0; c < z.size(); ++c)
      for (std::size_t p = 0; p < nx; ++p) g[product_index(c, p, nx)] = hxy.maps[h[c]][p];
    return g;
  };
  std::map<MapTable, std::size_t> mediators;
  for (const auto& h : h_maps) {
    ++r.instances;
    MapTable hx(z.size() * nx);
    for (std::size_t c = 0; c < z.size(); ++c)
      for (std::size_t p = 0; p < nx; ++p) hx[product_index(c, p, nx)] = product_index(h[c], p, nx);
    if (!continuous(hx, zx, ex)) r.fail("h x id is not continuous for h = " + show_map(h, e));
    const auto g = uncurry(h);
    if (!continuous(g, zx, y)) r.fail("uncurried map " + show_map(g, y) + " is not continuous");
    ++mediators[g];
  }
  for (const auto& g : g_maps) {
    ++r.instances;
    MapTable h(z.size());
    bool ok = true;
    for (std::size_t c = 0; c < z.size() && ok; ++c) {
      MapTable section(nx);
      for (std::size_t p = 0; p < nx; ++p) section[p] = g[product_index(c, p, nx)];
      auto it = index.find(section);
      if (it == index.end()) {
        r.fail("section " + show_map(section, y) + " of " + show_map(g, y) + " is not continuous");
        ok = false;
      } else {
        h[c] = it->second;
      }
    }
    if (!ok) continue;
    if (!continuous(h, z, e)) r.fail("curried map of " + show_map(g, y) + " is not continuous");
    if (uncurry(h) != g) r.fail("uncurry(curry(g)) differs from g = " + show_map(g, y));
    const auto it = mediators.find(g);
    const std::size_t count = it == mediators.end() ? 0 : it->second;
    if (count != 1)
      r.fail(std::to_string(count) + " mediating maps for g = " + show_map(g, y));
  }
  return r;
}

LawReport check_product_universal(const FiniteTopology& x, const FiniteTopology& y, Op which,
                                  std::size_t test_sizes, const Limits& limits) {
  LawReport r{"product universal property", 0, Verdict::pass, std::nullopt};
  const auto t = tensor(x, y, which, limits);
  const auto ny = y.size();
  MapTable p1(t.size()), p2(t.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < ny; ++b) {
      p1[product_index(a, b, ny)] = a;
      p2[product_index(a, b, ny)] = b;
    }
  r.instances += 2;
  if (!continuous(p1, t, x)) r.fail("first projection is not continuous");
  if (!continuous(p2, t, y)) r.fail("second projection is not continuous");
  for (const auto& z : enumerate_spaces_up_to(test_sizes, false)) {
    std::map<std::pair<MapTable, MapTable>, std::size_t> mediators;
    for (const auto& h : hom_set(z, t, limits).maps) {
      MapTable f1(z.size()), f2(z.size());
      for (std::size_t c = 0; c < z.size(); ++c) {
        f1[c] = p1[h[c]];
        f2[c] = p2[h[c]];
      }
      ++mediators[{f1, f2}];
    }
    const auto hx = hom_set(z, x, limits).maps;
    const auto hy = hom_set(z, y, limits).maps;
    for (const auto& f1 : hx)
      for (const auto& f2 : hy) {
        ++r.instances;
        MapTable pairing(z.size());
        for (std::size_t c = 0; c < z.size(); ++c) pairing[c] = product_index(f1[c], f2[c], ny);
        if (!continuous(pairing, z, t)) {
          r.fail("pairing of " + show_map(f1, x) + " and " + show_map(f2, y) + " from " + describe(z) +
                 " is not continuous");
          continue;
        }
        const auto it = mediators.find({f1, f2});
        const std::size_t count = it == mediators.end() ? 0 : it->second;
        if (count != 1)
          r.fail(std::to_string(count) + " mediating maps for the cone " + show_map(f1, x) + ", " +
                 show_map(f2, y));
      }
  }
  return r;
}

LawReport check_coreflection_universal(const FiniteTopology& y, Op which,
                                       const std::vector<FiniteTopology>& test_spaces, const Limits& limits) {
  LawReport r{"coreflection universal property", 0, Verdict::pass, std::nullopt};
  const auto py = coreflect(y, which, limits);
  MapTable id(y.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  ++r.instances;
  if (!continuous(id, py, y)) r.fail("identity from the coreflection is not continuous");
  for (const auto& x : test_spaces) {
    if (!is_determined(x, which, limits)) continue;
    const auto into_y = hom_set(x, y, limits).maps;
    const auto into_py = hom_set(x, py, limits).maps;
    r.instances += into_y.size();
    if (into_y != into_py)
      r.fail("maps from " + describe(x) + ": " + std::to_string(into_y.size()) + " into Y, " +
             std::to_string(into_py.size()) + " into the coreflection");
  }
  return r;
}

LawReport check_separate_continuity(const FiniteTopology& x, const FiniteTopology& y, const FiniteTopology& z,
                                    const Limits& limits) {
  if (!x.is_t0() || !y.is_t0() || !z.is_t0())
    throw PreconditionViolated("separate continuity is checked on T0 spaces");
  LawReport r{"separate continuity", 0, Verdict::pass, std::nullopt};
  const auto t = tensor(x, y, Op::D, limits);
  const auto nx = x.size(), ny = y.size();
  for_each_map(nx * ny, z.size(), [&](const MapTable& g) {
    ++r.instances;
    bool separate = true;
    for (std::size_t a = 0; a < nx && separate; ++a) {
      MapTable s(ny);
      for (std::size_t b = 0; b < ny; ++b) s[b] = g[product_index(a, b, ny)];
      separate = continuous(s, y, z);
    }
    for (std::size_t b = 0; b < ny && separate; ++b) {
      MapTable s(nx);
      for (std::size_t a = 0; a < nx; ++a) s[a] = g[product_index(a, b, ny)];
      separate = continuous(s, x, z);
    }
    const bool joint = continuous(g, t, z);
    if (separate != joint)
      r.fail(show_map(g, z) + (joint ? " is jointly but not separately continuous"
                                     : " is separately but not jointly continuous"));
  });
  return r;
}

LawReport check_T0_preservation(const FiniteTopology& x, const FiniteTopology& y, Op which,
                                const Limits& limits) {
  if (!x.is_t0() || !y.is_t0()) throw PreconditionViolated("T0 preservation needs T0 inputs");
  LawReport r{"T0 preservation", 2, Verdict::pass, std::nullopt};
  if (!tensor(x, y, which, limits).is_t0()) r.fail("tensor of " + describe(x) + " and " + describe(y));
  if (!exponential(x, y, which, limits).is_t0()) r.fail("exponential of " + describe(x) + " and " + describe(y));
  return r;
}

LawReport check_order_agreement(const FiniteTopology& x, const FiniteTopology& y, Op which,
                                const Limits& limits) {
  LawReport r{"specialization orders", 4, Verdict::pass, std::nullopt};
  const auto t = tensor(x, y, which, limits);
  const auto prod = product(x, y);
  if (!(t.specialization() == product_order_space(x, y).specialization()))
    r.fail("tensor specialization differs from the product order");
  if (!t.finer_or_equal(prod)) r.fail("tensor is not finer than the product");
  const auto e = exponential(x, y, which, limits);
  const auto h = hom_set(x, y, limits);
  if (!(e.specialization() == pointwise_order(h.maps, y.specialization(), e.labels())))
    r.fail("exponential specialization differs from the pointwise order");
  if (!e.finer_or_equal(pointwise_space(x, y, limits))) r.fail("exponential is not finer than the pointwise space");
  return r;
}

FiniteTopology beta_space(const FinitePoset& d) {
  if (!is_directed(d, d.whole())) throw PreconditionViolated("generating poset must be directed");
  const auto n = d.size();
  auto ground = d.labels();
  ground.push_back("inf");
  std::vector<Subset> subbase;
  for (std::size_t x = 0; x < n; ++x) {
    Subset u(n + 1);
    d.up(x).for_each([&](std::size_t i) { u.insert(i); });
    subbase.push_back(u);
    u.insert(n);
    subbase.push_back(u);
  }
  return FiniteTopology::make(std::move(ground), subbase, true);
}

FiniteTopology gamma_space(const FinitePoset& d) {
  if (!is_directed(d, d.whole())) throw PreconditionViolated("generating poset must be directed");
  const auto n = d.size();
  auto ground = d.labels();
  ground.push_back("inf");
  std::vector<Subset> subbase;
  for (std::size_t x = 0; x < n; ++x) {
    Subset u(n + 1);
    d.up(x).for_each([&](std::size_t i) { u.insert(i); });
    u.insert(n);
    subbase.push_back(u);
  }
  return FiniteTopology::make(std::move(ground), subbase, true);
}

std::vector<FiniteTopology> generating_spaces(Op which, std::size_t max_gen_size) {
  if (which == Op::One || which == Op::S) throw Unsupported("no generating class for this operation");
  if (max_gen_size == 0) return {FiniteTopology::point()};
  const bool chains = which == Op::I || which == Op::Ip || which == Op::N || which == Op::Np;
  std::vector<FiniteTopology> out;
  for (std::size_t n = 1; n <= max_gen_size; ++n) {
    std::vector<FinitePoset> shapes;
    if (chains) {
      shapes.push_back(FinitePoset::chain(n));
    } else {
      for (auto& p : enumerate_posets(n))
        if (is_directed(p, p.whole())) shapes.push_back(std::move(p));
    }
    for (const auto& d : shapes) out.push_back(is_primed(which) ? gamma_space(d) : beta_space(d));
  }
  return out;
}

FiniteTopology probe_generated(const FiniteTopology& x, Op which, std::size_t max_gen_size,
                               const Limits& limits) {
  std::vector<Probe> probes;
  for (const auto& g : generating_spaces(which, max_gen_size))
    for (auto& f : hom_set(g, x, limits).maps) probes.push_back({g, std::move(f)});
  return final_topology(x.labels(), probes);
}

LawReport check_pointwise_not_directed(std::uint64_t k) {
  LawReport r{"pointwise limit without order", 0, Verdict::pass, std::nullopt};
  const auto scott = order_topology_omega(OmegaOrder::omega(), OmegaOrderTopology::scott);
  const auto net = SchematicNet::ramp(1, 0);
  for (std::uint64_t x = 0; x < k; ++x) {
    ++r.instances;
    if (!converges(scott, net, OmegaPoint::nat(x)))
      r.fail("coordinate net at " + std::to_string(x) + " does not converge to " + std::to_string(x));
  }
  for (std::uint64_t n = 0; n < k; ++n) {
    ++r.instances;
    bool below = true;
    for (std::uint64_t x = 0; x <= k && below; ++x) below = scott.leq(OmegaPoint::nat(x), OmegaPoint::nat(n));
    if (below) r.fail("id <= f_" + std::to_string(n) + " on the tested coordinates");
  }
  return r;
}

}  // namespace ccc
