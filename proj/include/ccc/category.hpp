#pragma once

#include "ccc/convergence.hpp"
#include "ccc/limits.hpp"
#include "ccc/report.hpp"
#include "ccc/topology.hpp"

#include <cstdint>
#include <vector>

namespace ccc {

struct HomSet {
  FiniteTopology source;
  FiniteTopology target;
  std::vector<MapTable> maps;  // lexicographic order
};

HomSet hom_set(const FiniteTopology& x, const FiniteTopology& y, const Limits& limits = {});

// Continuous maps X -> Y with the subbase {f : f(x) in U}. Point i is
// hom_set(x, y).maps[i].
FiniteTopology pointwise_space(const FiniteTopology& x, const FiniteTopology& y, const Limits& limits = {});

// Refinements of the product and of the pointwise space; both inputs must
// be determined for `which`.
FiniteTopology tensor(const FiniteTopology& x, const FiniteTopology& y, Op which, const Limits& limits = {});
FiniteTopology exponential(const FiniteTopology& x, const FiniteTopology& y, Op which,
                           const Limits& limits = {});

LawReport check_exponential_law(const FiniteTopology& x, const FiniteTopology& y, const FiniteTopology& z,
                                Op which, const Limits& limits = {});
// Test objects: every space with at most `test_sizes` points.
LawReport check_product_universal(const FiniteTopology& x, const FiniteTopology& y, Op which,
                                  std::size_t test_sizes, const Limits& limits = {});
LawReport check_coreflection_universal(const FiniteTopology& y, Op which,
                                       const std::vector<FiniteTopology>& test_spaces,
                                       const Limits& limits = {});
LawReport check_separate_continuity(const FiniteTopology& x, const FiniteTopology& y, const FiniteTopology& z,
                                    const Limits& limits = {});
LawReport check_T0_preservation(const FiniteTopology& x, const FiniteTopology& y, Op which,
                                const Limits& limits = {});
// Tensor specialization is the product order, exponential specialization
// the pointwise order, tensor finer than product, exponential finer than
// the pointwise space.
LawReport check_order_agreement(const FiniteTopology& x, const FiniteTopology& y, Op which,
                                const Limits& limits = {});

// Generating spaces on D + {inf}: beta has subbase up d and up d + inf,
// gamma has subbase up d + inf. D must have a top.
FiniteTopology beta_space(const FinitePoset& d);
FiniteTopology gamma_space(const FinitePoset& d);
// The generating spaces of the class for `which` built from directed posets
// (chains for I and N) of 1..max_gen_size points; only the one-point space
// when max_gen_size is 0.
std::vector<FiniteTopology> generating_spaces(Op which, std::size_t max_gen_size);
FiniteTopology probe_generated(const FiniteTopology& x, Op which, std::size_t max_gen_size,
                               const Limits& limits = {});

// On Scott omega: the constant maps f_n converge to id pointwise while
// id <= f_n fails, for n and coordinates below k.
LawReport check_pointwise_not_directed(std::uint64_t k);

}  // namespace ccc
