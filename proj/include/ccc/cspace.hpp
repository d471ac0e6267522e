#pragma once

#include "ccc/convergence.hpp"
#include "ccc/omega_topology.hpp"
#include "ccc/topology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ccc {

// Every x and open U containing x admit y in U with x in interior(up y).
struct CSpaceVerdict {
  bool c_space = true;
  std::optional<std::string> point;
  std::optional<std::string> neighbourhood;
};

CSpaceVerdict is_c_space(const FiniteTopology& x);
// Needs generators forming a base.
CSpaceVerdict is_c_space(const OmegaTopology& x);

// Points y such that the net is eventually in up y.
Subset eventual_lower_bounds(const FiniteTopology& x, const FiniteNet& net);
SchematicSet eventual_lower_bounds(const OmegaTopology& x, const SchematicNet& net);

// Some directed subset of the eventual lower bounds converges to the point.
bool in_s_class(const FiniteTopology& x, const FiniteNet& net, std::size_t point);
bool in_s_class(const OmegaTopology& x, const SchematicNet& net, OmegaPoint point);

ConvergenceClass s_class(const FiniteTopology& x);
FiniteTopology s_topology(const FiniteTopology& x);
OmegaTopology s_topology(const OmegaTopology& x);

struct SClassQuery {
  SchematicNet net;
  OmegaPoint point;
};

enum class STopological { topological, refuted, undetermined };
std::string to_string(STopological v);

struct STopologicalVerdict {
  STopological verdict = STopological::undetermined;
  std::optional<std::string> witness;
  std::size_t checked = 0;
};

// Finite: decided by comparing S_X with convergence for every eventual set.
STopologicalVerdict s_class_topological(const FiniteTopology& x);
// Omega: a witness that converges outside S_X refutes; a c-space whose
// witnesses all agree is reported topological over the battery.
STopologicalVerdict s_class_topological(const OmegaTopology& x, const std::vector<SClassQuery>& witnesses);

// Constant nets, ramps a*n+b and alternations of an F point with the even
// chain points, paired with every representative point.
std::vector<SClassQuery> standard_battery(const OmegaTopology& x);

}  // namespace ccc
