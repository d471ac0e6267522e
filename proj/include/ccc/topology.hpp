#pragma once

#include "ccc/limits.hpp"
#include "ccc/poset.hpp"
#include "ccc/subset.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ccc {

// Finite topology held by the minimal open neighbourhood of each point.
// Finite topologies are closed under arbitrary intersection, so these
// neighbourhoods determine the open family: U is open iff it contains the
// neighbourhood of each of its points.
class FiniteTopology {
 public:
  FiniteTopology() = default;

  // Strict: the family must contain the empty set and the ground and be
  // closed under pairwise union and intersection. With complete=true the
  // family is instead taken as a subbase.
  static FiniteTopology make(std::vector<std::string> ground, const std::vector<Subset>& opens,
                             bool complete = false, const Limits& limits = {});
  // Alexandroff topology of a preorder: open iff up-set.
  static FiniteTopology from_specialization(const FinitePoset& order);
  static FiniteTopology discrete(std::vector<std::string> ground);
  static FiniteTopology indiscrete(std::vector<std::string> ground);
  static FiniteTopology sierpinski();
  static FiniteTopology point();

  std::size_t size() const { return order_.size(); }
  const std::vector<std::string>& labels() const { return order_.labels(); }
  const std::string& label(std::size_t i) const { return order_.label(i); }
  std::optional<std::size_t> index_of(std::string_view l) const { return order_.index_of(l); }

  const Subset& nbhd(std::size_t x) const { return order_.up(x); }
  bool is_open(const Subset& u) const { return order_.is_up_set(u); }
  Subset interior(const Subset& s) const;
  Subset closure(const Subset& s) const { return order_.down_closure(s); }
  // Canonically sorted open family; SizeCap beyond limits.max_points.
  std::vector<Subset> opens(const Limits& limits = {}) const;
  std::size_t count_opens(const Limits& limits = {}) const;

  const FinitePoset& specialization() const { return order_; }
  bool is_t0() const { return order_.is_antisymmetric(); }

  // Every open of `other` is open here (same ground assumed).
  bool finer_or_equal(const FiniteTopology& other) const;
  FiniteTopology relabel(std::vector<std::string> labels) const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.order_ == b.order_;
  }

 private:
  FinitePoset order_;
};

FinitePoset specialization(const FiniteTopology& t);

enum class OrderTopology { alexandroff, upper, scott };

FiniteTopology order_topology(const FinitePoset& p, OrderTopology kind, const Limits& limits = {});

bool continuous(const MapTable& f, const FiniteTopology& x, const FiniteTopology& y);

FiniteTopology product(const FiniteTopology& x, const FiniteTopology& y);
std::size_t product_index(std::size_t i, std::size_t j, std::size_t ny);

struct Probe {
  FiniteTopology source;
  MapTable map;
};

// Finest topology on the ground making every probe continuous.
FiniteTopology final_topology(std::vector<std::string> ground, const std::vector<Probe>& probes);

// Rule p => S: any open containing p contains S. Least closed sets give the
// neighbourhoods of the finest topology satisfying all rules.
struct HornRule {
  std::size_t trigger;
  Subset required;
};
FiniteTopology topology_from_rules(std::vector<std::string> ground, const std::vector<HornRule>& rules);

}  // namespace ccc
