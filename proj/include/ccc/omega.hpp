#pragma once

#include "ccc/poset.hpp"
#include "ccc/subset.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ccc {

// A point of F + N: either a finite-part element or a chain number.
struct OmegaPoint {
  bool chain = false;
  std::uint64_t index = 0;

  static OmegaPoint fin(std::size_t i) { return {false, i}; }
  static OmegaPoint nat(std::uint64_t n) { return {true, n}; }
  friend auto operator<=>(const OmegaPoint&, const OmegaPoint&) = default;
};

inline constexpr std::uint64_t kAllChain = ~std::uint64_t{0};

// Cross order between a finite-part element f and the chain:
// f <= n for all n >= above; n <= f for all n <= below (kAllChain: every n).
struct CrossThreshold {
  std::optional<std::uint64_t> above;
  std::optional<std::uint64_t> below;
  friend bool operator==(const CrossThreshold&, const CrossThreshold&) = default;
};

// Partial order on F + N with N carrying its usual order.
class OmegaOrder {
 public:
  OmegaOrder() = default;
  // Closes thresholds along F and adds relations forced through the chain.
  static OmegaOrder build(FinitePoset fin, std::vector<CrossThreshold> cross);
  static OmegaOrder omega();
  static OmegaOrder omega_plus_one();

  const FinitePoset& fin() const { return fin_; }
  std::size_t fin_size() const { return fin_.size(); }
  const std::vector<CrossThreshold>& cross() const { return cross_; }
  bool leq(OmegaPoint p, OmegaPoint q) const;
  // Largest finite threshold mentioned.
  std::uint64_t horizon() const;
  // f lies above every chain point.
  bool above_chain(std::size_t f) const { return cross_[f].below == kAllChain; }
  // Least upper bound of N, if any.
  std::optional<std::size_t> chain_sup() const;

  std::string label(OmegaPoint p) const;
  std::optional<OmegaPoint> parse_point(const std::string& text) const;

  friend bool operator==(const OmegaOrder& a, const OmegaOrder& b) {
    return a.fin_ == b.fin_ && a.cross_ == b.cross_;
  }

 private:
  FinitePoset fin_;
  std::vector<CrossThreshold> cross_;
};

// F-part mask plus chain part A (finite) and an optional tail [t, inf).
// Kept normalized: A has no element >= t and t-1 is not in A.
class SchematicSet {
 public:
  SchematicSet() = default;
  SchematicSet(Subset fin, std::vector<std::uint64_t> chain, std::optional<std::uint64_t> tail);
  static SchematicSet empty(std::size_t fin_width) { return {Subset(fin_width), {}, std::nullopt}; }
  static SchematicSet whole(std::size_t fin_width) { return {Subset::full(fin_width), {}, 0}; }
  static SchematicSet point(std::size_t fin_width, OmegaPoint p);

  const Subset& fin() const { return fin_; }
  const std::vector<std::uint64_t>& chain() const { return chain_; }
  const std::optional<std::uint64_t>& tail() const { return tail_; }
  std::size_t fin_width() const { return fin_.width(); }

  bool contains(OmegaPoint p) const;
  bool is_empty() const { return fin_.empty() && chain_.empty() && !tail_; }
  bool is_subset_of(const SchematicSet& other) const;
  SchematicSet operator|(const SchematicSet& o) const;
  SchematicSet operator&(const SchematicSet& o) const;
  SchematicSet complement() const;
  // One more than the largest number mentioned (0 if none).
  std::uint64_t bound() const;
  // Members among F and chain points 0..k.
  std::vector<OmegaPoint> members(std::uint64_t k) const;

  friend bool operator==(const SchematicSet&, const SchematicSet&) = default;
  friend bool operator<(const SchematicSet& a, const SchematicSet& b);

 private:
  void normalize();
  Subset fin_;
  std::vector<std::uint64_t> chain_;
  std::optional<std::uint64_t> tail_;
};

std::string to_string(const SchematicSet& s, const OmegaOrder& order);

// Points satisfying pred, assuming pred is uniform on chain points > k.
SchematicSet tabulate(const OmegaOrder& order, std::uint64_t k, const std::function<bool(OmegaPoint)>& pred);
// F points and chain points 0..k.
std::vector<OmegaPoint> representatives(const OmegaOrder& order, std::uint64_t k);

enum class ParamKind {
  none,
  up,      // chain up-set of n in the presentation order, F part included
  point,   // {n}
  tail,    // [n, inf)
  codown,  // complement of the presentation down-set of n
};

struct SchemaTemplate {
  Subset fixed_fin;
  std::vector<std::uint64_t> fixed_chain;
  std::optional<std::uint64_t> tail_from;
  ParamKind param = ParamKind::none;
  std::uint64_t param_from = 0;

  static SchemaTemplate constant(const SchematicSet& s);
  SchematicSet instance(const OmegaOrder& order, std::uint64_t n) const;
  std::uint64_t bound() const;
  friend bool operator==(const SchemaTemplate&, const SchemaTemplate&) = default;
};

std::string to_string(const SchemaTemplate& t, const OmegaOrder& order);

// i-th element: residue r = i mod k, q = i div k; a fixed point or a*q+b.
struct Ramp {
  std::uint64_t a = 1;
  std::uint64_t b = 0;
  friend bool operator==(const Ramp&, const Ramp&) = default;
};
using NetComponent = std::variant<OmegaPoint, Ramp>;

class SchematicNet {
 public:
  explicit SchematicNet(std::vector<NetComponent> residues);
  static SchematicNet constant(OmegaPoint p) { return SchematicNet({p}); }
  static SchematicNet ramp(std::uint64_t a, std::uint64_t b) { return SchematicNet({Ramp{a, b}}); }

  std::size_t modulus() const { return residues_.size(); }
  const std::vector<NetComponent>& residues() const { return residues_; }
  OmegaPoint at(std::uint64_t i) const;
  bool has_ramp() const;
  bool eventually_in(const SchematicSet& u) const;
  std::uint64_t bound() const;
  friend bool operator==(const SchematicNet&, const SchematicNet&) = default;

 private:
  std::vector<NetComponent> residues_;
};

std::string to_string(const SchematicNet& n, const OmegaOrder& order);

// Declared space: order plus base templates; the whole space is implicitly
// a base member.
class OmegaSpace {
 public:
  static OmegaSpace build(OmegaOrder order, std::vector<SchemaTemplate> base, bool order_compatible = false);

  static OmegaSpace beta();
  static OmegaSpace gamma();
  static OmegaSpace delta();
  static OmegaSpace scott_omega_plus_one();
  static OmegaSpace example_E();

  const OmegaOrder& order() const { return order_; }
  const std::vector<SchemaTemplate>& base() const { return base_; }
  std::uint64_t horizon() const;

 private:
  OmegaOrder order_;
  std::vector<SchemaTemplate> base_;
};

}  // namespace ccc
