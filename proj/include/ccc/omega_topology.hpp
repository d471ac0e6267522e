#pragma once

#include "ccc/convergence.hpp"
#include "ccc/omega.hpp"
#include "ccc/topology.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ccc {

// Openness oracle plus generating templates for a topology on F + N.
// Decisions check chain points up to a horizon explicitly and treat larger
// ones through a single representative, which is exact because every
// ingredient is shift-invariant beyond the numbers it mentions.
class OmegaModel {
 public:
  virtual ~OmegaModel() = default;
  virtual bool is_open(const SchematicSet& u) const = 0;
  virtual bool leq(OmegaPoint x, OmegaPoint y) const;
  virtual bool chain_limit(OmegaPoint x) const;

  // Generator instances with parameters up to k, whole space first.
  std::vector<SchematicSet> instances(std::uint64_t k) const;
  std::uint64_t bound(OmegaPoint x) const;

  OmegaOrder order;
  std::vector<SchemaTemplate> generators;
  bool generators_form_base = true;
  std::optional<std::string> extraction_failure;
  std::uint64_t horizon = 0;
  std::string description;
};

class OmegaTopology {
 public:
  explicit OmegaTopology(std::shared_ptr<const OmegaModel> model) : model_(std::move(model)) {}
  static OmegaTopology of(const OmegaSpace& space);

  const OmegaOrder& order() const { return model_->order; }
  std::size_t fin_size() const { return model_->order.fin_size(); }
  // Throws BaseExtractionIncomplete when the templates could not be verified.
  const std::vector<SchemaTemplate>& generators() const;
  bool generators_form_base() const { return model_->generators_form_base; }
  std::uint64_t horizon() const { return model_->horizon; }
  const std::string& description() const { return model_->description; }
  const OmegaModel& model() const { return *model_; }

  bool is_open(const SchematicSet& u) const;
  bool leq(OmegaPoint x, OmegaPoint y) const { return model_->leq(x, y); }
  // Every open neighbourhood of x contains a tail of the chain.
  bool chain_limit(OmegaPoint x) const { return model_->chain_limit(x); }
  SchematicSet up(OmegaPoint x) const;
  bool is_t0() const;

  enum class GenericOrder { chain, antichain, collapsed };
  // How chain points beyond the horizon compare in the specialization.
  GenericOrder generic_order() const;
  // Instances of the generators containing x, parameters up to k.
  std::vector<SchematicSet> neighbourhoods(OmegaPoint x, std::uint64_t k) const;

 private:
  std::shared_ptr<const OmegaModel> model_;
};

using OmegaNet = std::variant<SchematicNet, SchematicSet>;

bool is_directed(const OmegaOrder& order, const SchematicSet& d);
std::optional<OmegaPoint> maximum(const OmegaOrder& order, const SchematicSet& d);

// Directed sets are nets indexed by themselves in the presentation order.
bool converges(const OmegaTopology& x, const OmegaNet& net, OmegaPoint point);

// I and I' map to D and D'.
OmegaTopology coreflect_omega(const OmegaTopology& x, Op op);

// Up-sets of `leq` that contain a tail of the chain whenever they contain a
// point where `trigger` holds (the tail rule applies only when
// chain_directed).
OmegaTopology up_tail_topology(const OmegaOrder& order, std::uint64_t horizon,
                               std::function<bool(OmegaPoint, OmegaPoint)> leq,
                               std::function<bool(OmegaPoint)> trigger, bool chain_directed,
                               std::string description);

enum class OmegaOrderTopology { alexandroff, upper, scott, weak_scott };
OmegaTopology order_topology_omega(const OmegaOrder& order, OmegaOrderTopology kind);

enum class Comparison { equal, finer, coarser, incomparable };
struct CompareResult {
  Comparison verdict;
  // An open of one side that is not open in the other.
  std::optional<SchematicSet> witness;
};
// Verdict describes t1 relative to t2.
CompareResult compare(const OmegaTopology& t1, const OmegaTopology& t2);
std::string to_string(Comparison c);

FiniteTopology truncate(const OmegaTopology& x, std::uint64_t n);
bool has_upper_bound(const OmegaOrder& order, const SchematicSet& d);

}  // namespace ccc
