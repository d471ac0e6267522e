#pragma once

#include "ccc/limits.hpp"
#include "ccc/poset.hpp"
#include "ccc/subset.hpp"
#include "ccc/topology.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace ccc {

// D, D', I, I', N, N' plus the discrete class 1 and the Alexandroff class S.
enum class Op { D, Dp, I, Ip, N, Np, One, S };

inline constexpr std::array<Op, 6> kSixOps = {Op::D, Op::Dp, Op::I, Op::Ip, Op::N, Op::Np};

std::string_view op_name(Op op);
std::optional<Op> parse_op(std::string_view s);
bool is_primed(Op op);

// A net on a finite set, reduced to its eventual set E: the net is
// eventually in U iff E is contained in U.
class FiniteNet {
 public:
  enum class Kind { tail, directed, sequence };

  static FiniteNet tail(Subset s);
  // D viewed as the monotone net (d)_{d in D}; D directed in `order`.
  static FiniteNet directed(const FinitePoset& order, Subset d);
  // Monotone sequence with range `range` (a pre-chain) that is eventually
  // constant up to equivalence, visiting `recurrent` (inside the top class
  // of the range) infinitely often.
  static FiniteNet sequence(const FinitePoset& order, Subset range, Subset recurrent);

  Kind kind() const { return kind_; }
  const Subset& support() const { return support_; }
  const Subset& eventual() const { return eventual_; }
  bool eventually_in(const Subset& u) const { return eventual_.is_subset_of(u); }

  friend bool operator==(const FiniteNet& a, const FiniteNet& b) = default;
  friend bool operator<(const FiniteNet& a, const FiniteNet& b);

 private:
  Kind kind_ = Kind::tail;
  Subset support_;
  Subset eventual_;
};

// Image of a net under a map into a space whose specialization is `target`.
FiniteNet image(const FiniteNet& net, const MapTable& f, const FinitePoset& target);

struct ClassPair {
  FiniteNet net;
  std::size_t point;
  friend bool operator==(const ClassPair&, const ClassPair&) = default;
  friend bool operator<(const ClassPair& a, const ClassPair& b) {
    if (a.net == b.net) return a.point < b.point;
    return a.net < b.net;
  }
};

class ConvergenceClass {
 public:
  ConvergenceClass() = default;
  explicit ConvergenceClass(std::size_t width) : width_(width) {}
  ConvergenceClass(std::size_t width, std::vector<ClassPair> pairs);

  std::size_t width() const { return width_; }
  const std::vector<ClassPair>& pairs() const& { return pairs_; }
  std::vector<ClassPair> pairs() && { return std::move(pairs_); }
  std::size_t size() const { return pairs_.size(); }
  bool contains(const ClassPair& p) const;
  bool is_subset_of(const ConvergenceClass& other) const;
  void insert(ClassPair p);

 private:
  std::size_t width_ = 0;
  std::vector<ClassPair> pairs_;  // sorted, unique
};

bool converges(const FiniteTopology& x, const FiniteNet& net, std::size_t point);

// exhaustive: every net of the kind the operation names. canonical: only
// nets supported inside one specialization class; yields the same topology.
enum class ClassMode { exhaustive, canonical };

ConvergenceClass op_class(const FiniteTopology& x, Op op, ClassMode mode = ClassMode::exhaustive);
bool in_op_class(const FiniteTopology& x, Op op, const FiniteNet& net, std::size_t point);

FiniteTopology determined_topology(const std::vector<std::string>& ground, const ConvergenceClass& c);
FiniteTopology coreflect(const FiniteTopology& x, Op op, const Limits& limits = {});
bool is_determined(const FiniteTopology& x, Op op, const Limits& limits = {});

struct TransfiniteClosure {
  std::vector<Subset> stages;
  Subset star;
};
TransfiniteClosure closure_transfinite(const FinitePoset& p, const ConvergenceClass& c, const Subset& f);

}  // namespace ccc
