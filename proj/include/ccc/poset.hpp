#pragma once

#include "ccc/subset.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ccc {

enum class OrderMode { pre, partial };

using MapTable = std::vector<std::size_t>;

// Finite preorder stored reflexive-transitively closed. Elements keep
// declaration order.
class FinitePoset {
 public:
  FinitePoset() = default;

  static FinitePoset build(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& pairs,
                           OrderMode mode);
  // up[i] lists the j with i <= j; closed here.
  static FinitePoset from_up_sets(std::vector<std::string> labels, std::vector<Subset> up,
                                  OrderMode mode);
  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  OrderMode mode() const { return mode_; }
  bool is_antisymmetric() const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i].contains(j); }
  const Subset& up(std::size_t i) const { return up_[i]; }
  const Subset& down(std::size_t i) const { return down_[i]; }

  Subset up_closure(const Subset& s) const;
  Subset down_closure(const Subset& s) const;
  // S^up: common upper bounds; S^down: common lower bounds.
  Subset upper_bounds(const Subset& s) const;
  Subset lower_bounds(const Subset& s) const;
  bool is_up_set(const Subset& s) const;
  bool is_down_set(const Subset& s) const;
  // Elements of s with nothing strictly above them inside s.
  Subset maximal(const Subset& s) const;

  Subset empty_set() const { return Subset(size()); }
  Subset whole() const { return Subset::full(size()); }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
  OrderMode mode_ = OrderMode::partial;
};

Subset cut(const FinitePoset& p, const Subset& s);
bool is_directed(const FinitePoset& p, const Subset& s);
// Every two members comparable.
bool is_chain(const FinitePoset& p, const Subset& s);
std::optional<std::size_t> sup(const FinitePoset& p, const Subset& s);

bool is_monotone(const FinitePoset& p, const FinitePoset& q, const MapTable& f);
// Visits maps in lexicographic order of (f(0), f(1), ...); stop by returning false.
void for_each_monotone(const FinitePoset& p, const FinitePoset& q,
                       const std::function<bool(const MapTable&)>& visit);
std::vector<MapTable> enumerate_monotone(const FinitePoset& p, const FinitePoset& q);

// Visits directed subsets in increasing mask order. Ground size at most 24.
void for_each_directed_subset(const FinitePoset& p, const std::function<void(const Subset&)>& visit);
std::vector<Subset> enumerate_directed_subsets(const FinitePoset& p);

// Pointwise order on a list of maps into q.
FinitePoset pointwise_order(const std::vector<MapTable>& maps, const FinitePoset& q,
                            std::vector<std::string> labels);

std::string map_label(const MapTable& f, const std::vector<std::string>& target_labels);

}  // namespace ccc
