#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ccc {

// Membership mask over a ground set of fixed width. Binary operations
// require equal widths.
class Subset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Subset() = default;
  explicit Subset(std::size_t width) : bits_(width) {}

  static Subset full(std::size_t width);
  static Subset singleton(std::size_t width, std::size_t i);
  static Subset of(std::size_t width, std::initializer_list<std::size_t> members);
  static Subset of(std::size_t width, const std::vector<std::size_t>& members);
  // Bit i of mask is member i; width must be at most 64.
  static Subset from_mask(std::size_t width, std::uint64_t mask);

  std::size_t width() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(std::size_t i) const { return bits_.test(i); }

  void insert(std::size_t i) { bits_.set(i); }
  void erase(std::size_t i) { bits_.reset(i); }

  bool is_subset_of(const Subset& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const Subset& other) const { return bits_.intersects(other.bits_); }

  Subset& operator|=(const Subset& o) { bits_ |= o.bits_; return *this; }
  Subset& operator&=(const Subset& o) { bits_ &= o.bits_; return *this; }
  Subset& operator-=(const Subset& o) { bits_ -= o.bits_; return *this; }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  Subset complement() const;

  std::size_t first() const;
  std::size_t next(std::size_t i) const;
  std::vector<std::size_t> members() const;
  std::uint64_t to_mask() const;

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != bits_.npos; i = bits_.find_next(i)) f(i);
  }

  friend bool operator==(const Subset& a, const Subset& b) { return a.bits_ == b.bits_; }
  // Canonical order: by cardinality, then lexicographically by member list.
  friend bool canonical_less(const Subset& a, const Subset& b);
  // Strict weak order usable as a map key (width, then bits).
  friend bool operator<(const Subset& a, const Subset& b);

  std::size_t hash() const;

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

bool canonical_less(const Subset& a, const Subset& b);

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace ccc
