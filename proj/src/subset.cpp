#include "ccc/subset.hpp"

#include <boost/functional/hash.hpp>

namespace ccc {

Subset Subset::full(std::size_t width) {
  Subset s(width);
  s.bits_.set();
  return s;
}

Subset Subset::singleton(std::size_t width, std::size_t i) {
  Subset s(width);
  s.insert(i);
  return s;
}

Subset Subset::of(std::size_t width, std::initializer_list<std::size_t> members) {
  Subset s(width);
  for (auto i : members) s.insert(i);
  return s;
}

Subset Subset::of(std::size_t width, const std::vector<std::size_t>& members) {
  Subset s(width);
  for (auto i : members) s.insert(i);
  return s;
}

Subset Subset::from_mask(std::size_t width, std::uint64_t mask) {
  Subset s(width);
  for (std::size_t i = 0; i < width && i < 64; ++i)
    if ((mask >> i) & 1u) s.insert(i);
  return s;
}

Subset Subset::complement() const {
  Subset s = *this;
  s.bits_.flip();
  return s;
}

std::size_t Subset::first() const {
  auto i = bits_.find_first();
  return i == bits_.npos ? npos : i;
}

std::size_t Subset::next(std::size_t i) const {
  auto j = bits_.find_next(i);
  return j == bits_.npos ? npos : j;
}

std::vector<std::size_t> Subset::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::uint64_t Subset::to_mask() const {
  std::uint64_t m = 0;
  for_each([&](std::size_t i) {
    if (i < 64) m |= std::uint64_t{1} << i;
  });
  return m;
}

bool canonical_less(const Subset& a, const Subset& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  auto i = a.first();
  auto j = b.first();
  while (i != Subset::npos && j != Subset::npos) {
    if (i != j) return i < j;
    i = a.next(i);
    j = b.next(j);
  }
  return false;
}

bool operator<(const Subset& a, const Subset& b) {
  if (a.width() != b.width()) return a.width() < b.width();
  return a.bits_ < b.bits_;
}

std::size_t Subset::hash() const {
  std::size_t seed = bits_.size();
  std::vector<std::uint64_t> blocks;
  boost::to_block_range(bits_, std::back_inserter(blocks));
  for (auto b : blocks) boost::hash_combine(seed, b);
  return seed;
}

}  // namespace ccc
