#pragma once

#include "ccc/poset.hpp"
#include "ccc/topology.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ccc {

// All topologies on n points (labels "0".."n-1") up to homeomorphism, in a
// deterministic order. n at most 5.
std::vector<FiniteTopology> enumerate_spaces(std::size_t n, bool t0_only);
std::vector<FiniteTopology> enumerate_spaces_up_to(std::size_t max_n, bool t0_only);
// Partial orders up to isomorphism (the T0 spaces read as orders).
std::vector<FinitePoset> enumerate_posets(std::size_t n);

// Canonical code: minimum over relabellings of the relation bit string.
std::uint64_t canonical_code(const FiniteTopology& t);
bool homeomorphic(const FiniteTopology& a, const FiniteTopology& b);

// Uniform pick of k items without replacement (k >= size keeps all).
template <class T>
std::vector<T> sample(const std::vector<T>& items, std::size_t k, std::mt19937_64& rng) {
  if (k >= items.size()) return items;
  std::vector<std::size_t> idx(items.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> d(i, idx.size() - 1);
    std::swap(idx[i], idx[d(rng)]);
  }
  std::vector<T> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(items[idx[i]]);
  return out;
}

}  // namespace ccc
