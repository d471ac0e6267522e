#include "ccc/enumerate.hpp"

#include "ccc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ccc {
namespace {

std::uint64_t relation_code(const FiniteTopology& t, const std::vector<std::size_t>& perm) {
  const auto n = t.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      code <<= 1;
      if (t.specialization().leq(perm[i], perm[j])) code |= 1;
    }
  return code;
}

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back(std::to_string(i));
  return l;
}

}  // namespace

std::uint64_t canonical_code(const FiniteTopology& t) {
  const auto n = t.size();
  if (n > 8) throw SizeCap("canonical form limited to 8 points");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, relation_code(t, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool homeomorphic(const FiniteTopology& a, const FiniteTopology& b) {
  return a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

std::vector<FiniteTopology> enumerate_spaces(std::size_t n, bool t0_only) {
  if (n > 5) throw SizeCap("space enumeration limited to 5 points");
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<FiniteTopology> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    std::vector<Subset> up(n, Subset(n));
    for (std::size_t i = 0; i < n; ++i) up[i].insert(i);
    for (std::size_t k = 0; k < off.size(); ++k)
      if ((mask >> k) & 1u) up[off[k].first].insert(off[k].second);
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      up[i].for_each([&](std::size_t j) { transitive = transitive && up[j].is_subset_of(up[i]); });
    if (!transitive) continue;
    auto t = FiniteTopology::from_specialization(
        FinitePoset::from_up_sets(numeric_labels(n), std::move(up), OrderMode::pre));
    if (t0_only && !t.is_t0()) continue;
    if (seen.insert(canonical_code(t)).second) out.push_back(std::move(t));
  }
  return out;
}

std::vector<FiniteTopology> enumerate_spaces_up_to(std::size_t max_n, bool t0_only) {
  std::vector<FiniteTopology> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto s = enumerate_spaces(n, t0_only);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

std::vector<FinitePoset> enumerate_posets(std::size_t n) {
  std::vector<FinitePoset> out;
  for (const auto& t : enumerate_spaces(n, true)) {
    std::vector<Subset> up;
    for (std::size_t i = 0; i < n; ++i) up.push_back(t.nbhd(i));
    out.push_back(FinitePoset::from_up_sets(t.labels(), std::move(up), OrderMode::partial));
  }
  return out;
}

}  // namespace ccc
