#pragma once

#include <algorithm>
#include <complex>
#include <numbers>
#include <set>
#include <vector>

#include "hspsim/groups.hpp"

// Brute-force reference routes, kept independent of the library's own
// enumeration strategies so the tests cross-check rather than echo them.
namespace testutil {

using hspsim::Group;
using hspsim::GroupElement;

// Fixpoint closure over pairwise sums (the library grows a BFS frontier by
// generators instead).
inline std::set<long long> brute_closure(const Group& g,
                                         const std::vector<long long>& gens) {
  std::set<long long> members{0};
  for (long long x : gens) members.insert(x);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<long long> snapshot(members.begin(), members.end());
    for (long long a : snapshot)
      for (long long b : snapshot)
        if (members.insert(g.add_indices(a, b)).second) grew = true;
  }
  return members;
}

inline bool is_closed_subset(const Group& g, const std::vector<long long>& set) {
  std::vector<char> in(static_cast<size_t>(g.size()), 0);
  for (long long x : set) in[static_cast<size_t>(x)] = 1;
  if (!in[0]) return false;
  for (long long a : set)
    for (long long b : set)
      if (!in[static_cast<size_t>(g.add_indices(a, b))]) return false;
  return true;
}

// Every subset of G that is closed under the group law; literal scan over
// all 2^|G| subsets, so |G| <= 16.
inline std::set<std::vector<long long>> brute_subgroups_by_subset_scan(
    const Group& g) {
  const int n = static_cast<int>(g.size());
  std::set<std::vector<long long>> out;
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    if (!(mask & 1)) continue;  // must contain the identity
    std::vector<long long> set;
    for (int i = 0; i < n; ++i)
      if (mask & (1ULL << i)) set.push_back(i);
    if (is_closed_subset(g, set)) out.insert(std::move(set));
  }
  return out;
}

// Every subgroup as the closure of some generator subset of size at most the
// presentation arity (the rank of any subgroup is bounded by it).
inline std::set<std::vector<long long>> brute_subgroups_by_generator_sets(
    const Group& g) {
  const int n = static_cast<int>(g.size());
  const int max_gens = g.arity();
  std::set<std::vector<long long>> out;
  std::vector<long long> combo;
  auto recurse = [&](auto&& self, long long start, int remaining) -> void {
    auto closed = brute_closure(g, combo);
    out.insert(std::vector<long long>(closed.begin(), closed.end()));
    if (remaining == 0) return;
    for (long long e = start; e < n; ++e) {
      combo.push_back(e);
      self(self, e + 1, remaining - 1);
      combo.pop_back();
    }
  };
  recurse(recurse, 1, max_gens);
  return out;
}

// Coset partition by the pairwise difference test g - h in H.
inline std::vector<std::vector<long long>> brute_cosets(
    const Group& g, const std::vector<long long>& subgroup_indices) {
  std::vector<char> in_h(static_cast<size_t>(g.size()), 0);
  for (long long x : subgroup_indices) in_h[static_cast<size_t>(x)] = 1;
  std::vector<std::vector<long long>> blocks;
  std::vector<char> assigned(static_cast<size_t>(g.size()), 0);
  for (long long a = 0; a < g.size(); ++a) {
    if (assigned[static_cast<size_t>(a)]) continue;
    std::vector<long long> block;
    for (long long b = a; b < g.size(); ++b)
      if (!assigned[static_cast<size_t>(b)] &&
          in_h[static_cast<size_t>(g.add_indices(b, g.neg_index(a)))]) {
        assigned[static_cast<size_t>(b)] = 1;
        block.push_back(b);
      }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

// chi with exponent tuple e evaluated at the element with index gi, computed
// from scratch in floating point.
inline std::complex<double> raw_character_value(const Group& g,
                                                const std::vector<int>& exps,
                                                long long gi) {
  const GroupElement el = g.element(gi);
  double phase = 0.0;
  for (size_t j = 0; j < exps.size(); ++j)
    phase += static_cast<double>(exps[j]) * el.coords[j] /
             static_cast<double>(g.orders()[j]);
  return std::polar(1.0, 2.0 * std::numbers::pi * phase);
}

inline std::vector<int> to_coords(const Group& g, long long index) {
  return g.element(index).coords;
}

// Small reusable fixture lists.
inline std::vector<std::vector<int>> small_group_orders() {
  return {{1}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {2, 3}, {7}, {8},
          {2, 4}, {2, 2, 2}, {9}, {3, 3}, {10}, {12}, {2, 6}, {15}, {16}, {2, 8},
          {4, 4}, {2, 2, 4}, {18}, {2, 9}, {20}, {24}, {2, 2, 2, 3}};
}

inline std::vector<std::vector<int>> medium_group_orders() {
  auto out = small_group_orders();
  out.insert(out.end(), {{25}, {27}, {3, 9}, {30}, {32}, {2, 16}, {36},
                         {6, 6}, {2, 2, 2, 2}, {40}, {48}, {64}, {8, 8}});
  return out;
}

}  // namespace testutil
