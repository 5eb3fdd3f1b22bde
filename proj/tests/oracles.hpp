// Test-only oracles, independent of the library's algorithms. Each one
// recomputes a quantity by direct enumeration so expected values in the
// tests are derived rather than assumed.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "groupcover/group.hpp"
#include "groupcover/subgroup.hpp"

namespace oracle {

using groupcover::Bitset;
using groupcover::Elem;
using groupcover::Group;
using groupcover::GroupPtr;
using groupcover::Permutation;

// Closure size of a permutation generating set, by set-based worklist.
inline std::size_t perm_closure_size(const std::vector<Permutation>& gens, std::size_t points) {
  Permutation id(points);
  std::iota(id.begin(), id.end(), Elem(0));
  std::set<Permutation> seen{id};
  std::vector<Permutation> work{id};
  for (std::size_t head = 0; head < work.size(); ++head) {
    for (const Permutation& g : gens) {
      Permutation next(points);
      for (std::size_t i = 0; i < points; ++i) next[i] = g[work[head][i]];
      if (seen.insert(next).second) work.push_back(next);
    }
  }
  return seen.size();
}

// Order of an element by walking powers through the raw table.
inline std::uint32_t element_order_walk(const Group& g, Elem x) {
  std::uint32_t m = 1;
  Elem cur = x;
  while (cur != Group::kIdentity) {
    cur = g.mul(cur, x);
    ++m;
  }
  return m;
}

// Every subgroup of a small group, by scanning all element subsets for
// closure. Feasible for |G| <= 16 or so.
inline std::vector<Bitset> exhaustive_subgroup_masks(const GroupPtr& g) {
  const std::uint32_t n = g->order();
  std::vector<Bitset> out;
  for (std::uint64_t sel = 1; sel < (std::uint64_t(1) << n); ++sel) {
    if (!(sel & 1)) continue;  // identity required
    std::vector<Elem> elems;
    for (std::uint32_t i = 0; i < n; ++i)
      if ((sel >> i) & 1) elems.push_back(Elem(i));
    bool closed = true;
    for (Elem a : elems) {
      for (Elem b : elems) {
        if (!((sel >> g->mul(a, b)) & 1)) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (!closed) continue;
    Bitset mask(n);
    for (Elem e : elems) mask.set(e);
    out.push_back(std::move(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_normal_mask(const GroupPtr& g, const Bitset& mask) {
  for (std::uint32_t t = 0; t < g->order(); ++t)
    for (std::uint32_t x = 0; x < g->order(); ++x)
      if (mask.test(x) && !mask.test(g->mul(g->mul(g->inv(Elem(t)), Elem(x)), Elem(t))))
        return false;
  return true;
}

// Left-coset partition of G by the subgroup mask.
inline std::vector<std::vector<Elem>> coset_partition(const GroupPtr& g, const Bitset& mask) {
  std::vector<bool> seen(g->order(), false);
  std::vector<std::vector<Elem>> cosets;
  for (std::uint32_t x = 0; x < g->order(); ++x) {
    if (seen[x]) continue;
    std::vector<Elem> coset;
    for (std::uint32_t k = 0; k < g->order(); ++k) {
      if (!mask.test(k)) continue;
      Elem e = g->mul(Elem(x), Elem(k));
      if (!seen[e]) {
        seen[e] = true;
        coset.push_back(e);
      }
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

// Number of isomorphisms G1 -> G2 by backtracking over images in element
// order with prefix consistency pruning: whenever a*b lands inside the
// assigned prefix, its image is forced. Independent of the library's
// generator-based search.
inline std::uint64_t count_isomorphisms_bruteforce(const GroupPtr& g1, const GroupPtr& g2) {
  const std::uint32_t n = g1->order();
  if (n != g2->order()) return 0;
  std::vector<Elem> image(n, Elem(0xffff));
  std::vector<bool> used(n, false);
  image[0] = 0;
  used[0] = true;
  std::uint64_t count = 0;

  auto consistent = [&](std::uint32_t upto) {
    for (std::uint32_t a = 0; a <= upto; ++a)
      for (std::uint32_t b = 0; b <= upto; ++b) {
        const Elem ab = g1->mul(Elem(a), Elem(b));
        if (ab <= upto && g2->mul(image[a], image[b]) != image[ab]) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, std::uint32_t next) -> void {
    if (next == n) {
      ++count;
      return;
    }
    for (std::uint32_t y = 0; y < n; ++y) {
      if (used[y]) continue;
      image[next] = Elem(y);
      used[y] = true;
      if (consistent(next)) self(self, next + 1);
      used[y] = false;
      image[next] = Elem(0xffff);
    }
  };
  rec(rec, 1);
  return count;
}

// Minimum cover size and the exact covers of that size, by scanning all
// subsets of the pool. Pool size must stay below ~22.
struct ExhaustiveCover {
  std::uint32_t min_size = 0;  // 0 when no subset covers
  std::vector<std::vector<std::uint32_t>> minimum_covers;
};

inline ExhaustiveCover exhaustive_min_cover(const GroupPtr& g, const std::vector<Bitset>& pool) {
  ExhaustiveCover out;
  const std::uint64_t total = std::uint64_t(1) << pool.size();
  std::uint32_t best = std::uint32_t(pool.size()) + 1;
  for (std::uint64_t sel = 1; sel < total; ++sel) {
    Bitset acc(g->order());
    for (std::uint32_t m = 0; m < pool.size(); ++m)
      if ((sel >> m) & 1) acc |= pool[m];
    if (acc.all()) best = std::min(best, std::uint32_t(std::popcount(sel)));
  }
  if (best > pool.size()) return out;
  out.min_size = best;
  for (std::uint64_t sel = 1; sel < total; ++sel) {
    if (std::uint32_t(std::popcount(sel)) != best) continue;
    Bitset acc(g->order());
    std::vector<std::uint32_t> members;
    for (std::uint32_t m = 0; m < pool.size(); ++m)
      if ((sel >> m) & 1) {
        acc |= pool[m];
        members.push_back(m);
      }
    if (acc.all()) out.minimum_covers.push_back(std::move(members));
  }
  return out;
}

inline std::uint64_t lcm64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

}  // namespace oracle
