// Isomorphism search between small groups.
//
// Backtracks over images of a greedily-chosen generating set of the source,
// pruned by element-order profiles; every partial assignment is closed under
// multiplication with images propagated, so accepted maps are homomorphisms
// by construction. Enumeration order is deterministic: candidate images are
// tried in ascending element index.

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "groupcover/lattice.hpp"
#include "groupcover/subgroup.hpp"

namespace groupcover {

struct Isomorphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> map;  // bijection over element indices

  Elem operator()(Elem g) const { return map[g]; }
};

inline std::vector<std::uint32_t> element_orders(const Group& g) {
  std::vector<std::uint32_t> orders(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) orders[x] = element_order(g, Elem(x));
  return orders;
}

// Greedy generating set: repeatedly add the element that maximizes the size
// of the generated subgroup, smallest index on ties.
inline std::vector<Elem> greedy_generating_set(const GroupPtr& g) {
  std::vector<Elem> gens;
  Subgroup cur = trivial_subgroup(g);
  while (cur.size < g->order()) {
    Elem best = 0;
    std::uint32_t best_size = 0;
    for (std::uint32_t x = 0; x < g->order(); ++x) {
      if (cur.contains(Elem(x))) continue;
      std::vector<Elem> trial = gens;
      trial.push_back(Elem(x));
      const std::uint32_t sz = subgroup_closure(g, trial).size;
      if (sz > best_size) {
        best_size = sz;
        best = Elem(x);
      }
    }
    gens.push_back(best);
    cur = subgroup_closure(g, gens);
  }
  return gens;
}

namespace detail {

// Partial map closed under products. Extending by one generator image either
// succeeds (domain grows to the subgroup generated so far) or fails on a
// consistency or injectivity clash.
struct PartialIso {
  std::vector<Elem> image;  // source -> target, kUndef where unset
  Bitset used;              // image values taken
  std::vector<Elem> domain; // defined source elements in definition order

  static constexpr Elem kUndef = Elem(0xffff);

  static PartialIso initial(std::uint32_t n1, std::uint32_t n2) {
    PartialIso p;
    p.image.assign(n1, kUndef);
    p.used = Bitset(n2);
    p.image[Group::kIdentity] = Group::kIdentity;
    p.used.set(Group::kIdentity);
    p.domain.push_back(Group::kIdentity);
    return p;
  }

  bool assign(const Group& g1, const Group& g2, Elem a, Elem b) {
    if (image[a] != kUndef) return image[a] == b;
    if (used.test(b)) return false;
    image[a] = b;
    used.set(b);
    domain.push_back(a);
    for (std::size_t i = domain.size() - 1; i < domain.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        const Elem x = domain[i], y = domain[j];
        if (!define(g1.mul(x, y), g2.mul(image[x], image[y]))) return false;
        if (!define(g1.mul(y, x), g2.mul(image[y], image[x]))) return false;
      }
    }
    return true;
  }

 private:
  bool define(Elem a, Elem b) {
    if (image[a] != kUndef) return image[a] == b;
    if (used.test(b)) return false;
    image[a] = b;
    used.set(b);
    domain.push_back(a);
    return true;
  }
};

}  // namespace detail

// All isomorphisms source -> target (or the first `limit`), in deterministic
// order. Empty result means non-isomorphic when `limit` is absent.
inline std::vector<Isomorphism> find_isomorphisms(const GroupPtr& g1, const GroupPtr& g2,
                                                  std::optional<std::size_t> limit = std::nullopt,
                                                  std::uint32_t cap = kDefaultIsoCap) {
  if (g1->order() != g2->order()) return {};
  if (g1->order() > cap)
    throw CapExceeded("isomorphism search cap " + std::to_string(cap) + " exceeded");

  const std::vector<std::uint32_t> ord1 = element_orders(*g1);
  const std::vector<std::uint32_t> ord2 = element_orders(*g2);
  {
    std::vector<std::uint32_t> p1 = ord1, p2 = ord2;
    std::sort(p1.begin(), p1.end());
    std::sort(p2.begin(), p2.end());
    if (p1 != p2) return {};
  }

  const std::vector<Elem> gens = greedy_generating_set(g1);
  std::vector<Isomorphism> found;

  auto search = [&](auto&& self, const detail::PartialIso& state, std::size_t level) -> bool {
    if (limit && found.size() >= *limit) return true;
    if (level == gens.size()) {
      if (state.domain.size() != g1->order())
        throw std::logic_error("generating set did not generate the group");
      found.push_back(Isomorphism{g1, g2, state.image});
      return limit && found.size() >= *limit;
    }
    const Elem a = gens[level];
    for (std::uint32_t b = 0; b < g2->order(); ++b) {
      if (ord2[b] != ord1[a]) continue;
      detail::PartialIso next = state;
      if (!next.assign(*g1, *g2, a, Elem(b))) continue;
      if (self(self, next, level + 1)) return true;
    }
    return false;
  };
  search(search, detail::PartialIso::initial(g1->order(), g2->order()), 0);
  if (limit && found.size() > *limit) found.resize(*limit);
  return found;
}

inline std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Primes p such that the cyclic group of order p is an epimorphic image of
// both factors: p must divide both abelianization orders.
inline std::vector<std::uint32_t> common_prime_quotients(const GroupPtr& h1, const GroupPtr& h2) {
  const std::uint32_t ab1 = h1->order() / commutator_subgroup(h1).size;
  const std::uint32_t ab2 = h2->order() / commutator_subgroup(h2).size;
  std::vector<std::uint32_t> out;
  for (std::uint32_t p : prime_factors(ab1))
    if (ab2 % p == 0) out.push_back(p);
  return out;
}

}  // namespace groupcover
