// Subgroups as membership bit vectors tied to a parent group.

#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "groupcover/bitset.hpp"
#include "groupcover/group.hpp"

namespace groupcover {

struct Subgroup {
  GroupPtr parent;
  Bitset members;
  std::uint32_t size = 0;
  std::vector<Elem> generator_hint;  // optional

  bool contains(Elem g) const { return members.test(g); }
  bool is_proper() const { return size < parent->order(); }
  bool is_trivial() const { return size == 1; }
  std::uint32_t index() const { return parent->order() / size; }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(size);
    members.for_each_set([&](std::uint32_t e) { out.push_back(Elem(e)); });
    return out;
  }
};

// Canonical order: size ascending, then mask by numeric value.
inline bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.size != b.size) return a.size < b.size;
  return a.members < b.members;
}
inline void canonical_sort(std::vector<Subgroup>& subs) {
  std::sort(subs.begin(), subs.end(), canonical_less);
}

namespace detail {

// Closure of a seed set under multiplication; finite, so inverses come free.
inline void close_mask(const Group& g, Bitset& mask, std::vector<Elem>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Elem p : {g.mul(elems[i], elems[j]), g.mul(elems[j], elems[i])}) {
        if (!mask.test(p)) {
          mask.set(p);
          elems.push_back(p);
        }
      }
    }
  }
}

}  // namespace detail

inline Subgroup subgroup_closure(const GroupPtr& g, std::span<const Elem> gens) {
  Bitset mask(g->order());
  std::vector<Elem> elems;
  mask.set(Group::kIdentity);
  elems.push_back(Group::kIdentity);
  for (Elem e : gens) {
    if (e >= g->order()) throw std::out_of_range("generator index out of range");
    if (!mask.test(e)) {
      mask.set(e);
      elems.push_back(e);
    }
  }
  detail::close_mask(*g, mask, elems);
  Subgroup s{g, std::move(mask), std::uint32_t(elems.size()), {gens.begin(), gens.end()}};
  if (g->order() % s.size != 0)
    throw std::logic_error("subgroup size does not divide group order");
  return s;
}

inline Subgroup trivial_subgroup(const GroupPtr& g) { return subgroup_closure(g, {}); }

inline Subgroup full_subgroup(const GroupPtr& g) {
  Bitset mask(g->order());
  for (std::uint32_t i = 0; i < g->order(); ++i) mask.set(i);
  return Subgroup{g, std::move(mask), g->order(), {}};
}

inline Subgroup cyclic_subgroup(const GroupPtr& g, Elem x) {
  Bitset mask(g->order());
  std::uint32_t size = 0;
  Elem cur = Group::kIdentity;
  do {
    mask.set(cur);
    ++size;
    cur = g->mul(cur, x);
  } while (cur != Group::kIdentity);
  return Subgroup{g, std::move(mask), size, {x}};
}

// Validates closure under multiplication and inversion; Lagrange asserted.
inline Subgroup subgroup_from_mask(const GroupPtr& g, Bitset mask) {
  if (mask.size() != g->order() || !mask.test(Group::kIdentity))
    throw std::logic_error("mask is not a subgroup membership mask");
  std::vector<Elem> elems;
  mask.for_each_set([&](std::uint32_t e) { elems.push_back(Elem(e)); });
  for (Elem a : elems)
    for (Elem b : elems)
      if (!mask.test(g->mul(a, b))) throw std::logic_error("mask is not closed");
  Subgroup s{g, std::move(mask), std::uint32_t(elems.size()), {}};
  if (g->order() % s.size != 0)
    throw std::logic_error("subgroup size does not divide group order");
  return s;
}

// Subgroup generated by all commutators [a,b] = a^-1 b^-1 a b.
inline Subgroup commutator_subgroup(const GroupPtr& g) {
  const std::uint32_t n = g->order();
  Bitset comm(n);
  std::vector<Elem> gens;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      Elem c = g->mul(g->mul(g->inv(Elem(a)), g->inv(Elem(b))), g->mul(Elem(a), Elem(b)));
      if (!comm.test(c)) {
        comm.set(c);
        gens.push_back(c);
      }
    }
  return subgroup_closure(g, gens);
}

}  // namespace groupcover
