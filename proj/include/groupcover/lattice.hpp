// Subgroup lattice enumeration, normal subgroups, and quotient groups.
//
// all_subgroups seeds the lattice with every cyclic subgroup and iterates
// pairwise joins to a fixed point. normal_subgroups instead joins the
// closures of conjugacy classes, which reaches exactly the normal subgroups
// without enumerating the whole lattice (every normal subgroup is generated
// by the classes it contains, and joins of normal subgroups are normal).

#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "groupcover/subgroup.hpp"

namespace groupcover {

namespace detail {

// Pairwise-join fixed point from the given seeds; returns the joined family
// including every seed, canonically sorted.
inline std::vector<Subgroup> join_fixed_point(const GroupPtr& g, std::vector<Subgroup> seeds) {
  std::map<Bitset, std::size_t> seen;
  std::vector<Subgroup> subs;
  for (Subgroup& s : seeds) {
    if (seen.emplace(s.members, subs.size()).second) subs.push_back(std::move(s));
  }
  auto join = [&](const Subgroup& a, const Subgroup& b) {
    Bitset mask = a.members | b.members;
    std::vector<Elem> elems;
    mask.for_each_set([&](std::uint32_t e) { elems.push_back(Elem(e)); });
    detail::close_mask(*g, mask, elems);
    return Subgroup{g, std::move(mask), std::uint32_t(elems.size()), {}};
  };
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (subs[j].members.is_subset_of(subs[i].members) ||
          subs[i].members.is_subset_of(subs[j].members))
        continue;
      Subgroup joined = join(subs[i], subs[j]);
      if (seen.emplace(joined.members, subs.size()).second) subs.push_back(std::move(joined));
    }
  }
  canonical_sort(subs);
  return subs;
}

}  // namespace detail

// The complete subgroup lattice (includes the trivial subgroup and G).
inline std::vector<Subgroup> all_subgroups(const GroupPtr& g,
                                           std::uint32_t lattice_cap = kDefaultLatticeCap) {
  if (g->order() > lattice_cap)
    throw LatticeCapExceeded("group order " + std::to_string(g->order()) +
                             " exceeds lattice cap " + std::to_string(lattice_cap));
  std::vector<Subgroup> seeds;
  seeds.push_back(trivial_subgroup(g));
  for (std::uint32_t x = 1; x < g->order(); ++x) seeds.push_back(cyclic_subgroup(g, Elem(x)));
  return detail::join_fixed_point(g, std::move(seeds));
}

// Proper subgroups maximal under inclusion, from the full lattice.
inline std::vector<Subgroup> maximal_subgroups_via_lattice(
    const GroupPtr& g, std::uint32_t lattice_cap = kDefaultLatticeCap) {
  std::vector<Subgroup> subs = all_subgroups(g, lattice_cap);
  std::vector<Subgroup> out;
  for (const Subgroup& h : subs) {
    if (!h.is_proper()) continue;
    bool maximal = true;
    for (const Subgroup& k : subs) {
      if (k.is_proper() && k.size > h.size && h.members.is_subset_of(k.members)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(h);
  }
  return out;  // already canonically sorted
}

inline bool is_normal(const GroupPtr& g, const Subgroup& h) {
  if (h.parent.get() != g.get()) throw ForeignSubgroup("subgroup belongs to a different group");
  const std::vector<Elem> elems = h.elements();
  for (std::uint32_t t = 0; t < g->order(); ++t) {
    const Elem ti = g->inv(Elem(t));
    for (Elem x : elems)
      if (!h.members.test(g->mul(g->mul(ti, x), Elem(t)))) return false;
  }
  return true;
}

inline std::vector<std::vector<Elem>> conjugacy_classes(const GroupPtr& g) {
  const std::uint32_t n = g->order();
  Bitset seen(n);
  std::vector<std::vector<Elem>> classes;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (seen.test(x)) continue;
    Bitset cls(n);
    std::vector<Elem> members;
    for (std::uint32_t t = 0; t < n; ++t) {
      Elem c = g->mul(g->mul(g->inv(Elem(t)), Elem(x)), Elem(t));
      if (!cls.test(c)) {
        cls.set(c);
        seen.set(c);
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

// All normal subgroups (invariant under conjugation), via conjugacy-class
// closures joined to a fixed point.
inline std::vector<Subgroup> normal_subgroups(const GroupPtr& g,
                                              std::uint32_t lattice_cap = kDefaultLatticeCap) {
  if (g->order() > lattice_cap)
    throw LatticeCapExceeded("group order " + std::to_string(g->order()) +
                             " exceeds lattice cap " + std::to_string(lattice_cap));
  std::vector<Subgroup> seeds;
  for (const std::vector<Elem>& cls : conjugacy_classes(g))
    seeds.push_back(subgroup_closure(g, cls));
  return detail::join_fixed_point(g, std::move(seeds));
}

// Proper normal subgroups maximal among proper normal subgroups; the
// quotient by each is simple.
inline std::vector<Subgroup> maximal_normal_subgroups(
    const GroupPtr& g, std::uint32_t lattice_cap = kDefaultLatticeCap) {
  std::vector<Subgroup> norm = normal_subgroups(g, lattice_cap);
  std::vector<Subgroup> out;
  for (const Subgroup& h : norm) {
    if (!h.is_proper()) continue;
    bool maximal = true;
    for (const Subgroup& k : norm) {
      if (k.is_proper() && k.size > h.size && h.members.is_subset_of(k.members)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(h);
  }
  return out;
}

struct Epimorphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> map;  // source element index -> target element index
  Subgroup kernel;

  Elem operator()(Elem g) const { return map[g]; }
};

inline Epimorphism identity_epimorphism(const GroupPtr& g) {
  std::vector<Elem> map(g->order());
  for (std::uint32_t i = 0; i < g->order(); ++i) map[i] = Elem(i);
  return Epimorphism{g, g, std::move(map), trivial_subgroup(g)};
}

struct Quotient {
  GroupPtr group;
  Epimorphism onto;
};

namespace detail {

inline void validate_epimorphism(const Epimorphism& e, std::uint64_t sample_seed = 777) {
  const std::uint32_t n = e.source->order();
  if (e.target->order() * e.kernel.size != n)
    throw std::logic_error("epimorphism: order arithmetic fails");
  for (std::uint32_t x = 0; x < n; ++x)
    if ((e.map[x] == Group::kIdentity) != e.kernel.members.test(x))
      throw std::logic_error("epimorphism: kernel mismatch");
  auto hom_at = [&](Elem a, Elem b) {
    return e.map[e.source->mul(a, b)] == e.target->mul(e.map[a], e.map[b]);
  };
  if (n <= kFullHomCheckLimit) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        if (!hom_at(Elem(a), Elem(b))) throw std::logic_error("epimorphism: not a homomorphism");
  } else {
    std::mt19937_64 rng(sample_seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, n - 1);
    for (std::uint32_t s = 0; s < kAssocSamples; ++s)
      if (!hom_at(Elem(dist(rng)), Elem(dist(rng))))
        throw std::logic_error("epimorphism: not a homomorphism (sampled)");
  }
}

}  // namespace detail

// Coset group G/N with deterministic indexing: representatives are minimal
// element indices, the identity coset comes first, the rest follow in
// ascending representative order.
inline Quotient quotient(const GroupPtr& g, const Subgroup& n) {
  if (n.parent.get() != g.get()) throw ForeignSubgroup("subgroup belongs to a different group");
  if (!is_normal(g, n)) throw NotNormal("subgroup is not normal");

  const std::uint32_t order = g->order();
  const std::vector<Elem> kernel_elems = n.elements();
  constexpr Elem kUnassigned = Elem(0xffff);
  std::vector<Elem> coset_of(order, kUnassigned);
  std::vector<Elem> reps;
  for (std::uint32_t x = 0; x < order; ++x) {
    if (coset_of[x] != kUnassigned) continue;
    const Elem idx = Elem(reps.size());
    reps.push_back(Elem(x));
    for (Elem k : kernel_elems) coset_of[g->mul(Elem(x), k)] = idx;
  }
  const std::uint32_t q = std::uint32_t(reps.size());
  if (q * n.size != order) throw std::logic_error("coset partition has wrong size");

  std::vector<Elem> table(std::size_t(q) * q);
  for (std::uint32_t i = 0; i < q; ++i)
    for (std::uint32_t j = 0; j < q; ++j)
      table[std::size_t(i) * q + j] = coset_of[g->mul(reps[i], reps[j])];

  std::vector<std::string> labels(q);
  for (std::uint32_t i = 0; i < q; ++i) labels[i] = "[" + g->label(reps[i]) + "]";
  GroupPtr qg = Group::from_table_data(q, std::move(table), std::move(labels),
                                       g->name() + "/" + std::to_string(n.size));

  Epimorphism epi{g, qg, std::move(coset_of), n};
  detail::validate_epimorphism(epi);
  return Quotient{qg, std::move(epi)};
}

}  // namespace groupcover
