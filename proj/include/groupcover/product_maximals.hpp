// Maximal subgroups of a direct product H1 x H2, built constructively.
//
// Every maximal subgroup of a product is either standard (X1 x H2 or
// H1 x X2 with Xi maximal in its factor) or diagonal: fibered over an
// isomorphism phi between the simple quotients H1/N1 -> H2/N2 of maximal
// normal subgroups, M = {(h1,h2) | phi(h1 N1) = h2 N2}. Enumerating both
// families and deduplicating by mask therefore yields the complete list
// without touching the product's subgroup lattice.

#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "groupcover/lattice.hpp"
#include "groupcover/morphisms.hpp"

namespace groupcover {

struct StandardLeftDesc {
  Subgroup x1;               // maximal subgroup of H1
  std::size_t factor_index;  // position in the factor's canonical maximal list
};
struct StandardRightDesc {
  Subgroup x2;
  std::size_t factor_index;
};
struct DiagonalDesc {
  Subgroup n1, n2;  // maximal normal subgroups with isomorphic simple quotients
  std::size_t n1_index, n2_index;
  Quotient q1, q2;
  Isomorphism phi;  // q1.group -> q2.group
};

struct MaximalDescriptor {
  std::variant<StandardLeftDesc, StandardRightDesc, DiagonalDesc> form;
  std::uint32_t index_in_g = 0;

  bool is_standard() const { return !std::holds_alternative<DiagonalDesc>(form); }
  bool is_diagonal() const { return std::holds_alternative<DiagonalDesc>(form); }
};

// forward declaration: the dispatcher below delegates product groups here
inline std::vector<std::pair<MaximalDescriptor, Subgroup>> all_maximals_product(
    const GroupPtr& g, std::uint32_t lattice_cap);

// Maximal subgroups of any group: product groups take the constructive
// standard/diagonal path, everything else goes through the lattice.
inline std::vector<Subgroup> maximal_subgroups(const GroupPtr& g,
                                               std::uint32_t lattice_cap = kDefaultLatticeCap) {
  if (g->product()) {
    std::vector<Subgroup> out;
    for (auto& [desc, sub] : all_maximals_product(g, lattice_cap)) out.push_back(std::move(sub));
    return out;
  }
  return maximal_subgroups_via_lattice(g, lattice_cap);
}

inline std::vector<MaximalDescriptor> standard_maximals(
    const GroupPtr& h1, const GroupPtr& h2, std::uint32_t lattice_cap = kDefaultLatticeCap) {
  std::vector<MaximalDescriptor> out;
  const std::vector<Subgroup> left = maximal_subgroups(h1, lattice_cap);
  for (std::size_t i = 0; i < left.size(); ++i)
    out.push_back({StandardLeftDesc{left[i], i}, left[i].index()});
  const std::vector<Subgroup> right = maximal_subgroups(h2, lattice_cap);
  for (std::size_t i = 0; i < right.size(); ++i)
    out.push_back({StandardRightDesc{right[i], i}, right[i].index()});
  return out;
}

inline std::vector<MaximalDescriptor> diagonal_maximals(
    const GroupPtr& h1, const GroupPtr& h2, std::uint32_t lattice_cap = kDefaultLatticeCap) {
  std::vector<MaximalDescriptor> out;
  const std::vector<Subgroup> left = maximal_normal_subgroups(h1, lattice_cap);
  const std::vector<Subgroup> right = maximal_normal_subgroups(h2, lattice_cap);
  for (std::size_t i = 0; i < left.size(); ++i) {
    Quotient q1 = quotient(h1, left[i]);
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (left[i].index() != right[j].index()) continue;
      Quotient q2 = quotient(h2, right[j]);
      for (Isomorphism& phi : find_isomorphisms(q1.group, q2.group))
        out.push_back({DiagonalDesc{left[i], right[j], i, j, q1, q2, std::move(phi)},
                       left[i].index()});
    }
  }
  return out;
}

// Membership mask of a descriptor inside the product group it was built for.
inline Subgroup realize(const MaximalDescriptor& d, const GroupPtr& g) {
  if (!g->product()) throw NotAProduct("realize requires a direct product group");
  const ProductStructure& ps = *g->product();
  const std::uint32_t n1 = ps.left->order(), n2 = ps.right->order();
  Bitset mask(g->order());

  if (const auto* sl = std::get_if<StandardLeftDesc>(&d.form)) {
    if (sl->x1.parent.get() != ps.left.get())
      throw DescriptorMismatch("descriptor was built for a different left factor");
    for (std::uint32_t a = 0; a < n1; ++a)
      if (sl->x1.contains(Elem(a)))
        for (std::uint32_t b = 0; b < n2; ++b) mask.set(ps.pair(Elem(a), Elem(b)));
  } else if (const auto* sr = std::get_if<StandardRightDesc>(&d.form)) {
    if (sr->x2.parent.get() != ps.right.get())
      throw DescriptorMismatch("descriptor was built for a different right factor");
    for (std::uint32_t a = 0; a < n1; ++a)
      for (std::uint32_t b = 0; b < n2; ++b)
        if (sr->x2.contains(Elem(b))) mask.set(ps.pair(Elem(a), Elem(b)));
  } else {
    const auto& dd = std::get<DiagonalDesc>(d.form);
    if (dd.n1.parent.get() != ps.left.get() || dd.n2.parent.get() != ps.right.get())
      throw DescriptorMismatch("descriptor was built for a different product");
    for (std::uint32_t a = 0; a < n1; ++a) {
      const Elem qa = dd.phi(dd.q1.onto(Elem(a)));
      for (std::uint32_t b = 0; b < n2; ++b)
        if (dd.q2.onto(Elem(b)) == qa) mask.set(ps.pair(Elem(a), Elem(b)));
    }
  }

  Subgroup sub = subgroup_from_mask(g, std::move(mask));
  if (sub.index() != d.index_in_g)
    throw std::logic_error("realized subgroup index disagrees with descriptor");
  return sub;
}

// Complete maximal-subgroup list of a product, canonically sorted. A mask
// collision between descriptors would contradict the classification, so it
// is treated as an internal error.
inline std::vector<std::pair<MaximalDescriptor, Subgroup>> all_maximals_product(
    const GroupPtr& g, std::uint32_t lattice_cap = kDefaultLatticeCap) {
  if (!g->product()) throw NotAProduct("group is not a direct product");
  const ProductStructure& ps = *g->product();

  std::vector<std::pair<MaximalDescriptor, Subgroup>> out;
  std::map<Bitset, std::size_t> seen;
  auto add = [&](MaximalDescriptor&& d) {
    Subgroup sub = realize(d, g);
    if (!seen.emplace(sub.members, out.size()).second)
      throw std::logic_error("duplicate maximal subgroup mask in product enumeration");
    out.emplace_back(std::move(d), std::move(sub));
  };
  for (MaximalDescriptor& d : standard_maximals(ps.left, ps.right, lattice_cap)) add(std::move(d));
  for (MaximalDescriptor& d : diagonal_maximals(ps.left, ps.right, lattice_cap)) add(std::move(d));

  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.second, b.second); });
  return out;
}

}  // namespace groupcover
