// Covering numbers of direct products and the structure of their minimum
// covers.
//
// For G = H1 x H2, sigma(G) is the least of sigma(H1), sigma(H2), and p+1
// over the primes p such that the cyclic group of order p is an epimorphic
// image of both factors; each candidate value is achieved by an explicit
// cover shape, so the minimum is attained. sigma_product evaluates that
// formula and returns a verified witness of the winning shape. The formula
// is re-verified against the brute-force solver in the acceptance sweep
// rather than assumed.
//
// Every minimum cover of a product falls into one of three shapes:
//   1. {X x H2 | X in a minimum cover of H1}
//   2. {H1 x X | X in a minimum cover of H2}
//   3. the p+1 maximal subgroups containing a normal kernel N with
//      G/N = Cp x Cp (all members normal of index p, intersection N of
//      index p^2). The kernel often splits as N1 x N2 with both factor
//      quotients of order p, but need not: C2 x (C2 x C2) has pencils of
//      index-2 subgroups through a non-split kernel.
// classify_cover decides which shape a given cover has; on a verified
// minimum cover, "unclassified" indicates a bug and fails verification.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groupcover/cover.hpp"
#include "groupcover/product_maximals.hpp"

namespace groupcover {

enum class CoverCase {
  kUnclassified = 0,
  kFactorLeft = 1,    // {X x H2}
  kFactorRight = 2,   // {H1 x X}
  kPrimeQuotient = 3  // the p+1 maximal subgroups over a kernel with
                      // quotient Cp x Cp
};

struct CoverClassification {
  CoverCase which = CoverCase::kUnclassified;
  std::optional<Cover> factor_cover;  // cases 1 and 2: the projected cover
  std::optional<Subgroup> kernel;     // case 3: intersection of the members
  std::optional<Subgroup> n1, n2;     // case 3, when the kernel is N1 x N2
  std::uint32_t p = 0;                // case 3 prime
  std::string note;                   // double-match log, when any
};

namespace detail {

inline const ProductStructure& require_product(const GroupPtr& g) {
  if (!g->product()) throw NotAProduct("operation requires a direct product group");
  return *g->product();
}

inline Subgroup realize_left_times(const GroupPtr& g, const Bitset& x1_mask,
                                   const Bitset& n2_mask) {
  // {(a, b) : a in X1, b in N2}
  const ProductStructure& ps = *g->product();
  Bitset mask(g->order());
  for (std::uint32_t a = 0; a < ps.left->order(); ++a) {
    if (!x1_mask.test(a)) continue;
    for (std::uint32_t b = 0; b < ps.right->order(); ++b)
      if (n2_mask.test(b)) mask.set(ps.pair(Elem(a), Elem(b)));
  }
  return subgroup_from_mask(g, std::move(mask));
}

inline SigmaValue factor_sigma(const GroupPtr& h, std::uint32_t lattice_cap) {
  if (is_cyclic(h)) return SigmaValue::infinity();
  return sigma_bruteforce(h, maximal_subgroups(h, lattice_cap)).value;
}

}  // namespace detail

// {X x H2 | X in factor_cover}, a verified cover of G of size sigma(H1).
inline Cover build_cover_factor_left(const GroupPtr& g, const Cover& factor_cover,
                                     std::uint32_t lattice_cap = kDefaultLatticeCap) {
  const ProductStructure& ps = detail::require_product(g);
  if (factor_cover.parent.get() != ps.left.get())
    throw ForeignSubgroup("factor cover is not over the left factor");
  if (!factor_cover.verified) throw NotMinimal("factor cover is not verified");
  const SigmaValue s1 = detail::factor_sigma(ps.left, lattice_cap);
  if (!s1.is_finite() || factor_cover.members.size() != s1.finite_value())
    throw NotMinimal("factor cover is not a minimum cover");

  Cover out{g, {}, false};
  const Subgroup full_right = full_subgroup(ps.right);
  for (const Subgroup& x : factor_cover.members)
    out.members.push_back(detail::realize_left_times(g, x.members, full_right.members));
  canonical_sort(out.members);
  out.verified = is_cover(g, out.members);
  if (!out.verified) throw std::logic_error("factor cover did not lift to the product");
  return out;
}

inline Cover build_cover_factor_right(const GroupPtr& g, const Cover& factor_cover,
                                      std::uint32_t lattice_cap = kDefaultLatticeCap) {
  const ProductStructure& ps = detail::require_product(g);
  if (factor_cover.parent.get() != ps.right.get())
    throw ForeignSubgroup("factor cover is not over the right factor");
  if (!factor_cover.verified) throw NotMinimal("factor cover is not verified");
  const SigmaValue s2 = detail::factor_sigma(ps.right, lattice_cap);
  if (!s2.is_finite() || factor_cover.members.size() != s2.finite_value())
    throw NotMinimal("factor cover is not a minimum cover");

  Cover out{g, {}, false};
  const Subgroup full_left = full_subgroup(ps.left);
  for (const Subgroup& x : factor_cover.members)
    out.members.push_back(detail::realize_left_times(g, full_left.members, x.members));
  canonical_sort(out.members);
  out.verified = is_cover(g, out.members);
  if (!out.verified) throw std::logic_error("factor cover did not lift to the product");
  return out;
}

// The p+1 maximal subgroups of G containing N1 x N2, for N1, N2 normal of
// common prime index p: H1 x N2, N1 x H2, and the p-1 diagonals over the
// isomorphisms of the order-p quotients. A verified cover of size p+1.
inline Cover build_cover_prime_quotient(const GroupPtr& g, const Subgroup& n1,
                                        const Subgroup& n2) {
  const ProductStructure& ps = detail::require_product(g);
  if (n1.parent.get() != ps.left.get() || n2.parent.get() != ps.right.get())
    throw BadQuotients("normal subgroups do not belong to the factors");
  if (!is_normal(ps.left, n1) || !is_normal(ps.right, n2))
    throw BadQuotients("subgroup is not normal in its factor");
  const std::uint32_t p = n1.index();
  if (p != n2.index() || prime_factors(p) != std::vector<std::uint32_t>{p})
    throw BadQuotients("factor quotients are not of a common prime order");

  Cover out{g, {}, false};
  out.members.push_back(
      detail::realize_left_times(g, full_subgroup(ps.left).members, n2.members));  // H1 x N2
  out.members.push_back(
      detail::realize_left_times(g, n1.members, full_subgroup(ps.right).members));  // N1 x H2
  const Quotient q1 = quotient(ps.left, n1);
  const Quotient q2 = quotient(ps.right, n2);
  for (const Isomorphism& phi : find_isomorphisms(q1.group, q2.group)) {
    Bitset mask(g->order());
    for (std::uint32_t a = 0; a < ps.left->order(); ++a) {
      const Elem qa = phi(q1.onto(Elem(a)));
      for (std::uint32_t b = 0; b < ps.right->order(); ++b)
        if (q2.onto(Elem(b)) == qa) mask.set(ps.pair(Elem(a), Elem(b)));
    }
    out.members.push_back(subgroup_from_mask(g, std::move(mask)));
  }
  if (out.members.size() != p + 1)
    throw std::logic_error("prime-quotient cover has the wrong number of members");
  canonical_sort(out.members);
  out.verified = is_cover(g, out.members);
  if (!out.verified) throw std::logic_error("prime-quotient members do not cover");
  return out;
}

// sigma of a direct product by the closed form, with a verified witness of
// the winning shape. Ties between a factor value and p+1 resolve to the
// prime-quotient witness.
inline SigmaResult sigma_product(const GroupPtr& g,
                                 std::uint32_t lattice_cap = kDefaultLatticeCap) {
  const ProductStructure& ps = detail::require_product(g);
  const SigmaValue s1 = detail::factor_sigma(ps.left, lattice_cap);
  const SigmaValue s2 = detail::factor_sigma(ps.right, lattice_cap);
  const std::vector<std::uint32_t> primes = common_prime_quotients(ps.left, ps.right);
  SigmaValue value = min(s1, s2);
  if (!primes.empty()) value = min(value, SigmaValue::finite(primes.front() + 1));

  SigmaResult res{value, std::nullopt, SigmaMethod::kTheorem};
  if (value.is_infinite()) return res;

  if (!primes.empty() && value == primes.front() + 1) {
    const std::uint32_t p = primes.front();
    auto pick = [&](const GroupPtr& h) -> Subgroup {
      for (const Subgroup& n : normal_subgroups(h, lattice_cap))
        if (n.index() == p) return n;
      throw std::logic_error("no index-p normal subgroup despite common prime quotient");
    };
    res.witness = build_cover_prime_quotient(g, pick(ps.left), pick(ps.right));
  } else if (s1.is_finite() && value == s1) {
    const SigmaResult left = sigma_bruteforce(ps.left, maximal_subgroups(ps.left, lattice_cap));
    res.witness = build_cover_factor_left(g, *left.witness, lattice_cap);
  } else {
    const SigmaResult right = sigma_bruteforce(ps.right, maximal_subgroups(ps.right, lattice_cap));
    res.witness = build_cover_factor_right(g, *right.witness, lattice_cap);
  }
  if (!res.witness->verified || res.witness->members.size() != value.finite_value())
    throw std::logic_error("sigma_product witness does not match its value");
  return res;
}

// Precomputed per-product data for classifying many covers and running the
// structure predicates over enumerated cover families.
class ProductCoverAnalysis {
 public:
  explicit ProductCoverAnalysis(GroupPtr g, std::uint32_t lattice_cap = kDefaultLatticeCap)
      : g_(std::move(g)), lattice_cap_(lattice_cap) {
    const ProductStructure& ps = detail::require_product(g_);
    sigma_left_ = detail::factor_sigma(ps.left, lattice_cap_);
    sigma_right_ = detail::factor_sigma(ps.right, lattice_cap_);
    sigma_ = min(sigma_left_, sigma_right_);
    const std::vector<std::uint32_t> primes = common_prime_quotients(ps.left, ps.right);
    if (!primes.empty()) sigma_ = min(sigma_, SigmaValue::finite(primes.front() + 1));

    const auto realized = all_maximals_product(g_, lattice_cap_);

    // Candidate prime-quotient covers: for every normal kernel N of index
    // p^2 with G/N noncyclic (so G/N is Cp x Cp), the p+1 maximal subgroups
    // containing N form a cover. The kernel need not split as N1 x N2; the
    // split is recorded when it exists.
    for (const Subgroup& n : normal_subgroups(g_, lattice_cap_)) {
      const std::uint32_t index = n.index();
      std::uint32_t p = 0;
      for (std::uint32_t q = 2; q * q <= index; ++q)
        if (q * q == index) p = q;
      if (p == 0 || prime_factors(p) != std::vector<std::uint32_t>{p}) continue;
      if (is_cyclic(quotient(g_, n).group)) continue;
      Candidate c;
      c.kernel = n;
      c.p = p;
      for (const auto& [desc, sub] : realized)
        if (n.members.is_subset_of(sub.members)) c.member_masks.push_back(sub.members);
      if (c.member_masks.size() != p + 1)
        throw std::logic_error("kernel with square quotient has the wrong pencil size");
      std::sort(c.member_masks.begin(), c.member_masks.end());

      // product form: N = (N cap H1) x (N cap H2) with both factor
      // quotients of order p
      Bitset m1(ps.left->order()), m2(ps.right->order());
      for (std::uint32_t a = 0; a < ps.left->order(); ++a)
        if (n.contains(ps.embed_left[a])) m1.set(a);
      for (std::uint32_t b = 0; b < ps.right->order(); ++b)
        if (n.contains(ps.embed_right[b])) m2.set(b);
      if (std::uint64_t(m1.count()) * m2.count() == n.size &&
          ps.left->order() == std::uint64_t(m1.count()) * p &&
          ps.right->order() == std::uint64_t(m2.count()) * p) {
        c.n1 = subgroup_from_mask(ps.left, std::move(m1));
        c.n2 = subgroup_from_mask(ps.right, std::move(m2));
      }
      case3_.push_back(std::move(c));
    }

    // realized diagonal-type maximal subgroups of prime index
    for (const auto& [desc, sub] : realized) {
      if (!desc.is_diagonal()) continue;
      const std::uint32_t idx = desc.index_in_g;
      if (prime_factors(idx) == std::vector<std::uint32_t>{idx}) prime_diagonals_.push_back(sub);
    }
  }

  const GroupPtr& group() const { return g_; }
  const SigmaValue& sigma() const { return sigma_; }

  CoverClassification classify(const Cover& cover) const {
    if (!cover.verified) throw NotVerified("cover is not verified");
    if (!sigma_.is_finite() || cover.members.size() != sigma_.finite_value())
      throw WrongSize("cover size differs from sigma of the group");
    const ProductStructure& ps = *g_->product();

    CoverClassification out;
    std::optional<Cover> left_family = project_family(cover, /*left=*/true);
    const bool m1 = left_family && sigma_left_.is_finite() &&
                    left_family->members.size() == sigma_left_.finite_value() &&
                    is_cover(ps.left, left_family->members);
    std::optional<Cover> right_family = project_family(cover, /*left=*/false);
    const bool m2 = right_family && sigma_right_.is_finite() &&
                    right_family->members.size() == sigma_right_.finite_value() &&
                    is_cover(ps.right, right_family->members);
    const Candidate* m3 = match_case3(cover);

    if (m1) {
      out.which = CoverCase::kFactorLeft;
      left_family->verified = true;
      out.factor_cover = std::move(*left_family);
    } else if (m2) {
      out.which = CoverCase::kFactorRight;
      right_family->verified = true;
      out.factor_cover = std::move(*right_family);
    } else if (m3) {
      out.which = CoverCase::kPrimeQuotient;
      out.kernel = m3->kernel;
      out.n1 = m3->n1;
      out.n2 = m3->n2;
      out.p = m3->p;
    }
    const int matches = int(m1) + int(m2) + int(m3 != nullptr);
    if (matches > 1) out.note = "cover matches more than one shape";
    return out;
  }

  // Any cover member contained in a realized prime-index diagonal maximal?
  bool touches_prime_diagonal(const Cover& cover) const {
    for (const Subgroup& m : cover.members)
      for (const Subgroup& d : prime_diagonals_)
        if (m.members.is_subset_of(d.members)) return true;
    return false;
  }

  // If some member lies inside a prime-index diagonal maximal, then sigma
  // must equal p+1, every member must be normal of index p, and the
  // intersection of all members must have index p^2. Vacuously true
  // otherwise.
  bool prime_diagonal_structure_ok(const Cover& cover, const SigmaValue& sigma) const {
    std::vector<std::uint32_t> primes;
    for (const Subgroup& m : cover.members)
      for (const Subgroup& d : prime_diagonals_)
        if (m.members.is_subset_of(d.members)) primes.push_back(d.index());
    if (primes.empty()) return true;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    Bitset inter = cover.members.front().members;
    for (const Subgroup& m : cover.members) inter &= m.members;
    const std::uint32_t inter_index = g_->order() / inter.count();

    for (std::uint32_t p : primes) {
      if (!(sigma == p + 1)) return false;
      for (const Subgroup& m : cover.members)
        if (m.index() != p || !is_normal(g_, m)) return false;
      if (inter_index != p * p) return false;
    }
    return true;
  }

  // With no member inside a prime-index diagonal maximal, one embedded
  // factor (H1 x 1 or 1 x H2) must lie in every member.
  bool factor_in_intersection(const Cover& cover) const {
    if (touches_prime_diagonal(cover))
      throw PreconditionViolated("a cover member lies inside a prime-index diagonal maximal");
    const ProductStructure& ps = *g_->product();
    Bitset inter = cover.members.front().members;
    for (const Subgroup& m : cover.members) inter &= m.members;
    Bitset left_emb(g_->order()), right_emb(g_->order());
    for (Elem e : ps.embed_left) left_emb.set(e);
    for (Elem e : ps.embed_right) right_emb.set(e);
    return left_emb.is_subset_of(inter) || right_emb.is_subset_of(inter);
  }

 private:
  struct Candidate {
    Subgroup kernel;
    std::optional<Subgroup> n1, n2;  // set when kernel = n1 x n2
    std::uint32_t p = 0;
    std::vector<Bitset> member_masks;  // sorted
  };

  // If every member is X x H2 (resp. H1 x X) with X proper, the projected
  // family; otherwise nullopt.
  std::optional<Cover> project_family(const Cover& cover, bool left) const {
    const ProductStructure& ps = *g_->product();
    const GroupPtr& factor = left ? ps.left : ps.right;
    const std::uint32_t other_order = left ? ps.right->order() : ps.left->order();
    Cover family{factor, {}, false};
    for (const Subgroup& m : cover.members) {
      Bitset proj(factor->order());
      m.members.for_each_set([&](std::uint32_t e) {
        proj.set(left ? ps.proj_left[e] : ps.proj_right[e]);
      });
      const std::uint32_t proj_size = proj.count();
      if (proj_size == factor->order()) return std::nullopt;              // not proper
      if (proj_size * other_order != m.size) return std::nullopt;         // not X x H2
      family.members.push_back(subgroup_from_mask(factor, std::move(proj)));
    }
    return family;
  }

  const Candidate* match_case3(const Cover& cover) const {
    std::vector<Bitset> cover_masks;
    for (const Subgroup& m : cover.members) cover_masks.push_back(m.members);
    std::sort(cover_masks.begin(), cover_masks.end());
    for (const Candidate& c : case3_)
      if (c.member_masks == cover_masks) return &c;
    return nullptr;
  }

  GroupPtr g_;
  std::uint32_t lattice_cap_;
  SigmaValue sigma_, sigma_left_, sigma_right_;
  std::vector<Candidate> case3_;
  std::vector<Subgroup> prime_diagonals_;
};

inline CoverClassification classify_cover(const GroupPtr& g, const Cover& cover,
                                          std::uint32_t lattice_cap = kDefaultLatticeCap) {
  return ProductCoverAnalysis(g, lattice_cap).classify(cover);
}

// --- cover predicates over a normal subgroup ------------------------------

// For a minimum cover of Y and a normal subgroup F: if F*X != Y for every
// member X, then F must lie in every member. True when the implication
// holds; vacuously true when the hypothesis fails.
inline bool check_normal_member_containment(const Cover& cover, const Subgroup& f) {
  const GroupPtr& y = cover.parent;
  if (f.parent.get() != y.get()) throw ForeignSubgroup("subgroup has a different parent");
  for (const Subgroup& x : cover.members) {
    const std::uint64_t product_size =
        std::uint64_t(f.size) * x.size / f.members.count_and(x.members);
    if (product_size == y->order()) return true;  // hypothesis fails, vacuous
  }
  for (const Subgroup& x : cover.members)
    if (!f.members.is_subset_of(x.members)) return false;
  return true;
}

// Partition of a verified cover relative to a proper normal subgroup N into
// members containing N ("absorbed") and supplements (V*N = G). When the
// absorbed members alone do not cover, the least supplement index is bounded
// by the number of supplements; in the equality case all supplement indices
// agree and pairwise supplement intersections lie under the absorbed union.
struct SupplementIndexReport {
  bool applicable = false;
  bool holds = true;  // meaningful when applicable
  std::uint32_t absorbed_count = 0;   // h
  std::uint32_t supplement_count = 0; // k
  std::uint32_t min_index = 0;        // beta_1
  std::string note;

  bool ok() const { return !applicable || holds; }
};

inline SupplementIndexReport check_supplement_index_bound(const GroupPtr& g, const Subgroup& n,
                                                          const Cover& cover) {
  if (n.parent.get() != g.get() || cover.parent.get() != g.get())
    throw ForeignSubgroup("inputs have different parents");
  if (!cover.verified) throw NotVerified("cover is not verified");

  SupplementIndexReport rep;
  std::vector<const Subgroup*> absorbed, supplements;
  for (const Subgroup& m : cover.members) {
    if (n.members.is_subset_of(m.members)) {
      absorbed.push_back(&m);
    } else if (std::uint64_t(m.size) * n.size / m.members.count_and(n.members) == g->order()) {
      supplements.push_back(&m);
    } else {
      rep.applicable = false;
      rep.note = "a member neither contains the normal subgroup nor supplements it";
      return rep;
    }
  }
  rep.absorbed_count = std::uint32_t(absorbed.size());
  rep.supplement_count = std::uint32_t(supplements.size());

  Bitset absorbed_union(g->order());
  for (const Subgroup* u : absorbed) absorbed_union |= u->members;
  if (absorbed_union.all()) {
    rep.applicable = false;
    rep.note = "members containing the normal subgroup already cover";
    return rep;
  }
  if (supplements.empty()) {
    rep.applicable = false;
    rep.note = "no supplements yet the cover is verified";  // unreachable for real covers
    return rep;
  }

  rep.applicable = true;
  std::vector<std::uint32_t> indices;
  for (const Subgroup* v : supplements) indices.push_back(v->index());
  std::sort(indices.begin(), indices.end());
  rep.min_index = indices.front();
  rep.holds = rep.min_index <= rep.supplement_count;
  if (rep.holds && rep.min_index == rep.supplement_count) {
    rep.holds = indices.back() == indices.front();
    if (rep.holds) {
      for (std::size_t i = 0; i < supplements.size() && rep.holds; ++i)
        for (std::size_t j = i + 1; j < supplements.size() && rep.holds; ++j)
          rep.holds =
              (supplements[i]->members & supplements[j]->members).is_subset_of(absorbed_union);
      if (!rep.holds) rep.note = "pairwise supplement intersection escapes the absorbed union";
    } else {
      rep.note = "equality case with unequal supplement indices";
    }
  } else if (!rep.holds) {
    rep.note = "least supplement index exceeds the supplement count";
  }
  return rep;
}

inline bool check_prime_diagonal_structure(const GroupPtr& g, const Cover& cover,
                                           const SigmaValue& sigma,
                                           std::uint32_t lattice_cap = kDefaultLatticeCap) {
  return ProductCoverAnalysis(g, lattice_cap).prime_diagonal_structure_ok(cover, sigma);
}

inline bool check_factor_in_intersection(const GroupPtr& g, const Cover& cover,
                                         std::uint32_t lattice_cap = kDefaultLatticeCap) {
  return ProductCoverAnalysis(g, lattice_cap).factor_in_intersection(cover);
}

}  // namespace groupcover
