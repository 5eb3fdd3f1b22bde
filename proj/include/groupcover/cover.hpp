// Minimum covers of a group by proper subgroups.
//
// sigma(G) is the least number of proper subgroups whose union is G, with
// sigma = infinity for cyclic groups (they have no cover). The exact solver
// is a branch-and-bound over the maximal subgroups: the universe shrinks to
// the generators of inclusion-maximal cyclic subgroups (x lies in a subgroup
// M iff <x> <= M, so only maximal cyclic subgroups matter), a greedy cover
// seeds the upper bound, branching picks the uncovered point lying in the
// fewest candidates, and the bound is ceil(remaining / best single-subgroup
// coverage). Reported witnesses are canonically smallest, independent of
// search order.

#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "groupcover/lattice.hpp"
#include "groupcover/subgroup.hpp"

namespace groupcover {

// sigma value: a natural number or infinity. Never a sentinel integer;
// min() is defined explicitly.
class SigmaValue {
 public:
  static SigmaValue infinity() { return SigmaValue(); }
  static SigmaValue finite(std::uint32_t v) {
    SigmaValue s;
    s.value_ = v;
    return s;
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  std::uint32_t finite_value() const {
    if (!value_) throw std::logic_error("sigma value is infinite");
    return *value_;
  }

  friend SigmaValue min(const SigmaValue& a, const SigmaValue& b) {
    if (a.is_infinite()) return b;
    if (b.is_infinite()) return a;
    return finite(std::min(*a.value_, *b.value_));
  }
  bool operator==(const SigmaValue&) const = default;
  bool operator==(std::uint32_t v) const { return value_ && *value_ == v; }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "infinity"; }

 private:
  std::optional<std::uint32_t> value_;
};

enum class SigmaMethod { kOracle, kTheorem, kGreedyUpperBound };

inline const char* to_string(SigmaMethod m) {
  switch (m) {
    case SigmaMethod::kOracle: return "oracle";
    case SigmaMethod::kTheorem: return "theorem";
    case SigmaMethod::kGreedyUpperBound: return "greedy-upper-bound";
  }
  return "?";
}

struct Cover {
  GroupPtr parent;
  std::vector<Subgroup> members;
  bool verified = false;
};

struct SigmaResult {
  SigmaValue value;
  std::optional<Cover> witness;
  SigmaMethod method = SigmaMethod::kOracle;
};

inline bool is_cover(const GroupPtr& g, const std::vector<Subgroup>& subgroups) {
  Bitset acc(g->order());
  for (const Subgroup& s : subgroups) {
    if (s.parent.get() != g.get())
      throw ForeignSubgroup("cover member belongs to a different group");
    if (!s.is_proper()) return false;
    acc |= s.members;
  }
  return acc.all();
}

namespace detail {

// Set-cover instance over the reduced universe.
struct CoverProblem {
  std::vector<Elem> points;               // generators of maximal cyclic subgroups
  std::vector<Bitset> member_points;      // per pool member, over point indices
  std::vector<std::vector<std::uint32_t>> covering;  // per point, member indices
  Bitset all_points;

  std::uint32_t num_points() const { return std::uint32_t(points.size()); }
};

inline CoverProblem build_cover_problem(const GroupPtr& g, const std::vector<Subgroup>& pool) {
  const std::uint32_t n = g->order();
  std::vector<Bitset> cyclic(n, Bitset(0));
  for (std::uint32_t x = 0; x < n; ++x) cyclic[x] = cyclic_subgroup(g, Elem(x)).members;

  std::vector<Bitset> distinct;
  for (std::uint32_t x = 0; x < n; ++x)
    if (std::find(distinct.begin(), distinct.end(), cyclic[x]) == distinct.end())
      distinct.push_back(cyclic[x]);
  auto is_max = [&](const Bitset& c) {
    for (const Bitset& d : distinct)
      if (c != d && c.is_subset_of(d)) return false;
    return true;
  };

  CoverProblem prob;
  for (std::uint32_t x = 0; x < n; ++x)
    if (is_max(cyclic[x])) prob.points.push_back(Elem(x));

  prob.all_points = Bitset(prob.num_points());
  for (std::uint32_t r = 0; r < prob.num_points(); ++r) prob.all_points.set(r);
  prob.covering.resize(prob.num_points());
  prob.member_points.reserve(pool.size());
  for (std::size_t m = 0; m < pool.size(); ++m) {
    Bitset pts(prob.num_points());
    for (std::uint32_t r = 0; r < prob.num_points(); ++r) {
      if (pool[m].contains(prob.points[r])) {
        pts.set(r);
        prob.covering[r].push_back(std::uint32_t(m));
      }
    }
    prob.member_points.push_back(std::move(pts));
  }
  return prob;
}

// Reduction soundness: a selection covers the reduced points iff it covers
// every element. Asserted on every solve for small groups.
inline void assert_reduction_sound(const GroupPtr& g, const std::vector<Subgroup>& selection) {
  if (g->order() > kFullHomCheckLimit) return;
  if (!is_cover(g, selection))
    throw std::logic_error("universe reduction unsound: reduced cover misses elements");
}

inline constexpr std::uint32_t kInfeasible = 1u << 30;

inline std::uint32_t lower_bound(const CoverProblem& prob, const Bitset& uncovered,
                                 const std::vector<Subgroup>& pool) {
  const std::uint32_t remaining = uncovered.count();
  if (remaining == 0) return 0;
  std::uint32_t best = 0;
  for (std::size_t m = 0; m < pool.size(); ++m)
    best = std::max(best, prob.member_points[m].count_and(uncovered));
  if (best == 0) return kInfeasible;
  return (remaining + best - 1) / best;
}

// Greedy selection over reduced points; ties break toward the canonically
// first subgroup. Returns member indices.
inline std::vector<std::uint32_t> greedy_select(const CoverProblem& prob,
                                                const std::vector<Subgroup>& pool) {
  std::vector<std::uint32_t> chosen;
  Bitset uncovered = prob.all_points;
  while (uncovered.any()) {
    std::uint32_t best = 0, best_gain = 0;
    for (std::uint32_t m = 0; m < pool.size(); ++m) {
      const std::uint32_t gain = prob.member_points[m].count_and(uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = m;
      }
    }
    if (best_gain == 0) throw Error("subgroup pool cannot cover the group");
    chosen.push_back(best);
    for (std::uint32_t r = 0; r < prob.num_points(); ++r)
      if (prob.member_points[best].test(r)) uncovered.reset(r);
  }
  return chosen;
}

inline std::vector<Subgroup> sorted_pool(const GroupPtr& g, const std::vector<Subgroup>& pool) {
  for (const Subgroup& s : pool)
    if (s.parent.get() != g.get()) throw ForeignSubgroup("pool member has a different parent");
  std::vector<Subgroup> sorted = pool;
  canonical_sort(sorted);
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].members == sorted[i - 1].members)
      throw std::logic_error("duplicate subgroup in pool");
  return sorted;
}

}  // namespace detail

// Verified greedy cover (upper bound for the exact search).
inline Cover greedy_cover(const GroupPtr& g, const std::vector<Subgroup>& maximals) {
  if (is_cyclic(g)) throw CyclicGroupError("cyclic groups have no cover");
  const std::vector<Subgroup> pool = detail::sorted_pool(g, maximals);
  const detail::CoverProblem prob = detail::build_cover_problem(g, pool);
  Cover cover{g, {}, false};
  for (std::uint32_t m : detail::greedy_select(prob, pool)) cover.members.push_back(pool[m]);
  detail::assert_reduction_sound(g, cover.members);
  cover.verified = is_cover(g, cover.members);
  if (!cover.verified) throw std::logic_error("greedy selection is not a cover");
  return cover;
}

// Greedy upper bound packaged as a sigma estimate.
inline SigmaResult sigma_greedy_upper_bound(const GroupPtr& g,
                                            const std::vector<Subgroup>& maximals) {
  if (is_cyclic(g))
    return SigmaResult{SigmaValue::infinity(), std::nullopt, SigmaMethod::kGreedyUpperBound};
  Cover cover = greedy_cover(g, maximals);
  const std::uint32_t size = std::uint32_t(cover.members.size());
  return SigmaResult{SigmaValue::finite(size), std::move(cover), SigmaMethod::kGreedyUpperBound};
}

// Exact minimum cover size over subsets of `maximals`, which must be the
// complete maximal-subgroup list. The witness is the canonically smallest
// optimal cover.
inline SigmaResult sigma_bruteforce(const GroupPtr& g, const std::vector<Subgroup>& maximals) {
  if (is_cyclic(g)) return SigmaResult{SigmaValue::infinity(), std::nullopt, SigmaMethod::kOracle};
  if (maximals.empty()) throw EmptyMaximalList("non-cyclic group with empty maximal list");
  const std::vector<Subgroup> pool = detail::sorted_pool(g, maximals);
  const detail::CoverProblem prob = detail::build_cover_problem(g, pool);

  std::uint32_t best = std::uint32_t(detail::greedy_select(prob, pool).size());

  // Phase 1: exact optimum. Branch on the uncovered point in the fewest
  // candidates; prune with the counting bound.
  auto search = [&](auto&& self, const Bitset& uncovered, std::uint32_t chosen) -> void {
    if (!uncovered.any()) {
      best = std::min(best, chosen);
      return;
    }
    if (chosen + detail::lower_bound(prob, uncovered, pool) >= best) return;
    std::uint32_t branch_point = 0, fewest = std::numeric_limits<std::uint32_t>::max();
    for (std::uint32_t r = 0; r < prob.num_points(); ++r) {
      if (!uncovered.test(r)) continue;
      if (std::uint32_t(prob.covering[r].size()) < fewest) {
        fewest = std::uint32_t(prob.covering[r].size());
        branch_point = r;
      }
    }
    for (std::uint32_t m : prob.covering[branch_point]) {
      Bitset next = uncovered;
      for (std::uint32_t r = 0; r < prob.num_points(); ++r)
        if (prob.member_points[m].test(r)) next.reset(r);
      self(self, next, chosen + 1);
    }
  };
  search(search, prob.all_points, 0);

  // Phase 2: lexicographically first cover of the optimal size, in canonical
  // pool order. A minimum cover has no redundant member, so members adding
  // nothing over the chosen prefix can be skipped.
  std::vector<std::uint32_t> chosen;
  auto lex_first = [&](auto&& self, std::uint32_t start, const Bitset& uncovered) -> bool {
    if (chosen.size() == best) return !uncovered.any();
    if (!uncovered.any()) return false;  // would be a smaller cover; impossible
    const std::uint32_t slots = best - std::uint32_t(chosen.size());
    if (pool.size() - start < slots) return false;
    if (detail::lower_bound(prob, uncovered, pool) > slots) return false;
    for (std::uint32_t m = start; m < pool.size(); ++m) {
      if (!prob.member_points[m].intersects(uncovered)) continue;
      Bitset next = uncovered;
      for (std::uint32_t r = 0; r < prob.num_points(); ++r)
        if (prob.member_points[m].test(r)) next.reset(r);
      chosen.push_back(m);
      if (self(self, m + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!lex_first(lex_first, 0, prob.all_points))
    throw std::logic_error("no cover of the optimal size found");

  Cover witness{g, {}, false};
  for (std::uint32_t m : chosen) witness.members.push_back(pool[m]);
  detail::assert_reduction_sound(g, witness.members);
  witness.verified = is_cover(g, witness.members);
  if (!witness.verified) throw std::logic_error("witness is not a cover");
  return SigmaResult{SigmaValue::finite(best), std::move(witness), SigmaMethod::kOracle};
}

// All covers of size exactly `sigma` drawn from `pool`, lexicographic in
// canonical pool order, capped at `cap` results.
inline std::vector<Cover> enumerate_minimum_covers(const GroupPtr& g,
                                                   const std::vector<Subgroup>& pool_in,
                                                   std::uint32_t sigma, std::size_t cap) {
  if (is_cyclic(g)) throw CyclicGroupError("cyclic groups have no cover");
  std::vector<Subgroup> pool;
  for (const Subgroup& s : detail::sorted_pool(g, pool_in))
    if (s.is_proper()) pool.push_back(s);
  const detail::CoverProblem prob = detail::build_cover_problem(g, pool);

  std::vector<Cover> out;
  std::vector<std::uint32_t> chosen;
  auto enumerate = [&](auto&& self, std::uint32_t start, const Bitset& uncovered) -> void {
    if (chosen.size() == sigma) {
      if (!uncovered.any()) {
        Cover c{g, {}, false};
        for (std::uint32_t m : chosen) c.members.push_back(pool[m]);
        detail::assert_reduction_sound(g, c.members);
        c.verified = is_cover(g, c.members);
        if (!c.verified) throw std::logic_error("enumerated selection is not a cover");
        if (out.size() >= cap)
          throw CapExceeded("more than " + std::to_string(cap) + " minimum covers");
        out.push_back(std::move(c));
      }
      return;
    }
    const std::uint32_t slots = sigma - std::uint32_t(chosen.size());
    if (pool.size() - start < slots) return;
    if (uncovered.any() && detail::lower_bound(prob, uncovered, pool) > slots) return;
    for (std::uint32_t m = start; m < std::uint32_t(pool.size()); ++m) {
      if (!prob.member_points[m].intersects(uncovered)) continue;  // redundant member
      Bitset next = uncovered;
      for (std::uint32_t r = 0; r < prob.num_points(); ++r)
        if (prob.member_points[m].test(r)) next.reset(r);
      chosen.push_back(m);
      self(self, m + 1, next);
      chosen.pop_back();
    }
  };
  enumerate(enumerate, 0, prob.all_points);
  return out;
}

// Preimages of a verified cover of Q under an epimorphism G -> Q form a
// verified cover of G of the same size.
inline Cover lift_cover(const Cover& cover, const Epimorphism& epi) {
  if (cover.parent.get() != epi.target.get())
    throw TargetMismatch("cover is not over the epimorphism target");
  if (!cover.verified) throw NotVerified("can only lift a verified cover");
  Cover lifted{epi.source, {}, false};
  for (const Subgroup& m : cover.members) {
    Bitset pre(epi.source->order());
    for (std::uint32_t x = 0; x < epi.source->order(); ++x)
      if (m.contains(epi.map[x])) pre.set(x);
    lifted.members.push_back(subgroup_from_mask(epi.source, std::move(pre)));
  }
  lifted.verified = is_cover(epi.source, lifted.members);
  if (!lifted.verified) throw std::logic_error("lifted cover does not cover the source");
  return lifted;
}

}  // namespace groupcover
