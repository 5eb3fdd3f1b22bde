// Catalog-driven verification sweeps. Each check cross-validates an
// algebraic route (constructive maximal enumeration, the product sigma
// formula, the cover builders) against the independent brute-force solver,
// over a fixed catalog of small groups. Used by both the CLI `verify`
// command and the acceptance suite.

#pragma once

#include <chrono>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "groupcover/cover.hpp"
#include "groupcover/expr.hpp"
#include "groupcover/product_maximals.hpp"
#include "groupcover/theorem.hpp"

namespace groupcover {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Memoizing store for catalog groups and their oracle sigma values.
class Catalog {
 public:
  static const std::vector<std::string>& factors() {
    static const std::vector<std::string> v = {"C2",  "C3", "C4", "C5",  "C6", "C2 x C2", "S3",
                                               "D8",  "Q8", "D10", "A4", "C3 x C3", "D12"};
    return v;
  }
  static const std::vector<std::string>& small_products() {
    static const std::vector<std::string> v = {"C2 x C2",      "C2 x C4", "C2 x C2 x C2",
                                               "S3 x C2",      "S3 x C3", "D8 x C2",
                                               "Q8 x C2",      "S3 x S3", "C3 x C3",
                                               "A4 x C2"};
    return v;
  }
  static const std::vector<std::string>& full_pool_products() {
    static const std::vector<std::string> v = {"C2 x C2", "C2 x C4", "C2 x C6",
                                               "S3 x C2", "S3 x C3", "C3 x C3",
                                               "S3 x S3", "C2 x (C2 x C2)"};
    return v;
  }
  static std::string pair_expr(const std::string& a, const std::string& b) {
    return "(" + a + ") x (" + b + ")";
  }

  GroupPtr get(const std::string& expr) {
    auto it = groups_.find(expr);
    if (it != groups_.end()) return it->second;
    GroupPtr g = evaluate_expression(expr);
    groups_.emplace(expr, g);
    return g;
  }

  const std::vector<Subgroup>& maximals(const std::string& expr) {
    auto it = maximals_.find(expr);
    if (it != maximals_.end()) return it->second;
    return maximals_.emplace(expr, maximal_subgroups(get(expr))).first->second;
  }

  const SigmaResult& oracle_sigma(const std::string& expr) {
    auto it = oracle_.find(expr);
    if (it != oracle_.end()) return it->second;
    GroupPtr g = get(expr);
    SigmaResult res = is_cyclic(g)
                          ? SigmaResult{SigmaValue::infinity(), std::nullopt, SigmaMethod::kOracle}
                          : sigma_bruteforce(g, maximals(expr));
    return oracle_.emplace(expr, std::move(res)).first->second;
  }

 private:
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, std::vector<Subgroup>> maximals_;
  std::map<std::string, SigmaResult> oracle_;
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::vector<Bitset> sorted_masks(const std::vector<Subgroup>& subs) {
  std::vector<Bitset> masks;
  masks.reserve(subs.size());
  for (const Subgroup& s : subs) masks.push_back(s.members);
  std::sort(masks.begin(), masks.end());
  return masks;
}

inline std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace detail

// sigma(Cp x Cp) = p+1 for p in {2,3,5,7}, and the unique minimum cover is
// the full maximal-subgroup set.
inline CheckResult check_prime_square_covers(Catalog& cat) {
  detail::Stopwatch sw;
  CheckResult r{"sigma(Cp x Cp) = p+1 with all-maximals witness, p in {2,3,5,7}", true, "", 0};
  std::ostringstream fail;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const std::string expr =
        Catalog::pair_expr("C" + std::to_string(p), "C" + std::to_string(p));
    const SigmaResult& res = cat.oracle_sigma(expr);
    const bool value_ok = res.value == p + 1;
    const bool witness_ok =
        res.witness &&
        detail::sorted_masks(res.witness->members) == detail::sorted_masks(cat.maximals(expr));
    if (!value_ok || !witness_ok) {
      r.pass = false;
      fail << expr << ": sigma=" << res.value.to_string() << (witness_ok ? "" : " witness!=maximals")
             << "; ";
    }
  }
  if (r.pass) r.detail = "4 prime squares checked";
  else r.detail = fail.str();
  r.seconds = sw.seconds();
  return r;
}

// The constructive standard/diagonal enumeration and the lattice agree on
// the maximal subgroups of every small catalog product.
inline CheckResult check_product_vs_lattice_maximals(Catalog& cat, std::uint32_t max_order = 64) {
  detail::Stopwatch sw;
  CheckResult r{"product-form maximal subgroups match the lattice (|G| <= " +
                    std::to_string(max_order) + ")",
                true, "", 0};
  std::ostringstream fail;
  std::uint32_t checked = 0;
  for (const std::string& expr : Catalog::small_products()) {
    GroupPtr g = cat.get(expr);
    if (g->order() > max_order) continue;
    ++checked;
    std::vector<Subgroup> via_lattice = maximal_subgroups_via_lattice(g);
    const auto construct = detail::sorted_masks(cat.maximals(expr));
    const auto lattice = detail::sorted_masks(via_lattice);
    if (construct != lattice) {
      r.pass = false;
      fail << expr << ": " << construct.size() << " constructive vs " << lattice.size()
             << " lattice; ";
    }
  }
  r.detail = r.pass ? std::to_string(checked) + " products checked" : fail.str();
  r.seconds = sw.seconds();
  return r;
}

// The closed-form product sigma equals the brute-force value on every
// ordered factor pair, infinite cases included.
inline CheckResult check_sigma_formula_vs_oracle(Catalog& cat, std::uint32_t max_order = 576) {
  detail::Stopwatch sw;
  CheckResult r{"product sigma formula matches the brute-force oracle on all factor pairs", true,
                "", 0};
  std::ostringstream fail;
  std::uint32_t pairs = 0;
  for (const std::string& a : Catalog::factors()) {
    for (const std::string& b : Catalog::factors()) {
      const std::string expr = Catalog::pair_expr(a, b);
      GroupPtr g = cat.get(expr);
      if (g->order() > max_order) continue;
      ++pairs;
      const SigmaResult formula = sigma_product(g);
      const SigmaResult& oracle = cat.oracle_sigma(expr);
      if (!(formula.value == oracle.value)) {
        r.pass = false;
        fail << expr << ": formula=" << formula.value.to_string()
               << " oracle=" << oracle.value.to_string() << "; ";
      } else if (formula.value.is_finite() &&
                 (!formula.witness || !formula.witness->verified ||
                  formula.witness->members.size() != formula.value.finite_value())) {
        r.pass = false;
        fail << expr << ": bad witness; ";
      }
    }
  }
  r.detail = r.pass ? std::to_string(pairs) + " ordered pairs checked" : fail.str();
  r.seconds = sw.seconds();
  return r;
}

struct TrichotomyResults {
  CheckResult maximal_pool;
  CheckResult full_pool;
  CheckResult predicates;
};

namespace detail {

struct PredicateTally {
  std::uint64_t containment = 0, supplement = 0, diagonal = 0, intersection = 0;
  std::vector<std::string> failures;

  void run(const ProductCoverAnalysis& analysis, const GroupPtr& g,
           const std::vector<Subgroup>& normals, const Cover& cover, const SigmaValue& sigma,
           const std::string& label) {
    for (const Subgroup& f : normals) {
      ++containment;
      if (!check_normal_member_containment(cover, f))
        failures.push_back(label + ": normal-containment fails for |F|=" + std::to_string(f.size));
    }
    for (const Subgroup& n : normals) {
      if (!n.is_proper()) continue;
      ++supplement;
      if (!check_supplement_index_bound(g, n, cover).ok())
        failures.push_back(label + ": supplement-index bound fails for |N|=" +
                           std::to_string(n.size));
    }
    ++diagonal;
    if (!analysis.prime_diagonal_structure_ok(cover, sigma))
      failures.push_back(label + ": prime-diagonal structure fails");
    if (!analysis.touches_prime_diagonal(cover)) {
      ++intersection;
      if (!analysis.factor_in_intersection(cover))
        failures.push_back(label + ": no embedded factor in the intersection");
    }
  }
};

}  // namespace detail

// Every enumerated minimum cover classifies into one of the three shapes
// (over the maximal pool for all factor pairs, over all proper subgroups for
// small products), and the structure predicates hold on each.
inline TrichotomyResults check_cover_trichotomy(Catalog& cat, std::uint32_t max_order = 576,
                                                std::uint32_t sigma_limit = 6,
                                                std::size_t cover_cap = 10000) {
  TrichotomyResults out;
  out.maximal_pool =
      CheckResult{"every minimum cover over maximal subgroups matches one of the three shapes",
                  true, "", 0};
  out.full_pool = CheckResult{
      "every minimum cover over all proper subgroups matches one of the three shapes (|G| <= 36)",
      true, "", 0};
  out.predicates =
      CheckResult{"cover predicates hold on every enumerated minimum cover", true, "", 0};

  detail::PredicateTally tally;
  std::ostringstream d4, d5;
  std::uint64_t covers4 = 0, covers5 = 0, pairs4 = 0, skipped = 0;

  detail::Stopwatch sw4;
  for (const std::string& a : Catalog::factors()) {
    for (const std::string& b : Catalog::factors()) {
      const std::string expr = Catalog::pair_expr(a, b);
      GroupPtr g = cat.get(expr);
      if (g->order() > max_order) continue;
      const SigmaResult& oracle = cat.oracle_sigma(expr);
      if (!oracle.value.is_finite() || oracle.value.finite_value() > sigma_limit) continue;
      std::vector<Cover> covers;
      try {
        covers = enumerate_minimum_covers(g, cat.maximals(expr), oracle.value.finite_value(),
                                          cover_cap);
      } catch (const CapExceeded&) {
        ++skipped;
        continue;
      }
      ++pairs4;
      ProductCoverAnalysis analysis(g);
      const std::vector<Subgroup> normals = normal_subgroups(g);
      for (std::size_t i = 0; i < covers.size(); ++i) {
        ++covers4;
        const CoverClassification cls = analysis.classify(covers[i]);
        if (cls.which == CoverCase::kUnclassified) {
          out.maximal_pool.pass = false;
          d4 << expr << " cover#" << i << " unclassified; ";
        } else if (cls.which == CoverCase::kPrimeQuotient) {
          // structural part of the shape: the members intersect exactly in
          // the kernel, which has index p^2
          Bitset inter = covers[i].members.front().members;
          for (const Subgroup& m : covers[i].members) inter &= m.members;
          if (inter != cls.kernel->members ||
              g->order() != cls.kernel->size * cls.p * cls.p) {
            out.maximal_pool.pass = false;
            d4 << expr << " cover#" << i << " kernel structure broken; ";
          }
        }
        tally.run(analysis, g, normals, covers[i], oracle.value,
                  expr + " cover#" + std::to_string(i));
      }
    }
  }
  out.maximal_pool.seconds = sw4.seconds();
  out.maximal_pool.detail =
      out.maximal_pool.pass
          ? std::to_string(covers4) + " covers over " + std::to_string(pairs4) + " pairs" +
                (skipped ? " (" + std::to_string(skipped) + " skipped at cap)" : "")
          : d4.str();

  detail::Stopwatch sw5;
  for (const std::string& expr : Catalog::full_pool_products()) {
    GroupPtr g = cat.get(expr);
    if (g->order() > 36 || g->order() > max_order) continue;
    const SigmaResult& oracle = cat.oracle_sigma(expr);
    if (!oracle.value.is_finite()) continue;
    std::vector<Subgroup> pool;
    for (const Subgroup& s : all_subgroups(g))
      if (s.is_proper()) pool.push_back(s);
    const std::vector<Cover> covers =
        enumerate_minimum_covers(g, pool, oracle.value.finite_value(), 100000);
    ProductCoverAnalysis analysis(g);
    const std::vector<Subgroup> normals = normal_subgroups(g);
    for (std::size_t i = 0; i < covers.size(); ++i) {
      ++covers5;
      const CoverClassification cls = analysis.classify(covers[i]);
      if (cls.which == CoverCase::kUnclassified) {
        out.full_pool.pass = false;
        d5 << expr << " cover#" << i << " unclassified; ";
      }
      tally.run(analysis, g, normals, covers[i], oracle.value,
                expr + " full-pool cover#" + std::to_string(i));
    }
  }
  out.full_pool.seconds = sw5.seconds();
  out.full_pool.detail = out.full_pool.pass
                             ? std::to_string(covers5) + " covers over " +
                                   std::to_string(Catalog::full_pool_products().size()) + " products"
                             : d5.str();

  out.predicates.pass = tally.failures.empty();
  if (out.predicates.pass) {
    out.predicates.detail = std::to_string(tally.containment) + " containment + " +
                            std::to_string(tally.supplement) + " supplement + " +
                            std::to_string(tally.diagonal) + " diagonal + " +
                            std::to_string(tally.intersection) + " intersection checks";
  } else {
    std::ostringstream d7;
    for (std::size_t i = 0; i < tally.failures.size() && i < 8; ++i) d7 << tally.failures[i] << "; ";
    out.predicates.detail = d7.str();
  }
  out.predicates.seconds = out.maximal_pool.seconds + out.full_pool.seconds;
  return out;
}

// Cover builders produce verified covers of the advertised sizes on every
// applicable pair; the index-2 construction on S3 x S3 has the documented
// shape.
inline CheckResult check_cover_builders(Catalog& cat, std::uint32_t max_order = 576) {
  detail::Stopwatch sw;
  CheckResult r{"cover builders emit verified covers of the advertised sizes", true, "", 0};
  std::ostringstream fail;
  std::uint64_t built = 0;

  for (const std::string& a : Catalog::factors()) {
    for (const std::string& b : Catalog::factors()) {
      const std::string expr = Catalog::pair_expr(a, b);
      GroupPtr g = cat.get(expr);
      if (g->order() > max_order) continue;
      const ProductStructure& ps = *g->product();
      try {
        const SigmaResult& sa = cat.oracle_sigma(a);
        if (sa.value.is_finite()) {
          // rebuild the witness against this product's factor instance
          Cover left_factor{ps.left, {}, false};
          for (const Subgroup& m : sa.witness->members)
            left_factor.members.push_back(subgroup_from_mask(ps.left, m.members));
          left_factor.verified = is_cover(ps.left, left_factor.members);
          Cover c = build_cover_factor_left(g, left_factor);
          ++built;
          if (!c.verified || c.members.size() != sa.value.finite_value()) {
            r.pass = false;
            fail << expr << ": bad left-factor cover; ";
          }
        }
        const SigmaResult& sb = cat.oracle_sigma(b);
        if (sb.value.is_finite()) {
          Cover right_factor{ps.right, {}, false};
          for (const Subgroup& m : sb.witness->members)
            right_factor.members.push_back(subgroup_from_mask(ps.right, m.members));
          right_factor.verified = is_cover(ps.right, right_factor.members);
          Cover c = build_cover_factor_right(g, right_factor);
          ++built;
          if (!c.verified || c.members.size() != sb.value.finite_value()) {
            r.pass = false;
            fail << expr << ": bad right-factor cover; ";
          }
        }
        for (const Subgroup& n1 : normal_subgroups(ps.left)) {
          const std::uint32_t p = n1.index();
          if (p < 2 || prime_factors(p) != std::vector<std::uint32_t>{p}) continue;
          for (const Subgroup& n2 : normal_subgroups(ps.right)) {
            if (n2.index() != p) continue;
            Cover c = build_cover_prime_quotient(g, n1, n2);
            ++built;
            if (!c.verified || c.members.size() != p + 1) {
              r.pass = false;
              fail << expr << ": bad prime-quotient cover p=" << p << "; ";
            }
          }
        }
      } catch (const Error& e) {
        r.pass = false;
        fail << expr << ": " << e.what() << "; ";
      }
    }
  }

  // index-2 construction on S3 x S3: size 3, members normal of index 2,
  // intersection of index 4
  {
    GroupPtr g = cat.get(Catalog::pair_expr("S3", "S3"));
    const ProductStructure& ps = *g->product();
    auto pick_index2 = [](const GroupPtr& h) -> Subgroup {
      for (const Subgroup& n : normal_subgroups(h))
        if (n.index() == 2) return n;
      throw std::logic_error("no index-2 normal subgroup");
    };
    Cover c = build_cover_prime_quotient(g, pick_index2(ps.left), pick_index2(ps.right));
    ++built;
    Bitset inter = c.members.front().members;
    bool ok = c.verified && c.members.size() == 3;
    for (const Subgroup& m : c.members) {
      ok = ok && m.index() == 2 && is_normal(g, m);
      inter &= m.members;
    }
    ok = ok && g->order() / inter.count() == 4;
    if (!ok) {
      r.pass = false;
      fail << "S3 x S3 index-2 construction has the wrong shape; ";
    }
  }

  r.detail = r.pass ? std::to_string(built) + " covers built and verified" : fail.str();
  r.seconds = sw.seconds();
  return r;
}

// Coprime factor orders: sigma of the product is the smaller factor sigma.
inline CheckResult check_coprime_sigma(Catalog& cat, std::uint32_t max_order = 576) {
  detail::Stopwatch sw;
  CheckResult r{"coprime factor orders give sigma = min(sigma(H1), sigma(H2))", true, "", 0};
  std::ostringstream fail;
  std::uint32_t pairs = 0;
  for (const std::string& a : Catalog::factors()) {
    for (const std::string& b : Catalog::factors()) {
      GroupPtr ha = cat.get(a), hb = cat.get(b);
      if (detail::gcd64(ha->order(), hb->order()) != 1) continue;
      const std::string expr = Catalog::pair_expr(a, b);
      if (cat.get(expr)->order() > max_order) continue;
      ++pairs;
      const SigmaValue expected = min(cat.oracle_sigma(a).value, cat.oracle_sigma(b).value);
      const SigmaValue got = cat.oracle_sigma(expr).value;
      if (!(got == expected)) {
        r.pass = false;
        fail << expr << ": sigma=" << got.to_string() << " expected " << expected.to_string()
               << "; ";
      }
    }
  }
  r.detail = r.pass ? std::to_string(pairs) + " coprime pairs checked" : fail.str();
  r.seconds = sw.seconds();
  return r;
}

// Lifting a minimum cover of G/N through the quotient map gives a verified
// cover of G of size sigma(G/N) >= sigma(G).
inline CheckResult check_quotient_lift_monotonicity(Catalog& cat) {
  detail::Stopwatch sw;
  CheckResult r{"lifted quotient covers verify and bound sigma from above", true, "", 0};
  std::ostringstream fail;
  std::uint64_t lifts = 0;

  std::vector<std::string> exprs = Catalog::factors();
  for (const std::string& e : Catalog::small_products()) exprs.push_back(e);
  for (const std::string& expr : exprs) {
    GroupPtr g = cat.get(expr);
    if (is_cyclic(g)) continue;
    const SigmaValue sigma_g = cat.oracle_sigma(expr).value;
    for (const Subgroup& n : normal_subgroups(g)) {
      if (!n.is_proper()) continue;
      Quotient q = quotient(g, n);
      if (is_cyclic(q.group)) continue;
      const SigmaResult sq = sigma_bruteforce(q.group, maximal_subgroups(q.group));
      Cover lifted = lift_cover(*sq.witness, q.onto);
      ++lifts;
      const bool ok = lifted.verified && lifted.members.size() == sq.value.finite_value() &&
                      sigma_g.is_finite() && sigma_g.finite_value() <= sq.value.finite_value();
      if (!ok) {
        r.pass = false;
        fail << expr << " /N(|N|=" << n.size << "): lift size " << lifted.members.size()
               << " vs sigma(G)=" << sigma_g.to_string() << "; ";
      }
    }
  }
  r.detail = r.pass ? std::to_string(lifts) + " lifts checked" : fail.str();
  r.seconds = sw.seconds();
  return r;
}

// Stretch: the order-60 alternating group. Exact sigma agrees with an
// exhaustive subset scan over its maximal subgroups and respects the
// element-count lower bound; the square of the group satisfies the product
// formula with no common prime quotient.
inline CheckResult check_alternating5_stretch(Catalog& cat) {
  detail::Stopwatch sw;
  CheckResult r{"stretch: A5 exact sigma (oracle vs exhaustive scan) and A5 x A5 formula", true,
                "", 0};
  std::ostringstream fail;

  GroupPtr a5 = cat.get("A5");
  const std::vector<Subgroup>& maxes = cat.maximals("A5");
  const SigmaResult& res = cat.oracle_sigma("A5");

  std::uint32_t largest = 0;
  for (const Subgroup& m : maxes) largest = std::max(largest, m.size);
  const std::uint32_t element_bound = (a5->order() - 1 + largest - 2) / (largest - 1);
  if (!res.value.is_finite() || res.value.finite_value() < element_bound) {
    r.pass = false;
    fail << "sigma(A5)=" << res.value.to_string() << " below element bound "
           << element_bound << "; ";
  }

  // exhaustive scan over all subsets of the maximal subgroups
  {
    const std::uint32_t n = a5->order();
    std::vector<Bitset> masks;
    for (const Subgroup& m : maxes) masks.push_back(m.members);
    std::uint32_t best = std::uint32_t(maxes.size()) + 1;
    const std::uint64_t total = std::uint64_t(1) << maxes.size();
    for (std::uint64_t sel = 1; sel < total; ++sel) {
      const std::uint32_t size = std::uint32_t(std::popcount(sel));
      if (size >= best) continue;
      Bitset acc(n);
      for (std::uint32_t m = 0; m < maxes.size(); ++m)
        if ((sel >> m) & 1) acc |= masks[m];
      if (acc.all()) best = size;
    }
    if (!(res.value == best)) {
      r.pass = false;
      fail << "oracle " << res.value.to_string() << " vs exhaustive " << best << "; ";
    }
  }

  {
    GroupPtr square = cat.get(Catalog::pair_expr("A5", "A5"));
    const SigmaResult sp = sigma_product(square);
    if (!common_prime_quotients(square->product()->left, square->product()->right).empty()) {
      r.pass = false;
      fail << "unexpected common prime quotient; ";
    }
    if (!(sp.value == res.value) || !sp.witness || !sp.witness->verified) {
      r.pass = false;
      fail << "square: formula " << sp.value.to_string() << " vs factor sigma "
             << res.value.to_string() << "; ";
    }
  }

  if (r.pass)
    r.detail = "sigma(A5) = " + res.value.to_string() + " over " + std::to_string(maxes.size()) +
               " maximal subgroups";
  else
    r.detail = fail.str();
  r.seconds = sw.seconds();
  return r;
}

}  // namespace groupcover
