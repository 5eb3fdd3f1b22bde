#include <doctest.h>

#include <algorithm>

#include "groupcover/expr.hpp"
#include "groupcover/theorem.hpp"
#include "oracles.hpp"

using namespace groupcover;

namespace {

std::vector<Bitset> masks_of(const std::vector<Subgroup>& subs) {
  std::vector<Bitset> out;
  for (const Subgroup& s : subs) out.push_back(s.members);
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup normal_of_index(const GroupPtr& g, std::uint32_t index) {
  for (const Subgroup& n : normal_subgroups(g))
    if (n.index() == index) return n;
  throw std::logic_error("no normal subgroup of that index");
}

}  // namespace

TEST_SUITE("theorem_engine") {

TEST_CASE("product sigma formula with oracle cross-checks") {
  auto a = evaluate_expression("C2 x C4");
  CHECK(sigma_product(a).value == 3);
  CHECK(sigma_bruteforce(a, maximal_subgroups(a)).value == 3);

  auto b = evaluate_expression("S3 x S3");
  CHECK(sigma_product(b).value == 3);

  auto c = evaluate_expression("S3 x C5");
  const SigmaResult rc = sigma_product(c);
  CHECK(rc.value == 4);
  CHECK(rc.method == SigmaMethod::kTheorem);
  CHECK(rc.witness->verified);
  CHECK(sigma_bruteforce(c, maximal_subgroups(c)).value == 4);

  auto d = evaluate_expression("C2 x C3");
  CHECK(sigma_product(d).value.is_infinite());
}

TEST_CASE("left-factor cover builder") {
  auto g = evaluate_expression("S3 x C5");
  const ProductStructure& ps = *g->product();
  const SigmaResult s3_sigma = sigma_bruteforce(ps.left, maximal_subgroups(ps.left));
  const Cover built = build_cover_factor_left(g, *s3_sigma.witness);
  CHECK(built.verified);
  CHECK(built.members.size() == 4);

  auto h = evaluate_expression("(C2 x C2) x C3");
  const ProductStructure& hps = *h->product();
  const SigmaResult v4_sigma = sigma_bruteforce(hps.left, maximal_subgroups(hps.left));
  const Cover hb = build_cover_factor_left(h, *v4_sigma.witness);
  CHECK(hb.verified);
  CHECK(hb.members.size() == 3);
}

TEST_CASE("factor builders reject cyclic factors and unverified covers") {
  auto g = evaluate_expression("C4 x S3");
  const ProductStructure& ps = *g->product();
  Cover bogus{ps.left, {trivial_subgroup(ps.left)}, true};
  CHECK_THROWS_AS(build_cover_factor_left(g, bogus), NotMinimal);

  Cover unverified{ps.right, {}, false};
  CHECK_THROWS_AS(build_cover_factor_right(g, unverified), NotMinimal);
}

TEST_CASE("prime-quotient cover builder") {
  auto v4 = evaluate_expression("C2 x C2");
  const Cover c1 = build_cover_prime_quotient(v4, trivial_subgroup(v4->product()->left),
                                              trivial_subgroup(v4->product()->right));
  CHECK(c1.verified);
  CHECK(c1.members.size() == 3);
  CHECK(masks_of(c1.members) == masks_of(maximal_subgroups(v4)));

  auto c3c3 = evaluate_expression("C3 x C3");
  const Cover c2 = build_cover_prime_quotient(c3c3, trivial_subgroup(c3c3->product()->left),
                                              trivial_subgroup(c3c3->product()->right));
  CHECK(c2.verified);
  CHECK(c2.members.size() == 4);

  auto s3s3 = evaluate_expression("S3 x S3");
  const ProductStructure& ps = *s3s3->product();
  const Cover c3 =
      build_cover_prime_quotient(s3s3, normal_of_index(ps.left, 2), normal_of_index(ps.right, 2));
  CHECK(c3.verified);
  REQUIRE(c3.members.size() == 3);
  Bitset inter = c3.members.front().members;
  for (const Subgroup& m : c3.members) {
    CHECK(m.index() == 2);
    CHECK(is_normal(s3s3, m));
    inter &= m.members;
  }
  CHECK(s3s3->order() / inter.count() == 4);
}

TEST_CASE("prime-quotient builder rejects bad kernels") {
  auto s3s3 = evaluate_expression("S3 x S3");
  const ProductStructure& ps = *s3s3->product();
  std::vector<Subgroup> subs = all_subgroups(ps.left);
  const Subgroup c2 = *std::find_if(subs.begin(), subs.end(),
                                    [](const Subgroup& h) { return h.size == 2; });
  CHECK_THROWS_AS(build_cover_prime_quotient(s3s3, c2, normal_of_index(ps.right, 2)),
                  BadQuotients);

  auto c6c6 = evaluate_expression("C6 x C6");
  const ProductStructure& cps = *c6c6->product();
  CHECK_THROWS_AS(
      build_cover_prime_quotient(c6c6, normal_of_index(cps.left, 2), normal_of_index(cps.right, 3)),
      BadQuotients);
}

TEST_CASE("classification of benchmark covers") {
  auto v4 = evaluate_expression("C2 x C2");
  const std::vector<Cover> v4_covers =
      enumerate_minimum_covers(v4, maximal_subgroups(v4), 3, 10);
  REQUIRE(v4_covers.size() == 1);
  const CoverClassification v4_cls = classify_cover(v4, v4_covers.front());
  CHECK(v4_cls.which == CoverCase::kPrimeQuotient);
  CHECK(v4_cls.p == 2);
  REQUIRE(v4_cls.n1.has_value());
  CHECK(v4_cls.n1->size == 1);
  CHECK(v4_cls.n2->size == 1);

  auto sc5 = evaluate_expression("S3 x C5");
  const SigmaResult sp = sigma_product(sc5);
  const CoverClassification c1 = classify_cover(sc5, *sp.witness);
  CHECK(c1.which == CoverCase::kFactorLeft);
  CHECK(c1.factor_cover->members.size() == 4);

  auto s3s3 = evaluate_expression("S3 x S3");
  const std::vector<Cover> covers = enumerate_minimum_covers(s3s3, maximal_subgroups(s3s3), 3, 10);
  REQUIRE(covers.size() == 1);
  const CoverClassification c3 = classify_cover(s3s3, covers.front());
  CHECK(c3.which == CoverCase::kPrimeQuotient);
  CHECK(c3.p == 2);
  REQUIRE(c3.n1.has_value());
  CHECK(c3.n1->size == 3);
  CHECK(c3.n2->size == 3);
}

TEST_CASE("pencils through non-split kernels classify as prime-quotient covers") {
  auto g = evaluate_expression("C2 x (C2 x C2)");
  const std::vector<Cover> covers = enumerate_minimum_covers(g, maximal_subgroups(g), 3, 100);
  REQUIRE(covers.size() == 7);
  ProductCoverAnalysis analysis(g);
  std::size_t factor_shaped = 0, split = 0, non_split = 0;
  for (const Cover& c : covers) {
    const CoverClassification cls = analysis.classify(c);
    REQUIRE(cls.which != CoverCase::kUnclassified);
    if (cls.which == CoverCase::kFactorRight || cls.which == CoverCase::kFactorLeft) {
      ++factor_shaped;
    } else {
      CHECK(cls.p == 2);
      CHECK(cls.kernel->size == 2);
      if (cls.n1 && cls.n2)
        ++split;
      else
        ++non_split;
    }
  }
  CHECK(factor_shaped == 1);
  CHECK(split == 3);
  CHECK(non_split == 3);
}

TEST_CASE("classification rejects unverified or wrong-size covers") {
  auto v4 = evaluate_expression("C2 x C2");
  const std::vector<Subgroup> maxes = maximal_subgroups(v4);
  Cover unverified{v4, maxes, false};
  CHECK_THROWS_AS(classify_cover(v4, unverified), NotVerified);
  Cover wrong{v4, {maxes[0], maxes[1]}, false};
  wrong.verified = true;  // deliberately mislabeled to probe the size check
  CHECK_THROWS_AS(classify_cover(v4, wrong), WrongSize);
}

TEST_CASE("normal subgroups absorbed by minimum covers") {
  auto v4 = evaluate_expression("C2 x C2");
  const Cover v4_cover = enumerate_minimum_covers(v4, maximal_subgroups(v4), 3, 10).front();
  for (const Subgroup& f : normal_subgroups(v4))
    CHECK(check_normal_member_containment(v4_cover, f));

  auto s3s3 = evaluate_expression("S3 x S3");
  const Cover cover = enumerate_minimum_covers(s3s3, maximal_subgroups(s3s3), 3, 10).front();
  // F = A3 x A3 satisfies F*X != G for every member, hence lies in all
  const Subgroup f = normal_of_index(s3s3, 4);
  CHECK(f.size == 9);
  for (const Subgroup& x : cover.members) {
    CHECK(std::uint64_t(f.size) * x.size / f.members.count_and(x.members) != s3s3->order());
    CHECK(f.members.is_subset_of(x.members));
  }
  CHECK(check_normal_member_containment(cover, f));

  auto s3 = evaluate_expression("S3");
  const Cover s3_cover = enumerate_minimum_covers(s3, maximal_subgroups(s3), 4, 10).front();
  const Subgroup a3 = normal_of_index(s3, 2);
  CHECK(check_normal_member_containment(s3_cover, a3));  // vacuous: A3 * C2 = S3
}

TEST_CASE("supplement index bounds") {
  auto v4 = evaluate_expression("C2 x C2");
  const Cover v4_cover = enumerate_minimum_covers(v4, maximal_subgroups(v4), 3, 10).front();
  // any order-2 subgroup: one member absorbs it, the other two supplement
  const Subgroup n = normal_of_index(v4, 2);
  const SupplementIndexReport rep = check_supplement_index_bound(v4, n, v4_cover);
  CHECK(rep.applicable);
  CHECK(rep.holds);
  CHECK(rep.absorbed_count == 1);
  CHECK(rep.supplement_count == 2);
  CHECK(rep.min_index == 2);

  auto s3 = evaluate_expression("S3");
  const Cover s3_cover = enumerate_minimum_covers(s3, maximal_subgroups(s3), 4, 10).front();
  const SupplementIndexReport rs = check_supplement_index_bound(s3, normal_of_index(s3, 2), s3_cover);
  CHECK(rs.applicable);
  CHECK(rs.holds);
  CHECK(rs.absorbed_count == 1);
  CHECK(rs.supplement_count == 3);
  CHECK(rs.min_index == 3);

  // trivial normal subgroup: every member absorbs it, the lemma does not apply
  const SupplementIndexReport rt =
      check_supplement_index_bound(v4, trivial_subgroup(v4), v4_cover);
  CHECK_FALSE(rt.applicable);
  CHECK(rt.ok());
}

TEST_CASE("prime-index diagonal structure") {
  auto v4 = evaluate_expression("C2 x C2");
  const Cover v4_cover = enumerate_minimum_covers(v4, maximal_subgroups(v4), 3, 10).front();
  CHECK(check_prime_diagonal_structure(v4, v4_cover, SigmaValue::finite(3)));

  auto s3s3 = evaluate_expression("S3 x S3");
  const Cover cover = enumerate_minimum_covers(s3s3, maximal_subgroups(s3s3), 3, 10).front();
  CHECK(check_prime_diagonal_structure(s3s3, cover, SigmaValue::finite(3)));

  auto sc5 = evaluate_expression("S3 x C5");
  const SigmaResult sp = sigma_product(sc5);
  CHECK(check_prime_diagonal_structure(sc5, *sp.witness, sp.value));  // vacuous: no diagonals
}

TEST_CASE("embedded factor in the intersection when no prime diagonal is touched") {
  auto sc5 = evaluate_expression("S3 x C5");
  const SigmaResult sp = sigma_product(sc5);
  CHECK(check_factor_in_intersection(sc5, *sp.witness));

  auto vc3 = evaluate_expression("(C2 x C2) x C3");
  const SigmaResult vp = sigma_product(vc3);
  CHECK(check_factor_in_intersection(vc3, *vp.witness));

  auto v4 = evaluate_expression("C2 x C2");
  const Cover v4_cover = enumerate_minimum_covers(v4, maximal_subgroups(v4), 3, 10).front();
  CHECK_THROWS_AS(check_factor_in_intersection(v4, v4_cover), PreconditionViolated);
}

TEST_CASE("sigma formula picks the smallest achievable value") {
  // no common prime: minimum of the factor values
  auto g1 = evaluate_expression("A4 x S3");
  CHECK(sigma_product(g1).value == 4);  // min(5, 4)
  // common prime 2 beats both factor values
  auto g2 = evaluate_expression("D8 x D10");
  CHECK(sigma_product(g2).value == 3);
  // non-coprime orders without a common prime quotient
  auto g3 = evaluate_expression("C5 x D10");
  CHECK(sigma_product(g3).value == 6);
  CHECK(sigma_bruteforce(g3, maximal_subgroups(g3)).value == 6);
}

}  // TEST_SUITE
