#include <doctest.h>

#include <algorithm>

#include "groupcover/expr.hpp"
#include "groupcover/lattice.hpp"
#include "oracles.hpp"

using namespace groupcover;

namespace {

std::vector<Bitset> masks_of(const std::vector<Subgroup>& subs) {
  std::vector<Bitset> out;
  for (const Subgroup& s : subs) out.push_back(s.members);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("subgroup lattice of small groups") {
  CHECK(all_subgroups(evaluate_expression("C4")).size() == 3);
  CHECK(all_subgroups(evaluate_expression("C2 x C2")).size() == 5);

  auto s3 = evaluate_expression("S3");
  const std::vector<Bitset> expected = oracle::exhaustive_subgroup_masks(s3);
  CHECK(expected.size() == 6);
  CHECK(masks_of(all_subgroups(s3)) == expected);

  auto q8 = evaluate_expression("Q8");
  CHECK(masks_of(all_subgroups(q8)) == oracle::exhaustive_subgroup_masks(q8));
  CHECK(all_subgroups(q8).size() == 6);
}

TEST_CASE("subgroup sizes divide the group order and lists are sorted") {
  for (const char* expr : {"S3", "A4", "D12", "S3 x C2"}) {
    auto g = evaluate_expression(expr);
    const std::vector<Subgroup> subs = all_subgroups(g);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      CHECK(g->order() % subs[i].size == 0);
      if (i) CHECK(!canonical_less(subs[i], subs[i - 1]));
    }
  }
}

TEST_CASE("lattice cap") {
  CHECK_THROWS_AS(all_subgroups(evaluate_expression("S3"), 4), LatticeCapExceeded);
}

TEST_CASE("maximal subgroups via the lattice") {
  auto c4 = evaluate_expression("C4");
  const std::vector<Subgroup> m1 = maximal_subgroups_via_lattice(c4);
  REQUIRE(m1.size() == 1);
  CHECK(m1[0].size == 2);

  CHECK(maximal_subgroups_via_lattice(evaluate_expression("C2 x C2")).size() == 3);

  // filter the exhaustive lattice independently
  auto s3 = evaluate_expression("S3");
  const std::vector<Bitset> lattice = oracle::exhaustive_subgroup_masks(s3);
  std::vector<Bitset> expected;
  for (const Bitset& h : lattice) {
    if (h.count() == s3->order()) continue;
    bool maximal = true;
    for (const Bitset& k : lattice)
      if (k.count() < s3->order() && k.count() > h.count() && h.is_subset_of(k)) maximal = false;
    if (maximal) expected.push_back(h);
  }
  std::sort(expected.begin(), expected.end());
  CHECK(expected.size() == 4);
  CHECK(masks_of(maximal_subgroups_via_lattice(s3)) == expected);
}

TEST_CASE("normality test") {
  auto s3 = evaluate_expression("S3");
  const std::vector<Subgroup> subs = all_subgroups(s3);
  for (const Subgroup& h : subs) {
    CHECK(is_normal(s3, h) == oracle::is_normal_mask(s3, h.members));
    if (h.size == 3) CHECK(is_normal(s3, h));
    if (h.size == 2) CHECK_FALSE(is_normal(s3, h));
    if (h.size == 6) CHECK(is_normal(s3, h));
  }
}

TEST_CASE("normal subgroups match the lattice filter on small groups") {
  for (const char* expr : {"S3", "A4", "Q8", "D12", "C2 x C6", "S3 x S3"}) {
    auto g = evaluate_expression(expr);
    std::vector<Bitset> expected;
    for (const Subgroup& h : all_subgroups(g))
      if (is_normal(g, h)) expected.push_back(h.members);
    std::sort(expected.begin(), expected.end());
    CHECK(masks_of(normal_subgroups(g)) == expected);
  }
}

TEST_CASE("maximal normal subgroups") {
  auto s3 = evaluate_expression("S3");
  const std::vector<Subgroup> mn = maximal_normal_subgroups(s3);
  REQUIRE(mn.size() == 1);
  CHECK(mn[0].size == 3);

  CHECK(maximal_normal_subgroups(evaluate_expression("C2 x C2")).size() == 3);

  auto a4 = evaluate_expression("A4");
  const std::vector<Subgroup> mna = maximal_normal_subgroups(a4);
  REQUIRE(mna.size() == 1);
  CHECK(mna[0].size == 4);
}

TEST_CASE("quotients by maximal normal subgroups are simple") {
  for (const char* expr : {"S3", "A4", "D12", "S3 x S3"}) {
    auto g = evaluate_expression(expr);
    for (const Subgroup& n : maximal_normal_subgroups(g)) {
      Quotient q = quotient(g, n);
      CHECK(normal_subgroups(q.group).size() == 2);  // trivial and full only
    }
  }
}

TEST_CASE("quotient groups and epimorphisms") {
  auto s3 = evaluate_expression("S3");
  const std::vector<Subgroup> s3_subs = all_subgroups(s3);
  const Subgroup a3 = *std::find_if(s3_subs.begin(), s3_subs.end(),
                                    [](const Subgroup& h) { return h.size == 3; });
  Quotient q = quotient(s3, a3);
  CHECK(q.group->order() == 2);
  CHECK(q.onto.kernel.members == a3.members);

  auto v4 = evaluate_expression("C2 x C2");
  const std::vector<Subgroup> v4_subs = all_subgroups(v4);
  const Subgroup c2 = *std::find_if(v4_subs.begin(), v4_subs.end(),
                                    [](const Subgroup& h) { return h.size == 2; });
  CHECK(quotient(v4, c2).group->order() == 2);

  auto a4 = evaluate_expression("A4");
  const Subgroup klein = maximal_normal_subgroups(a4)[0];
  Quotient qa = quotient(a4, klein);
  CHECK(qa.group->order() == 3);

  // coset-partition oracle: the map classes agree with brute-force cosets
  const auto cosets = oracle::coset_partition(a4, klein.members);
  REQUIRE(cosets.size() == 3);
  for (const auto& coset : cosets) {
    for (Elem e : coset) CHECK(qa.onto(e) == qa.onto(coset.front()));
  }

  // identity coset first, representatives are minimal
  CHECK(qa.onto(0) == 0);
}

TEST_CASE("quotient by a non-normal subgroup fails") {
  auto s3 = evaluate_expression("S3");
  const std::vector<Subgroup> subs = all_subgroups(s3);
  const Subgroup c2 = *std::find_if(subs.begin(), subs.end(),
                                    [](const Subgroup& h) { return h.size == 2; });
  CHECK_THROWS_AS(quotient(s3, c2), NotNormal);
}

}  // TEST_SUITE
