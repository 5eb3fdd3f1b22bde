#include <doctest.h>

#include "groupcover/expr.hpp"
#include "groupcover/morphisms.hpp"
#include "oracles.hpp"

using namespace groupcover;

TEST_SUITE("morphisms") {

TEST_CASE("isomorphism counts on small groups") {
  auto c3 = evaluate_expression("C3");
  CHECK(find_isomorphisms(c3, c3).size() == 2);

  CHECK(find_isomorphisms(evaluate_expression("C2 x C2"), evaluate_expression("C4")).empty());

  auto s3 = evaluate_expression("S3");
  CHECK(oracle::count_isomorphisms_bruteforce(s3, s3) == 6);
  CHECK(find_isomorphisms(s3, s3).size() == 6);
}

TEST_CASE("automorphism counts agree with exhaustive search up to order 12") {
  for (const char* expr : {"C2", "C3", "C4", "C5", "C6", "C2 x C2", "S3", "D8", "Q8", "D10",
                           "A4", "C3 x C3", "D12"}) {
    auto g = evaluate_expression(expr);
    CAPTURE(expr);
    CHECK(find_isomorphisms(g, g).size() == oracle::count_isomorphisms_bruteforce(g, g));
  }
}

TEST_CASE("returned maps are order-preserving bijective homomorphisms") {
  auto q8 = evaluate_expression("Q8");
  const std::vector<Isomorphism> autos = find_isomorphisms(q8, q8);
  CHECK(autos.size() == 24);
  bool identity_found = false;
  for (const Isomorphism& phi : autos) {
    std::vector<bool> hit(q8->order(), false);
    bool is_identity = true;
    for (std::uint32_t a = 0; a < q8->order(); ++a) {
      CHECK_FALSE(hit[phi(Elem(a))]);
      hit[phi(Elem(a))] = true;
      CHECK(element_order(q8, phi(Elem(a))) == element_order(q8, Elem(a)));
      is_identity = is_identity && phi(Elem(a)) == a;
      for (std::uint32_t b = 0; b < q8->order(); ++b)
        CHECK(phi(q8->mul(Elem(a), Elem(b))) == q8->mul(phi(Elem(a)), phi(Elem(b))));
    }
    identity_found = identity_found || is_identity;
  }
  CHECK(identity_found);
}

TEST_CASE("isomorphisms across different presentations") {
  // same abstract groups, different generating sets and element orders
  auto d6 = evaluate_expression("D6");
  auto s3 = evaluate_expression("S3");
  CHECK(find_isomorphisms(d6, s3).size() == 6);
  CHECK(oracle::count_isomorphisms_bruteforce(d6, s3) == 6);

  auto c2c3 = evaluate_expression("C2 x C3");
  auto c6 = evaluate_expression("C6");
  CHECK(find_isomorphisms(c2c3, c6).size() == 2);

  auto v4 = evaluate_expression("C2 x C2");
  auto d4 = evaluate_expression("D4");
  CHECK(find_isomorphisms(v4, d4).size() == 6);

  // same order, non-isomorphic
  auto d8 = evaluate_expression("D8");
  auto q8 = evaluate_expression("Q8");
  CHECK(find_isomorphisms(d8, q8).empty());
  CHECK(find_isomorphisms(d8, evaluate_expression("C2 x C4")).empty());
}

TEST_CASE("limit truncates the enumeration") {
  auto c3 = evaluate_expression("C3");
  CHECK(find_isomorphisms(c3, c3, 1).size() == 1);
}

TEST_CASE("cap guards the search") {
  auto s3 = evaluate_expression("S3");
  CHECK_THROWS_AS(find_isomorphisms(s3, s3, std::nullopt, 4), CapExceeded);
}

TEST_CASE("common prime quotients") {
  auto c2 = evaluate_expression("C2");
  CHECK(common_prime_quotients(c2, c2) == std::vector<std::uint32_t>{2});

  auto s3 = evaluate_expression("S3");
  auto c6 = evaluate_expression("C6");
  CHECK(commutator_subgroup(s3).size == 3);  // abelianization of order 2
  CHECK(commutator_subgroup(c6).size == 1);  // abelianization of order 6
  CHECK(common_prime_quotients(s3, c6) == std::vector<std::uint32_t>{2});

  auto a5 = evaluate_expression("A5");
  CHECK(commutator_subgroup(a5).size == 60);  // perfect
  CHECK(common_prime_quotients(a5, s3).empty());

  CHECK(common_prime_quotients(c6, c6) == std::vector<std::uint32_t>({2, 3}));
}

TEST_CASE("common primes coincide with index-p normal subgroups of both factors") {
  const std::vector<const char*> catalog = {"C6", "S3", "D8", "A4", "C3 x C3"};
  for (const char* ea : catalog) {
    for (const char* eb : catalog) {
      auto h1 = evaluate_expression(ea);
      auto h2 = evaluate_expression(eb);
      const std::vector<std::uint32_t> primes = common_prime_quotients(h1, h2);
      for (std::uint32_t p : {2u, 3u, 5u}) {
        auto has_index_p = [&](const GroupPtr& h) {
          for (const Subgroup& n : normal_subgroups(h))
            if (n.index() == p) return true;
          return false;
        };
        const bool in_set = std::find(primes.begin(), primes.end(), p) != primes.end();
        CAPTURE(ea);
        CAPTURE(eb);
        CAPTURE(p);
        CHECK(in_set == (has_index_p(h1) && has_index_p(h2)));
      }
    }
  }
}

}  // TEST_SUITE
