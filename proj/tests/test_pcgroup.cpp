#include "doctest.h"

#include "common.hpp"
#include "oracles.hpp"
#include "pg/classify.hpp"
#include "pg/group.hpp"
#include "pg/pquotient.hpp"

using namespace pg;
using namespace pgtest;

TEST_CASE("cyclic and elementary abelian groups refine correctly") {
  for (int p : {2, 3, 5}) {
    auto C = group_of_template(cyclic(p, 1));
    CHECK(C->size() == static_cast<uint32_t>(p));
    CHECK(C->npc() == 1);
    auto C2 = group_of_template(cyclic(p, 3));
    CHECK(C2->size() == static_cast<uint32_t>(p * p * p));
    CHECK(C2->order_exp(C2->template_image(0)) == 3);
    auto E = group_of_template(elementary(p, 3));
    CHECK(E->size() == static_cast<uint32_t>(p * p * p));
    for (uint32_t x = 0; x < E->size(); ++x) CHECK(E->order_exp(x) <= 1);
  }
}

TEST_CASE("Q8 refines to order 8 and matches the quaternion table oracle") {
  auto G = group_of_template(q8());
  REQUIRE(G->size() == 8);
  uint32_t i = G->template_image(0), j = G->template_image(1);
  // i*i is the unique central involution
  uint32_t m1 = G->mult(i, i);
  CHECK(m1 != 0);
  CHECK(G->mult(m1, m1) == 0);
  CHECK(is_central_element(*G, m1));
  CHECK(G->mult(j, j) == m1);

  auto Q = quaternion8();
  CHECK(fingerprint_basic(G) == fingerprint_basic(Q));
}

TEST_CASE("D8 matches the permutation oracle and differs from Q8") {
  auto D = group_of_template(dihedral(3));
  REQUIRE(D->size() == 8);
  auto Dperm = dihedral_2n(3);
  CHECK(fingerprint_basic(D) == fingerprint_basic(Dperm));
  auto Q = group_of_template(q8());
  CHECK(fingerprint_basic(D) != fingerprint_basic(Q));
  // census: D8 has 5 involutions, Q8 has 1
  CHECK(order_census(*D) == std::vector<long long>{1, 5, 2});
  CHECK(order_census(*Q) == std::vector<long long>{1, 1, 6});
}

TEST_CASE("metacyclic templates at several parameters") {
  for (auto [p, n, m] : std::vector<std::array<int, 3>>{{2, 2, 1}, {2, 3, 2}, {3, 2, 1}, {5, 2, 2}}) {
    auto G = group_of_template(mpnm(p, n, m));
    long long expect = 1;
    for (int t = 0; t < n + m; ++t) expect *= p;
    CHECK(G->size() == expect);
    CHECK(G->order_exp(G->template_image(0)) == n);
  }
}

TEST_CASE("nonmetacyclic minimal nonabelian M_p(1,1,1)") {
  auto G = group_of_template(mpnm1(3, 1, 1));
  REQUIRE(G->size() == 27);
  uint32_t a = G->template_image(0), b = G->template_image(1), c = G->template_image(2);
  CHECK(G->mult(a, b) != G->mult(b, a));
  // ab and ba differ exactly by c = [a,b]
  CHECK(G->mult(G->mult(b, a), G->commutator(a, b)) == G->mult(a, b));
  CHECK(G->commutator(a, b) == c);
  for (uint32_t x = 0; x < G->size(); ++x) CHECK(G->order_exp(x) <= 1);
}

TEST_CASE("multiplication is associative on a deterministic sample") {
  auto G = group_of_template(mpnm1(3, 2, 1));  // order 3^4
  unsigned long long s = 12345;
  auto rnd = [&]() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return static_cast<uint32_t>(s % G->size());
  };
  for (int t = 0; t < 10000; ++t) {
    uint32_t a = rnd(), b = rnd(), c = rnd();
    CHECK(G->mult(G->mult(a, b), c) == G->mult(a, G->mult(b, c)));
  }
  // identity and inverses behave
  for (uint32_t x = 0; x < G->size(); ++x) {
    CHECK(G->mult(x, 0) == x);
    CHECK(G->mult(0, x) == x);
    CHECK(G->mult(x, G->inverse(x)) == 0);
  }
}

TEST_CASE("pack/unpack is a bijection on all exponent vectors") {
  auto G = group_of_template(mpnm(3, 2, 2));
  for (uint32_t x = 0; x < G->size(); ++x) CHECK(G->pack(G->unpack(x)) == x);
}

TEST_CASE("consistency check rejects a corrupted Q8 table") {
  RefinedGroup R = refine_to_pc(q8());
  PcPresentation bad = R.pc;
  REQUIRE(bad.n == 3);
  // corrupt the relation [g_2, g_1] (the commutator word of the two
  // weight-one generators): make it the identity
  for (auto& e : bad.comm[1][0]) e = 0;
  bad.comm[1][0][2] = 0;
  bad.consistent = false;
  CHECK_FALSE(check_consistency(bad));
  CHECK(find_consistency_failure(bad).has_value());
}

TEST_CASE("the exponent-4 Suzuki-type group of order 64 refines") {
  auto G = group_of_template(suzuki64());
  REQUIRE(G->size() == 64);
  // every square is central, G' = Z(G) = Omega_1(G) of type (2,2,2)
  Subgroup whole = whole_group(*G);
  Subgroup D = derived_subgroup(whole);
  CHECK(D.order() == 8);
  CHECK(abelian_invariants(D) == std::vector<int>{1, 1, 1});
  Subgroup Z = center_of(whole);
  CHECK(Z.bits == D.bits);
  CHECK(exponent_exp(whole) == 2);
}

TEST_CASE("relation echo holds for every refined template") {
  for (const GroupTemplate& T :
       {q8(), mpnm(2, 3, 2), mpnm1(3, 2, 2), suzuki64(), cyclic(5, 3), elementary(2, 3)}) {
    RefinedGroup R = refine_to_pc(T);
    Collector C(R.pc);
    for (const auto& rel : T.relations) {
      CHECK(eval_word(C, R.eps, rel.lhs) == eval_word(C, R.eps, rel.rhs));
    }
  }
}

TEST_CASE("direct and central products") {
  auto Q = group_of_template(q8());
  auto C2 = group_of_template(cyclic(2, 1));
  auto C4 = group_of_template(cyclic(2, 2));

  auto D = std::make_shared<PcGroup>(direct_product_pc(Q->presentation(), C2->presentation()));
  CHECK(D->size() == 16);

  // A x trivial = A
  auto triv = PcPresentation::empty(2);
  auto QxT = std::make_shared<PcGroup>(direct_product_pc(Q->presentation(), triv));
  CHECK(fingerprint_basic(QxT) == fingerprint_basic(Q));

  // Q8 * C4 identifying the involutions has order 8*4/2 = 16
  uint32_t zq = Q->mult(Q->template_image(0), Q->template_image(0));  // a^2
  uint32_t z4 = C4->power(C4->template_image(0), 2);
  auto star = central_product(Q, C4, zq, z4);
  CHECK(star->size() == 16);
  // and is not isomorphic to Q8 x C2 (their censuses differ)
  CHECK(order_census(*star) != order_census(*D));

  // identification words of mismatched order are rejected
  CHECK_THROWS(central_product(Q, C4, zq, C4->template_image(0)));
  // non-central identification rejected
  CHECK_THROWS(central_product(Q, Q, Q->template_image(0), zq));
}
