#include <doctest.h>

#include <random>

#include "mglab/groups.hpp"
#include "mglab/limits.hpp"
#include "mglab/presets.hpp"
#include "mglab/rings.hpp"

using namespace mglab;

TEST_CASE("characteristic cores") {
  SUBCASE("Z with index 4 is Z/4") {
    CoreQuotient cq = characteristic_core_z(4);
    CHECK(cq.order == 4);
    CHECK(cq.quotient.key() == "Z/4");
  }
  SUBCASE("F2 with index 2 is the mod-2 abelianization of order 4") {
    CoreQuotient cq = characteristic_core_free(2, 2);
    CHECK(cq.order == 4);
    // marking images generate the quotient
    MarkedGroup mg{cq.quotient, cq.marking, "core"};
    CayleyBall b = ball(mg, 8);
    CHECK(b.vertices.size() == 4);
  }
  SUBCASE("F2 with index 3: order frozen from the permutation-product oracle") {
    CoreQuotient cq = characteristic_core_free(2, 3);
    CHECK(cq.order == 972);
    // divisible by both abelianization shadows
    CHECK(cq.order % 4 == 0);
    CHECK(cq.order % 9 == 0);
  }
  SUBCASE("F3 with index 2 has order 8") {
    CoreQuotient cq = characteristic_core_free(3, 2);
    CHECK(cq.order == 8);
  }
  SUBCASE("out of scope parameters are refused") {
    CHECK_THROWS_AS(characteristic_core_free(4, 2), OutOfScopeError);
    CHECK_THROWS_AS(characteristic_core_free(2, 4), OutOfScopeError);
  }
  SUBCASE("kernel is invariant under generator permutation and inversion") {
    // the construction is symmetric in all index-d subgroups, so swapping
    // or inverting free generators must not change kernel membership
    std::mt19937_64 rng(17);
    auto swap_gens = [](const FreeWord& w) {
      FreeWord out;
      for (const Letter& l : w.letters()) out.push({1 - l.gen, l.sign});
      return out;
    };
    auto invert_a = [](const FreeWord& w) {
      FreeWord out;
      for (const Letter& l : w.letters()) out.push({l.gen, l.gen == 0 ? -l.sign : l.sign});
      return out;
    };
    for (int trial = 0; trial < 200; ++trial) {
      FreeWord w;
      int len = static_cast<int>(rng() % 7);
      for (int i = 0; i < len; ++i)
        w.push({static_cast<int>(rng() % 2), rng() % 2 == 0 ? 1 : -1});
      for (int d : {2, 3}) {
        bool in = core_kernel_contains(2, d, w);
        CHECK(core_kernel_contains(2, d, swap_gens(w)) == in);
        CHECK(core_kernel_contains(2, d, invert_a(w)) == in);
      }
    }
  }
}

TEST_CASE("congruence chains") {
  SUBCASE("Z chain mod 2 of length 3: stages 1, Z/2, Z/4, Z/8") {
    QuotientChain c = z_chain(2, 3);
    REQUIRE(c.stages.size() == 4);
    CHECK(c.stages[1].mg.group.key() == "Z/2");
    CHECK(c.stages[2].mg.group.key() == "Z/4");
    CHECK(c.stages[3].mg.group.key() == "Z/8");
    check_chain_invariants(c);
  }
  SUBCASE("Sanov chain mod 3: stages inside SL2(Z/3), SL2(Z/9)") {
    QuotientChain c = sanov_chain(3, 2);
    REQUIRE(c.stages.size() == 3);
    CHECK(c.stages[1].mg.group.key() == "SL2(Z/3)");
    CHECK(c.stages[2].mg.group.key() == "SL2(Z/9)");
    check_chain_invariants(c);
  }
  SUBCASE("Sanov stage 1 mod 3 has no trivial words at radius 1") {
    QuotientChain c = sanov_chain(3, 1);
    TrivialWordSet t = trivial_words(c.stages[1].mg, 1);
    CHECK(t.words().size() == 1);
    CHECK(t.words()[0].empty());
  }
  SUBCASE("invalid specs") {
    CHECK_THROWS_AS(z_chain(1, 3), InvalidSpecError);
    CHECK_THROWS_AS(sanov_chain(0, 3), InvalidSpecError);
  }
}

TEST_CASE("convergence radius") {
  SUBCASE("Z chain mod 3 at radius 4 converges at stage 2") {
    QuotientChain c = z_chain(3, 4);
    CHECK(convergence_radius(c, 4) == 2);
  }
  SUBCASE("radius 0 converges at the first stage") {
    CHECK(convergence_radius(z_chain(3, 2), 0) == 0);
    CHECK(convergence_radius(sanov_chain(3, 1), 0) == 0);
  }
  SUBCASE("Sanov chain mod 3 at radius 1 needs stage 1") {
    CHECK(convergence_radius(sanov_chain(3, 1), 1) == 1);
  }
  SUBCASE("not reached within the chain") {
    CHECK(convergence_radius(z_chain(2, 1), 4) == std::nullopt);
  }
  SUBCASE("monotone in the radius and valuations grow along the chain") {
    QuotientChain c = z_chain(2, 8);
    int prev = 0;
    for (int R = 0; R <= 6; ++R) {
      auto r = convergence_radius(c, R);
      REQUIRE(r.has_value());
      CHECK(*r >= prev);
      prev = *r;
    }
    int prev_val = -1;
    for (const ChainStage& st : c.stages) {
      Valuation v = valuation(c.base, st.mg, 300);
      CHECK(!v.at_least_cap);
      CHECK(v.value > prev_val);
      prev_val = v.value;
    }
  }
}

TEST_CASE("limit transfer") {
  Ring z = integer_ring();

  SUBCASE("t against t^{-1} over the mod-3 chain certifies at stage 2") {
    QuotientChain c = z_chain(3, 4);
    GroupRingElement x = GroupRingElement::monomial(z, c.base.group, z_elem(1), z.one());
    GroupRingElement y = GroupRingElement::monomial(z, c.base.group, z_elem(-1), z.one());
    TransferCertificate cert = limit_transfer(x, y, c);
    CHECK(cert.support_bound == 1);
    CHECK(cert.agreement_radius == 3);
    CHECK(cert.stage == 2);
    CHECK(cert.quotient_confirms);
    CHECK(cert.base_confirms);
  }
  SUBCASE("x = y = 1 certifies at the first stage") {
    QuotientChain c = z_chain(3, 2);
    GroupRingElement one = GroupRingElement::one(z, c.base.group);
    TransferCertificate cert = limit_transfer(one, one, c);
    CHECK(cert.support_bound == 0);
    CHECK(cert.stage == 0);
    CHECK(cert.quotient_confirms);
  }
  SUBCASE("a finite base as its own chain certifies at stage 0") {
    Group c5 = cyclic(5);
    MarkedGroup mg{c5, {cyclic_elem(c5, 1)}, "zmod:5"};
    GroupRingElement u(z, c5), v(z, c5);
    u.add_term(cyclic_elem(c5, 0), box<BigInt>(BigInt(-1)));
    u.add_term(cyclic_elem(c5, 1), z.one());
    u.add_term(cyclic_elem(c5, 4), z.one());
    v.add_term(cyclic_elem(c5, 0), box<BigInt>(BigInt(-1)));
    v.add_term(cyclic_elem(c5, 2), z.one());
    v.add_term(cyclic_elem(c5, 3), z.one());
    TransferCertificate cert = limit_transfer(u, v, self_chain(mg));
    CHECK(cert.stage == 0);
    CHECK(cert.quotient_confirms);
    CHECK(cert.base_confirms);
  }
  SUBCASE("precondition xy = 1 is enforced") {
    QuotientChain c = z_chain(3, 2);
    GroupRingElement x = GroupRingElement::monomial(z, c.base.group, z_elem(1), z.one());
    CHECK_THROWS_AS(limit_transfer(x, x, c), PreconditionError);
  }
  SUBCASE("NotReached surfaces as a resource error") {
    QuotientChain c = z_chain(3, 1);  // no stage reaches agreement radius 3
    GroupRingElement x = GroupRingElement::monomial(z, c.base.group, z_elem(1), z.one());
    GroupRingElement y = GroupRingElement::monomial(z, c.base.group, z_elem(-1), z.one());
    CHECK_THROWS_AS(limit_transfer(x, y, c), ResourceLimitError);
  }
  SUBCASE("randomized pairs never certify a falsehood") {
    ReportOptions opts;
    opts.seed = 123;
    Json rep = transfer_random_report(60, opts);
    CHECK(rep["pairs"] == 60);
    CHECK(rep["sound"] == 60);
    CHECK(rep["confirmed"] == 60);
  }
}
