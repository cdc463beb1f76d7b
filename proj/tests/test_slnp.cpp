#include <doctest.h>

#include <random>

#include "mglab/slnp.hpp"

using namespace mglab;

TEST_CASE("generator construction") {
  SUBCASE("x^p = a exactly, p = 3") {
    GammaGenerators g = make_generators(3, 3);
    CHECK(laurent_mat_pow(g.x, 3) == g.a);
    CHECK(g.x.at(0, 1) == LaurentScalar{2, 1});
    CHECK(!g.sanov_scale_warning);
  }
  SUBCASE("x^p = a exactly, p = 5") {
    GammaGenerators g = make_generators(3, 5);
    CHECK(laurent_mat_pow(g.x, 5) == g.a);
  }
  SUBCASE("n = 2 carries the Sanov-scale warning") {
    GammaGenerators g = make_generators(2, 3);
    CHECK(g.sanov_scale_warning);
    CHECK(laurent_mat_pow(g.x, 3) == g.a);
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(make_generators(1, 3), InvalidSpecError);
    CHECK_THROWS_AS(make_generators(3, 2), InvalidSpecError);
    CHECK_THROWS_AS(make_generators(3, 9), InvalidSpecError);
  }
}

TEST_CASE("reduction mod q") {
  GammaGenerators g = make_generators(3, 3);

  SUBCASE("x mod 5: 2·3^{-1} = 2·2 = 4") {
    ModMat m = reduce_laurent_mod(g.x, 5);
    CHECK(m.at(0, 1) == 4);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(1, 1) == 1);
  }
  SUBCASE("a mod 2 is the identity") {
    ModMat m = reduce_laurent_mod(g.a, 2);
    CHECK(m == ModMat::identity(3, 2));
  }
  SUBCASE("q = p is refused") {
    CHECK_THROWS_AS(reduce_laurent_mod(g.x, 3), NotCoprimeError);
    CHECK_THROWS_AS(reduce_laurent_mod(g.a, 9), NotCoprimeError);
  }
  SUBCASE("reduction is multiplicative on 1000 random products") {
    std::mt19937_64 rng(2);
    std::vector<LaurentMat> gens = {g.a, g.b, g.x, laurent_mat_inverse_det1(g.a),
                                    laurent_mat_inverse_det1(g.b),
                                    laurent_mat_inverse_det1(g.x)};
    LaurentMat acc = LaurentMat::identity(3, 3);
    std::int64_t q = 25;
    ModMat macc = reduce_laurent_mod(acc, q);
    for (int step = 0; step < 1000; ++step) {
      const LaurentMat& f = gens[rng() % gens.size()];
      acc = laurent_mat_mul(acc, f);
      macc = mod_mat_mul(macc, reduce_laurent_mod(f, q));
      CHECK(reduce_laurent_mod(acc, q) == macc);
    }
  }
}

TEST_CASE("order step verification") {
  SUBCASE("(3,3,5): orders 5, equal subgroups, gcd 1") {
    OrderReport rep = verify_order_step(3, 3, 5);
    CHECK(rep.o_a == 5);
    CHECK(rep.o_x == 5);
    CHECK(rep.subgroup_equal);
    CHECK(rep.gcd_ox_p == 1);
  }
  SUBCASE("(3,3,2): both reduce to the identity") {
    OrderReport rep = verify_order_step(3, 3, 2);
    CHECK(rep.o_a == 1);
    CHECK(rep.o_x == 1);
    CHECK(rep.subgroup_equal);
  }
  SUBCASE("(3,3,4): additive order of 2 mod 4") {
    OrderReport rep = verify_order_step(3, 3, 4);
    CHECK(rep.o_a == 2);
    CHECK(rep.o_x == 2);
    CHECK(rep.subgroup_equal);
    CHECK(rep.gcd_ox_p == 1);
  }
  SUBCASE("q not coprime to p is refused") {
    CHECK_THROWS_AS(verify_order_step(3, 3, 6), NotCoprimeError);
  }
}

TEST_CASE("order sweep properties") {
  // the theorem's computational core at desk scale
  for (std::int64_t p : {3, 5}) {
    for (int n : {3, 4}) {
      for (std::int64_t q = 2; q <= 50; ++q) {
        if (gcd64(q, p) != 1) continue;
        OrderReport rep = verify_order_step(n, p, q);
        CHECK(rep.o_a == rep.o_x);
        CHECK(rep.subgroup_equal);
        CHECK(rep.gcd_ox_p == 1);
      }
    }
  }
}

TEST_CASE("centralizer sampling") {
  std::mt19937_64 rng(11);

  SUBCASE("identity generators leave everything invertible; identity first") {
    std::vector<ModMat> gens = {ModMat::identity(3, 5)};
    auto cs = centralizer_sample(3, 5, gens, 6, rng);
    REQUIRE(!cs.empty());
    CHECK(cs[0] == ModMat::identity(3, 5));
    CHECK(cs.size() == 6);
  }
  SUBCASE("samples commute with the amalgamated images") {
    GammaGenerators g = make_generators(3, 3);
    ModMat A = reduce_laurent_mod(g.a, 5);
    ModMat B = reduce_laurent_mod(g.b, 5);
    ModMat conj = mod_mat_mul(mod_mat_mul(B, A), mod_mat_inverse_det1(B));
    std::vector<ModMat> gens = {A, conj};
    auto cs = centralizer_sample(3, 5, gens, 8, rng);
    for (const ModMat& c : cs) {
      CHECK(mod_mat_mul(c, A) == mod_mat_mul(A, c));
      CHECK(mod_mat_mul(c, conj) == mod_mat_mul(conj, c));
    }
  }
  SUBCASE("count zero yields an empty list") {
    std::vector<ModMat> gens = {ModMat::identity(3, 5)};
    CHECK(centralizer_sample(3, 5, gens, 0, rng).empty());
  }
  SUBCASE("composite moduli are out of scope") {
    std::vector<ModMat> gens = {ModMat::identity(3, 4)};
    CHECK_THROWS_AS(centralizer_sample(3, 4, gens, 2, rng), OutOfScopeError);
  }
}

TEST_CASE("commutator vanishing") {
  std::mt19937_64 rng(13);

  SUBCASE("(3,3,5) with 10 samples: all commutators are the identity") {
    VanishReport rep = test_g_vanishing(3, 3, 5, 10, rng);
    CHECK(rep.samples_tested >= 1);
    CHECK(rep.counterexamples == 0);
  }
  SUBCASE("sweep of primes up to 30") {
    for (std::int64_t q = 2; q <= 30; ++q) {
      if (!is_prime(q) || gcd64(q, 3) != 1) continue;
      VanishReport rep = test_g_vanishing(3, 3, q, 10, rng);
      CHECK(rep.counterexamples == 0);
    }
  }
  SUBCASE("q = p is refused") {
    CHECK_THROWS_AS(test_g_vanishing(3, 3, 3, 5, rng), NotCoprimeError);
  }
}

TEST_CASE("membership witnesses") {
  SUBCASE("x is non-integral at entry (1,2)") {
    FWitness w = x_not_in_f_witness(3, 3);
    CHECK(!w.member);
    CHECK(w.decided);
    CHECK(w.reason.find("(1,2)") != std::string::npos);
    CHECK(w.reason.find("2/3") != std::string::npos);
  }
  SUBCASE("p = 5 variant") {
    FWitness w = x_not_in_f_witness(3, 5);
    CHECK(w.reason.find("2/5") != std::string::npos);
  }
  SUBCASE("a is a member with word 'a'") {
    GammaGenerators g = make_generators(3, 3);
    FWitness w = f_membership(g.a);
    CHECK(w.member);
    REQUIRE(w.word.has_value());
    CHECK(w.word->str() == "a");
  }
  SUBCASE("integral matrices off the Sanov block stay undecided") {
    GammaGenerators g = make_generators(3, 3);
    LaurentMat m = LaurentMat::identity(3, 3);
    m.at(2, 0) = {2, 0};
    FWitness w = f_membership(m);
    CHECK(!w.decided);
  }
}
