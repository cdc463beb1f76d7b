#include <doctest.h>

#include <random>

#include "mglab/groups.hpp"
#include "mglab/int_matrix.hpp"
#include "mglab/laurent.hpp"
#include "mglab/modular_matrix.hpp"
#include "mglab/slnp.hpp"
#include "test_support.hpp"

using namespace mglab;

TEST_CASE("group law suites over every provided instance") {
  std::mt19937_64 rng(99);

  SUBCASE("integers") {
    Group g = integers();
    auto sample = [&] { return z_elem(static_cast<std::int64_t>(rng() % 401) - 200); };
    test::check_group_laws(g, sample, 1000);
  }
  SUBCASE("cyclic") {
    for (std::int64_t m : {1, 2, 5, 12}) {
      Group g = cyclic(m);
      auto sample = [&] { return cyclic_elem(g, static_cast<std::int64_t>(rng() % (2 * m)) - m); };
      test::check_group_laws(g, sample, 250);
    }
  }
  SUBCASE("symmetric") {
    Group g = symmetric_group(3);
    auto sample = [&] { return test::random_enumerated_element(g, rng); };
    test::check_group_laws(g, sample, 1000);
    CHECK(g.elements()->size() == 6);
    CHECK(g.order_hint() == 6);
  }
  SUBCASE("product") {
    Group g = direct_product(cyclic(2), cyclic(2));
    auto sample = [&] { return test::random_enumerated_element(g, rng); };
    test::check_group_laws(g, sample, 400);
    CHECK(g.elements()->size() == 4);
  }
  SUBCASE("free") {
    Group g = free_group(2);
    MarkedGroup mg{g, {word_elem(FreeWord::generator(0)), word_elem(FreeWord::generator(1))}, "f2"};
    auto sample = [&] { return test::random_marked_element(mg, rng, 8); };
    test::check_group_laws(g, sample, 1000);
  }
  SUBCASE("sl2z with sanov marking") {
    Group g = special_linear_z(2);
    MarkedGroup mg{g, {intmat_elem(sanov_a()), intmat_elem(sanov_b())}, "sanov"};
    auto sample = [&] { return test::random_marked_element(mg, rng, 6); };
    test::check_group_laws(g, sample, 300);
  }
  SUBCASE("sl3 mod 7") {
    Group g = special_linear_mod(3, 7);
    GammaGenerators gg = make_generators(3, 3);
    MarkedGroup mg{g,
                   {box<ModMat>(reduce_laurent_mod(gg.a, 7)),
                    box<ModMat>(reduce_laurent_mod(gg.b, 7)),
                    box<ModMat>(reduce_laurent_mod(gg.x, 7))},
                   "sl3mod7"};
    auto sample = [&] { return test::random_marked_element(mg, rng, 6); };
    test::check_group_laws(g, sample, 300);
  }
  SUBCASE("sl3 over Z[1/3]") {
    Group g = special_linear_laurent(3, 3);
    GammaGenerators gg = make_generators(3, 3);
    MarkedGroup mg{g, {laurent_elem(gg.a), laurent_elem(gg.b), laurent_elem(gg.x)}, "slnp"};
    auto sample = [&] { return test::random_marked_element(mg, rng, 5); };
    test::check_group_laws(g, sample, 200);
  }
  SUBCASE("table group") {
    Group g = table_group({{0, 1}, {1, 0}}, "c2");
    auto sample = [&] { return test::random_enumerated_element(g, rng); };
    test::check_group_laws(g, sample, 100);
    CHECK_THROWS_AS(table_group({{0, 1}, {1, 1}}, "bad"), InvalidSpecError);
  }
}

TEST_CASE("evaluate_word") {
  SUBCASE("empty word gives the identity in any group") {
    Group g = symmetric_group(3);
    std::vector<Elem> gens = {*g.elements()->begin()};
    CHECK(g.is_identity(evaluate_word(g, gens, FreeWord{})));
  }
  SUBCASE("sanov images in SL2(Z/5)") {
    Group g = special_linear_mod(2, 5);
    std::vector<Elem> gens = {modmat_elem(reduce_int_mat(sanov_a(), 5)),
                              modmat_elem(reduce_int_mat(sanov_b(), 5))};
    Elem got = evaluate_word(g, gens, FreeWord::parse("ab"));
    // direct 2x2 modular product of [[1,2],[0,1]] and [[1,0],[2,1]]
    ModMat expect;
    expect.n = 2;
    expect.q = 5;
    expect.a = {(1 * 1 + 2 * 2) % 5, (1 * 0 + 2 * 1) % 5, (0 * 1 + 1 * 2) % 5,
                (0 * 0 + 1 * 1) % 5};
    CHECK(g.eq(got, box<ModMat>(expect)));
  }
  SUBCASE("free reduction happens in the free group") {
    Group g = free_group(2);
    std::vector<Elem> gens = {word_elem(FreeWord::generator(0)),
                              word_elem(FreeWord::generator(1))};
    Elem got = evaluate_word(g, gens, FreeWord::parse("aa'b"));
    CHECK(word_of(got) == FreeWord::parse("b"));
  }
  SUBCASE("missing generator index") {
    Group g = free_group(1);
    std::vector<Elem> gens = {word_elem(FreeWord::generator(0))};
    CHECK_THROWS_AS(evaluate_word(g, gens, FreeWord::parse("ab")), std::out_of_range);
  }
}

TEST_CASE("element_order") {
  SUBCASE("identity has order 1") {
    Group g = cyclic(10);
    CHECK(element_order(g, g.identity(), 10) == 1);
  }
  SUBCASE("unipotent order 5 in SL3(Z/5)") {
    // I + 2E12 mod 5: repeated multiplication oracle
    Group g = special_linear_mod(3, 5);
    ModMat m = ModMat::identity(3, 5);
    m.at(0, 1) = 2;
    ModMat acc = m;
    std::uint64_t expected = 1;
    while (!(acc == ModMat::identity(3, 5))) {
      acc = mod_mat_mul(acc, m);
      ++expected;
    }
    CHECK(expected == 5);
    CHECK(element_order(g, box<ModMat>(m), 100) == expected);
  }
  SUBCASE("a is the identity mod 2") {
    Group g = special_linear_mod(3, 2);
    GammaGenerators gg = make_generators(3, 3);
    CHECK(element_order(g, box<ModMat>(reduce_laurent_mod(gg.a, 2)), 10) == 1);
  }
  SUBCASE("unbounded when the bound is too small") {
    Group g = integers();
    CHECK(element_order(g, z_elem(1), 50) == std::nullopt);
  }
}
