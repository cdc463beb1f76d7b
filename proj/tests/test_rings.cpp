#include <doctest.h>

#include <random>

#include "mglab/rings.hpp"
#include "test_support.hpp"

using namespace mglab;

TEST_CASE("ring law suites") {
  std::mt19937_64 rng(12);

  SUBCASE("integers") {
    Ring r = integer_ring();
    auto sample = [&] { return box<BigInt>(BigInt(static_cast<std::int64_t>(rng() % 2001) - 1000)); };
    test::check_ring_laws(r, sample, 300);
    CHECK(r.try_inverse(box<BigInt>(BigInt(2))) == std::nullopt);
    CHECK(r.is_one(*r.try_inverse(r.one())));
  }

  SUBCASE("modular") {
    for (std::int64_t m : {2, 3, 4, 6, 12}) {
      Ring r = modular_ring(m);
      auto sample = [&] { return box<std::int64_t>(static_cast<std::int64_t>(rng() % m)); };
      test::check_ring_laws(r, sample, 200);
    }
    Ring z6 = modular_ring(6);
    CHECK(!z6.try_inverse(box<std::int64_t>(std::int64_t{2})));
    CHECK(z6.equal(*z6.try_inverse(box<std::int64_t>(std::int64_t{5})),
                   box<std::int64_t>(std::int64_t{5})));
  }

  SUBCASE("gf4") {
    Ring r = gf4();
    auto all = *r.elements();
    CHECK(all.size() == 4);
    auto sample = [&] { return all[rng() % 4]; };
    test::check_ring_laws(r, sample, 200);
    // frobenius is a ring automorphism of order 2
    for (const RingElem& a : all) {
      CHECK(r.equal(gf4_frobenius(gf4_frobenius(a)), a));
      for (const RingElem& b : all) {
        CHECK(r.equal(gf4_frobenius(r.mul(a, b)), r.mul(gf4_frobenius(a), gf4_frobenius(b))));
        CHECK(r.equal(gf4_frobenius(r.add(a, b)), r.add(gf4_frobenius(a), gf4_frobenius(b))));
      }
    }
    CHECK(r.describe(*r.parse("w+1")) == "w+1");
  }

  SUBCASE("matrix ring over Z/3") {
    Ring r = matrix_ring(modular_ring(3), 2);
    auto base = modular_ring(3);
    auto sample = [&] {
      std::vector<RingElem> entries;
      for (int i = 0; i < 4; ++i)
        entries.push_back(box<std::int64_t>(static_cast<std::int64_t>(rng() % 3)));
      return matrix_elem(base, 2, entries);
    };
    test::check_ring_laws(r, sample, 150);
    CHECK(r.elements()->size() == 81);
  }
}

TEST_CASE("matrix ring inverse via adjugate") {
  Ring base = modular_ring(5);
  Ring r = matrix_ring(base, 2);
  auto e = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return matrix_elem(base, 2,
                       {box<std::int64_t>(a), box<std::int64_t>(b), box<std::int64_t>(c),
                        box<std::int64_t>(d)});
  };
  auto inv = r.try_inverse(e(1, 2, 0, 1));
  REQUIRE(inv.has_value());
  CHECK(r.is_one(r.mul(e(1, 2, 0, 1), *inv)));
  CHECK(!r.try_inverse(e(1, 2, 2, 4)));  // determinant 0 mod 5
}
