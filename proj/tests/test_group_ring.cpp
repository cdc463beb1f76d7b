#include <doctest.h>

#include <array>
#include <random>

#include "mglab/group_ring.hpp"
#include "mglab/groups.hpp"
#include "mglab/rings.hpp"
#include "test_support.hpp"

using namespace mglab;

namespace {

GroupRingElement from_poly(const Ring& r, const Group& c, const std::vector<std::int64_t>& coeffs) {
  GroupRingElement e(r, c);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    e.add_term(cyclic_elem(c, static_cast<std::int64_t>(k)), box<BigInt>(BigInt(coeffs[k])));
  return e;
}

// test-side oracle: multiply integer polynomials mod t^m - 1
std::vector<std::int64_t> poly_mul_mod(const std::vector<std::int64_t>& u,
                                       const std::vector<std::int64_t>& v, std::size_t m) {
  std::vector<std::int64_t> out(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out[(i + j) % m] += u[i] * v[j];
  return out;
}

}  // namespace

TEST_CASE("gr_mul examples") {
  Ring z = integer_ring();

  SUBCASE("(1+t)(1-t) vanishes in Z[C2]") {
    Group c2 = cyclic(2);
    GroupRingElement u = from_poly(z, c2, {1, 1});
    GroupRingElement v = from_poly(z, c2, {1, -1});
    CHECK(gr_mul(u, v).is_zero());
  }

  SUBCASE("the Z[C5] unit pair multiplies to 1, matching the polynomial oracle") {
    Group c5 = cyclic(5);
    std::vector<std::int64_t> uc = {-1, 1, 0, 0, 1};
    std::vector<std::int64_t> vc = {-1, 0, 1, 1, 0};
    auto prod = poly_mul_mod(uc, vc, 5);
    CHECK(prod == std::vector<std::int64_t>{1, 0, 0, 0, 0});
    GroupRingElement u = from_poly(z, c5, uc);
    GroupRingElement v = from_poly(z, c5, vc);
    CHECK(gr_mul(u, v).is_one());
    CHECK(gr_mul(v, u).is_one());
  }

  SUBCASE("(a+b)·a⁻¹ = 1 + b a⁻¹ in Z[F2]") {
    Group f2 = free_group(2);
    Elem a = word_elem(FreeWord::generator(0));
    Elem b = word_elem(FreeWord::generator(1));
    GroupRingElement u(z, f2);
    u.add_term(a, z.one());
    u.add_term(b, z.one());
    GroupRingElement ainv = GroupRingElement::monomial(z, f2, f2.inv(a), z.one());
    GroupRingElement got = gr_mul(u, ainv);
    GroupRingElement expect = GroupRingElement::one(z, f2);
    expect.add_term(f2.mul(b, f2.inv(a)), z.one());
    CHECK(got == expect);
  }

  SUBCASE("mixed carriers are rejected") {
    GroupRingElement u = GroupRingElement::one(z, cyclic(2));
    GroupRingElement v = GroupRingElement::one(z, cyclic(3));
    CHECK_THROWS_AS(gr_mul(u, v), CarrierMismatchError);
  }
}

TEST_CASE("group ring satisfies the ring laws") {
  std::mt19937_64 rng(31);
  for (auto [rk, gk] : std::vector<std::pair<std::string, std::int64_t>>{{"z", 5}, {"z3", 4}}) {
    Ring r = rk == "z" ? integer_ring() : modular_ring(3);
    Group g = cyclic(gk);
    auto sample = [&] {
      GroupRingElement e(r, g);
      for (std::int64_t k = 0; k < gk; ++k)
        if (rng() % 2)
          e.add_term(cyclic_elem(g, k),
                     rk == "z" ? box<BigInt>(BigInt(static_cast<std::int64_t>(rng() % 7) - 3))
                               : box<std::int64_t>(static_cast<std::int64_t>(rng() % 3)));
      return pack_group_ring_value(e);
    };
    test::check_ring_laws(group_ring_as_ring(r, g), sample, 150);
  }
}

TEST_CASE("support norms") {
  Ring z = integer_ring();
  Group c5 = cyclic(5);
  MarkedGroup mg{c5, {cyclic_elem(c5, 1)}, "zmod:5"};

  CHECK(support_norm(GroupRingElement::zero(z, c5), mg, 10) == 0);

  GroupRingElement u = from_poly(z, c5, {-1, 1, 0, 0, 1});
  CHECK(support_norm(u, mg, 10) == 1);  // t^4 = t^{-1}

  Group f2 = free_group(2);
  MarkedGroup mf{f2, {word_elem(FreeWord::generator(0)), word_elem(FreeWord::generator(1))}, "f2"};
  Elem g4 = evaluate_word(f2, mf.marking, FreeWord::parse("abab"));
  GroupRingElement tri = GroupRingElement::monomial(z, f2, g4, box<BigInt>(BigInt(3)));
  CHECK(support_norm(tri, mf, 10) == 4);

  GroupRingElement far = GroupRingElement::monomial(z, f2, g4, z.one());
  CHECK_THROWS_AS(support_norm(far, mf, 2), ExceedsCapError);
}

TEST_CASE("check_direct_pair") {
  Ring z = integer_ring();
  Group c5 = cyclic(5);

  SUBCASE("group element inverses confirm") {
    GroupRingElement t = GroupRingElement::monomial(z, c5, cyclic_elem(c5, 1), z.one());
    GroupRingElement t4 = GroupRingElement::monomial(z, c5, cyclic_elem(c5, 4), z.one());
    auto res = check_direct_pair(t, t4);
    CHECK(res.confirmed);
  }
  SUBCASE("the unit pair confirms") {
    GroupRingElement u = from_poly(z, c5, {-1, 1, 0, 0, 1});
    GroupRingElement v = from_poly(z, c5, {-1, 0, 1, 1, 0});
    CHECK(check_direct_pair(u, v).confirmed);
  }
  SUBCASE("precondition failure reports the product") {
    Group c2 = cyclic(2);
    GroupRingElement u = from_poly(z, c2, {1, 1});
    GroupRingElement v = from_poly(z, c2, {1, -1});
    CHECK_THROWS_AS(check_direct_pair(u, v), PreconditionError);
  }
}

TEST_CASE("exhaustive direct finiteness") {
  SUBCASE("Z/2 over C2: 4 elements, units 1 and t") {
    FinitenessReport rep = exhaustive_direct_finiteness(modular_ring(2), cyclic(2));
    CHECK(rep.element_count == 4);
    CHECK(rep.unit_count == 2);
    CHECK(rep.violations.empty());
  }
  SUBCASE("Z/2 over S3: 64 elements, no violations") {
    FinitenessReport rep = exhaustive_direct_finiteness(modular_ring(2), symmetric_group(3));
    CHECK(rep.element_count == 64);
    CHECK(rep.violations.empty());
  }
  SUBCASE("Z/3 over C3: 27 elements, no violations") {
    FinitenessReport rep = exhaustive_direct_finiteness(modular_ring(3), cyclic(3));
    CHECK(rep.element_count == 27);
    CHECK(rep.violations.empty());
  }
  SUBCASE("caps reject oversized scans") {
    CHECK_THROWS_AS(exhaustive_direct_finiteness(modular_ring(2), cyclic(30)),
                    ResourceLimitError);
  }
}

TEST_CASE("one-sided inverse search") {
  Ring z = integer_ring();
  Group c2 = cyclic(2);
  std::vector<RingElem> pool = {box<BigInt>(BigInt(-1)), box<BigInt>(BigInt(0)),
                                box<BigInt>(BigInt(1))};
  std::vector<Elem> support = {cyclic_elem(c2, 0), cyclic_elem(c2, 1)};

  SUBCASE("t inverts to t") {
    GroupRingElement t = GroupRingElement::monomial(z, c2, cyclic_elem(c2, 1), z.one());
    auto v = one_sided_inverse_search(t, pool, support);
    REQUIRE(v.has_value());
    CHECK(*v == t);
  }
  SUBCASE("2 is not a unit") {
    GroupRingElement two =
        GroupRingElement::monomial(z, c2, cyclic_elem(c2, 0), box<BigInt>(BigInt(2)));
    CHECK(!one_sided_inverse_search(two, pool, support).has_value());
  }
  SUBCASE("the C5 unit is found by exhausting 3^5 candidates") {
    Group c5 = cyclic(5);
    std::vector<Elem> sup5;
    for (std::int64_t k = 0; k < 5; ++k) sup5.push_back(cyclic_elem(c5, k));
    GroupRingElement u = from_poly(z, c5, {-1, 1, 0, 0, 1});
    auto v = one_sided_inverse_search(u, pool, sup5);
    REQUIRE(v.has_value());
    CHECK(*v == from_poly(z, c5, {-1, 0, 1, 1, 0}));
  }
}

TEST_CASE("matrix lift") {
  Ring z2 = modular_ring(2);
  Group c2 = cyclic(2);

  SUBCASE("k=1 is the identity reinterpretation") {
    GroupRingElement t = GroupRingElement::monomial(z2, c2, cyclic_elem(c2, 1), z2.one());
    GroupRingElement lifted = matrix_lift({{t}}, 1);
    CHECK(lifted.support_size() == 1);
    CHECK(lifted.ring().key() == "mat1(Z/2)");
  }
  SUBCASE("diag(t,t) lifts to t with identity-matrix coefficient") {
    GroupRingElement t = GroupRingElement::monomial(z2, c2, cyclic_elem(c2, 1), z2.one());
    GroupRingElement zero = GroupRingElement::zero(z2, c2);
    GroupRingElement lifted = matrix_lift({{t, zero}, {zero, t}}, 2);
    REQUIRE(lifted.support_size() == 1);
    Ring mk = matrix_ring(z2, 2);
    auto terms = lifted.terms();
    CHECK(c2.eq(terms[0].first, cyclic_elem(c2, 1)));
    CHECK(mk.is_one(terms[0].second));  // coefficient is the identity matrix
    CHECK(mk.equal(terms[0].second,
                   matrix_elem(z2, 2, {z2.one(), z2.zero(), z2.zero(), z2.one()})));
  }
  SUBCASE("lift is multiplicative on 100 random samples") {
    std::mt19937_64 rng(8);
    auto random_elem = [&] {
      GroupRingElement e(z2, c2);
      for (std::int64_t k = 0; k < 2; ++k)
        if (rng() % 2) e.add_term(cyclic_elem(c2, k), z2.one());
      return e;
    };
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::vector<GroupRingElement>> A = {{random_elem(), random_elem()},
                                                      {random_elem(), random_elem()}};
      std::vector<std::vector<GroupRingElement>> B = {{random_elem(), random_elem()},
                                                      {random_elem(), random_elem()}};
      // product in Mat_2(R[G])
      std::vector<std::vector<GroupRingElement>> AB = {
          {gr_mul(A[0][0], B[0][0]) + gr_mul(A[0][1], B[1][0]),
           gr_mul(A[0][0], B[0][1]) + gr_mul(A[0][1], B[1][1])},
          {gr_mul(A[1][0], B[0][0]) + gr_mul(A[1][1], B[1][0]),
           gr_mul(A[1][0], B[0][1]) + gr_mul(A[1][1], B[1][1])}};
      CHECK(matrix_lift(AB, 2) == gr_mul(matrix_lift(A, 2), matrix_lift(B, 2)));
    }
  }
  SUBCASE("shape mismatch") {
    GroupRingElement t = GroupRingElement::monomial(z2, c2, cyclic_elem(c2, 1), z2.one());
    CHECK_THROWS_AS(matrix_lift({{t, t}}, 2), ShapeError);
  }
}

TEST_CASE("stable finiteness bridge via matrix lift") {
  // invertible matrices over R[G] built from elementary and unit-diagonal
  // factors; AB = I lifts to a confirmed direct pair in (Mat_k R)[G]
  std::mt19937_64 rng(77);
  Ring r = modular_ring(2);
  Group g = cyclic(3);

  auto monomial = [&](std::int64_t k) {
    return GroupRingElement::monomial(r, g, cyclic_elem(g, k), r.one());
  };

  for (int k : {2, 3}) {
    for (int trial = 0; trial < 20; ++trial) {
      // A = product of elementary matrices E_{ij}(u); inverse accumulates in
      // reverse order with negated entries
      std::vector<std::vector<GroupRingElement>> A(
          k, std::vector<GroupRingElement>(k, GroupRingElement::zero(r, g)));
      std::vector<std::vector<GroupRingElement>> B = A;
      for (int i = 0; i < k; ++i) {
        A[i][i] = GroupRingElement::one(r, g);
        B[i][i] = GroupRingElement::one(r, g);
      }
      auto mat_mul_rg = [&](const auto& X, const auto& Y) {
        std::vector<std::vector<GroupRingElement>> Z(
            k, std::vector<GroupRingElement>(k, GroupRingElement::zero(r, g)));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) Z[i][j] = Z[i][j] + gr_mul(X[i][l], Y[l][j]);
        return Z;
      };
      for (int step = 0; step < 4; ++step) {
        int i = static_cast<int>(rng() % k);
        int j = static_cast<int>(rng() % k);
        if (i == j) continue;
        GroupRingElement u = monomial(static_cast<std::int64_t>(rng() % 3));
        std::vector<std::vector<GroupRingElement>> E(
            k, std::vector<GroupRingElement>(k, GroupRingElement::zero(r, g)));
        std::vector<std::vector<GroupRingElement>> Einv = E;
        for (int d = 0; d < k; ++d) {
          E[d][d] = GroupRingElement::one(r, g);
          Einv[d][d] = GroupRingElement::one(r, g);
        }
        E[i][j] = u;
        Einv[i][j] = -u;
        A = mat_mul_rg(A, E);
        B = mat_mul_rg(Einv, B);
      }
      GroupRingElement la = matrix_lift(A, k);
      GroupRingElement lb = matrix_lift(B, k);
      CHECK(gr_mul(la, lb).is_one());
      CHECK(check_direct_pair(la, lb).confirmed);
    }
  }
}

TEST_CASE("element literals parse against a marking") {
  Ring z = integer_ring();
  Group c5 = cyclic(5);
  MarkedGroup mg{c5, {cyclic_elem(c5, 1)}, "zmod:5"};
  GroupRingElement e = parse_group_ring_literal(z, mg, "-1*e + 1*a^2 + 1*a^3");
  CHECK(e == from_poly(z, c5, {-1, 0, 1, 1, 0}));
  CHECK(parse_group_ring_literal(z, mg, "1").is_one());
  CHECK_THROWS_AS(parse_group_ring_literal(z, mg, "1*b"), ParseError);
}
