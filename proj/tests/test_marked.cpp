#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "mglab/groups.hpp"
#include "mglab/int_matrix.hpp"
#include "mglab/marked.hpp"

using namespace mglab;

namespace {

MarkedGroup z_marked() { return {integers(), {z_elem(1)}, "z"}; }

MarkedGroup zmod_marked(std::int64_t m) {
  Group g = cyclic(m);
  return {g, {cyclic_elem(g, 1)}, "zmod:" + std::to_string(m)};
}

MarkedGroup f2_marked() {
  Group g = free_group(2);
  return {g, {word_elem(FreeWord::generator(0)), word_elem(FreeWord::generator(1))}, "f2"};
}

MarkedGroup sanov_marked() {
  Group g = special_linear_z(2);
  return {g, {intmat_elem(sanov_a()), intmat_elem(sanov_b())}, "sanov"};
}

}  // namespace

TEST_CASE("balls") {
  SUBCASE("radius zero is a single vertex") {
    CayleyBall b = ball(f2_marked(), 0);
    CHECK(b.vertices.size() == 1);
    CHECK(b.edges.empty());
  }
  SUBCASE("free group ball counts 2*3^R - 1") {
    CayleyBall b = ball(f2_marked(), 2);
    CHECK(b.vertices.size() == 17);
    CayleyBall b3 = ball(f2_marked(), 3);
    CHECK(b3.vertices.size() == 53);
  }
  SUBCASE("Z/3 ball saturates with all six directed labeled edges") {
    CayleyBall b = ball(zmod_marked(3), 5);
    CHECK(b.vertices.size() == 3);
    CHECK(b.edges.size() == 6);
  }
  SUBCASE("vertex cap") {
    Caps caps;
    caps.max_vertices = 10;
    CHECK_THROWS_AS(ball(f2_marked(), 3, caps), ResourceLimitError);
  }
  SUBCASE("prefix property: smaller balls are prefixes of larger ones") {
    CayleyBall b2 = ball(zmod_marked(12), 2);
    CayleyBall b4 = ball(zmod_marked(12), 4);
    REQUIRE(b2.vertices.size() <= b4.vertices.size());
    for (std::size_t i = 0; i < b2.vertices.size(); ++i)
      CHECK(b2.norms[i] == b4.norms[i]);
    Group g = cyclic(12);
    for (std::size_t i = 0; i < b2.vertices.size(); ++i)
      CHECK(g.eq(b2.vertices[i], b4.vertices[i]));
  }
  SUBCASE("every shell vertex has an in-edge from the previous shell") {
    CayleyBall b = ball(sanov_marked(), 3);
    for (std::size_t v = 1; v < b.vertices.size(); ++v) {
      bool found = false;
      for (const auto& e : b.edges)
        if (e[2] == v && b.norms[e[0]] == b.norms[v] - 1) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("ball encodings decide rooted labeled isomorphism") {
  SUBCASE("same marked group, same radius") {
    CHECK(ball_encoding(ball(z_marked(), 3)) == ball_encoding(ball(z_marked(), 3)));
  }
  SUBCASE("Z vs Z/7 agree at radius 2, split at radius 3") {
    CHECK(ball_encoding(ball(z_marked(), 2)) == ball_encoding(ball(zmod_marked(7), 2)));
    CHECK(ball_encoding(ball(z_marked(), 3)) != ball_encoding(ball(zmod_marked(7), 3)));
  }
  SUBCASE("digest mirrors the encoding") {
    CHECK(ball_digest(ball(z_marked(), 2)) == ball_digest(ball(zmod_marked(7), 2)));
  }
}

TEST_CASE("trivial word sets") {
  SUBCASE("radius zero holds only the empty word") {
    TrivialWordSet t = trivial_words(zmod_marked(4), 0);
    CHECK(t.words().size() == 1);
    CHECK(t.words()[0].empty());
  }
  SUBCASE("Z/5 at radius 5 is empty, a^5, a^-5") {
    TrivialWordSet t = trivial_words(zmod_marked(5), 5);
    REQUIRE(t.words().size() == 3);
    CHECK(t.words()[0].empty());
    CHECK(t.contains(FreeWord::parse("a^5")));
    CHECK(t.contains(FreeWord::parse("a^-5")));
  }
  SUBCASE("the Sanov pair is free: no trivial words up to radius 4") {
    TrivialWordSet t = trivial_words(sanov_marked(), 4);
    CHECK(t.words().size() == 1);
  }
  SUBCASE("closed under inversion") {
    TrivialWordSet t = trivial_words(zmod_marked(6), 7);
    for (const FreeWord& w : t.words()) CHECK(t.contains(w.inverse()));
  }
  SUBCASE("monotone in the radius") {
    TrivialWordSet small = trivial_words(zmod_marked(4), 4);
    TrivialWordSet big = trivial_words(zmod_marked(4), 6);
    for (const FreeWord& w : small.words()) CHECK(big.contains(w));
  }
  SUBCASE("word cap") {
    Caps caps;
    caps.max_words = 100;
    CHECK_THROWS_AS(trivial_words(f2_marked(), 8, caps), ResourceLimitError);
  }
}

TEST_CASE("valuation and distance") {
  SUBCASE("Z vs Z/7 is 6") {
    Valuation v = valuation(z_marked(), zmod_marked(7), 10);
    CHECK(v.value == 6);
    CHECK(!v.at_least_cap);
    DistanceBounds d = marked_distance(z_marked(), zmod_marked(7), 10);
    CHECK(d.exact);
    CHECK(d.lower == doctest::Approx(0.015625));
    CHECK(d.upper == doctest::Approx(0.015625));
  }
  SUBCASE("Z/2 vs Z/3 is 1") {
    Valuation v = valuation(zmod_marked(2), zmod_marked(3), 10);
    CHECK(v.value == 1);
    DistanceBounds d = marked_distance(zmod_marked(2), zmod_marked(3), 10);
    CHECK(d.exact);
    CHECK(d.upper == doctest::Approx(0.5));
  }
  SUBCASE("a marked group against itself reaches the cap") {
    Valuation v = valuation(zmod_marked(9), zmod_marked(9), 8);
    CHECK(v.at_least_cap);
    DistanceBounds d = marked_distance(zmod_marked(9), zmod_marked(9), 10);
    CHECK(!d.exact);
    CHECK(d.lower == 0.0);
    CHECK(d.upper == doctest::Approx(std::ldexp(1.0, -10)));
  }
  SUBCASE("marking lengths must match") {
    CHECK_THROWS_AS(valuation(f2_marked(), z_marked(), 5), MarkingLengthError);
  }
}

TEST_CASE("word norms") {
  SUBCASE("identity has norm zero") {
    CHECK(word_norm(z_marked(), z_elem(0), 10) == 0);
  }
  SUBCASE("3 in Z/5 is two steps via the inverse") {
    CHECK(word_norm(zmod_marked(5), cyclic_elem(cyclic(5), 3), 10) == 2);
  }
  SUBCASE("abab in the free group has norm 4") {
    MarkedGroup mg = f2_marked();
    Elem g = evaluate_word(mg.group, mg.marking, FreeWord::parse("abab"));
    CHECK(word_norm(mg, g, 10) == 4);
  }
  SUBCASE("cap exceeded is a value, not an error") {
    CHECK(word_norm(z_marked(), z_elem(40), 10) == std::nullopt);
  }
}

TEST_CASE("ultrametric inequality on exact valuations") {
  std::vector<MarkedGroup> family;
  family.push_back(z_marked());
  for (std::int64_t m = 2; m <= 12; ++m) family.push_back(zmod_marked(m));
  int cap = 16;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j)
      for (std::size_t k = 0; k < family.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        Valuation xy = valuation(family[i], family[j], cap);
        Valuation yz = valuation(family[j], family[k], cap);
        Valuation xz = valuation(family[i], family[k], cap);
        if (xy.at_least_cap || yz.at_least_cap || xz.at_least_cap) continue;
        CHECK(xz.value >= std::min(xy.value, yz.value));
      }
}

TEST_CASE("encoding agreement vs trivial-word agreement") {
  // encoding agreement at R forces kernel agreement at R; kernel agreement
  // at 2R+1 forces encoding agreement at R
  for (std::int64_t m = 2; m <= 12; ++m) {
    for (int R = 0; R <= 5; ++R) {
      MarkedGroup a = z_marked();
      MarkedGroup b = zmod_marked(m);
      bool enc_eq = ball_encoding(ball(a, R)) == ball_encoding(ball(b, R));
      bool words_eq_R = trivial_words(a, R) == trivial_words(b, R);
      bool words_eq_2R1 = trivial_words(a, 2 * R + 1) == trivial_words(b, 2 * R + 1);
      if (enc_eq) CHECK(words_eq_R);
      if (words_eq_2R1) CHECK(enc_eq);
    }
  }
}

TEST_CASE("adding an identity to the marking preserves exact valuations") {
  auto padded = [](const MarkedGroup& mg) {
    MarkedGroup out = mg;
    out.marking.push_back(mg.group.identity());
    return out;
  };
  std::vector<std::pair<MarkedGroup, MarkedGroup>> pairs;
  pairs.emplace_back(zmod_marked(2), zmod_marked(3));
  pairs.emplace_back(zmod_marked(3), zmod_marked(4));
  pairs.emplace_back(z_marked(), zmod_marked(5));
  for (const auto& [a, b] : pairs) {
    Valuation v1 = valuation(a, b, 5);
    Valuation v2 = valuation(padded(a), padded(b), 5);
    CHECK(v1.value == v2.value);
    CHECK(v1.at_least_cap == v2.at_least_cap);
  }
}

TEST_CASE("adjacency export lists each edge once") {
  std::ostringstream os;
  CayleyBall b = ball(zmod_marked(3), 2);
  write_adjacency(os, b);
  std::string text = os.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(b.edges.size()));
  CHECK(text.find("0 0 1") != std::string::npos);
}
