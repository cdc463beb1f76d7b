#include <doctest.h>

#include <sstream>

#include "mglab/presentation.hpp"
#include "mglab/presets.hpp"

using namespace mglab;

TEST_CASE("presentation basics") {
  Presentation free2 = make_presentation({"a", "b"}, {});
  CHECK(presentation_deficiency(free2) == 2);
  CHECK_THROWS_AS(make_presentation({"a", "a"}, {}), InvalidSpecError);
}

TEST_CASE("amalgam combinator") {
  Presentation free2 = make_presentation({"a", "b"}, {});

  SUBCASE("rank 2 doubles the generators and glues two words") {
    Presentation g = amalgam_presentation(free2, 2);
    CHECK(g.generators.size() == 4);
    CHECK(g.relators.size() == 2);
    CHECK(presentation_deficiency(g) == 2 * 2 - 2);
    // first glue relator says a = ā
    CHECK(g.relators[0] == FreeWord::parse("a a~'", g.generators));
  }
  SUBCASE("counting on |X| = 3, |R| = 5, r = 2") {
    Presentation p = toy_presentation(3, 5);
    Presentation g = amalgam_presentation(p, 2);
    CHECK(g.generators.size() == 6);
    CHECK(g.relators.size() == 12);
    CHECK(presentation_deficiency(g) == -6);
  }
  SUBCASE("missing named generators") {
    Presentation q = make_presentation({"u", "v"}, {});
    CHECK_THROWS_AS(amalgam_presentation(q, 2), MissingGeneratorError);
    CHECK(amalgam_presentation(q, 2, "u", "v").generators.size() == 4);
  }
}

TEST_CASE("hnn combinator") {
  Presentation free2 = make_presentation({"a", "b"}, {});

  SUBCASE("rank 2 adds the stable letter and two relators") {
    Presentation g = hnn_presentation(free2, 2);
    CHECK(g.generators.size() == 3);
    CHECK(g.relators.size() == 2);
    CHECK(g.generators.back() == "t");
    // first relator is t a t' a'
    CHECK(g.relators[0] == FreeWord::parse("t a t' a'", g.generators));
  }
  SUBCASE("counting on |X| = 3, |R| = 5, r = 2") {
    Presentation g = hnn_presentation(toy_presentation(3, 5), 2);
    CHECK(g.generators.size() == 4);
    CHECK(g.relators.size() == 7);
    CHECK(presentation_deficiency(g) == -3);
  }
}

TEST_CASE("deficiency identities across ranks") {
  for (int gens : {2, 3, 4}) {
    for (int rels : {0, 2, 5}) {
      Presentation p = toy_presentation(gens, rels);
      std::int64_t def = presentation_deficiency(p);
      std::vector<std::int64_t> amalgam_defs;
      for (int r = 2; r <= 6; ++r) {
        CHECK(presentation_deficiency(amalgam_presentation(p, r)) == 2 * def - r);
        CHECK(presentation_deficiency(hnn_presentation(p, r)) == def + 1 - r);
        amalgam_defs.push_back(presentation_deficiency(amalgam_presentation(p, r)));
      }
      for (std::size_t i = 0; i < amalgam_defs.size(); ++i)
        for (std::size_t j = i + 1; j < amalgam_defs.size(); ++j)
          CHECK(amalgam_defs[i] != amalgam_defs[j]);
    }
  }
}

TEST_CASE("presentation file round-trip") {
  Presentation p = make_presentation(
      {"a", "b"}, {FreeWord::parse("aba'b'"), FreeWord::parse("a^3")});
  std::ostringstream os;
  write_presentation(os, p);
  std::istringstream is(os.str());
  Presentation q = read_presentation(is);
  CHECK(q.generators == p.generators);
  REQUIRE(q.relators.size() == p.relators.size());
  for (std::size_t i = 0; i < q.relators.size(); ++i) CHECK(q.relators[i] == p.relators[i]);

  std::istringstream bad("nope: a b\n");
  CHECK_THROWS_AS(read_presentation(bad), ParseError);
}
