#include <doctest.h>

#include "mglab/free_word.hpp"

using namespace mglab;

TEST_CASE("free words stay reduced") {
  FreeWord w;
  w.push({0, 1});
  w.push({0, -1});
  CHECK(w.empty());

  w.push({0, 1});
  w.push({1, 1});
  w.push({1, -1});
  CHECK(w.size() == 1);
  CHECK(w.letters()[0].gen == 0);
}

TEST_CASE("concatenation reduces at the seam") {
  FreeWord a = FreeWord::parse("ab");
  FreeWord b = FreeWord::parse("b'a");
  FreeWord c = a * b;
  CHECK(c == FreeWord::parse("aa"));
  CHECK((a * a.inverse()).empty());
}

TEST_CASE("inverse reverses and flips") {
  FreeWord w = FreeWord::parse("ab'a");
  CHECK(w.inverse() == FreeWord::parse("a'ba'"));
  CHECK((w * w.inverse()).empty());
}

TEST_CASE("parse handles powers and glyphs") {
  CHECK(FreeWord::parse("a^3").size() == 3);
  CHECK(FreeWord::parse("a^-2") == FreeWord::parse("a'a'"));
  CHECK(FreeWord::parse("e").empty());
  CHECK(FreeWord::parse("1").empty());
  CHECK(FreeWord::parse("ab'a").str() == "ab'a");
  CHECK_THROWS_AS(FreeWord::parse("a$(b"), ParseError);
}

TEST_CASE("canonical order is length first") {
  FreeWord a = FreeWord::parse("b");
  FreeWord b = FreeWord::parse("aa");
  CHECK(FreeWord::canonical_less(a, b));
  CHECK(!FreeWord::canonical_less(b, a));
  CHECK(FreeWord::canonical_less(FreeWord::parse("a"), FreeWord::parse("a'")));
}

TEST_CASE("multi-character generator names round-trip") {
  std::vector<std::string> names = {"a", "a~"};
  FreeWord w = FreeWord::parse("a a~' a", names);
  CHECK(w.size() == 3);
  CHECK(w.str(names) == "a a~' a");
}
