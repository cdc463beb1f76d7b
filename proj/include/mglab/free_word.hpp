#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mglab/common.hpp"

namespace mglab {

// One letter of a free word: generator index plus exponent sign.
struct Letter {
  int gen = 0;
  int sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

// code for canonical comparisons: positive letter of generator i sorts
// before its inverse, generators ascend
inline int letter_code(const Letter& l) { return 2 * l.gen + (l.sign < 0 ? 1 : 0); }

// A freely reduced word over indexed generators.  The representation is
// always reduced: no adjacent x·x⁻¹ pair survives construction.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::span<const Letter> letters);

  static FreeWord generator(int i, int sign = 1);
  static FreeWord power(int i, std::int64_t k);  // generator i to the k

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int max_generator() const;  // -1 for the empty word

  FreeWord& push(Letter l);  // append one letter, reducing
  FreeWord inverse() const;
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  // canonical order: length first, then letter codes lexicographically
  static bool canonical_less(const FreeWord& a, const FreeWord& b);

  std::uint64_t hash() const;

  // display with single-char generator names a, b, c, ...; trailing ' marks
  // an inverse letter.  names may override the default glyphs.
  std::string str(std::span<const std::string> names = {}) const;

  // parse "ab'a", "a^3 b^-2", or whitespace separated tokens; names give the
  // generator alphabet (defaults to "a".."z")
  static FreeWord parse(std::string_view text,
                        std::span<const std::string> names = {});

 private:
  std::vector<Letter> letters_;
};

}  // namespace mglab
