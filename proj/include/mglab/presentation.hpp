#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mglab/free_word.hpp"

namespace mglab {

// A finite presentation carried symbolically: generator names plus freely
// reduced relator words.  No word problem is solved on these.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;
};

// validates name uniqueness and reduces the relators
Presentation make_presentation(std::vector<std::string> generators,
                               std::vector<FreeWord> relators);

// text format: first line "gens: a b ...", then one relator word per line
Presentation read_presentation(std::istream& is);
void write_presentation(std::ostream& os, const Presentation& p);

// b^i a b^{-i} over given generator indices
FreeWord conjugated_generator(int a_index, int b_index, int i);

// Doubled copy glued along the words b^i a b^{-i}, i = 0..r-1: generators
// X ∪ X̄ (copies suffixed with ~), relators R ∪ R̄ ∪ {w_i = w̄_i}.
Presentation amalgam_presentation(const Presentation& p, int r,
                                  const std::string& a_name = "a",
                                  const std::string& b_name = "b");

// Stable letter t conjugating the same words identically: generators
// X ∪ {t}, relators R ∪ {t w_i t⁻¹ w_i⁻¹}.
Presentation hnn_presentation(const Presentation& p, int r,
                              const std::string& a_name = "a",
                              const std::string& b_name = "b");

// |generators| - |relators| of this presentation (not the group deficiency,
// which maximizes over presentations)
std::int64_t presentation_deficiency(const Presentation& p);

}  // namespace mglab
