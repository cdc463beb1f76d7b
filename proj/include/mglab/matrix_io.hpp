#pragma once

#include <iosfwd>
#include <variant>
#include <vector>

#include "mglab/laurent.hpp"
#include "mglab/modular_matrix.hpp"

namespace mglab {

// Matrix text format: a header line "mod q" or "inv p", then one matrix per
// line, row-major, entries "m" or "m/p^k" (the numeral of the declared p).
// The dimension is inferred from the entry count, which must be a square.
struct MatrixFile {
  std::variant<std::vector<ModMat>, std::vector<LaurentMat>> matrices;

  bool modular() const { return matrices.index() == 0; }
  const std::vector<ModMat>& mod_mats() const { return std::get<0>(matrices); }
  const std::vector<LaurentMat>& laurent_mats() const { return std::get<1>(matrices); }
};

MatrixFile read_matrix_file(std::istream& is);
void write_matrix_file(std::ostream& os, const std::vector<ModMat>& mats);
void write_matrix_file(std::ostream& os, const std::vector<LaurentMat>& mats);

}  // namespace mglab
