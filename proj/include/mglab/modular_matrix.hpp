#pragma once

#include <vector>

#include "mglab/group.hpp"
#include "mglab/int_matrix.hpp"

namespace mglab {

// n×n matrix over Z/q with det ≡ 1 (q >= 2, not necessarily prime)
struct ModMat {
  int n = 0;
  std::int64_t q = 0;
  std::vector<std::int64_t> a;  // residues in [0, q)

  static ModMat identity(int n, std::int64_t q);
  std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }

  friend bool operator==(const ModMat&, const ModMat&) = default;
};

ModMat mod_mat_mul(const ModMat&, const ModMat&);
std::int64_t mod_mat_det(const ModMat&);
ModMat mod_mat_inverse_det1(const ModMat&);  // adjugate, det ≡ 1
ModMat mod_mat_inverse(const ModMat&);       // any unit determinant
std::string mod_mat_str(const ModMat&);

// entry-wise reduction of an integer matrix; det ≡ 1 is re-checked
ModMat reduce_int_mat(const IntMat&, std::int64_t q);

// SL_n(Z/q) as an oracle group
Group special_linear_mod(int n, std::int64_t q);
Elem modmat_elem(ModMat m);  // validates det ≡ 1 (mod q)
const ModMat& modmat_of(const Elem& e);

}  // namespace mglab
