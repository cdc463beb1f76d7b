#pragma once

#include <optional>
#include <vector>

#include "mglab/free_word.hpp"
#include "mglab/group.hpp"

namespace mglab {

// exact integer matrix, row-major
struct IntMat {
  int n = 0;
  std::vector<BigInt> a;

  static IntMat identity(int n);
  const BigInt& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  BigInt& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }

  friend bool operator==(const IntMat&, const IntMat&) = default;
};

IntMat mat_mul(const IntMat&, const IntMat&);
BigInt mat_det(const IntMat&);
IntMat mat_inverse_det1(const IntMat&);  // adjugate; requires det = 1
std::string mat_str(const IntMat&);

// SL_n(Z) as an oracle group (elements checked to have det 1 on entry)
Group special_linear_z(int n);
Elem intmat_elem(IntMat m);
const IntMat& intmat_of(const Elem& e);

// Sanov pair: elementary 2×2 matrices with off-diagonal entry 2.  They
// generate a free group of rank 2 inside SL_2(Z).
IntMat sanov_a();
IntMat sanov_b();

// Membership in the Sanov subgroup, decided by greedy syllable stripping:
// repeatedly remove the generator power that strictly lowers the maximum
// column sum, preferring a-powers over b-powers; success means reaching the
// identity, and the letters recovered along the way form the unique reduced
// word.  Throws DeterminantError when det != 1.
std::optional<FreeWord> sanov_membership(const IntMat& m);

}  // namespace mglab
