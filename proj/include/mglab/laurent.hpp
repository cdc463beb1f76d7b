#pragma once

#include <vector>

#include "mglab/group.hpp"
#include "mglab/modular_matrix.hpp"

namespace mglab {

// num·p^{-exp} in canonical form: exp = 0, or p does not divide num; the
// zero value is stored as (0, 0).  Equality is then component-wise.
struct LaurentScalar {
  BigInt num = 0;
  unsigned exp = 0;

  friend bool operator==(const LaurentScalar&, const LaurentScalar&) = default;
};

LaurentScalar laurent_canonical(BigInt num, unsigned exp, std::int64_t p);
LaurentScalar laurent_add(const LaurentScalar&, const LaurentScalar&, std::int64_t p);
LaurentScalar laurent_mul(const LaurentScalar&, const LaurentScalar&, std::int64_t p);
LaurentScalar laurent_neg(const LaurentScalar&);
bool laurent_is_integral(const LaurentScalar&);
std::string laurent_str(const LaurentScalar&, std::int64_t p);

// exact n×n matrix over Z[1/p] with det = 1
struct LaurentMat {
  int n = 0;
  std::int64_t p = 0;
  std::vector<LaurentScalar> a;

  static LaurentMat identity(int n, std::int64_t p);
  const LaurentScalar& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  LaurentScalar& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }

  friend bool operator==(const LaurentMat&, const LaurentMat&) = default;
};

LaurentMat laurent_mat_mul(const LaurentMat&, const LaurentMat&);
LaurentScalar laurent_mat_det(const LaurentMat&);
LaurentMat laurent_mat_inverse_det1(const LaurentMat&);
LaurentMat laurent_mat_pow(const LaurentMat&, std::uint64_t k);
std::string laurent_mat_str(const LaurentMat&);
bool laurent_mat_integral(const LaurentMat&);

// SL_n(Z[1/p]) as an oracle group, p an odd prime
Group special_linear_laurent(int n, std::int64_t p);
Elem laurent_elem(LaurentMat m);  // validates det = 1
const LaurentMat& laurent_of(const Elem& e);

// reduction mod q for gcd(q, p) = 1: p^{-1} goes to the inverse of p mod q
ModMat reduce_laurent_mod(const LaurentMat&, std::int64_t q);

}  // namespace mglab
