#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mglab/free_word.hpp"
#include "mglab/laurent.hpp"
#include "mglab/modular_matrix.hpp"

namespace mglab {

// The generators of the congruence-order experiments: a = I + 2E12,
// b = I + 2E21 and the p-th root x = I + (2/p)E12 of a, all exact.
// n = 2 is accepted for Sanov-sized experiments with a warning flag.
struct GammaGenerators {
  int n = 0;
  std::int64_t p = 0;
  LaurentMat a, b, x;
  bool sanov_scale_warning = false;
};

GammaGenerators make_generators(int n, std::int64_t p);

// order data of the reductions mod q; when gcd(q, p) = 1 the checked facts
// are o_a = o_x, <pi(a)> = <pi(x)> and gcd(o_x, p) = 1
struct OrderReport {
  int n = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::uint64_t o_a = 0;
  std::uint64_t o_x = 0;
  bool subgroup_equal = false;
  std::int64_t gcd_ox_p = 0;
};

OrderReport verify_order_step(int n, std::int64_t p, std::int64_t q,
                              std::uint64_t order_bound = 1'000'000);

// invertible matrices over Z/q (q prime) commuting with every generator;
// the identity is always returned first when count >= 1
std::vector<ModMat> centralizer_sample(int n, std::int64_t q,
                                       const std::vector<ModMat>& generators, int count,
                                       std::mt19937_64& rng);

// For phi = pi_q and phi-bar = conj_c ∘ pi_q with c sampled from the
// centralizer of the images of {b^i a b^{-i} : i < r}, checks that the two
// maps agree on those words and that [phi(x), phi-bar(x)] is the identity.
struct VanishReport {
  int n = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  int samples_requested = 0;
  int samples_tested = 0;
  int counterexamples = 0;
  std::vector<std::string> details;
};

VanishReport test_g_vanishing(int n, std::int64_t p, std::int64_t q, int samples,
                              std::mt19937_64& rng, int r = 2);

// Why x is not an element of F = <a, b>: x has p in a denominator while F
// consists of integral matrices.  For 2×2 integral matrices the Sanov
// reduction provides the general membership path.
struct FWitness {
  bool member = false;
  bool decided = true;
  std::string reason;
  std::optional<FreeWord> word;  // set when membership holds with certificate
};

FWitness x_not_in_f_witness(int n, std::int64_t p);

// membership of an arbitrary Γ element in F = <a, b>; decidable for
// non-integral matrices (never members) and for matrices supported on the
// top-left 2×2 Sanov block
FWitness f_membership(const LaurentMat& m);

}  // namespace mglab
