#pragma once

#include "mglab/ring.hpp"

namespace mglab {

// arbitrary-precision integers Z
Ring integer_ring();

// integers mod m, m >= 2
Ring modular_ring(std::int64_t m);

// the field with four elements {0, 1, w, w+1}, w^2 = w + 1
Ring gf4();

// k×k matrices over base; try_inverse uses the adjugate (base must be
// commutative, which all provided scalar rings are)
Ring matrix_ring(const Ring& base, int k);

// matrix-ring element helpers
RingElem matrix_elem(const Ring& base, int k, const std::vector<RingElem>& entries);
const std::vector<RingElem>& matrix_entries(const RingElem& e);

// the Frobenius automorphism x -> x^2 of GF4 as a reusable closure pair
RingElem gf4_frobenius(const RingElem&);

}  // namespace mglab
