#pragma once

#include "mglab/group.hpp"

namespace mglab {

// the infinite cyclic group Z (elements: arbitrary-precision integers)
Group integers();
Elem z_elem(BigInt v);

// Z/m for m >= 1 (m = 1 is the trivial group)
Group cyclic(std::int64_t m);
Elem cyclic_elem(const Group& g, std::int64_t v);

// symmetric group S_n, n <= 8; elements are permutation images
Group symmetric_group(int n);
Elem perm_elem(std::vector<int> images);
const std::vector<int>& perm_images(const Elem& e);

// direct product A × B
Group direct_product(const Group& a, const Group& b);
Elem pair_elem(Elem first, Elem second);

// free group of the given rank; elements are reduced words
Group free_group(int rank);
Elem word_elem(FreeWord w);
const FreeWord& word_of(const Elem& e);

// finite group given by a multiplication table over indices 0..n-1 with
// identity 0; associativity is checked at construction
Group table_group(const std::vector<std::vector<int>>& table, const std::string& name);

}  // namespace mglab
