#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mglab/group_ring.hpp"
#include "mglab/marked.hpp"

namespace mglab {

// One stage G/K_r of a residual chain, with the projection from the base.
struct ChainStage {
  MarkedGroup mg;
  std::function<Elem(const Elem&)> project;            // base -> this stage
  std::function<Elem(const Elem&)> from_next;          // stage r+1 -> stage r (last stage: null)
  std::string label;
};

// A residual chain: base marked group plus quotient stages indexed by r.
// Stage r of the built-in congruence chains is the quotient mod m^r, so
// stage 0 is the trivial quotient.  Nesting K_{r+1} ⊆ K_r is witnessed by
// the connecting reductions.
struct QuotientChain {
  MarkedGroup base;
  std::vector<ChainStage> stages;
  std::string kind;
  std::int64_t modulus = 0;  // built-in chains only

  std::size_t length() const { return stages.size(); }
};

// chains over Z (stages Z/m^r) and over the Sanov marking of SL_2(Z)
// (stages: Sanov images in SL_2(Z/m^r)); L counts stages beyond stage 0
QuotientChain z_chain(std::int64_t m, int length);
QuotientChain sanov_chain(std::int64_t m, int length);

// a finite marked group as its own one-stage chain (identity projection)
QuotientChain self_chain(const MarkedGroup& mg);

// checks that marking images correspond under projections and that the
// connecting maps commute with them; throws InvalidSpecError on failure
void check_chain_invariants(const QuotientChain& chain);

// least stage r whose trivial words agree with the base up to radius R
std::optional<int> convergence_radius(const QuotientChain& chain, int radius,
                                      const Caps& caps = {});

// Certificate of the limit-transfer run: the support bound m, the trivial-
// word agreement radius used (3m), the stage index, and both verdicts.
struct TransferCertificate {
  int support_bound = 0;      // m
  int agreement_radius = 0;   // 3m
  int stage = 0;
  bool quotient_confirms = false;  // (image y)(image x) = 1 at the stage
  bool base_confirms = false;      // yx = 1 directly in the base
  std::string verdict() const { return quotient_confirms ? "Confirmed" : "Violation"; }
};

// Pushes a unit pair with xy = 1 down a chain stage with enough trivial-word
// agreement that ball-m products match, verifies yx = 1 there, and
// cross-checks the direct computation in the base.  Throws
// PreconditionError when xy != 1 and ResourceLimitError ("NotReached") when
// no stage reaches the agreement radius.
TransferCertificate limit_transfer(const GroupRingElement& x, const GroupRingElement& y,
                                   const QuotientChain& chain, const Caps& caps = {});

// Quotient of Z or F_k (k <= 3) by the intersection of all index-d
// subgroups; for F_k the quotient is realized as the image inside the
// product of all transitive degree-d permutation actions (d <= 3).
struct CoreQuotient {
  Group quotient;
  std::vector<Elem> marking;  // images of the canonical generators
  std::uint64_t order = 0;
  std::string description;
};

CoreQuotient characteristic_core_z(std::int64_t d);
CoreQuotient characteristic_core_free(int rank, int d, const Caps& caps = {});

// membership of a word in the core kernel (trivial in every transitive
// degree-d action); used by the symmetry checks
bool core_kernel_contains(int rank, int d, const FreeWord& w);

}  // namespace mglab
