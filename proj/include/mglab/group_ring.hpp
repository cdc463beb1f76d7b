#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mglab/group.hpp"
#include "mglab/marked.hpp"
#include "mglab/ring.hpp"

namespace mglab {

// An element of R[G]: a finite-support map from group elements to nonzero
// ring coefficients.  Zero coefficients are pruned after every operation so
// the stored support is the exact algebraic support.
class GroupRingElement {
 public:
  GroupRingElement(Ring ring, Group group);

  static GroupRingElement zero(const Ring& r, const Group& g) { return {r, g}; }
  static GroupRingElement one(const Ring& r, const Group& g);
  static GroupRingElement monomial(const Ring& r, const Group& g, const Elem& at,
                                   const RingElem& coeff);

  const Ring& ring() const { return ring_; }
  const Group& group() const { return group_; }
  std::size_t support_size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;

  RingElem coeff(const Elem& g) const;  // zero when absent
  // support/coefficient pairs sorted by element description (deterministic)
  std::vector<std::pair<Elem, RingElem>> terms() const;

  GroupRingElement& add_term(const Elem& g, const RingElem& c);  // += c·g

  friend GroupRingElement operator+(const GroupRingElement&, const GroupRingElement&);
  friend GroupRingElement operator-(const GroupRingElement&, const GroupRingElement&);
  GroupRingElement operator-() const;
  friend bool operator==(const GroupRingElement&, const GroupRingElement&);

  std::string str() const;

 private:
  Ring ring_;
  Group group_;
  ElemMap<RingElem> coeffs_;
};

// convolution product in R[G]
GroupRingElement gr_mul(const GroupRingElement& u, const GroupRingElement& v);

// max word norm over the support; 0 for the zero element.  Throws
// ExceedsCapError when a support element lies outside the cap ball.
int support_norm(const GroupRingElement& u, const MarkedGroup& mg, int cap,
                 const Caps& caps = {});

// xy = 1 is a precondition (PreconditionError reports xy otherwise); the
// result is Confirmed when yx = 1 and otherwise carries yx
struct DirectPairResult {
  bool confirmed = false;
  GroupRingElement yx;
};
DirectPairResult check_direct_pair(const GroupRingElement& x, const GroupRingElement& y);

// Exhaustive direct-finiteness scan of a finite ring: enumerate all
// elements, find every pair with xy = 1, and report the pairs where yx != 1.
// Finite rings are directly finite, so the expected violation list is empty;
// the scan is the oracle, not a conjecture check.
struct FinitenessReport {
  std::string ring_key;
  std::string group_key;
  std::uint64_t element_count = 0;
  std::uint64_t unit_count = 0;
  std::uint64_t pairs_checked = 0;
  std::vector<std::pair<std::string, std::string>> violations;
  double elapsed_seconds = 0.0;
};

FinitenessReport direct_finiteness_scan(const Ring& finite_ring,
                                        std::uint64_t cap = 1u << 20);

FinitenessReport exhaustive_direct_finiteness(const Ring& r, const Group& g,
                                              std::uint64_t cap = 1u << 20);

// R[G] packaged as an exact ring (finite and enumerable when both carriers
// are); this also backs the scan above
Ring group_ring_as_ring(const Ring& r, const Group& g);
GroupRingElement group_ring_value(const RingElem& packed);
RingElem pack_group_ring_value(const GroupRingElement& v);

// first v (over the given coefficient pool and candidate support, in
// odometer order) with u·v = 1; nullopt when the search space is exhausted
std::optional<GroupRingElement> one_sided_inverse_search(
    const GroupRingElement& u, const std::vector<RingElem>& pool,
    const std::vector<Elem>& support, std::uint64_t cap = 1u << 20);

// reinterpret a k×k matrix over R[G] as an element of (Mat_k R)[G]
GroupRingElement matrix_lift(const std::vector<std::vector<GroupRingElement>>& m, int k);

// parse "c1*w1 + c2*w2 + ..." where words are over the marking
GroupRingElement parse_group_ring_literal(const Ring& r, const MarkedGroup& mg,
                                          const std::string& text,
                                          std::span<const std::string> names = {});

}  // namespace mglab
