#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mglab/group.hpp"
#include "mglab/group_ring.hpp"
#include "mglab/ring.hpp"

namespace mglab {

// A ring automorphism presented as a forward/inverse closure pair.  On
// finite rings the pair is materialized from tables; elsewhere the caller
// supplies named closures together with the inverse witness.
class RingAut {
 public:
  using Fn = std::function<RingElem(const RingElem&)>;

  RingAut(std::string name, Fn forward, Fn inverse)
      : name_(std::move(name)), fwd_(std::move(forward)), inv_(std::move(inverse)) {}

  static RingAut identity();

  const std::string& name() const { return name_; }
  RingElem apply(const RingElem& r) const { return fwd_(r); }
  RingElem apply_inverse(const RingElem& r) const { return inv_(r); }

 private:
  std::string name_;
  Fn fwd_, inv_;
};

struct CocycleViolation {
  std::string identity;  // which law failed
  std::string detail;
};

// R∗G data: a coefficient ring, a finite group, σ: G → Aut(R) and
// τ: G×G → U(R).  Multiplication is refused until validate() has confirmed
// the normalization and both cocycle identities, because associativity
// depends on them.
class CrossedProductSystem {
 public:
  using SigmaFn = std::function<RingAut(const Elem&)>;
  using TauFn = std::function<RingElem(const Elem&, const Elem&)>;

  CrossedProductSystem(Ring ring, Group group, SigmaFn sigma, TauFn tau,
                       std::vector<RingElem> ring_samples = {}, std::string name = "");

  const Ring& ring() const { return ring_; }
  const Group& group() const { return group_; }
  const std::string& name() const { return name_; }
  const std::vector<Elem>& group_elements() const { return gelems_; }
  int index_of(const Elem& g) const;

  const RingAut& sigma(const Elem& g) const;
  RingElem tau(const Elem& g, const Elem& h) const;
  const std::vector<RingElem>& ring_samples() const { return ring_samples_; }

  // exhaustive check of σ(e) = 1, the τ normalization, both cocycle
  // identities, σ(g) being a ring automorphism, and τ values being units;
  // the result is cached
  const std::vector<CocycleViolation>& validate() const;
  bool validated() const;
  void require_validated() const;

  std::string fingerprint() const;  // deterministic carrier id

 private:
  Ring ring_;
  Group group_;
  std::string name_;
  std::vector<Elem> gelems_;
  std::unique_ptr<ElemMap<int>> gindex_;
  std::vector<RingAut> sigma_;
  std::vector<std::vector<RingElem>> tau_;
  std::vector<RingElem> ring_samples_;
  mutable std::optional<std::vector<CocycleViolation>> violations_;
  mutable std::optional<std::string> fingerprint_;
};

using System = std::shared_ptr<const CrossedProductSystem>;

System make_system(Ring ring, Group group, CrossedProductSystem::SigmaFn sigma,
                   CrossedProductSystem::TauFn tau,
                   std::vector<RingElem> ring_samples = {}, std::string name = "");

// trivial σ and τ: the plain group ring R[G] seen as a crossed product
System trivial_system(const Ring& r, const Group& g);

enum class CrossedClass { GroupRing, Twisted, Skew, General };
const char* crossed_class_name(CrossedClass c);

// GroupRing iff σ and τ are both trivial, Twisted iff only σ is trivial,
// Skew iff only τ is trivial
CrossedClass classify(const System& sys);

// element Σ r_g ḡ of R∗G
class CrossedElement {
 public:
  explicit CrossedElement(System sys);

  static CrossedElement zero(const System& s) { return CrossedElement(s); }
  static CrossedElement one(const System& s);
  static CrossedElement monomial(const System& s, const Elem& g, const RingElem& c);

  const System& system() const { return sys_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  RingElem coeff(const Elem& g) const;
  std::vector<std::pair<Elem, RingElem>> terms() const;  // deterministic order
  CrossedElement& add_term(const Elem& g, const RingElem& c);

  friend CrossedElement operator+(const CrossedElement&, const CrossedElement&);
  CrossedElement operator-() const;
  friend bool operator==(const CrossedElement&, const CrossedElement&);

  std::string str() const;

 private:
  System sys_;
  ElemMap<RingElem> coeffs_;
};

// the twisted convolution (Σ r_g ḡ)(Σ s_g ḡ) = Σ_g (Σ_{h1 h2 = g}
// r_{h1}·σ(h1)(s_{h2})·τ(h1,h2)) ḡ
CrossedElement cp_mul(const CrossedElement& u, const CrossedElement& v);

// inverse of the basis symbol ḡ: τ(g⁻¹,g)⁻¹ (g⁻¹)‾
CrossedElement basis_inverse(const System& sys, const Elem& g);

// R∗G packaged as an exact ring
Ring crossed_ring(const System& sys);
CrossedElement crossed_value(const RingElem& packed);
RingElem pack_crossed_value(const CrossedElement& v);

// (R∗N)∗(G/N) built from the canonical transversal (least enumeration index
// per coset).  to_quotient/from_quotient form the support-level bijection
// under which products correspond.
struct Decomposition {
  System quotient_system;              // over ring R∗N and group G/N
  System sub_system;                   // R∗N itself
  std::vector<Elem> transversal;       // coset reps in G
  std::function<CrossedElement(const CrossedElement&)> to_quotient;
  std::function<CrossedElement(const CrossedElement&)> from_quotient;
};

Decomposition decompose(const System& sys, const std::vector<Elem>& normal_subgroup);

// finite subgroup of G as its own oracle group (elements must be closed)
Group subgroup_view(const Group& g, const std::vector<Elem>& elems, const std::string& tag);

}  // namespace mglab
