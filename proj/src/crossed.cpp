#include "mglab/crossed.hpp"

#include <algorithm>
#include <sstream>

namespace mglab {

RingAut RingAut::identity() {
  auto id = [](const RingElem& r) { return r; };
  return RingAut("id", id, id);
}

CrossedProductSystem::CrossedProductSystem(Ring ring, Group group, SigmaFn sigma,
                                           TauFn tau, std::vector<RingElem> ring_samples,
                                           std::string name)
    : ring_(std::move(ring)), group_(std::move(group)), name_(std::move(name)) {
  auto elems = group_.elements();
  if (!elems) throw InvalidSpecError("crossed products require a finite enumerable group");
  gelems_ = std::move(*elems);
  if (gelems_.empty() || !group_.is_identity(gelems_[0]))
    throw InvalidSpecError("group enumeration must start with the identity");
  gindex_ = std::make_unique<ElemMap<int>>(group_);
  for (std::size_t i = 0; i < gelems_.size(); ++i)
    gindex_->emplace(gelems_[i], static_cast<int>(i));

  sigma_.reserve(gelems_.size());
  tau_.reserve(gelems_.size());
  for (const Elem& g : gelems_) {
    sigma_.push_back(sigma(g));
    std::vector<RingElem> row;
    row.reserve(gelems_.size());
    for (const Elem& h : gelems_) row.push_back(tau(g, h));
    tau_.push_back(std::move(row));
  }

  if (!ring_samples.empty()) {
    ring_samples_ = std::move(ring_samples);
  } else if (auto all = ring_.elements()) {
    ring_samples_ = std::move(*all);
  } else {
    throw InvalidSpecError(
        "infinite coefficient ring needs a declared sample list for validation");
  }
}

int CrossedProductSystem::index_of(const Elem& g) const {
  const int* i = gindex_->find(g);
  if (!i) throw CarrierMismatchError("element does not belong to the system's group");
  return *i;
}

const RingAut& CrossedProductSystem::sigma(const Elem& g) const {
  return sigma_[static_cast<std::size_t>(index_of(g))];
}

RingElem CrossedProductSystem::tau(const Elem& g, const Elem& h) const {
  return tau_[static_cast<std::size_t>(index_of(g))][static_cast<std::size_t>(index_of(h))];
}

const std::vector<CocycleViolation>& CrossedProductSystem::validate() const {
  if (violations_) return *violations_;
  std::vector<CocycleViolation> out;
  const std::size_t n = gelems_.size();

  auto gdesc = [&](std::size_t i) { return group_.describe(gelems_[i]); };

  // sigma(e) = 1
  for (const RingElem& r : ring_samples_)
    if (!ring_.equal(sigma_[0].apply(r), r)) {
      out.push_back({"sigma_identity", "sigma(e) moves " + ring_.describe(r)});
      break;
    }

  // each sigma(g) is a ring automorphism with a working inverse witness
  for (std::size_t i = 0; i < n; ++i) {
    const RingAut& s = sigma_[i];
    bool bad = false;
    for (const RingElem& r : ring_samples_) {
      if (!ring_.equal(s.apply_inverse(s.apply(r)), r)) {
        out.push_back({"sigma_invertible",
                       "sigma(" + gdesc(i) + ") inverse witness fails on " + ring_.describe(r)});
        bad = true;
        break;
      }
    }
    if (bad) continue;
    if (!ring_.equal(s.apply(ring_.one()), ring_.one())) {
      out.push_back({"sigma_hom", "sigma(" + gdesc(i) + ") does not fix 1"});
      continue;
    }
    for (const RingElem& r1 : ring_samples_) {
      for (const RingElem& r2 : ring_samples_) {
        if (!ring_.equal(s.apply(ring_.add(r1, r2)), ring_.add(s.apply(r1), s.apply(r2))) ||
            !ring_.equal(s.apply(ring_.mul(r1, r2)), ring_.mul(s.apply(r1), s.apply(r2)))) {
          out.push_back({"sigma_hom", "sigma(" + gdesc(i) + ") is not a ring homomorphism at (" +
                                          ring_.describe(r1) + "," + ring_.describe(r2) + ")"});
          bad = true;
          break;
        }
      }
      if (bad) break;
    }
  }

  // tau normalization and unit-ness
  for (std::size_t i = 0; i < n; ++i) {
    if (!ring_.is_one(tau_[0][i]))
      out.push_back({"tau_normalization", "tau(e," + gdesc(i) + ") != 1"});
    if (!ring_.is_one(tau_[i][0]))
      out.push_back({"tau_normalization", "tau(" + gdesc(i) + ",e) != 1"});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!ring_.try_inverse(tau_[i][j]))
        out.push_back({"tau_unit", "tau(" + gdesc(i) + "," + gdesc(j) + ") = " +
                                       ring_.describe(tau_[i][j]) + " is not a unit"});

  if (out.empty()) {
    auto idx = [&](const Elem& g) { return static_cast<std::size_t>(index_of(g)); };
    // cocycle identity:
    //   tau(g1,g2) tau(g1g2,g3) = sigma(g1)(tau(g2,g3)) tau(g1,g2g3)
    for (std::size_t i = 0; i < n && out.empty(); ++i)
      for (std::size_t j = 0; j < n && out.empty(); ++j)
        for (std::size_t k = 0; k < n; ++k) {
          std::size_t ij = idx(group_.mul(gelems_[i], gelems_[j]));
          std::size_t jk = idx(group_.mul(gelems_[j], gelems_[k]));
          RingElem lhs = ring_.mul(tau_[i][j], tau_[ij][k]);
          RingElem rhs = ring_.mul(sigma_[i].apply(tau_[j][k]), tau_[i][jk]);
          if (!ring_.equal(lhs, rhs)) {
            out.push_back({"cocycle", "tau cocycle fails at (" + gdesc(i) + "," + gdesc(j) +
                                          "," + gdesc(k) + ")"});
            break;
          }
        }
    // compatibility: sigma(g1)(sigma(g2)(r)) = tau(g1,g2) sigma(g1g2)(r) tau(g1,g2)^{-1}
    for (std::size_t i = 0; i < n && out.empty(); ++i)
      for (std::size_t j = 0; j < n && out.empty(); ++j) {
        std::size_t ij = idx(group_.mul(gelems_[i], gelems_[j]));
        RingElem t = tau_[i][j];
        RingElem tinv = *ring_.try_inverse(t);
        for (const RingElem& r : ring_samples_) {
          RingElem lhs = sigma_[i].apply(sigma_[j].apply(r));
          RingElem rhs = ring_.mul(ring_.mul(t, sigma_[ij].apply(r)), tinv);
          if (!ring_.equal(lhs, rhs)) {
            out.push_back({"compatibility", "sigma/tau compatibility fails at (" + gdesc(i) +
                                                "," + gdesc(j) + ") on " + ring_.describe(r)});
            break;
          }
        }
      }
  }

  violations_ = std::move(out);
  return *violations_;
}

bool CrossedProductSystem::validated() const {
  return violations_ && violations_->empty();
}

void CrossedProductSystem::require_validated() const {
  validate();
  if (!validated())
    throw UnvalidatedSystemError("crossed product system failed cocycle validation");
}

std::string CrossedProductSystem::fingerprint() const {
  if (fingerprint_) return *fingerprint_;
  std::uint64_t h = fnv1a(ring_.key());
  h = fnv1a(group_.key(), h);
  for (std::size_t i = 0; i < gelems_.size(); ++i) {
    h = fnv1a(sigma_[i].name(), h);
    for (const RingElem& r : ring_samples_)
      h = hash_mix(h, ring_.hash(sigma_[i].apply(r)));
    for (std::size_t j = 0; j < gelems_.size(); ++j)
      h = hash_mix(h, ring_.hash(tau_[i][j]));
  }
  std::ostringstream os;
  os << std::hex << h;
  fingerprint_ = os.str();
  return *fingerprint_;
}

System make_system(Ring ring, Group group, CrossedProductSystem::SigmaFn sigma,
                   CrossedProductSystem::TauFn tau, std::vector<RingElem> ring_samples,
                   std::string name) {
  return std::make_shared<CrossedProductSystem>(std::move(ring), std::move(group),
                                                std::move(sigma), std::move(tau),
                                                std::move(ring_samples), std::move(name));
}

System trivial_system(const Ring& r, const Group& g) {
  Ring rc = r;
  return make_system(
      r, g, [](const Elem&) { return RingAut::identity(); },
      [rc](const Elem&, const Elem&) { return rc.one(); }, {}, "trivial");
}

const char* crossed_class_name(CrossedClass c) {
  switch (c) {
    case CrossedClass::GroupRing: return "GroupRing";
    case CrossedClass::Twisted: return "Twisted";
    case CrossedClass::Skew: return "Skew";
    default: return "General";
  }
}

CrossedClass classify(const System& sys) {
  sys->require_validated();
  const Ring& r = sys->ring();
  bool sigma_trivial = true;
  bool tau_trivial = true;
  for (const Elem& g : sys->group_elements()) {
    for (const RingElem& s : sys->ring_samples())
      if (!r.equal(sys->sigma(g).apply(s), s)) {
        sigma_trivial = false;
        break;
      }
    for (const Elem& h : sys->group_elements())
      if (!r.is_one(sys->tau(g, h))) {
        tau_trivial = false;
        break;
      }
  }
  if (sigma_trivial && tau_trivial) return CrossedClass::GroupRing;
  if (sigma_trivial) return CrossedClass::Twisted;
  if (tau_trivial) return CrossedClass::Skew;
  return CrossedClass::General;
}

// ------------------------------------------------------------- elements

CrossedElement::CrossedElement(System sys)
    : sys_(std::move(sys)), coeffs_(sys_->group()) {}

CrossedElement CrossedElement::one(const System& s) {
  return monomial(s, s->group().identity(), s->ring().one());
}

CrossedElement CrossedElement::monomial(const System& s, const Elem& g, const RingElem& c) {
  CrossedElement e(s);
  e.add_term(g, c);
  return e;
}

bool CrossedElement::is_one() const {
  if (coeffs_.size() != 1) return false;
  const auto& [g, c] = *coeffs_.begin();
  return sys_->group().is_identity(g) && sys_->ring().is_one(c);
}

RingElem CrossedElement::coeff(const Elem& g) const {
  const RingElem* c = coeffs_.find(g);
  return c ? *c : sys_->ring().zero();
}

std::vector<std::pair<Elem, RingElem>> CrossedElement::terms() const {
  std::vector<std::pair<Elem, RingElem>> out(coeffs_.begin(), coeffs_.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return sys_->index_of(a.first) < sys_->index_of(b.first);
  });
  return out;
}

CrossedElement& CrossedElement::add_term(const Elem& g, const RingElem& c) {
  if (sys_->ring().is_zero(c)) return *this;
  if (RingElem* have = coeffs_.find(g)) {
    RingElem sum = sys_->ring().add(*have, c);
    if (sys_->ring().is_zero(sum))
      coeffs_.erase(g);
    else
      *have = std::move(sum);
  } else {
    coeffs_.emplace(g, c);
  }
  return *this;
}

CrossedElement operator+(const CrossedElement& a, const CrossedElement& b) {
  if (a.sys_ != b.sys_ && a.sys_->fingerprint() != b.sys_->fingerprint())
    throw CarrierMismatchError("crossed elements belong to different systems");
  CrossedElement out = a;
  for (const auto& [g, c] : b.terms()) out.add_term(g, c);
  return out;
}

CrossedElement CrossedElement::operator-() const {
  CrossedElement out(sys_);
  for (const auto& [g, c] : coeffs_) out.add_term(g, sys_->ring().neg(c));
  return out;
}

bool operator==(const CrossedElement& a, const CrossedElement& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (const auto& [g, c] : a.coeffs_) {
    const RingElem* other = b.coeffs_.find(g);
    if (!other || !a.sys_->ring().equal(c, *other)) return false;
  }
  return true;
}

std::string CrossedElement::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : terms()) {
    if (!out.empty()) out += " + ";
    out += sys_->ring().describe(c) + "*" + sys_->group().describe(g) + "~";
  }
  return out;
}

CrossedElement cp_mul(const CrossedElement& u, const CrossedElement& v) {
  const System& sys = u.system();
  if (sys != v.system() && sys->fingerprint() != v.system()->fingerprint())
    throw CarrierMismatchError("crossed elements belong to different systems");
  sys->require_validated();
  const Ring& R = sys->ring();
  CrossedElement out(sys);
  for (const auto& [g1, r1] : u.terms())
    for (const auto& [g2, r2] : v.terms()) {
      RingElem c = R.mul(R.mul(r1, sys->sigma(g1).apply(r2)), sys->tau(g1, g2));
      out.add_term(sys->group().mul(g1, g2), c);
    }
  return out;
}

CrossedElement basis_inverse(const System& sys, const Elem& g) {
  sys->require_validated();
  Elem ginv = sys->group().inv(g);
  RingElem t = sys->tau(ginv, g);
  auto tinv = sys->ring().try_inverse(t);
  if (!tinv) throw UnvalidatedSystemError("tau value is not invertible");
  return CrossedElement::monomial(sys, ginv, *tinv);
}

// ------------------------------------------------------- R∗G as a ring

namespace {

struct CrossedVal {
  CrossedElement v;
};

class CrossedRing final : public RingOps {
 public:
  explicit CrossedRing(System sys) : sys_(std::move(sys)) {
    sys_->require_validated();
    key_ = "crossed:" + (sys_->name().empty() ? std::string("anon") : sys_->name()) + ":" +
           sys_->ring().key() + "*" + sys_->group().key() + ":" + sys_->fingerprint();
  }

  std::string key() const override { return key_; }
  RingElem zero() const override { return box<CrossedVal>({CrossedElement::zero(sys_)}); }
  RingElem one() const override { return box<CrossedVal>({CrossedElement::one(sys_)}); }
  RingElem add(const RingElem& a, const RingElem& b) const override {
    return box<CrossedVal>({unbox<CrossedVal>(a).v + unbox<CrossedVal>(b).v});
  }
  RingElem neg(const RingElem& a) const override {
    return box<CrossedVal>({-unbox<CrossedVal>(a).v});
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    return box<CrossedVal>({cp_mul(unbox<CrossedVal>(a).v, unbox<CrossedVal>(b).v)});
  }
  bool equal(const RingElem& a, const RingElem& b) const override {
    return unbox<CrossedVal>(a).v == unbox<CrossedVal>(b).v;
  }
  std::uint64_t hash(const RingElem& a) const override {
    const auto& v = unbox<CrossedVal>(a).v;
    std::uint64_t h = 0;
    for (const auto& [g, c] : v.terms())
      h += hash_mix(sys_->group().hash(g), sys_->ring().hash(c));
    return h;
  }
  std::optional<RingElem> try_inverse(const RingElem& a) const override {
    const auto& v = unbox<CrossedVal>(a).v;
    // single-term r·ḡ with r a unit: (r ḡ)(s (g⁻¹)‾) has identity
    // coefficient r·σ(g)(s)·τ(g,g⁻¹), so s = σ(g)⁻¹(r⁻¹ τ(g,g⁻¹)⁻¹)
    auto ts = v.terms();
    if (ts.size() == 1) {
      const Elem& g = ts[0].first;
      auto rinv = sys_->ring().try_inverse(ts[0].second);
      auto tinv = sys_->ring().try_inverse(sys_->tau(g, sys_->group().inv(g)));
      if (rinv && tinv) {
        RingElem s = sys_->sigma(g).apply_inverse(sys_->ring().mul(*rinv, *tinv));
        CrossedElement cand = CrossedElement::monomial(sys_, sys_->group().inv(g), s);
        if (cp_mul(v, cand).is_one() && cp_mul(cand, v).is_one())
          return box<CrossedVal>({cand});
      }
    }
    if (auto all = elements()) {
      for (const RingElem& b : *all)
        if (equal(mul(a, b), one()) && equal(mul(b, a), one())) return b;
    }
    return std::nullopt;
  }
  bool is_finite() const override { return sys_->ring().is_finite(); }
  std::optional<std::vector<RingElem>> elements() const override {
    auto rs = sys_->ring().elements();
    if (!rs) return std::nullopt;
    const auto& gs = sys_->group_elements();
    std::uint64_t total = saturating_pow(rs->size(), gs.size(), 1u << 21);
    if (total >= (1u << 21)) return std::nullopt;
    std::vector<RingElem> out;
    out.reserve(total);
    std::vector<std::size_t> odo(gs.size(), 0);
    while (true) {
      CrossedElement e(sys_);
      for (std::size_t i = 0; i < gs.size(); ++i) e.add_term(gs[i], (*rs)[odo[i]]);
      out.push_back(box<CrossedVal>({std::move(e)}));
      std::size_t c = odo.size();
      while (true) {
        if (c == 0) return out;
        --c;
        if (++odo[c] < rs->size()) break;
        odo[c] = 0;
      }
    }
  }
  std::string describe(const RingElem& a) const override {
    return unbox<CrossedVal>(a).v.str();
  }

 private:
  System sys_;
  std::string key_;
};

}  // namespace

Ring crossed_ring(const System& sys) {
  return Ring(std::make_shared<CrossedRing>(sys));
}

CrossedElement crossed_value(const RingElem& packed) { return unbox<CrossedVal>(packed).v; }

RingElem pack_crossed_value(const CrossedElement& v) { return box<CrossedVal>({v}); }

// --------------------------------------------------------------- views

namespace {

class SubgroupGroup final : public GroupOps {
 public:
  SubgroupGroup(Group parent, std::vector<Elem> elems, std::string tag)
      : parent_(std::move(parent)), elems_(std::move(elems)), tag_(std::move(tag)) {
    if (elems_.empty() || !parent_.is_identity(elems_[0]))
      throw InvalidSpecError("subgroup enumeration must start with the identity");
  }
  std::string key() const override {
    return "sub:" + tag_ + ":" + parent_.key() + ":" + std::to_string(elems_.size());
  }
  Elem identity() const override { return parent_.identity(); }
  Elem multiply(const Elem& a, const Elem& b) const override { return parent_.mul(a, b); }
  Elem invert(const Elem& a) const override { return parent_.inv(a); }
  bool equal(const Elem& a, const Elem& b) const override { return parent_.eq(a, b); }
  std::uint64_t hash(const Elem& a) const override { return parent_.hash(a); }
  bool is_finite() const override { return true; }
  std::optional<std::uint64_t> order_hint() const override { return elems_.size(); }
  std::optional<std::vector<Elem>> elements() const override { return elems_; }
  std::string describe(const Elem& a) const override { return parent_.describe(a); }

 private:
  Group parent_;
  std::vector<Elem> elems_;
  std::string tag_;
};

class QuotientGroup final : public GroupOps {
 public:
  QuotientGroup(Group parent, std::vector<Elem> reps,
                std::shared_ptr<ElemMap<int>> coset_of, std::string tag)
      : parent_(std::move(parent)), reps_(std::move(reps)),
        coset_of_(std::move(coset_of)), tag_(std::move(tag)) {}

  std::string key() const override {
    return "quot:" + tag_ + ":" + parent_.key() + ":" + std::to_string(reps_.size());
  }
  Elem identity() const override { return reps_[0]; }
  Elem multiply(const Elem& a, const Elem& b) const override {
    return rep(parent_.mul(a, b));
  }
  Elem invert(const Elem& a) const override { return rep(parent_.inv(a)); }
  bool equal(const Elem& a, const Elem& b) const override {
    return coset(a) == coset(b);
  }
  std::uint64_t hash(const Elem& a) const override {
    return hash_mix(14695981039346656037ull, static_cast<std::uint64_t>(coset(a)));
  }
  bool is_finite() const override { return true; }
  std::optional<std::uint64_t> order_hint() const override { return reps_.size(); }
  std::optional<std::vector<Elem>> elements() const override { return reps_; }
  std::string describe(const Elem& a) const override {
    return "[" + parent_.describe(reps_[static_cast<std::size_t>(coset(a))]) + "]";
  }

  int coset(const Elem& a) const {
    const int* c = coset_of_->find(a);
    if (!c) throw CarrierMismatchError("element outside the quotient's parent group");
    return *c;
  }
  Elem rep(const Elem& a) const { return reps_[static_cast<std::size_t>(coset(a))]; }

 private:
  Group parent_;
  std::vector<Elem> reps_;
  std::shared_ptr<ElemMap<int>> coset_of_;
  std::string tag_;
};

}  // namespace

Group subgroup_view(const Group& g, const std::vector<Elem>& elems, const std::string& tag) {
  return Group(std::make_shared<SubgroupGroup>(g, elems, tag));
}

Decomposition decompose(const System& sys, const std::vector<Elem>& normal_subgroup) {
  sys->require_validated();
  const Group& G = sys->group();
  const Ring& R = sys->ring();
  const auto& all = sys->group_elements();

  // subgroup sanity: contains e, closed under product and inverse
  ElemMap<char> in_n(G);
  for (const Elem& x : normal_subgroup) in_n.emplace(x, 1);
  if (!in_n.contains(G.identity()))
    throw NotNormalError("the subgroup does not contain the identity");
  for (const Elem& x : normal_subgroup) {
    if (!in_n.contains(G.inv(x))) throw NotNormalError("subgroup is not closed under inverse");
    for (const Elem& y : normal_subgroup)
      if (!in_n.contains(G.mul(x, y))) throw NotNormalError("subgroup is not closed");
  }
  // normality: g n g^{-1} stays inside for every g in G
  for (const Elem& g : all)
    for (const Elem& x : normal_subgroup)
      if (!in_n.contains(G.mul(G.mul(g, x), G.inv(g))))
        throw NotNormalError("subgroup is not normal in the ambient group");

  // order the subgroup with identity first, by ambient enumeration index
  std::vector<Elem> n_sorted;
  for (const Elem& g : all)
    if (in_n.contains(g)) n_sorted.push_back(g);

  // cosets: rep = least ambient index in gN
  auto coset_map = std::make_shared<ElemMap<int>>(G);
  std::vector<Elem> transversal;
  for (const Elem& g : all) {
    if (coset_map->contains(g)) continue;
    int id = static_cast<int>(transversal.size());
    transversal.push_back(g);
    for (const Elem& x : n_sorted) coset_map->emplace(G.mul(g, x), id);
  }

  Group N = subgroup_view(G, n_sorted, "N");
  Group Q(std::make_shared<QuotientGroup>(G, transversal, coset_map, "byN"));

  // restriction R∗N of the ambient system
  System ambient = sys;
  System sub = make_system(
      R, N, [ambient](const Elem& g) { return ambient->sigma(g); },
      [ambient](const Elem& g, const Elem& h) { return ambient->tau(g, h); },
      sys->ring_samples(), sys->name() + "|N");
  sub->require_validated();
  Ring RN = crossed_ring(sub);

  auto as_sub = [sub](const CrossedElement& ambient_elem) {
    CrossedElement out(sub);
    for (const auto& [g, c] : ambient_elem.terms()) out.add_term(g, c);
    return out;
  };
  auto as_ambient = [ambient](const CrossedElement& sub_elem) {
    CrossedElement out(ambient);
    for (const auto& [g, c] : sub_elem.terms()) out.add_term(g, c);
    return out;
  };

  // conjugation by the transversal symbol: u -> t̄ u t̄⁻¹ computed in R∗G
  auto conj = [ambient, as_sub, as_ambient](const Elem& t, const CrossedElement& u) {
    CrossedElement tbar = CrossedElement::monomial(ambient, t, ambient->ring().one());
    CrossedElement tbar_inv = basis_inverse(ambient, t);
    return as_sub(cp_mul(cp_mul(tbar, as_ambient(u)), tbar_inv));
  };

  // the reverse conjugation u -> t̄⁻¹ u t̄, the exact inverse of conj
  auto conj_inv = [ambient, as_sub, as_ambient](const Elem& t, const CrossedElement& u) {
    CrossedElement tbar = CrossedElement::monomial(ambient, t, ambient->ring().one());
    CrossedElement tbar_inv = basis_inverse(ambient, t);
    return as_sub(cp_mul(cp_mul(tbar_inv, as_ambient(u)), tbar));
  };

  // sigma'(α): conjugation by t̄_α
  auto qg = Q;
  auto sigma_fn = [conj, conj_inv](const Elem& trep) {
    auto fwd = [conj, trep](const RingElem& packed) {
      return pack_crossed_value(conj(trep, crossed_value(packed)));
    };
    auto bwd = [conj_inv, trep](const RingElem& packed) {
      return pack_crossed_value(conj_inv(trep, crossed_value(packed)));
    };
    return RingAut("conj", fwd, bwd);
  };

  // tau'(α,β) = t̄_α t̄_β (t̄_{αβ})⁻¹, computed in the ambient system
  auto tau_fn = [ambient, as_sub, qg](const Elem& t1, const Elem& t2) {
    CrossedElement t1bar = CrossedElement::monomial(ambient, t1, ambient->ring().one());
    CrossedElement t2bar = CrossedElement::monomial(ambient, t2, ambient->ring().one());
    Elem trep = qg.mul(t1, t2);  // representative of the product coset
    CrossedElement val = cp_mul(cp_mul(t1bar, t2bar), basis_inverse(ambient, trep));
    return pack_crossed_value(as_sub(val));
  };

  System quot = make_system(RN, Q, sigma_fn, tau_fn, {}, sys->name() + "/N");
  quot->require_validated();

  // bijection: x = Σ_α u_α t̄_α with u_α = (x restricted to the coset)·t̄_α⁻¹
  std::vector<Elem> trans = transversal;
  auto to_quotient = [ambient, quot, trans, coset_map, as_sub](const CrossedElement& x) {
    CrossedElement out(quot);
    std::vector<CrossedElement> buckets;
    for (std::size_t i = 0; i < trans.size(); ++i) buckets.push_back(CrossedElement(ambient));
    for (const auto& [g, c] : x.terms()) {
      const int* idx = coset_map->find(g);
      if (!idx) throw CarrierMismatchError("element outside the decomposed group");
      buckets[static_cast<std::size_t>(*idx)].add_term(g, c);
    }
    for (std::size_t i = 0; i < trans.size(); ++i) {
      if (buckets[i].is_zero()) continue;
      CrossedElement u = cp_mul(buckets[i], basis_inverse(ambient, trans[i]));
      out.add_term(trans[i], pack_crossed_value(as_sub(u)));
    }
    return out;
  };
  auto from_quotient = [ambient, as_sub](const CrossedElement& y) {
    CrossedElement out(ambient);
    for (const auto& [t, packed] : y.terms()) {
      CrossedElement u = crossed_value(packed);
      CrossedElement tbar = CrossedElement::monomial(ambient, t, ambient->ring().one());
      CrossedElement lifted(ambient);
      for (const auto& [g, c] : u.terms()) lifted.add_term(g, c);
      CrossedElement prod = cp_mul(lifted, tbar);
      for (const auto& [g, c] : prod.terms()) out.add_term(g, c);
    }
    return out;
  };

  Decomposition d;
  d.quotient_system = quot;
  d.sub_system = sub;
  d.transversal = transversal;
  d.to_quotient = to_quotient;
  d.from_quotient = from_quotient;
  return d;
}

}  // namespace mglab
