#include "mglab/group_ring.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "mglab/rings.hpp"

namespace mglab {

GroupRingElement::GroupRingElement(Ring ring, Group group)
    : ring_(std::move(ring)), group_(std::move(group)), coeffs_(group_) {}

GroupRingElement GroupRingElement::one(const Ring& r, const Group& g) {
  return monomial(r, g, g.identity(), r.one());
}

GroupRingElement GroupRingElement::monomial(const Ring& r, const Group& g,
                                            const Elem& at, const RingElem& coeff) {
  GroupRingElement e(r, g);
  e.add_term(at, coeff);
  return e;
}

bool GroupRingElement::is_one() const {
  if (coeffs_.size() != 1) return false;
  const auto& [g, c] = *coeffs_.begin();
  return group_.is_identity(g) && ring_.is_one(c);
}

RingElem GroupRingElement::coeff(const Elem& g) const {
  const RingElem* c = coeffs_.find(g);
  return c ? *c : ring_.zero();
}

std::vector<std::pair<Elem, RingElem>> GroupRingElement::terms() const {
  std::vector<std::pair<Elem, RingElem>> out(coeffs_.begin(), coeffs_.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return group_.describe(a.first) < group_.describe(b.first);
  });
  return out;
}

GroupRingElement& GroupRingElement::add_term(const Elem& g, const RingElem& c) {
  if (ring_.is_zero(c)) return *this;
  if (RingElem* have = coeffs_.find(g)) {
    RingElem sum = ring_.add(*have, c);
    if (ring_.is_zero(sum))
      coeffs_.erase(g);
    else
      *have = std::move(sum);
  } else {
    coeffs_.emplace(g, c);
  }
  return *this;
}

namespace {

void require_same_carriers(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.ring().key() != b.ring().key() || a.group().key() != b.group().key())
    throw CarrierMismatchError("group ring elements live over different carriers");
}

}  // namespace

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_carriers(a, b);
  GroupRingElement out = a;
  for (const auto& [g, c] : b.terms()) out.add_term(g, c);
  return out;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_carriers(a, b);
  GroupRingElement out = a;
  for (const auto& [g, c] : b.terms()) out.add_term(g, b.ring().neg(c));
  return out;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out(ring_, group_);
  for (const auto& [g, c] : coeffs_) out.add_term(g, ring_.neg(c));
  return out;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.ring().key() != b.ring().key() || a.group().key() != b.group().key()) return false;
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (const auto& [g, c] : a.coeffs_) {
    const RingElem* other = b.coeffs_.find(g);
    if (!other || !a.ring().equal(c, *other)) return false;
  }
  return true;
}

std::string GroupRingElement::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : terms()) {
    if (!out.empty()) out += " + ";
    out += ring_.describe(c) + "*" + group_.describe(g);
  }
  return out;
}

GroupRingElement gr_mul(const GroupRingElement& u, const GroupRingElement& v) {
  require_same_carriers(u, v);
  GroupRingElement out(u.ring(), u.group());
  for (const auto& [g1, c1] : u.terms())
    for (const auto& [g2, c2] : v.terms())
      out.add_term(u.group().mul(g1, g2), u.ring().mul(c1, c2));
  return out;
}

int support_norm(const GroupRingElement& u, const MarkedGroup& mg, int cap,
                 const Caps& caps) {
  if (u.group().key() != mg.group.key())
    throw CarrierMismatchError("marked group does not carry this element");
  int best = 0;
  for (const auto& [g, c] : u.terms()) {
    auto n = word_norm(mg, g, cap, caps);
    if (!n)
      throw ExceedsCapError("support element " + mg.group.describe(g) +
                            " lies outside the radius-" + std::to_string(cap) + " ball");
    best = std::max(best, *n);
  }
  return best;
}

DirectPairResult check_direct_pair(const GroupRingElement& x, const GroupRingElement& y) {
  GroupRingElement xy = gr_mul(x, y);
  if (!xy.is_one())
    throw PreconditionError("xy is not 1; xy = " + xy.str());
  GroupRingElement yx = gr_mul(y, x);
  return {yx.is_one(), std::move(yx)};
}

// ------------------------------------------------------ R[G] as a ring

namespace {

struct GroupRingVal {
  GroupRingElement v;
};

class GroupRingRing final : public RingOps {
 public:
  GroupRingRing(Ring r, Group g) : r_(std::move(r)), g_(std::move(g)) {}

  std::string key() const override { return r_.key() + "[" + g_.key() + "]"; }
  RingElem zero() const override {
    return box<GroupRingVal>({GroupRingElement::zero(r_, g_)});
  }
  RingElem one() const override {
    return box<GroupRingVal>({GroupRingElement::one(r_, g_)});
  }
  RingElem add(const RingElem& a, const RingElem& b) const override {
    return box<GroupRingVal>({unbox<GroupRingVal>(a).v + unbox<GroupRingVal>(b).v});
  }
  RingElem neg(const RingElem& a) const override {
    return box<GroupRingVal>({-unbox<GroupRingVal>(a).v});
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    return box<GroupRingVal>({gr_mul(unbox<GroupRingVal>(a).v, unbox<GroupRingVal>(b).v)});
  }
  bool equal(const RingElem& a, const RingElem& b) const override {
    return unbox<GroupRingVal>(a).v == unbox<GroupRingVal>(b).v;
  }
  std::uint64_t hash(const RingElem& a) const override {
    // support hashes combine order-independently
    const auto& v = unbox<GroupRingVal>(a).v;
    std::uint64_t h = 0;
    for (const auto& [g, c] : v.terms())
      h += hash_mix(v.group().hash(g), v.ring().hash(c));
    return h;
  }
  std::optional<RingElem> try_inverse(const RingElem& a) const override {
    auto all = elements();
    if (!all) return std::nullopt;
    for (const RingElem& b : *all)
      if (equal(mul(a, b), one()) && equal(mul(b, a), one())) return b;
    return std::nullopt;
  }
  bool is_finite() const override { return r_.is_finite() && g_.is_finite(); }
  std::optional<std::vector<RingElem>> elements() const override {
    auto rs = r_.elements();
    auto gs = g_.elements();
    if (!rs || !gs) return std::nullopt;
    std::uint64_t total = saturating_pow(rs->size(), gs->size(), 1u << 21);
    if (total >= (1u << 21)) return std::nullopt;
    std::vector<RingElem> out;
    out.reserve(total);
    std::vector<std::size_t> odo(gs->size(), 0);
    while (true) {
      GroupRingElement e(r_, g_);
      for (std::size_t i = 0; i < gs->size(); ++i) e.add_term((*gs)[i], (*rs)[odo[i]]);
      out.push_back(box<GroupRingVal>({std::move(e)}));
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
    return unbox<GroupRingVal>(a).v.str();
  }

 private:
  Ring r_;
  Group g_;
};

}  // namespace

Ring group_ring_as_ring(const Ring& r, const Group& g) {
  return Ring(std::make_shared<GroupRingRing>(r, g));
}

GroupRingElement group_ring_value(const RingElem& packed) {
  return unbox<GroupRingVal>(packed).v;
}

RingElem pack_group_ring_value(const GroupRingElement& v) {
  return box<GroupRingVal>({v});
}

FinitenessReport direct_finiteness_scan(const Ring& ring, std::uint64_t cap) {
  auto started = std::chrono::steady_clock::now();
  auto all = ring.elements();
  if (!all) throw ResourceLimitError("ring is not finitely enumerable");
  if (all->size() > cap)
    throw ResourceLimitError("ring has " + std::to_string(all->size()) +
                             " elements, beyond the configured cap");

  FinitenessReport report;
  report.ring_key = ring.key();
  report.element_count = all->size();

  std::vector<bool> is_unit(all->size(), false);
  for (std::size_t i = 0; i < all->size(); ++i)
    for (std::size_t j = 0; j < all->size(); ++j) {
      ++report.pairs_checked;
      if (!ring.is_one(ring.mul((*all)[i], (*all)[j]))) continue;
      if (ring.is_one(ring.mul((*all)[j], (*all)[i]))) {
        is_unit[i] = true;
      } else {
        report.violations.emplace_back(ring.describe((*all)[i]), ring.describe((*all)[j]));
      }
    }
  for (bool u : is_unit)
    if (u) ++report.unit_count;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

FinitenessReport exhaustive_direct_finiteness(const Ring& r, const Group& g,
                                              std::uint64_t cap) {
  auto rs = r.elements();
  auto gs = g.elements();
  if (!rs || !gs)
    throw ResourceLimitError("both carriers must be finite and enumerable");
  if (saturating_pow(rs->size(), gs->size(), cap + 1) > cap)
    throw ResourceLimitError("|R|^|G| exceeds the configured cap");
  FinitenessReport report = direct_finiteness_scan(group_ring_as_ring(r, g), cap);
  report.ring_key = r.key();
  report.group_key = g.key();
  return report;
}

std::optional<GroupRingElement> one_sided_inverse_search(
    const GroupRingElement& u, const std::vector<RingElem>& pool,
    const std::vector<Elem>& support, std::uint64_t cap) {
  if (pool.empty() || support.empty())
    throw InvalidSpecError("pool and candidate support must be non-empty");
  if (saturating_pow(pool.size(), support.size(), cap + 1) > cap)
    throw ResourceLimitError("inverse search space exceeds the cap");

  const Ring& r = u.ring();
  const Group& g = u.group();
  std::vector<std::size_t> odo(support.size(), 0);
  while (true) {
    GroupRingElement v(r, g);
    for (std::size_t i = 0; i < support.size(); ++i) v.add_term(support[i], pool[odo[i]]);
    if (gr_mul(u, v).is_one()) return v;
    std::size_t c = odo.size();
    while (true) {
      if (c == 0) return std::nullopt;
      --c;
      if (++odo[c] < pool.size()) break;
      odo[c] = 0;
    }
  }
}

GroupRingElement matrix_lift(const std::vector<std::vector<GroupRingElement>>& m, int k) {
  if (k < 1 || static_cast<int>(m.size()) != k)
    throw ShapeError("matrix lift expects a k×k matrix");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != k) throw ShapeError("matrix lift expects a k×k matrix");
  const Ring& base = m[0][0].ring();
  const Group& g = m[0][0].group();
  for (const auto& row : m)
    for (const auto& e : row)
      if (e.ring().key() != base.key() || e.group().key() != g.key())
        throw CarrierMismatchError("matrix entries live over different carriers");

  Ring mk = matrix_ring(base, k);
  GroupRingElement out(mk, g);

  // gather the union of supports, then emit one matrix coefficient per
  // group element
  ElemMap<char> seen(g);
  std::vector<Elem> support;
  for (const auto& row : m)
    for (const auto& e : row)
      for (const auto& [ge, c] : e.terms())
        if (seen.emplace(ge, 1)) support.push_back(ge);

  for (const Elem& ge : support) {
    std::vector<RingElem> entries;
    entries.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) entries.push_back(m[i][j].coeff(ge));
    out.add_term(ge, matrix_elem(base, k, entries));
  }
  return out;
}

GroupRingElement parse_group_ring_literal(const Ring& r, const MarkedGroup& mg,
                                          const std::string& text,
                                          std::span<const std::string> names) {
  GroupRingElement out(r, mg.group);
  // split on '+' at top level; each term is [coeff*]word or a bare ring literal
  std::vector<std::string> terms;
  std::string cur;
  for (char ch : text) {
    if (ch == '+') {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  terms.push_back(cur);

  auto trim = [](std::string s) {
    std::size_t a = s.find_first_not_of(" \t");
    std::size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
  };

  for (std::string term : terms) {
    term = trim(term);
    if (term.empty()) throw ParseError("empty term in element literal");
    std::string coeff_text = "1";
    std::string word_text = term;
    auto star = term.find('*');
    if (star != std::string::npos) {
      coeff_text = trim(term.substr(0, star));
      word_text = trim(term.substr(star + 1));
    } else {
      // bare literal: try the whole term as a ring literal times the identity
      if (r.parse(term)) {
        coeff_text = term;
        word_text = "e";
      }
    }
    auto coeff = r.parse(coeff_text);
    if (!coeff) throw ParseError("cannot parse ring literal '" + coeff_text + "'");
    FreeWord w = FreeWord::parse(word_text, names);
    if (w.max_generator() >= static_cast<int>(mg.n()))
      throw ParseError("word uses a generator outside the marking");
    out.add_term(evaluate_word(mg.group, mg.marking, w), *coeff);
  }
  return out;
}

}  // namespace mglab
