#include "mglab/limits.hpp"

#include <algorithm>

#include "mglab/groups.hpp"
#include "mglab/int_matrix.hpp"
#include "mglab/laurent.hpp"
#include "mglab/modular_matrix.hpp"

namespace mglab {

namespace {

std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (std::int64_t{1} << 40) / base)
      throw InvalidSpecError("chain modulus overflows the supported range");
    r *= base;
  }
  return r;
}

}  // namespace

QuotientChain z_chain(std::int64_t m, int length) {
  if (m < 2) throw InvalidSpecError("chain modulus must be >= 2");
  if (length < 0) throw InvalidSpecError("chain length must be non-negative");
  QuotientChain chain;
  chain.kind = "z";
  chain.modulus = m;
  chain.base = {integers(), {z_elem(1)}, "Z"};

  for (int r = 0; r <= length; ++r) {
    std::int64_t mod = checked_pow(m, r);
    Group q = cyclic(mod);
    ChainStage stage;
    stage.mg = {q, {cyclic_elem(q, 1)}, "Z/" + std::to_string(mod)};
    stage.project = [mod](const Elem& e) {
      const BigInt& v = unbox<BigInt>(e);
      BigInt red = v % mod;
      if (red < 0) red += mod;
      return box<std::int64_t>(static_cast<std::int64_t>(red));
    };
    if (r > 0) {
      std::int64_t prev = checked_pow(m, r - 1);
      // connecting map recorded on the previous stage
      chain.stages[static_cast<std::size_t>(r) - 1].from_next =
          [prev](const Elem& e) {
            return box<std::int64_t>(mod_floor(unbox<std::int64_t>(e), prev));
          };
    }
    stage.label = stage.mg.label;
    chain.stages.push_back(std::move(stage));
  }
  return chain;
}

QuotientChain sanov_chain(std::int64_t m, int length) {
  if (m < 2) throw InvalidSpecError("chain modulus must be >= 2");
  if (length < 0) throw InvalidSpecError("chain length must be non-negative");
  QuotientChain chain;
  chain.kind = "sanov";
  chain.modulus = m;
  Group slz = special_linear_z(2);
  chain.base = {slz, {intmat_elem(sanov_a()), intmat_elem(sanov_b())}, "Sanov<SL2(Z)"};

  for (int r = 0; r <= length; ++r) {
    std::int64_t mod = checked_pow(m, r);
    ChainStage stage;
    if (r == 0) {
      // trivial quotient: mark the one-element group by identity images
      Group q = cyclic(1);
      stage.mg = {q, {q.identity(), q.identity()}, "1"};
      stage.project = [q](const Elem&) { return q.identity(); };
    } else {
      Group q = special_linear_mod(2, mod);
      stage.mg = {q,
                  {modmat_elem(reduce_int_mat(sanov_a(), mod)),
                   modmat_elem(reduce_int_mat(sanov_b(), mod))},
                  "Sanov<SL2(Z/" + std::to_string(mod) + ")"};
      stage.project = [mod](const Elem& e) {
        return box<ModMat>(reduce_int_mat(unbox<IntMat>(e), mod));
      };
    }
    if (r > 0) {
      std::int64_t prev = checked_pow(m, r - 1);
      chain.stages[static_cast<std::size_t>(r) - 1].from_next =
          [prev](const Elem& e) -> Elem {
        if (prev == 1) return box<std::int64_t>(std::int64_t{0});
        const ModMat& mm = unbox<ModMat>(e);
        ModMat out;
        out.n = mm.n;
        out.q = prev;
        out.a.reserve(mm.a.size());
        for (std::int64_t v : mm.a) out.a.push_back(mod_floor(v, prev));
        return box<ModMat>(std::move(out));
      };
    }
    stage.label = stage.mg.label;
    chain.stages.push_back(std::move(stage));
  }
  return chain;
}

QuotientChain self_chain(const MarkedGroup& mg) {
  QuotientChain chain;
  chain.kind = "self";
  chain.base = mg;
  ChainStage stage;
  stage.mg = mg;
  stage.project = [](const Elem& e) { return e; };
  stage.label = mg.label;
  chain.stages.push_back(std::move(stage));
  return chain;
}

void check_chain_invariants(const QuotientChain& chain) {
  for (std::size_t r = 0; r < chain.stages.size(); ++r) {
    const ChainStage& st = chain.stages[r];
    if (st.mg.n() != chain.base.n())
      throw InvalidSpecError("stage marking length differs from the base");
    for (std::size_t i = 0; i < chain.base.n(); ++i) {
      Elem img = st.project(chain.base.marking[i]);
      if (!st.mg.group.eq(img, st.mg.marking[i]))
        throw InvalidSpecError("marking does not correspond under the stage projection");
    }
    if (st.from_next && r + 1 < chain.stages.size()) {
      const ChainStage& next = chain.stages[r + 1];
      for (std::size_t i = 0; i < chain.base.n(); ++i) {
        Elem via_next = st.from_next(next.project(chain.base.marking[i]));
        if (!st.mg.group.eq(via_next, st.mg.marking[i]))
          throw InvalidSpecError("connecting surjection does not commute with markings");
      }
    }
  }
}

std::optional<int> convergence_radius(const QuotientChain& chain, int radius,
                                      const Caps& caps) {
  TrivialWordSet base_words = trivial_words(chain.base, radius, caps);
  for (std::size_t r = 0; r < chain.stages.size(); ++r) {
    TrivialWordSet stage_words = trivial_words(chain.stages[r].mg, radius, caps);
    if (base_words == stage_words) return static_cast<int>(r);
  }
  return std::nullopt;
}

TransferCertificate limit_transfer(const GroupRingElement& x, const GroupRingElement& y,
                                   const QuotientChain& chain, const Caps& caps) {
  if (x.group().key() != chain.base.group.key() ||
      y.group().key() != chain.base.group.key())
    throw CarrierMismatchError("elements do not live over the chain's base group");

  GroupRingElement xy = gr_mul(x, y);
  if (!xy.is_one()) throw PreconditionError("xy is not 1; xy = " + xy.str());
  GroupRingElement yx = gr_mul(y, x);

  // m ranges over the supports of x, y and yx (all computed in the base)
  constexpr int norm_cap = 64;
  int m = 0;
  m = std::max(m, support_norm(x, chain.base, norm_cap, caps));
  m = std::max(m, support_norm(y, chain.base, norm_cap, caps));
  m = std::max(m, support_norm(yx, chain.base, norm_cap, caps));

  // with trivial-word agreement up to 3m, any product of two ball-m elements
  // multiplies the same way in the base and in the quotient
  int radius = 3 * m;
  auto stage = convergence_radius(chain, radius, caps);
  if (!stage)
    throw ResourceLimitError("NotReached: no stage agrees with the base up to radius " +
                             std::to_string(radius));

  const ChainStage& st = chain.stages[static_cast<std::size_t>(*stage)];
  GroupRingElement xq(x.ring(), st.mg.group);
  for (const auto& [g, c] : x.terms()) xq.add_term(st.project(g), c);
  GroupRingElement yq(y.ring(), st.mg.group);
  for (const auto& [g, c] : y.terms()) yq.add_term(st.project(g), c);

  TransferCertificate cert;
  cert.support_bound = m;
  cert.agreement_radius = radius;
  cert.stage = *stage;
  cert.quotient_confirms = gr_mul(yq, xq).is_one();
  cert.base_confirms = yx.is_one();
  return cert;
}

// ------------------------------------------------- characteristic cores

CoreQuotient characteristic_core_z(std::int64_t d) {
  if (d < 1) throw OutOfScopeError("index must be positive");
  Group q = cyclic(d);
  CoreQuotient out;
  out.quotient = q;
  out.marking = {cyclic_elem(q, 1)};
  out.order = static_cast<std::uint64_t>(d);
  out.description = "Z/" + std::to_string(d) + " (unique index-" + std::to_string(d) +
                    " subgroup of Z)";
  return out;
}

namespace {

// all of S_d as permutation vectors, lexicographic, identity first
std::vector<std::vector<int>> all_perms(int d) {
  std::vector<int> p(d);
  for (int i = 0; i < d; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool tuple_transitive(const std::vector<const std::vector<int>*>& gens, int d) {
  std::vector<char> seen(static_cast<std::size_t>(d), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int found = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto* g : gens) {
      int fwd = (*g)[static_cast<std::size_t>(x)];
      int bwd = static_cast<int>(std::find(g->begin(), g->end(), x) - g->begin());
      for (int y : {fwd, bwd})
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++found;
          stack.push_back(y);
        }
    }
  }
  return found == d;
}

// the transitive degree-d homomorphism tuples for F_rank, in enumeration
// order; each hom is a rank-tuple of permutations
std::vector<std::vector<std::vector<int>>> transitive_homs(int rank, int d) {
  auto perms = all_perms(d);
  std::vector<std::vector<std::vector<int>>> homs;
  std::vector<std::size_t> odo(static_cast<std::size_t>(rank), 0);
  while (true) {
    std::vector<const std::vector<int>*> gens;
    for (std::size_t i = 0; i < odo.size(); ++i) gens.push_back(&perms[odo[i]]);
    if (tuple_transitive(gens, d)) {
      std::vector<std::vector<int>> hom;
      for (const auto* g : gens) hom.push_back(*g);
      homs.push_back(std::move(hom));
    }
    std::size_t c = odo.size();
    while (true) {
      if (c == 0) return homs;
      --c;
      if (++odo[c] < perms.size()) break;
      odo[c] = 0;
    }
  }
}

// elements of the product group: one permutation per transitive hom,
// flattened to a byte vector
using ProdElem = std::vector<std::uint8_t>;

class PermProductGroup final : public GroupOps {
 public:
  PermProductGroup(int coords, int degree, std::vector<ProdElem> closure, std::string tag)
      : coords_(coords), degree_(degree), elems_(std::move(closure)), tag_(std::move(tag)) {}

  std::string key() const override {
    return "permprod:" + tag_ + ":" + std::to_string(coords_) + "x" + std::to_string(degree_);
  }
  Elem identity() const override {
    ProdElem id(static_cast<std::size_t>(coords_) * degree_);
    for (int c = 0; c < coords_; ++c)
      for (int i = 0; i < degree_; ++i)
        id[static_cast<std::size_t>(c) * degree_ + i] = static_cast<std::uint8_t>(i);
    return box<ProdElem>(std::move(id));
  }
  Elem multiply(const Elem& a, const Elem& b) const override {
    const auto& x = unbox<ProdElem>(a);
    const auto& y = unbox<ProdElem>(b);
    ProdElem z(x.size());
    for (int c = 0; c < coords_; ++c) {
      std::size_t off = static_cast<std::size_t>(c) * degree_;
      for (int i = 0; i < degree_; ++i) z[off + i] = x[off + y[off + i]];
    }
    return box<ProdElem>(std::move(z));
  }
  Elem invert(const Elem& a) const override {
    const auto& x = unbox<ProdElem>(a);
    ProdElem z(x.size());
    for (int c = 0; c < coords_; ++c) {
      std::size_t off = static_cast<std::size_t>(c) * degree_;
      for (int i = 0; i < degree_; ++i) z[off + x[off + i]] = static_cast<std::uint8_t>(i);
    }
    return box<ProdElem>(std::move(z));
  }
  bool equal(const Elem& a, const Elem& b) const override {
    return unbox<ProdElem>(a) == unbox<ProdElem>(b);
  }
  std::uint64_t hash(const Elem& a) const override {
    const auto& x = unbox<ProdElem>(a);
    return fnv1a(x.data(), x.size());
  }
  bool is_finite() const override { return true; }
  std::optional<std::uint64_t> order_hint() const override { return elems_.size(); }
  std::optional<std::vector<Elem>> elements() const override {
    std::vector<Elem> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_) out.push_back(box<ProdElem>(e));
    return out;
  }
  std::string describe(const Elem& a) const override {
    const auto& x = unbox<ProdElem>(a);
    std::string s;
    for (std::uint8_t v : x) s += static_cast<char>('0' + v);
    return s;
  }

 private:
  int coords_;
  int degree_;
  std::vector<ProdElem> elems_;
  std::string tag_;
};

ProdElem hom_images(const std::vector<std::vector<std::vector<int>>>& homs, int gen, int d) {
  ProdElem out;
  out.reserve(homs.size() * static_cast<std::size_t>(d));
  for (const auto& hom : homs)
    for (int i = 0; i < d; ++i)
      out.push_back(static_cast<std::uint8_t>(hom[static_cast<std::size_t>(gen)][i]));
  return out;
}

}  // namespace

CoreQuotient characteristic_core_free(int rank, int d, const Caps& caps) {
  if (rank < 2 || rank > 3) throw OutOfScopeError("free rank supported: 2..3");
  if (d < 2 || d > 3) throw OutOfScopeError("index supported: 2..3");

  auto homs = transitive_homs(rank, d);
  int coords = static_cast<int>(homs.size());

  std::vector<ProdElem> gens;
  for (int g = 0; g < rank; ++g) gens.push_back(hom_images(homs, g, d));

  // BFS closure of the generated subgroup of the permutation product
  struct VecHash {
    std::size_t operator()(const ProdElem& v) const {
      return static_cast<std::size_t>(fnv1a(v.data(), v.size()));
    }
  };
  std::unordered_map<ProdElem, int, VecHash> index;
  std::vector<ProdElem> closure;
  ProdElem id(static_cast<std::size_t>(coords) * d);
  for (int c = 0; c < coords; ++c)
    for (int i = 0; i < d; ++i) id[static_cast<std::size_t>(c) * d + i] = static_cast<std::uint8_t>(i);
  closure.push_back(id);
  index.emplace(id, 0);
  auto compose = [&](const ProdElem& x, const ProdElem& y) {
    ProdElem z(x.size());
    for (int c = 0; c < coords; ++c) {
      std::size_t off = static_cast<std::size_t>(c) * d;
      for (int i = 0; i < d; ++i) z[off + i] = x[off + y[off + i]];
    }
    return z;
  };
  for (std::size_t at = 0; at < closure.size(); ++at) {
    for (const ProdElem& g : gens) {
      ProdElem next = compose(closure[at], g);
      if (index.emplace(next, static_cast<int>(closure.size())).second) {
        if (closure.size() >= caps.max_vertices)
          throw ResourceLimitError("core closure exceeds the vertex cap");
        closure.push_back(std::move(next));
      }
    }
  }
  // generated submonoid of a finite group is the subgroup itself

  std::uint64_t order = closure.size();
  Group q(std::make_shared<PermProductGroup>(coords, d, std::move(closure),
                                             "F" + std::to_string(rank) + "d" + std::to_string(d)));
  CoreQuotient out;
  out.quotient = q;
  for (const ProdElem& g : gens) out.marking.push_back(box<ProdElem>(g));
  out.order = order;
  out.description = "image of F_" + std::to_string(rank) + " in the product of " +
                    std::to_string(coords) + " transitive degree-" + std::to_string(d) +
                    " actions";
  return out;
}

bool core_kernel_contains(int rank, int d, const FreeWord& w) {
  auto homs = transitive_homs(rank, d);
  for (const auto& hom : homs) {
    std::vector<int> acc(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) acc[static_cast<std::size_t>(i)] = i;
    for (const Letter& l : w.letters()) {
      if (l.gen >= rank) throw OutOfScopeError("word uses a generator beyond the rank");
      const auto& p = hom[static_cast<std::size_t>(l.gen)];
      std::vector<int> next(acc.size());
      if (l.sign > 0) {
        for (int i = 0; i < d; ++i) next[static_cast<std::size_t>(i)] = acc[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
      } else {
        std::vector<int> pinv(p.size());
        for (int i = 0; i < d; ++i) pinv[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
        for (int i = 0; i < d; ++i) next[static_cast<std::size_t>(i)] = acc[static_cast<std::size_t>(pinv[static_cast<std::size_t>(i)])];
      }
      acc = std::move(next);
    }
    for (int i = 0; i < d; ++i)
      if (acc[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

}  // namespace mglab
