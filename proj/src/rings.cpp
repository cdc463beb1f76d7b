#include "mglab/rings.hpp"

#include <array>

namespace mglab {

namespace {

// ------------------------------------------------------------------ Z

class IntegerRing final : public RingOps {
 public:
  std::string key() const override { return "Z"; }
  RingElem zero() const override { return box<BigInt>(0); }
  RingElem one() const override { return box<BigInt>(1); }
  RingElem add(const RingElem& a, const RingElem& b) const override {
    return box<BigInt>(unbox<BigInt>(a) + unbox<BigInt>(b));
  }
  RingElem neg(const RingElem& a) const override { return box<BigInt>(-unbox<BigInt>(a)); }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    return box<BigInt>(unbox<BigInt>(a) * unbox<BigInt>(b));
  }
  bool equal(const RingElem& a, const RingElem& b) const override {
    return unbox<BigInt>(a) == unbox<BigInt>(b);
  }
  std::uint64_t hash(const RingElem& a) const override { return hash_bigint(unbox<BigInt>(a)); }
  std::optional<RingElem> try_inverse(const RingElem& a) const override {
    const BigInt& v = unbox<BigInt>(a);
    if (v == 1 || v == -1) return box<BigInt>(v);
    return std::nullopt;
  }
  bool is_finite() const override { return false; }
  std::string describe(const RingElem& a) const override { return unbox<BigInt>(a).str(); }
  std::optional<RingElem> parse(const std::string& s) const override {
    try {
      return box<BigInt>(BigInt(s));
    } catch (...) {
      return std::nullopt;
    }
  }
};

// ------------------------------------------------------------------ Z/m

class ModularRing final : public RingOps {
 public:
  explicit ModularRing(std::int64_t m) : m_(m) {
    if (m < 2) throw InvalidSpecError("modulus must be >= 2");
  }
  std::string key() const override { return "Z/" + std::to_string(m_); }
  RingElem zero() const override { return box<std::int64_t>(0); }
  RingElem one() const override { return box<std::int64_t>(1 % m_); }
  RingElem add(const RingElem& a, const RingElem& b) const override {
    return box<std::int64_t>(mod_floor(unbox<std::int64_t>(a) + unbox<std::int64_t>(b), m_));
  }
  RingElem neg(const RingElem& a) const override {
    return box<std::int64_t>(mod_floor(-unbox<std::int64_t>(a), m_));
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    return box<std::int64_t>(mod_mul(unbox<std::int64_t>(a), unbox<std::int64_t>(b), m_));
  }
  bool equal(const RingElem& a, const RingElem& b) const override {
    return unbox<std::int64_t>(a) == unbox<std::int64_t>(b);
  }
  std::uint64_t hash(const RingElem& a) const override {
    return hash_mix(14695981039346656037ull, static_cast<std::uint64_t>(unbox<std::int64_t>(a)));
  }
  std::optional<RingElem> try_inverse(const RingElem& a) const override {
    auto inv = mod_inverse(unbox<std::int64_t>(a), m_);
    if (!inv) return std::nullopt;
    return box<std::int64_t>(*inv);
  }
  bool is_finite() const override { return true; }
  std::optional<std::vector<RingElem>> elements() const override {
    if (m_ > 1'000'000) return std::nullopt;
    std::vector<RingElem> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (std::int64_t v = 0; v < m_; ++v) out.push_back(box<std::int64_t>(v));
    return out;
  }
  std::string describe(const RingElem& a) const override {
    return std::to_string(unbox<std::int64_t>(a));
  }
  std::optional<RingElem> parse(const std::string& s) const override {
    try {
      return box<std::int64_t>(mod_floor(std::stoll(s), m_));
    } catch (...) {
      return std::nullopt;
    }
  }

 private:
  std::int64_t m_;
};

// ------------------------------------------------------------------ GF4
// elements 0,1,2,3 encode 0, 1, w, w+1; addition is xor of F2 coordinates

constexpr std::array<std::array<int, 4>, 4> kGf4Mul = {{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};
constexpr std::array<int, 4> kGf4Inv = {-1, 1, 3, 2};
constexpr std::array<const char*, 4> kGf4Names = {"0", "1", "w", "w+1"};

class Gf4Ring final : public RingOps {
 public:
  std::string key() const override { return "GF4"; }
  RingElem zero() const override { return box<int>(0); }
  RingElem one() const override { return box<int>(1); }
  RingElem add(const RingElem& a, const RingElem& b) const override {
    return box<int>(unbox<int>(a) ^ unbox<int>(b));
  }
  RingElem neg(const RingElem& a) const override { return a; }  // characteristic 2
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    return box<int>(kGf4Mul[unbox<int>(a)][unbox<int>(b)]);
  }
  bool equal(const RingElem& a, const RingElem& b) const override {
    return unbox<int>(a) == unbox<int>(b);
  }
  std::uint64_t hash(const RingElem& a) const override {
    return hash_mix(14695981039346656037ull, static_cast<std::uint64_t>(unbox<int>(a)));
  }
  std::optional<RingElem> try_inverse(const RingElem& a) const override {
    int v = unbox<int>(a);
    if (v == 0) return std::nullopt;
    return box<int>(kGf4Inv[v]);
  }
  bool is_finite() const override { return true; }
  std::optional<std::vector<RingElem>> elements() const override {
    std::vector<RingElem> out;
    for (int v = 0; v < 4; ++v) out.push_back(box<int>(v));
    return out;
  }
  std::string describe(const RingElem& a) const override { return kGf4Names[unbox<int>(a)]; }
  std::optional<RingElem> parse(const std::string& s) const override {
    for (int v = 0; v < 4; ++v)
      if (s == kGf4Names[v]) return box<int>(v);
    if (s == "w2" || s == "w^2") return box<int>(3);
    return std::nullopt;
  }
};

// ----------------------------------------------------------- Mat_k(R)

struct MatVal {
  std::vector<RingElem> a;  // row-major k×k
};

class MatrixRing final : public RingOps {
 public:
  MatrixRing(Ring base, int k) : base_(std::move(base)), k_(k) {
    if (k < 1) throw InvalidSpecError("matrix dimension must be positive");
  }

  std::string key() const override {
    return "mat" + std::to_string(k_) + "(" + base_.key() + ")";
  }
  RingElem zero() const override {
    MatVal m;
    m.a.assign(static_cast<std::size_t>(k_) * k_, base_.zero());
    return box<MatVal>(std::move(m));
  }
  RingElem one() const override {
    MatVal m;
    m.a.assign(static_cast<std::size_t>(k_) * k_, base_.zero());
    for (int i = 0; i < k_; ++i) m.a[static_cast<std::size_t>(i) * k_ + i] = base_.one();
    return box<MatVal>(std::move(m));
  }
  RingElem add(const RingElem& a, const RingElem& b) const override {
    const auto& x = unbox<MatVal>(a).a;
    const auto& y = unbox<MatVal>(b).a;
    MatVal m;
    m.a.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) m.a.push_back(base_.add(x[i], y[i]));
    return box<MatVal>(std::move(m));
  }
  RingElem neg(const RingElem& a) const override {
    const auto& x = unbox<MatVal>(a).a;
    MatVal m;
    m.a.reserve(x.size());
    for (const auto& e : x) m.a.push_back(base_.neg(e));
    return box<MatVal>(std::move(m));
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    const auto& x = unbox<MatVal>(a).a;
    const auto& y = unbox<MatVal>(b).a;
    MatVal m;
    m.a.assign(static_cast<std::size_t>(k_) * k_, base_.zero());
    for (int i = 0; i < k_; ++i)
      for (int l = 0; l < k_; ++l)
        for (int j = 0; j < k_; ++j)
          m.a[idx(i, j)] = base_.add(m.a[idx(i, j)], base_.mul(x[idx(i, l)], y[idx(l, j)]));
    return box<MatVal>(std::move(m));
  }
  bool equal(const RingElem& a, const RingElem& b) const override {
    const auto& x = unbox<MatVal>(a).a;
    const auto& y = unbox<MatVal>(b).a;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!base_.equal(x[i], y[i])) return false;
    return true;
  }
  std::uint64_t hash(const RingElem& a) const override {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& e : unbox<MatVal>(a).a) h = hash_mix(h, base_.hash(e));
    return h;
  }
  std::optional<RingElem> try_inverse(const RingElem& a) const override {
    // adjugate route over the commutative base: inverse exists iff det is a unit
    RingElem det = determinant(unbox<MatVal>(a).a, k_);
    auto det_inv = base_.try_inverse(det);
    if (!det_inv) return std::nullopt;
    MatVal adj;
    adj.a.assign(static_cast<std::size_t>(k_) * k_, base_.zero());
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) {
        RingElem c = cofactor(unbox<MatVal>(a).a, k_, j, i);
        adj.a[idx(i, j)] = base_.mul(c, *det_inv);
      }
    RingElem candidate = box<MatVal>(std::move(adj));
    // confirm two-sidedly; the adjugate route presumes commutativity
    if (!equal(mul(a, candidate), one()) || !equal(mul(candidate, a), one()))
      return std::nullopt;
    return candidate;
  }
  bool is_finite() const override { return base_.is_finite(); }
  std::optional<std::vector<RingElem>> elements() const override {
    auto base_elems = base_.elements();
    if (!base_elems) return std::nullopt;
    std::size_t cells = static_cast<std::size_t>(k_) * k_;
    std::uint64_t total = saturating_pow(base_elems->size(), cells, 1u << 21);
    if (total >= (1u << 21)) return std::nullopt;
    std::vector<RingElem> out;
    out.reserve(total);
    std::vector<std::size_t> odo(cells, 0);
    while (true) {
      MatVal m;
      m.a.reserve(cells);
      for (std::size_t c = 0; c < cells; ++c) m.a.push_back((*base_elems)[odo[c]]);
      out.push_back(box<MatVal>(std::move(m)));
      std::size_t c = cells;
      while (c > 0) {
        --c;
        if (++odo[c] < base_elems->size()) break;
        odo[c] = 0;
        if (c == 0) return out;
      }
    }
  }
  std::string describe(const RingElem& a) const override {
    const auto& x = unbox<MatVal>(a).a;
    std::string out = "[";
    for (int i = 0; i < k_; ++i) {
      out += i ? ";[" : "[";
      for (int j = 0; j < k_; ++j) {
        if (j) out += ",";
        out += base_.describe(x[idx(i, j)]);
      }
      out += "]";
    }
    return out + "]";
  }

  const Ring& base() const { return base_; }
  int dim() const { return k_; }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * k_ + j; }

  RingElem determinant(const std::vector<RingElem>& m, int n) const {
    if (n == 1) return m[0];
    RingElem det = base_.zero();
    for (int j = 0; j < n; ++j) {
      RingElem c = cofactor(m, n, 0, j);
      det = base_.add(det, base_.mul(m[static_cast<std::size_t>(j)], c));
    }
    return det;
  }

  RingElem cofactor(const std::vector<RingElem>& m, int n, int row, int col) const {
    std::vector<RingElem> minor;
    minor.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int i = 0; i < n; ++i) {
      if (i == row) continue;
      for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        minor.push_back(m[static_cast<std::size_t>(i) * n + j]);
      }
    }
    RingElem d = n == 1 ? base_.one() : determinant(minor, n - 1);
    return ((row + col) % 2 == 0) ? d : base_.neg(d);
  }

  Ring base_;
  int k_;
};

}  // namespace

Ring integer_ring() { return Ring(std::make_shared<IntegerRing>()); }

Ring modular_ring(std::int64_t m) { return Ring(std::make_shared<ModularRing>(m)); }

Ring gf4() { return Ring(std::make_shared<Gf4Ring>()); }

Ring matrix_ring(const Ring& base, int k) {
  return Ring(std::make_shared<MatrixRing>(base, k));
}

RingElem matrix_elem(const Ring& base, int k, const std::vector<RingElem>& entries) {
  if (entries.size() != static_cast<std::size_t>(k) * k)
    throw ShapeError("matrix entry count does not match dimension");
  (void)base;
  MatVal m;
  m.a = entries;
  return box<MatVal>(std::move(m));
}

const std::vector<RingElem>& matrix_entries(const RingElem& e) {
  return unbox<MatVal>(e).a;
}

RingElem gf4_frobenius(const RingElem& a) {
  int v = unbox<int>(a);
  return box<int>(kGf4Mul[v][v]);
}

}  // namespace mglab
