#include "mglab/laurent.hpp"

namespace mglab {

LaurentScalar laurent_canonical(BigInt num, unsigned exp, std::int64_t p) {
  if (num == 0) return {0, 0};
  while (exp > 0 && num % p == 0) {
    num /= p;
    --exp;
  }
  return {std::move(num), exp};
}

LaurentScalar laurent_add(const LaurentScalar& a, const LaurentScalar& b, std::int64_t p) {
  unsigned e = std::max(a.exp, b.exp);
  BigInt pa = 1, pb = 1;
  for (unsigned i = a.exp; i < e; ++i) pa *= p;
  for (unsigned i = b.exp; i < e; ++i) pb *= p;
  return laurent_canonical(a.num * pa + b.num * pb, e, p);
}

LaurentScalar laurent_mul(const LaurentScalar& a, const LaurentScalar& b, std::int64_t p) {
  return laurent_canonical(a.num * b.num, a.exp + b.exp, p);
}

LaurentScalar laurent_neg(const LaurentScalar& a) { return {-a.num, a.exp}; }

bool laurent_is_integral(const LaurentScalar& a) { return a.exp == 0; }

std::string laurent_str(const LaurentScalar& a, std::int64_t p) {
  if (a.exp == 0) return a.num.str();
  std::string s = a.num.str() + "/" + std::to_string(p);
  if (a.exp > 1) s += "^" + std::to_string(a.exp);
  return s;
}

LaurentMat LaurentMat::identity(int n, std::int64_t p) {
  LaurentMat m;
  m.n = n;
  m.p = p;
  m.a.assign(static_cast<std::size_t>(n) * n, LaurentScalar{});
  for (int i = 0; i < n; ++i) m.at(i, i) = {1, 0};
  return m;
}

LaurentMat laurent_mat_mul(const LaurentMat& x, const LaurentMat& y) {
  if (x.n != y.n || x.p != y.p) throw CarrierMismatchError("laurent matrix carriers differ");
  LaurentMat z;
  z.n = x.n;
  z.p = x.p;
  z.a.assign(static_cast<std::size_t>(x.n) * x.n, LaurentScalar{});
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      LaurentScalar acc{};
      for (int l = 0; l < x.n; ++l)
        acc = laurent_add(acc, laurent_mul(x.at(i, l), y.at(l, j), x.p), x.p);
      z.at(i, j) = acc;
    }
  return z;
}

namespace {

LaurentScalar det_rec(const std::vector<LaurentScalar>& m, int n, std::int64_t p) {
  if (n == 1) return m[0];
  if (n == 2)
    return laurent_add(laurent_mul(m[0], m[3], p),
                       laurent_neg(laurent_mul(m[1], m[2], p)), p);
  LaurentScalar det{};
  std::vector<LaurentScalar> minor(static_cast<std::size_t>(n - 1) * (n - 1));
  for (int col = 0; col < n; ++col) {
    std::size_t k = 0;
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        minor[k++] = m[static_cast<std::size_t>(i) * n + j];
      }
    LaurentScalar term = laurent_mul(m[static_cast<std::size_t>(col)], det_rec(minor, n - 1, p), p);
    det = laurent_add(det, col % 2 == 0 ? term : laurent_neg(term), p);
  }
  return det;
}

}  // namespace

LaurentScalar laurent_mat_det(const LaurentMat& m) { return det_rec(m.a, m.n, m.p); }

LaurentMat laurent_mat_inverse_det1(const LaurentMat& m) {
  int n = m.n;
  LaurentMat inv;
  inv.n = n;
  inv.p = m.p;
  inv.a.assign(static_cast<std::size_t>(n) * n, LaurentScalar{});
  if (n == 1) {
    inv.at(0, 0) = {1, 0};
    return inv;
  }
  std::vector<LaurentScalar> minor(static_cast<std::size_t>(n - 1) * (n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::size_t k = 0;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0; c < n; ++c) {
          if (c == j) continue;
          minor[k++] = m.a[static_cast<std::size_t>(r) * n + c];
        }
      }
      LaurentScalar cof = det_rec(minor, n - 1, m.p);
      if ((i + j) % 2 != 0) cof = laurent_neg(cof);
      inv.at(j, i) = cof;
    }
  return inv;
}

LaurentMat laurent_mat_pow(const LaurentMat& m, std::uint64_t k) {
  LaurentMat acc = LaurentMat::identity(m.n, m.p);
  LaurentMat base = m;
  while (k > 0) {
    if (k & 1) acc = laurent_mat_mul(acc, base);
    base = laurent_mat_mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::string laurent_mat_str(const LaurentMat& m) {
  std::string s = "[";
  for (int i = 0; i < m.n; ++i) {
    s += i ? ";[" : "[";
    for (int j = 0; j < m.n; ++j) {
      if (j) s += ",";
      s += laurent_str(m.at(i, j), m.p);
    }
    s += "]";
  }
  return s + "]";
}

bool laurent_mat_integral(const LaurentMat& m) {
  for (const auto& v : m.a)
    if (!laurent_is_integral(v)) return false;
  return true;
}

namespace {

class SlLaurentGroup final : public GroupOps {
 public:
  SlLaurentGroup(int n, std::int64_t p) : n_(n), p_(p) {
    if (n < 1) throw InvalidSpecError("matrix dimension must be positive");
    if (p <= 2 || !is_prime(p)) throw InvalidSpecError("p must be an odd prime");
  }
  std::string key() const override {
    return "SL" + std::to_string(n_) + "(Z[1/" + std::to_string(p_) + "])";
  }
  Elem identity() const override { return box<LaurentMat>(LaurentMat::identity(n_, p_)); }
  Elem multiply(const Elem& a, const Elem& b) const override {
    return box<LaurentMat>(laurent_mat_mul(unbox<LaurentMat>(a), unbox<LaurentMat>(b)));
  }
  Elem invert(const Elem& a) const override {
    return box<LaurentMat>(laurent_mat_inverse_det1(unbox<LaurentMat>(a)));
  }
  bool equal(const Elem& a, const Elem& b) const override {
    return unbox<LaurentMat>(a) == unbox<LaurentMat>(b);
  }
  std::uint64_t hash(const Elem& a) const override {
    const auto& m = unbox<LaurentMat>(a);
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& v : m.a) {
      h = hash_bigint(v.num, h);
      h = hash_mix(h, v.exp);
    }
    return h;
  }
  bool is_finite() const override { return false; }
  std::string describe(const Elem& a) const override {
    return laurent_mat_str(unbox<LaurentMat>(a));
  }

 private:
  int n_;
  std::int64_t p_;
};

}  // namespace

Group special_linear_laurent(int n, std::int64_t p) {
  return Group(std::make_shared<SlLaurentGroup>(n, p));
}

Elem laurent_elem(LaurentMat m) {
  if (!(laurent_mat_det(m) == LaurentScalar{1, 0}))
    throw DeterminantError("laurent matrix determinant is not 1");
  return box<LaurentMat>(std::move(m));
}

const LaurentMat& laurent_of(const Elem& e) { return unbox<LaurentMat>(e); }

ModMat reduce_laurent_mod(const LaurentMat& m, std::int64_t q) {
  if (q < 2) throw InvalidSpecError("modulus must be >= 2");
  if (gcd64(q, m.p) != 1)
    throw NotCoprimeError("q = " + std::to_string(q) + " shares a factor with p = " +
                          std::to_string(m.p));
  std::int64_t pinv = *mod_inverse(m.p, q);
  ModMat z;
  z.n = m.n;
  z.q = q;
  z.a.reserve(m.a.size());
  for (const auto& v : m.a) {
    BigInt r = v.num % q;
    if (r < 0) r += q;
    z.a.push_back(mod_mul(static_cast<std::int64_t>(r), mod_pow(pinv, v.exp, q), q));
  }
  if (mod_mat_det(z) != 1 % q)
    throw DeterminantError("reduced determinant is not 1 mod q");
  return z;
}

}  // namespace mglab
