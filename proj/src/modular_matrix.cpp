#include "mglab/modular_matrix.hpp"

namespace mglab {

ModMat ModMat::identity(int n, std::int64_t q) {
  ModMat m;
  m.n = n;
  m.q = q;
  m.a.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1 % q;
  return m;
}

ModMat mod_mat_mul(const ModMat& x, const ModMat& y) {
  if (x.n != y.n || x.q != y.q) throw CarrierMismatchError("modular matrix carriers differ");
  ModMat z;
  z.n = x.n;
  z.q = x.q;
  z.a.assign(static_cast<std::size_t>(x.n) * x.n, 0);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      __int128 acc = 0;
      for (int l = 0; l < x.n; ++l)
        acc += static_cast<__int128>(x.at(i, l)) * y.at(l, j);
      z.at(i, j) = static_cast<std::int64_t>(acc % x.q);
      if (z.at(i, j) < 0) z.at(i, j) += x.q;
    }
  return z;
}

namespace {

std::int64_t det_rec_mod(const std::vector<std::int64_t>& m, int n, std::int64_t q) {
  if (n == 1) return mod_floor(m[0], q);
  if (n == 2) return mod_floor(mod_mul(m[0], m[3], q) - mod_mul(m[1], m[2], q), q);
  std::int64_t det = 0;
  std::vector<std::int64_t> minor(static_cast<std::size_t>(n - 1) * (n - 1));
  for (int col = 0; col < n; ++col) {
    std::size_t k = 0;
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        minor[k++] = m[static_cast<std::size_t>(i) * n + j];
      }
    std::int64_t term = mod_mul(m[static_cast<std::size_t>(col)], det_rec_mod(minor, n - 1, q), q);
    det = mod_floor(col % 2 == 0 ? det + term : det - term, q);
  }
  return det;
}

}  // namespace

std::int64_t mod_mat_det(const ModMat& m) { return det_rec_mod(m.a, m.n, m.q); }

ModMat mod_mat_inverse_det1(const ModMat& m) {
  int n = m.n;
  std::int64_t q = m.q;
  ModMat inv;
  inv.n = n;
  inv.q = q;
  inv.a.assign(static_cast<std::size_t>(n) * n, 0);
  if (n == 1) {
    inv.at(0, 0) = 1 % q;
    return inv;
  }
  std::vector<std::int64_t> minor(static_cast<std::size_t>(n - 1) * (n - 1));
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
      std::int64_t cof = det_rec_mod(minor, n - 1, q);
      if ((i + j) % 2 != 0) cof = mod_floor(-cof, q);
      inv.at(j, i) = cof;
    }
  return inv;
}

ModMat mod_mat_inverse(const ModMat& m) {
  std::int64_t det = mod_mat_det(m);
  auto det_inv = mod_inverse(det, m.q);
  if (!det_inv) throw DeterminantError("matrix determinant is not a unit mod q");
  ModMat adj = mod_mat_inverse_det1(m);  // adjugate when det != 1
  for (auto& v : adj.a) v = mod_mul(v, *det_inv, m.q);
  return adj;
}

std::string mod_mat_str(const ModMat& m) {
  std::string s = "[";
  for (int i = 0; i < m.n; ++i) {
    s += i ? ";[" : "[";
    for (int j = 0; j < m.n; ++j) {
      if (j) s += ",";
      s += std::to_string(m.at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

ModMat reduce_int_mat(const IntMat& m, std::int64_t q) {
  if (q < 2) throw InvalidSpecError("modulus must be >= 2");
  ModMat z;
  z.n = m.n;
  z.q = q;
  z.a.reserve(m.a.size());
  for (const BigInt& v : m.a) {
    BigInt r = v % q;
    if (r < 0) r += q;
    z.a.push_back(static_cast<std::int64_t>(r));
  }
  if (mod_mat_det(z) != 1 % q)
    throw DeterminantError("reduced matrix determinant is not 1 mod q");
  return z;
}

namespace {

class SlModGroup final : public GroupOps {
 public:
  SlModGroup(int n, std::int64_t q) : n_(n), q_(q) {
    if (n < 1) throw InvalidSpecError("matrix dimension must be positive");
    if (q < 2) throw InvalidSpecError("modulus must be >= 2");
  }
  std::string key() const override {
    return "SL" + std::to_string(n_) + "(Z/" + std::to_string(q_) + ")";
  }
  Elem identity() const override { return box<ModMat>(ModMat::identity(n_, q_)); }
  Elem multiply(const Elem& a, const Elem& b) const override {
    return box<ModMat>(mod_mat_mul(unbox<ModMat>(a), unbox<ModMat>(b)));
  }
  Elem invert(const Elem& a) const override {
    return box<ModMat>(mod_mat_inverse_det1(unbox<ModMat>(a)));
  }
  bool equal(const Elem& a, const Elem& b) const override {
    return unbox<ModMat>(a) == unbox<ModMat>(b);
  }
  std::uint64_t hash(const Elem& a) const override {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : unbox<ModMat>(a).a) h = hash_mix(h, static_cast<std::uint64_t>(v));
    return h;
  }
  bool is_finite() const override { return true; }
  std::string describe(const Elem& a) const override { return mod_mat_str(unbox<ModMat>(a)); }

 private:
  int n_;
  std::int64_t q_;
};

}  // namespace

Group special_linear_mod(int n, std::int64_t q) {
  return Group(std::make_shared<SlModGroup>(n, q));
}

Elem modmat_elem(ModMat m) {
  if (mod_mat_det(m) != 1 % m.q) throw DeterminantError("determinant is not 1 mod q");
  return box<ModMat>(std::move(m));
}

const ModMat& modmat_of(const Elem& e) { return unbox<ModMat>(e); }

}  // namespace mglab
