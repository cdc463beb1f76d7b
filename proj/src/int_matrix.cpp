#include "mglab/int_matrix.hpp"

#include <algorithm>

namespace mglab {

IntMat IntMat::identity(int n) {
  IntMat m;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
  if (x.n != y.n) throw ShapeError("matrix dimensions differ");
  IntMat z;
  z.n = x.n;
  z.a.assign(static_cast<std::size_t>(x.n) * x.n, 0);
  for (int i = 0; i < x.n; ++i)
    for (int l = 0; l < x.n; ++l) {
      const BigInt& xv = x.at(i, l);
      if (xv == 0) continue;
      for (int j = 0; j < x.n; ++j) z.at(i, j) += xv * y.at(l, j);
    }
  return z;
}

namespace {

BigInt det_rec(const std::vector<BigInt>& m, int n) {
  if (n == 1) return m[0];
  if (n == 2) return m[0] * m[3] - m[1] * m[2];
  BigInt det = 0;
  std::vector<BigInt> minor(static_cast<std::size_t>(n - 1) * (n - 1));
  for (int col = 0; col < n; ++col) {
    std::size_t k = 0;
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        minor[k++] = m[static_cast<std::size_t>(i) * n + j];
      }
    BigInt term = m[static_cast<std::size_t>(col)] * det_rec(minor, n - 1);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace

BigInt mat_det(const IntMat& m) { return det_rec(m.a, m.n); }

IntMat mat_inverse_det1(const IntMat& m) {
  int n = m.n;
  IntMat inv;
  inv.n = n;
  inv.a.assign(static_cast<std::size_t>(n) * n, 0);
  if (n == 1) {
    inv.at(0, 0) = 1;
    return inv;
  }
  std::vector<BigInt> minor(static_cast<std::size_t>(n - 1) * (n - 1));
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
      BigInt cof = det_rec(minor, n - 1);
      if ((i + j) % 2 != 0) cof = -cof;
      inv.at(j, i) = cof;  // adjugate = transposed cofactors; det = 1
    }
  return inv;
}

std::string mat_str(const IntMat& m) {
  std::string s = "[";
  for (int i = 0; i < m.n; ++i) {
    s += i ? ";[" : "[";
    for (int j = 0; j < m.n; ++j) {
      if (j) s += ",";
      s += m.at(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

namespace {

class SlzGroup final : public GroupOps {
 public:
  explicit SlzGroup(int n) : n_(n) {
    if (n < 1) throw InvalidSpecError("matrix dimension must be positive");
  }
  std::string key() const override { return "SL" + std::to_string(n_) + "(Z)"; }
  Elem identity() const override { return box<IntMat>(IntMat::identity(n_)); }
  Elem multiply(const Elem& a, const Elem& b) const override {
    return box<IntMat>(mat_mul(unbox<IntMat>(a), unbox<IntMat>(b)));
  }
  Elem invert(const Elem& a) const override {
    return box<IntMat>(mat_inverse_det1(unbox<IntMat>(a)));
  }
  bool equal(const Elem& a, const Elem& b) const override {
    return unbox<IntMat>(a) == unbox<IntMat>(b);
  }
  std::uint64_t hash(const Elem& a) const override {
    std::uint64_t h = 1469598103934665603ull;
    for (const BigInt& v : unbox<IntMat>(a).a) h = hash_bigint(v, h);
    return h;
  }
  bool is_finite() const override { return false; }
  std::string describe(const Elem& a) const override { return mat_str(unbox<IntMat>(a)); }

 private:
  int n_;
};

}  // namespace

Group special_linear_z(int n) { return Group(std::make_shared<SlzGroup>(n)); }

Elem intmat_elem(IntMat m) {
  if (mat_det(m) != 1) throw DeterminantError("matrix determinant is not 1");
  return box<IntMat>(std::move(m));
}

const IntMat& intmat_of(const Elem& e) { return unbox<IntMat>(e); }

IntMat sanov_a() {
  IntMat m = IntMat::identity(2);
  m.at(0, 1) = 2;
  return m;
}

IntMat sanov_b() {
  IntMat m = IntMat::identity(2);
  m.at(1, 0) = 2;
  return m;
}

namespace {

BigInt babs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

BigInt col_norm(const IntMat& m) {
  BigInt c0 = babs(m.at(0, 0)) + babs(m.at(1, 0));
  BigInt c1 = babs(m.at(0, 1)) + babs(m.at(1, 1));
  return std::max(c0, c1);
}

// right-multiply by a^k or b^k
IntMat apply_power(const IntMat& m, int gen, const BigInt& k) {
  IntMat z = m;
  if (gen == 0) {  // column 2 += 2k * column 1
    z.at(0, 1) += 2 * k * m.at(0, 0);
    z.at(1, 1) += 2 * k * m.at(1, 0);
  } else {  // column 1 += 2k * column 2
    z.at(0, 0) += 2 * k * m.at(0, 1);
    z.at(1, 0) += 2 * k * m.at(1, 1);
  }
  return z;
}

// norm after stripping gen^k (i.e. right-multiplying by gen^{-k})
BigInt strip_norm(const IntMat& m, int gen, const BigInt& k) {
  return col_norm(apply_power(m, gen, -k));
}

// best nonzero k for the given generator: minimize the stripped norm,
// ties broken by smaller |k| then positive k
std::pair<BigInt, BigInt> best_strip(const IntMat& m, int gen) {
  std::vector<BigInt> cands = {1, -1};
  // breakpoints of the piecewise linear column sums
  BigInt nums[2], dens[2];
  if (gen == 0) {
    nums[0] = m.at(0, 1); dens[0] = 2 * m.at(0, 0);
    nums[1] = m.at(1, 1); dens[1] = 2 * m.at(1, 0);
  } else {
    nums[0] = m.at(0, 0); dens[0] = 2 * m.at(0, 1);
    nums[1] = m.at(1, 0); dens[1] = 2 * m.at(1, 1);
  }
  for (int t = 0; t < 2; ++t) {
    if (dens[t] == 0) continue;
    BigInt num = nums[t], den = dens[t];
    if (den < 0) {
      num = -num;
      den = -den;
    }
    // floor and ceil of num/den
    BigInt fl;
    if (num >= 0) {
      fl = num / den;
    } else {
      fl = -((-num + den - 1) / den);
    }
    cands.push_back(fl);
    cands.push_back(fl + 1);
  }
  std::optional<BigInt> best_k;
  BigInt best_v = 0;
  for (const BigInt& k : cands) {
    if (k == 0) continue;
    BigInt v = strip_norm(m, gen, k);
    if (!best_k || v < best_v ||
        (v == best_v && (babs(k) < babs(*best_k) ||
                         (babs(k) == babs(*best_k) && k > *best_k)))) {
      best_k = k;
      best_v = v;
    }
  }
  return {*best_k, best_v};
}

}  // namespace

std::optional<FreeWord> sanov_membership(const IntMat& m0) {
  if (m0.n != 2) throw ShapeError("sanov membership expects a 2x2 matrix");
  if (mat_det(m0) != 1) throw DeterminantError("matrix determinant is not 1");

  IntMat m = m0;
  IntMat id = IntMat::identity(2);
  std::vector<std::pair<int, BigInt>> segments;  // last syllable first
  while (!(m == id)) {
    BigInt n0 = col_norm(m);
    bool stripped = false;
    for (int gen = 0; gen < 2 && !stripped; ++gen) {
      auto [k, v] = best_strip(m, gen);
      if (v < n0) {
        segments.emplace_back(gen, k);
        m = apply_power(m, gen, -k);
        stripped = true;
      }
    }
    if (!stripped) return std::nullopt;
  }
  FreeWord w;
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    int sign = it->second > 0 ? 1 : -1;
    for (BigInt c = 0; c < babs(it->second); ++c) w.push({it->first, sign});
  }
  return w;
}

}  // namespace mglab
