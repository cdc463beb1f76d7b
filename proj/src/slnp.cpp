#include "mglab/slnp.hpp"

#include <algorithm>

#include "mglab/group.hpp"
#include "mglab/int_matrix.hpp"

namespace mglab {

GammaGenerators make_generators(int n, std::int64_t p) {
  if (n < 2) throw InvalidSpecError("n must be >= 2");
  if (p <= 2 || !is_prime(p)) throw InvalidSpecError("p must be an odd prime");

  GammaGenerators g;
  g.n = n;
  g.p = p;
  g.sanov_scale_warning = (n == 2);
  g.a = LaurentMat::identity(n, p);
  g.a.at(0, 1) = {2, 0};
  g.b = LaurentMat::identity(n, p);
  g.b.at(1, 0) = {2, 0};
  g.x = LaurentMat::identity(n, p);
  g.x.at(0, 1) = laurent_canonical(2, 1, p);  // 2/p

  if (!(laurent_mat_pow(g.x, static_cast<std::uint64_t>(p)) == g.a))
    throw Error("internal: x^p != a");
  return g;
}

OrderReport verify_order_step(int n, std::int64_t p, std::int64_t q,
                              std::uint64_t order_bound) {
  GammaGenerators g = make_generators(n, p);
  if (gcd64(q, p) != 1)
    throw NotCoprimeError("q must be coprime to p");
  ModMat A = reduce_laurent_mod(g.a, q);
  ModMat X = reduce_laurent_mod(g.x, q);

  Group slq = special_linear_mod(n, q);
  auto o_a = element_order(slq, box<ModMat>(A), order_bound);
  auto o_x = element_order(slq, box<ModMat>(X), order_bound);
  if (!o_a || !o_x) throw ResourceLimitError("order iteration exceeded its bound");

  // mutual membership of the two cyclic subgroups by power enumeration
  auto in_powers = [&](const ModMat& h, const ModMat& base, std::uint64_t ord) {
    ModMat acc = ModMat::identity(n, q);
    for (std::uint64_t k = 0; k < ord; ++k) {
      if (acc == h) return true;
      acc = mod_mat_mul(acc, base);
    }
    return false;
  };

  OrderReport rep;
  rep.n = n;
  rep.p = p;
  rep.q = q;
  rep.o_a = *o_a;
  rep.o_x = *o_x;
  rep.subgroup_equal = in_powers(A, X, *o_x) && in_powers(X, A, *o_a);
  rep.gcd_ox_p = gcd64(static_cast<std::int64_t>(*o_x), p);
  return rep;
}

namespace {

// nullspace basis of the commutation constraints CM = MC over Z/q (q prime);
// unknowns are the n^2 entries of C
std::vector<std::vector<std::int64_t>> commutant_basis(int n, std::int64_t q,
                                                       const std::vector<ModMat>& gens) {
  int vars = n * n;
  std::vector<std::vector<std::int64_t>> rows;
  for (const ModMat& M : gens) {
    if (M.n != n || M.q != q) throw CarrierMismatchError("generator has the wrong carrier");
    // (CM - MC)_{ij} = sum_k C_{ik} M_{kj} - M_{ik} C_{kj}
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(vars), 0);
        for (int k = 0; k < n; ++k) {
          row[static_cast<std::size_t>(i * n + k)] =
              mod_floor(row[static_cast<std::size_t>(i * n + k)] + M.at(k, j), q);
          row[static_cast<std::size_t>(k * n + j)] =
              mod_floor(row[static_cast<std::size_t>(k * n + j)] - M.at(i, k), q);
        }
        rows.push_back(std::move(row));
      }
  }

  // gaussian elimination mod q
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < vars && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    std::int64_t inv = *mod_inverse(rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], q);
    for (int c = 0; c < vars; ++c)
      rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] =
          mod_mul(rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)], inv, q);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      std::int64_t f = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int c = 0; c < vars; ++c)
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = mod_floor(
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                mod_mul(f, rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)], q),
            q);
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<char> is_pivot(static_cast<std::size_t>(vars), 0);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<std::vector<std::int64_t>> basis;
  for (int free = 0; free < vars; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<std::int64_t> v(static_cast<std::size_t>(vars), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (int r = 0; r < rank; ++r) {
      std::int64_t coef = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(free)];
      if (coef != 0)
        v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = mod_floor(-coef, q);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

ModMat from_vector(int n, std::int64_t q, const std::vector<std::int64_t>& v) {
  ModMat m;
  m.n = n;
  m.q = q;
  m.a = v;
  return m;
}

bool commutes_with_all(const ModMat& c, const std::vector<ModMat>& gens) {
  for (const ModMat& g : gens)
    if (!(mod_mat_mul(c, g) == mod_mat_mul(g, c))) return false;
  return true;
}

std::int64_t det_mod(const ModMat& m) { return mod_mat_det(m); }

}  // namespace

std::vector<ModMat> centralizer_sample(int n, std::int64_t q,
                                       const std::vector<ModMat>& generators, int count,
                                       std::mt19937_64& rng) {
  if (!is_prime(q)) throw OutOfScopeError("centralizer sampling needs a prime modulus");
  if (n > 4) throw OutOfScopeError("centralizer sampling supports n <= 4");
  std::vector<ModMat> out;
  if (count <= 0) return out;

  auto basis = commutant_basis(n, q, generators);
  ModMat id = ModMat::identity(n, q);
  out.push_back(id);

  std::uniform_int_distribution<std::int64_t> dist(0, q - 1);
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < 200 * count) {
    ++attempts;
    std::vector<std::int64_t> v(static_cast<std::size_t>(n) * n, 0);
    for (const auto& b : basis) {
      std::int64_t coef = dist(rng);
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = mod_floor(v[i] + mod_mul(coef, b[i], q), q);
    }
    ModMat c = from_vector(n, q, v);
    if (det_mod(c) == 0) continue;
    if (!commutes_with_all(c, generators))
      throw Error("internal: sampled matrix fails to commute");
    out.push_back(std::move(c));
  }
  return out;
}

VanishReport test_g_vanishing(int n, std::int64_t p, std::int64_t q, int samples,
                              std::mt19937_64& rng, int r) {
  if (gcd64(q, p) != 1) throw NotCoprimeError("q must be coprime to p");
  GammaGenerators g = make_generators(n, p);
  ModMat A = reduce_laurent_mod(g.a, q);
  ModMat B = reduce_laurent_mod(g.b, q);
  ModMat X = reduce_laurent_mod(g.x, q);

  // images of the amalgamated generators b^i a b^{-i}, i < r
  std::vector<ModMat> amalgamated;
  ModMat binv = mod_mat_inverse_det1(B);
  ModMat left = ModMat::identity(n, q);
  ModMat right = ModMat::identity(n, q);
  for (int i = 0; i < r; ++i) {
    amalgamated.push_back(mod_mat_mul(mod_mat_mul(left, A), right));
    left = mod_mat_mul(left, B);
    right = mod_mat_mul(binv, right);
  }

  VanishReport rep;
  rep.n = n;
  rep.p = p;
  rep.q = q;
  rep.samples_requested = samples;

  auto cs = centralizer_sample(n, q, amalgamated, samples, rng);
  ModMat xinv = mod_mat_inverse_det1(X);
  for (const ModMat& c : cs) {
    ModMat cinv = mod_mat_inverse(c);  // c is a unit, not necessarily det 1
    // phi-bar = conj_c ∘ pi_q must agree with pi_q on the amalgamated words
    for (const ModMat& u : amalgamated)
      if (!(mod_mat_mul(mod_mat_mul(c, u), cinv) == u))
        throw Error("internal: centralizer sample moves an amalgamated generator");
    ModMat xbar = mod_mat_mul(mod_mat_mul(c, X), cinv);
    ModMat comm = mod_mat_mul(mod_mat_mul(X, xbar),
                              mod_mat_mul(xinv, mod_mat_inverse_det1(xbar)));
    ++rep.samples_tested;
    if (!(comm == ModMat::identity(n, q))) {
      ++rep.counterexamples;
      rep.details.push_back("q=" + std::to_string(q) + " c=" + mod_mat_str(c) +
                            " commutator=" + mod_mat_str(comm));
    }
  }
  return rep;
}

FWitness f_membership(const LaurentMat& m) {
  FWitness w;
  // non-integral entries rule membership out at once: F sits inside SL_n(Z)
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (!laurent_is_integral(m.at(i, j))) {
        w.member = false;
        w.reason = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                   ") = " + laurent_str(m.at(i, j), m.p) + " non-integral";
        return w;
      }

  // integral: membership is decided on the Sanov block when the matrix is
  // the identity outside it
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      if (i < 2 && j < 2) continue;
      LaurentScalar expected = (i == j) ? LaurentScalar{1, 0} : LaurentScalar{0, 0};
      if (!(m.at(i, j) == expected)) {
        w.decided = false;
        w.reason = "integral matrix acts outside the Sanov block; membership undecided here";
        return w;
      }
    }

  IntMat block;
  block.n = 2;
  block.a = {m.at(0, 0).num, m.at(0, 1).num, m.at(1, 0).num, m.at(1, 1).num};
  auto word = sanov_membership(block);
  if (word) {
    w.member = true;
    w.word = *word;
    w.reason = "reduced word " + word->str();
  } else {
    w.member = false;
    w.reason = "Sanov reduction terminates off the identity";
  }
  return w;
}

FWitness x_not_in_f_witness(int n, std::int64_t p) {
  GammaGenerators g = make_generators(n, p);
  FWitness w = f_membership(g.x);
  if (w.member) throw Error("internal: x reported as a member of F");
  return w;
}

}  // namespace mglab
