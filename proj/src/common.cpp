#include "mglab/common.hpp"

namespace mglab {

std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m) {
  if (m <= 0) return std::nullopt;
  std::int64_t r0 = m, r1 = mod_floor(a, m);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) return std::nullopt;
  return mod_floor(t0, m);
}

std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t m) {
  std::int64_t r = 1 % m;
  std::int64_t b = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1) r = mod_mul(r, b, m);
    b = mod_mul(b, b, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp,
                             std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return limit;
    r *= base;
    if (r >= limit) return limit;
  }
  return r;
}

}  // namespace mglab
