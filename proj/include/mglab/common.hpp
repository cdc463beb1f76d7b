#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mglab {

inline constexpr const char* kVersion = "0.1.0";

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------- errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceLimitError : Error { using Error::Error; };
struct ExceedsCapError : Error { using Error::Error; };
struct CarrierMismatchError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct NotCoprimeError : Error { using Error::Error; };
struct InvalidSpecError : Error { using Error::Error; };
struct OutOfScopeError : Error { using Error::Error; };
struct NotNormalError : Error { using Error::Error; };
struct UnvalidatedSystemError : Error { using Error::Error; };
struct MissingGeneratorError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct DeterminantError : Error { using Error::Error; };
struct MarkingLengthError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// ------------------------------------------------- type-erased elements
//
// Group and ring elements are opaque handles; only the carrier that made
// them knows the payload type.  Handles are cheap to copy and immutable.

struct Payload {
  virtual ~Payload() = default;
};

using Val = std::shared_ptr<const Payload>;

template <class T>
struct Boxed final : Payload {
  T value;
  explicit Boxed(T v) : value(std::move(v)) {}
};

template <class T>
Val box(T v) {
  return std::make_shared<Boxed<T>>(std::move(v));
}

template <class T>
const T& unbox(const Val& v) {
  const auto* p = dynamic_cast<const Boxed<T>*>(v.get());
  if (p == nullptr) throw CarrierMismatchError("element does not belong to this carrier");
  return p->value;
}

using Elem = Val;
using RingElem = Val;

// ------------------------------------------------- deterministic hashing

inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t h = 1469598103934665603ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t fnv1a(std::string_view s,
                           std::uint64_t h = 1469598103934665603ull) {
  return fnv1a(s.data(), s.size(), h);
}

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  return fnv1a(&v, sizeof(v), h);
}

inline std::uint64_t hash_bigint(const BigInt& v,
                                 std::uint64_t h = 1469598103934665603ull) {
  return fnv1a(v.str(), h);
}

// ------------------------------------------------- small modular helpers

inline std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// extended euclid: returns g and x with a*x ≡ g (mod m)
std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m);

std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t m);

bool is_prime(std::int64_t n);

// checked power for cap computations: min(base^exp, limit)
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp,
                             std::uint64_t limit);

}  // namespace mglab
