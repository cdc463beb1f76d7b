#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mglab/common.hpp"

namespace mglab {

// Oracle contract for a unital associative ring with exact arithmetic.
// Instances are immutable and shareable.  Noetherian-ness of the provided
// instances is a documented assumption, not something this interface can
// certify.
class RingOps {
 public:
  virtual ~RingOps() = default;

  virtual std::string key() const = 0;  // carrier identity for mismatch checks
  virtual RingElem zero() const = 0;
  virtual RingElem one() const = 0;
  virtual RingElem add(const RingElem&, const RingElem&) const = 0;
  virtual RingElem neg(const RingElem&) const = 0;
  virtual RingElem mul(const RingElem&, const RingElem&) const = 0;
  virtual bool equal(const RingElem&, const RingElem&) const = 0;
  virtual std::uint64_t hash(const RingElem&) const = 0;
  virtual std::optional<RingElem> try_inverse(const RingElem&) const = 0;
  virtual bool is_finite() const = 0;
  // full enumeration, finite rings only
  virtual std::optional<std::vector<RingElem>> elements() const { return std::nullopt; }
  virtual std::string describe(const RingElem&) const = 0;
  virtual std::optional<RingElem> parse(const std::string&) const { return std::nullopt; }
};

class Ring {
 public:
  Ring() = default;
  explicit Ring(std::shared_ptr<const RingOps> ops) : ops_(std::move(ops)) {}

  const RingOps& ops() const { return *ops_; }
  const std::shared_ptr<const RingOps>& shared_ops() const { return ops_; }
  bool valid() const { return ops_ != nullptr; }

  std::string key() const { return ops_->key(); }
  RingElem zero() const { return ops_->zero(); }
  RingElem one() const { return ops_->one(); }
  RingElem add(const RingElem& a, const RingElem& b) const { return ops_->add(a, b); }
  RingElem sub(const RingElem& a, const RingElem& b) const { return ops_->add(a, ops_->neg(b)); }
  RingElem neg(const RingElem& a) const { return ops_->neg(a); }
  RingElem mul(const RingElem& a, const RingElem& b) const { return ops_->mul(a, b); }
  bool equal(const RingElem& a, const RingElem& b) const { return ops_->equal(a, b); }
  bool is_zero(const RingElem& a) const { return ops_->equal(a, ops_->zero()); }
  bool is_one(const RingElem& a) const { return ops_->equal(a, ops_->one()); }
  std::uint64_t hash(const RingElem& a) const { return ops_->hash(a); }
  std::optional<RingElem> try_inverse(const RingElem& a) const { return ops_->try_inverse(a); }
  bool is_finite() const { return ops_->is_finite(); }
  std::optional<std::vector<RingElem>> elements() const { return ops_->elements(); }
  std::string describe(const RingElem& a) const { return ops_->describe(a); }
  std::optional<RingElem> parse(const std::string& s) const { return ops_->parse(s); }

  bool same_carrier(const Ring& other) const { return key() == other.key(); }

 private:
  std::shared_ptr<const RingOps> ops_;
};

}  // namespace mglab
