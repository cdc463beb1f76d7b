#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mglab/common.hpp"
#include "mglab/free_word.hpp"

namespace mglab {

// Oracle contract for a group: identity, multiply, invert, equality and a
// hash consistent with it.  Everything downstream (balls, word norms,
// group rings, chains) is parameterized over this interface.
class GroupOps {
 public:
  virtual ~GroupOps() = default;

  virtual std::string key() const = 0;
  virtual Elem identity() const = 0;
  virtual Elem multiply(const Elem&, const Elem&) const = 0;
  virtual Elem invert(const Elem&) const = 0;
  virtual bool equal(const Elem&, const Elem&) const = 0;
  virtual std::uint64_t hash(const Elem&) const = 0;
  virtual bool is_finite() const = 0;
  virtual std::optional<std::uint64_t> order_hint() const { return std::nullopt; }
  // full enumeration, identity first; finite groups that support it
  virtual std::optional<std::vector<Elem>> elements() const { return std::nullopt; }
  virtual std::string describe(const Elem&) const = 0;
};

class Group {
 public:
  Group() = default;
  explicit Group(std::shared_ptr<const GroupOps> ops) : ops_(std::move(ops)) {}

  const GroupOps& ops() const { return *ops_; }
  const std::shared_ptr<const GroupOps>& shared_ops() const { return ops_; }
  bool valid() const { return ops_ != nullptr; }

  std::string key() const { return ops_->key(); }
  Elem identity() const { return ops_->identity(); }
  Elem mul(const Elem& a, const Elem& b) const { return ops_->multiply(a, b); }
  Elem inv(const Elem& a) const { return ops_->invert(a); }
  bool eq(const Elem& a, const Elem& b) const { return ops_->equal(a, b); }
  bool is_identity(const Elem& a) const { return ops_->equal(a, ops_->identity()); }
  std::uint64_t hash(const Elem& a) const { return ops_->hash(a); }
  bool is_finite() const { return ops_->is_finite(); }
  std::optional<std::uint64_t> order_hint() const { return ops_->order_hint(); }
  std::optional<std::vector<Elem>> elements() const { return ops_->elements(); }
  std::string describe(const Elem& a) const { return ops_->describe(a); }

  bool same_carrier(const Group& other) const { return key() == other.key(); }

 private:
  std::shared_ptr<const GroupOps> ops_;
};

// Hash map keyed by group elements through the group's own hash/equality.
template <class V>
class ElemMap {
  struct Hash {
    const GroupOps* g;
    std::size_t operator()(const Elem& e) const { return static_cast<std::size_t>(g->hash(e)); }
  };
  struct Eq {
    const GroupOps* g;
    bool operator()(const Elem& a, const Elem& b) const { return g->equal(a, b); }
  };

 public:
  explicit ElemMap(Group group)
      : group_(std::move(group)),
        map_(0, Hash{&group_.ops()}, Eq{&group_.ops()}) {}

  using Map = std::unordered_map<Elem, V, Hash, Eq>;

  V* find(const Elem& e) {
    auto it = map_.find(e);
    return it == map_.end() ? nullptr : &it->second;
  }
  const V* find(const Elem& e) const {
    auto it = map_.find(e);
    return it == map_.end() ? nullptr : &it->second;
  }
  bool contains(const Elem& e) const { return map_.find(e) != map_.end(); }
  V& operator[](const Elem& e) { return map_[e]; }
  bool emplace(const Elem& e, V v) { return map_.emplace(e, std::move(v)).second; }
  void erase(const Elem& e) { map_.erase(e); }
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  auto begin() { return map_.begin(); }
  auto end() { return map_.end(); }
  auto begin() const { return map_.begin(); }
  auto end() const { return map_.end(); }
  const Group& group() const { return group_; }

 private:
  Group group_;
  Map map_;
};

// image of a free word under the canonical map sending generator i to
// generators[i]; the empty word maps to the identity
Elem evaluate_word(const Group& group, std::span<const Elem> generators,
                   const FreeWord& word);

// least k ≤ bound with g^k = identity, nullopt when the bound is exceeded
std::optional<std::uint64_t> element_order(const Group& group, const Elem& g,
                                           std::uint64_t bound);

}  // namespace mglab
