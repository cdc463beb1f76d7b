#include "mglab/groups.hpp"

#include <algorithm>

namespace mglab {

namespace {

class IntegerGroup final : public GroupOps {
 public:
  std::string key() const override { return "Z"; }
  Elem identity() const override { return box<BigInt>(0); }
  Elem multiply(const Elem& a, const Elem& b) const override {
    return box<BigInt>(unbox<BigInt>(a) + unbox<BigInt>(b));
  }
  Elem invert(const Elem& a) const override { return box<BigInt>(-unbox<BigInt>(a)); }
  bool equal(const Elem& a, const Elem& b) const override {
    return unbox<BigInt>(a) == unbox<BigInt>(b);
  }
  std::uint64_t hash(const Elem& a) const override { return hash_bigint(unbox<BigInt>(a)); }
  bool is_finite() const override { return false; }
  std::string describe(const Elem& a) const override { return unbox<BigInt>(a).str(); }
};

class CyclicGroup final : public GroupOps {
 public:
  explicit CyclicGroup(std::int64_t m) : m_(m) {
    if (m < 1) throw InvalidSpecError("cyclic order must be >= 1");
  }
  std::string key() const override { return "Z/" + std::to_string(m_); }
  Elem identity() const override { return box<std::int64_t>(0); }
  Elem multiply(const Elem& a, const Elem& b) const override {
    return box<std::int64_t>(mod_floor(unbox<std::int64_t>(a) + unbox<std::int64_t>(b), m_));
  }
  Elem invert(const Elem& a) const override {
    return box<std::int64_t>(mod_floor(-unbox<std::int64_t>(a), m_));
  }
  bool equal(const Elem& a, const Elem& b) const override {
    return unbox<std::int64_t>(a) == unbox<std::int64_t>(b);
  }
  std::uint64_t hash(const Elem& a) const override {
    return hash_mix(14695981039346656037ull, static_cast<std::uint64_t>(unbox<std::int64_t>(a)));
  }
  bool is_finite() const override { return true; }
  std::optional<std::uint64_t> order_hint() const override {
    return static_cast<std::uint64_t>(m_);
  }
  std::optional<std::vector<Elem>> elements() const override {
    if (m_ > 1'000'000) return std::nullopt;
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (std::int64_t v = 0; v < m_; ++v) out.push_back(box<std::int64_t>(v));
    return out;
  }
  std::string describe(const Elem& a) const override {
    return std::to_string(unbox<std::int64_t>(a));
  }

 private:
  std::int64_t m_;
};

class SymmetricGroup final : public GroupOps {
 public:
  explicit SymmetricGroup(int n) : n_(n) {
    if (n < 1 || n > 8) throw InvalidSpecError("symmetric group degree must be 1..8");
  }
  std::string key() const override { return "S" + std::to_string(n_); }
  Elem identity() const override {
    std::vector<int> id(n_);
    for (int i = 0; i < n_; ++i) id[i] = i;
    return box<std::vector<int>>(std::move(id));
  }
  Elem multiply(const Elem& a, const Elem& b) const override {
    // (ab)(i) = a(b(i))
    const auto& x = unbox<std::vector<int>>(a);
    const auto& y = unbox<std::vector<int>>(b);
    std::vector<int> z(n_);
    for (int i = 0; i < n_; ++i) z[i] = x[y[i]];
    return box<std::vector<int>>(std::move(z));
  }
  Elem invert(const Elem& a) const override {
    const auto& x = unbox<std::vector<int>>(a);
    std::vector<int> z(n_);
    for (int i = 0; i < n_; ++i) z[x[i]] = i;
    return box<std::vector<int>>(std::move(z));
  }
  bool equal(const Elem& a, const Elem& b) const override {
    return unbox<std::vector<int>>(a) == unbox<std::vector<int>>(b);
  }
  std::uint64_t hash(const Elem& a) const override {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : unbox<std::vector<int>>(a)) h = hash_mix(h, static_cast<std::uint64_t>(v));
    return h;
  }
  bool is_finite() const override { return true; }
  std::optional<std::uint64_t> order_hint() const override {
    std::uint64_t f = 1;
    for (int i = 2; i <= n_; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  }
  std::optional<std::vector<Elem>> elements() const override {
    std::vector<int> p(n_);
    for (int i = 0; i < n_; ++i) p[i] = i;
    std::vector<Elem> out;
    do {
      out.push_back(box<std::vector<int>>(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;  // lexicographic, identity first
  }
  std::string describe(const Elem& a) const override {
    std::string s = "(";
    const auto& x = unbox<std::vector<int>>(a);
    for (int i = 0; i < n_; ++i) {
      if (i) s += " ";
      s += std::to_string(x[i]);
    }
    return s + ")";
  }

 private:
  int n_;
};

using PairVal = std::pair<Elem, Elem>;

class ProductGroup final : public GroupOps {
 public:
  ProductGroup(Group a, Group b) : a_(std::move(a)), b_(std::move(b)) {}
  std::string key() const override { return "(" + a_.key() + "x" + b_.key() + ")"; }
  Elem identity() const override { return box<PairVal>({a_.identity(), b_.identity()}); }
  Elem multiply(const Elem& x, const Elem& y) const override {
    const auto& p = unbox<PairVal>(x);
    const auto& q = unbox<PairVal>(y);
    return box<PairVal>({a_.mul(p.first, q.first), b_.mul(p.second, q.second)});
  }
  Elem invert(const Elem& x) const override {
    const auto& p = unbox<PairVal>(x);
    return box<PairVal>({a_.inv(p.first), b_.inv(p.second)});
  }
  bool equal(const Elem& x, const Elem& y) const override {
    const auto& p = unbox<PairVal>(x);
    const auto& q = unbox<PairVal>(y);
    return a_.eq(p.first, q.first) && b_.eq(p.second, q.second);
  }
  std::uint64_t hash(const Elem& x) const override {
    const auto& p = unbox<PairVal>(x);
    return hash_mix(a_.hash(p.first), b_.hash(p.second));
  }
  bool is_finite() const override { return a_.is_finite() && b_.is_finite(); }
  std::optional<std::uint64_t> order_hint() const override {
    auto oa = a_.order_hint();
    auto ob = b_.order_hint();
    if (oa && ob) return *oa * *ob;
    return std::nullopt;
  }
  std::optional<std::vector<Elem>> elements() const override {
    auto ea = a_.elements();
    auto eb = b_.elements();
    if (!ea || !eb) return std::nullopt;
    std::vector<Elem> out;
    out.reserve(ea->size() * eb->size());
    for (const auto& x : *ea)
      for (const auto& y : *eb) out.push_back(box<PairVal>({x, y}));
    return out;
  }
  std::string describe(const Elem& x) const override {
    const auto& p = unbox<PairVal>(x);
    return "(" + a_.describe(p.first) + "," + b_.describe(p.second) + ")";
  }

 private:
  Group a_, b_;
};

class FreeGroup final : public GroupOps {
 public:
  explicit FreeGroup(int rank) : rank_(rank) {
    if (rank < 1) throw InvalidSpecError("free group rank must be positive");
  }
  std::string key() const override { return "F" + std::to_string(rank_); }
  Elem identity() const override { return box<FreeWord>(FreeWord{}); }
  Elem multiply(const Elem& a, const Elem& b) const override {
    return box<FreeWord>(unbox<FreeWord>(a) * unbox<FreeWord>(b));
  }
  Elem invert(const Elem& a) const override {
    return box<FreeWord>(unbox<FreeWord>(a).inverse());
  }
  bool equal(const Elem& a, const Elem& b) const override {
    return unbox<FreeWord>(a) == unbox<FreeWord>(b);
  }
  std::uint64_t hash(const Elem& a) const override { return unbox<FreeWord>(a).hash(); }
  bool is_finite() const override { return false; }
  std::string describe(const Elem& a) const override { return unbox<FreeWord>(a).str(); }

 private:
  int rank_;
};

class TableGroup final : public GroupOps {
 public:
  TableGroup(std::vector<std::vector<int>> table, std::string name)
      : table_(std::move(table)), name_(std::move(name)) {
    n_ = static_cast<int>(table_.size());
    if (n_ == 0) throw InvalidSpecError("empty group table");
    for (const auto& row : table_)
      if (static_cast<int>(row.size()) != n_)
        throw InvalidSpecError("group table is not square");
    for (int i = 0; i < n_; ++i)
      if (table_[0][i] != i || table_[i][0] != i)
        throw InvalidSpecError("group table must have identity at index 0");
    inva_.assign(n_, -1);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (table_[i][j] == 0) inva_or_throw(i) = j;
    for (int i = 0; i < n_; ++i)
      if (inva_[i] < 0) throw InvalidSpecError("group table has a non-invertible row");
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k)
          if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
            throw InvalidSpecError("group table is not associative");
  }
  std::string key() const override { return "table:" + name_ + ":" + std::to_string(n_); }
  Elem identity() const override { return box<int>(0); }
  Elem multiply(const Elem& a, const Elem& b) const override {
    return box<int>(table_[unbox<int>(a)][unbox<int>(b)]);
  }
  Elem invert(const Elem& a) const override { return box<int>(inva_[unbox<int>(a)]); }
  bool equal(const Elem& a, const Elem& b) const override {
    return unbox<int>(a) == unbox<int>(b);
  }
  std::uint64_t hash(const Elem& a) const override {
    return hash_mix(14695981039346656037ull, static_cast<std::uint64_t>(unbox<int>(a)));
  }
  bool is_finite() const override { return true; }
  std::optional<std::uint64_t> order_hint() const override {
    return static_cast<std::uint64_t>(n_);
  }
  std::optional<std::vector<Elem>> elements() const override {
    std::vector<Elem> out;
    for (int i = 0; i < n_; ++i) out.push_back(box<int>(i));
    return out;
  }
  std::string describe(const Elem& a) const override {
    return "g" + std::to_string(unbox<int>(a));
  }

 private:
  int& inva_or_throw(int i) { return inva_[i]; }
  std::vector<std::vector<int>> table_;
  std::string name_;
  std::vector<int> inva_;
  int n_;
};

}  // namespace

Group integers() { return Group(std::make_shared<IntegerGroup>()); }
Elem z_elem(BigInt v) { return box<BigInt>(std::move(v)); }

Group cyclic(std::int64_t m) { return Group(std::make_shared<CyclicGroup>(m)); }
Elem cyclic_elem(const Group& g, std::int64_t v) {
  auto hint = g.order_hint();
  return box<std::int64_t>(hint ? mod_floor(v, static_cast<std::int64_t>(*hint)) : v);
}

Group symmetric_group(int n) { return Group(std::make_shared<SymmetricGroup>(n)); }
Elem perm_elem(std::vector<int> images) { return box<std::vector<int>>(std::move(images)); }
const std::vector<int>& perm_images(const Elem& e) { return unbox<std::vector<int>>(e); }

Group direct_product(const Group& a, const Group& b) {
  return Group(std::make_shared<ProductGroup>(a, b));
}
Elem pair_elem(Elem first, Elem second) {
  return box<PairVal>({std::move(first), std::move(second)});
}

Group free_group(int rank) { return Group(std::make_shared<FreeGroup>(rank)); }
Elem word_elem(FreeWord w) { return box<FreeWord>(std::move(w)); }
const FreeWord& word_of(const Elem& e) { return unbox<FreeWord>(e); }

Group table_group(const std::vector<std::vector<int>>& table, const std::string& name) {
  return Group(std::make_shared<TableGroup>(table, name));
}

}  // namespace mglab
