#ifndef WITTLANG_GROUP_TABLE_HPP
#define WITTLANG_GROUP_TABLE_HPP

// A finite group presented by canonical indices 0..order-1 and a
// multiplication oracle. Groups up to kTableLimit elements get a full Cayley
// table; larger ones keep the oracle.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wittlang/errors.hpp"

namespace wittlang {

class GroupTable {
 public:
  using Index = std::size_t;
  using MulFn = std::function<Index(Index, Index)>;

  static constexpr std::size_t kTableLimit = 2048;
  static constexpr std::size_t kMaxOrder = std::size_t{1} << 20;

  static GroupTable from_cayley(std::size_t order, std::vector<std::uint32_t> table,
                                std::vector<std::string> labels = {}) {
    if (order == 0) throw DomainError("a group has at least one element");
    if (table.size() != order * order) throw SpecError("Cayley table has wrong size");
    for (auto v : table) {
      if (v >= order) throw VerificationError("Cayley table entry outside the group");
    }
    auto shared = std::make_shared<const std::vector<std::uint32_t>>(std::move(table));
    GroupTable g(order, [shared, order](Index a, Index b) -> Index { return (*shared)[a * order + b]; },
                 std::move(labels));
    g.table_ = std::move(shared);
    g.finish();
    return g;
  }

  static GroupTable from_oracle(std::size_t order, MulFn mul, std::vector<std::string> labels = {}) {
    if (order == 0) throw DomainError("a group has at least one element");
    require_within_cap(order, kMaxOrder, "group order");
    GroupTable g(order, std::move(mul), std::move(labels));
    if (order <= kTableLimit) g.materialize();
    g.finish();
    return g;
  }

  // Indexes `elements` in the given order. `key` maps an element to an ordered,
  // copyable key identifying it; `mul` must be closed on the list.
  template <class T, class Mul, class Key, class Label>
  static GroupTable from_elements(const std::vector<T>& elements, Mul mul, Key key, Label label) {
    using K = std::decay_t<decltype(key(elements.front()))>;
    if (elements.empty()) throw DomainError("a group has at least one element");
    auto lookup = std::make_shared<std::map<K, Index>>();
    for (Index i = 0; i < elements.size(); ++i) {
      if (!lookup->emplace(key(elements[i]), i).second) throw SpecError("duplicate element in group list");
    }
    auto elems = std::make_shared<const std::vector<T>>(elements);
    std::vector<std::string> labels;
    labels.reserve(elements.size());
    for (const auto& e : elements) labels.push_back(label(e));
    MulFn fn = [elems, lookup, mul, key](Index a, Index b) -> Index {
      auto it = lookup->find(key(mul((*elems)[a], (*elems)[b])));
      if (it == lookup->end()) throw VerificationError("element list is not closed under multiplication");
      return it->second;
    };
    return from_oracle(elements.size(), std::move(fn), std::move(labels));
  }

  std::size_t order() const { return order_; }
  Index identity() const { return identity_; }
  Index mul(Index a, Index b) const { return mul_(a, b); }
  Index inverse(Index a) const { return inverses_[a]; }
  bool has_table() const { return table_ != nullptr; }

  Index pow(Index a, std::uint64_t e) const {
    Index result = identity_;
    Index base = a;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  std::uint64_t element_order(Index a) const {
    std::uint64_t k = 1;
    Index x = a;
    while (x != identity_) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  std::string label(Index a) const { return labels_.empty() ? std::to_string(a) : labels_[a]; }

  bool is_abelian() const {
    for (Index a = 0; a < order_; ++a) {
      for (Index b = a + 1; b < order_; ++b) {
        if (mul(a, b) != mul(b, a)) return false;
      }
    }
    return true;
  }

  // Associativity exhaustively when order^3 <= 10^6, else on `samples` seeded
  // triples; identity and inverses on every element.
  void verify(std::uint64_t seed = 0x5eed, std::size_t samples = 1000) const {
    for (Index a = 0; a < order_; ++a) {
      if (mul(identity_, a) != a || mul(a, identity_) != a) {
        throw VerificationError("identity law fails at element " + label(a));
      }
      if (mul(a, inverses_[a]) != identity_ || mul(inverses_[a], a) != identity_) {
        throw VerificationError("inverse law fails at element " + label(a));
      }
    }
    auto check = [&](Index a, Index b, Index c) {
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
        throw VerificationError("associativity fails at (" + label(a) + ", " + label(b) + ", " + label(c) + ")");
      }
    };
    if (order_ <= 100) {
      for (Index a = 0; a < order_; ++a)
        for (Index b = 0; b < order_; ++b)
          for (Index c = 0; c < order_; ++c) check(a, b, c);
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<Index> dist(0, order_ - 1);
      for (std::size_t t = 0; t < samples; ++t) check(dist(rng), dist(rng), dist(rng));
    }
  }

 private:
  GroupTable(std::size_t order, MulFn mul, std::vector<std::string> labels)
      : order_(order), mul_(std::move(mul)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != order_) throw SpecError("label count differs from group order");
  }

  void materialize() {
    auto table = std::make_shared<std::vector<std::uint32_t>>(order_ * order_);
    for (Index a = 0; a < order_; ++a) {
      for (Index b = 0; b < order_; ++b) {
        const Index c = mul_(a, b);
        if (c >= order_) throw VerificationError("product outside the group");
        (*table)[a * order_ + b] = static_cast<std::uint32_t>(c);
      }
    }
    const std::size_t n = order_;
    std::shared_ptr<const std::vector<std::uint32_t>> frozen = table;
    mul_ = [frozen, n](Index a, Index b) -> Index { return (*frozen)[a * n + b]; };
    table_ = frozen;
  }

  void finish() {
    identity_ = order_;
    for (Index e = 0; e < order_; ++e) {
      if (mul_(e, e) == e) {
        identity_ = e;
        break;
      }
    }
    if (identity_ == order_) throw VerificationError("no identity element");
    inverses_.assign(order_, order_);
    for (Index a = 0; a < order_; ++a) {
      if (inverses_[a] != order_) continue;
      Index x = a;
      Index prev = identity_;
      // a^k = e for the first time; a^{k-1} is the inverse.
      for (std::size_t k = 1; k <= order_; ++k) {
        if (x == identity_) break;
        prev = x;
        x = mul_(x, a);
      }
      if (x != identity_) throw VerificationError("element " + label(a) + " has no inverse");
      inverses_[a] = a == identity_ ? identity_ : prev;
      inverses_[inverses_[a]] = a;
    }
    verify();
  }

  std::size_t order_ = 0;
  Index identity_ = 0;
  MulFn mul_;
  std::shared_ptr<const std::vector<std::uint32_t>> table_;
  std::vector<Index> inverses_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Standard small groups

inline GroupTable trivial_group() { return GroupTable::from_cayley(1, {0}, {"e"}); }

inline GroupTable cyclic_group(std::size_t k) {
  if (k == 0) throw DomainError("cyclic group of order 0");
  std::vector<std::uint32_t> t(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t a = 0; a < k; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < k; ++b) t[a * k + b] = static_cast<std::uint32_t>((a + b) % k);
  }
  return GroupTable::from_cayley(k, std::move(t), std::move(labels));
}

// Permutations of {1..n} in lexicographic order; (s*t)(i) = s(t(i)).
inline GroupTable symmetric_group(int n) {
  if (n < 1 || n > 6) throw DomainError("symmetric group supported for 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto compose = [](const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[t[i] - 1];
    return out;
  };
  auto label = [](const std::vector<int>& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
  };
  return GroupTable::from_elements(perms, compose, [](const std::vector<int>& s) { return s; }, label);
}

inline GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t n = g.order() * h.order();
  require_within_cap(n, GroupTable::kMaxOrder, "direct product order");
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < h.order(); ++b) labels[a * h.order() + b] = "(" + g.label(a) + "," + h.label(b) + ")";
  }
  const std::size_t ho = h.order();
  return GroupTable::from_oracle(
      n,
      [g, h, ho](std::size_t x, std::size_t y) { return g.mul(x / ho, y / ho) * ho + h.mul(x % ho, y % ho); },
      std::move(labels));
}

}  // namespace wittlang

#endif  // WITTLANG_GROUP_TABLE_HPP
