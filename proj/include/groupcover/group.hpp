// Finite groups as immutable Cayley tables.
//
// Elements are indices 0..n-1 with the identity always at index 0. Groups are
// built from permutation generators (breadth-first closure in generator
// order), as direct products of two existing groups, or from an explicit
// multiplication table. Construction validates the table: every row and
// column is a permutation, the identity law and inverses hold, and
// associativity is checked in full for n <= 64 and on 10^4 sampled triples
// above that.

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <istream>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "groupcover/errors.hpp"

namespace groupcover {

using Elem = std::uint16_t;
using Permutation = std::vector<Elem>;  // images, 0-based points

inline constexpr std::uint32_t kDefaultOrderCap = 5000;
inline constexpr std::uint32_t kHardOrderLimit = 0xffff;  // element indices are 16-bit
inline constexpr std::uint32_t kDefaultLatticeCap = 400;
inline constexpr std::uint32_t kDefaultIsoCap = 120;
inline constexpr std::uint32_t kFullCheckLimit = 64;    // full associativity below this
inline constexpr std::uint32_t kFullHomCheckLimit = 144;
inline constexpr std::uint32_t kAssocSamples = 10000;

struct BuildOptions {
  std::uint32_t order_cap = kDefaultOrderCap;
  std::uint64_t assoc_seed = 20240915;  // sampling seed for n > kFullCheckLimit
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Pairing data for a group constructed as H1 x H2. Element (a, b) has index
// a*|H2| + b.
struct ProductStructure {
  GroupPtr left;
  GroupPtr right;
  std::vector<Elem> embed_left;   // H1 -> G, a -> (a, 1)
  std::vector<Elem> embed_right;  // H2 -> G, b -> (1, b)
  std::vector<Elem> proj_left;    // G -> H1
  std::vector<Elem> proj_right;   // G -> H2

  Elem pair(Elem a, Elem b) const {
    return Elem(std::uint32_t(a) * std::uint32_t(right_order_) + b);
  }
  std::pair<Elem, Elem> unpair(Elem g) const {
    return {Elem(g / right_order_), Elem(g % right_order_)};
  }

  std::uint32_t right_order_ = 0;  // cached |H2|
};

inline bool is_valid_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (Elem image : p) {
    if (image >= p.size() || seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

inline Permutation compose(const Permutation& p, const Permutation& q) {
  // apply p first, then q
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Permutation inverse_permutation(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = Elem(i);
  return r;
}

// 1-based cycle notation, "()" for the identity.
inline std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      done[j] = true;
      first = false;
      j = p[j];
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

class Group {
 public:
  static constexpr Elem kIdentity = 0;

  std::uint32_t order() const { return n_; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverses_[a]; }
  const std::string& label(Elem g) const { return labels_[g]; }
  const std::string& name() const { return name_; }
  const std::optional<ProductStructure>& product() const { return product_; }
  std::span<const Elem> table() const { return table_; }

  // Closure of the generators under composition, elements enumerated
  // breadth-first from the identity with generators applied in input order.
  static GroupPtr from_permutations(const std::vector<Permutation>& generators,
                                    std::size_t points, std::string name = "",
                                    const BuildOptions& opt = {}) {
    for (const Permutation& p : generators) {
      if (p.size() != points || !is_valid_permutation(p))
        throw InvalidPermutation("generator is not a bijection on " +
                                 std::to_string(points) + " points");
    }
    Permutation id(points);
    std::iota(id.begin(), id.end(), Elem(0));

    std::vector<Permutation> elems{id};
    std::vector<std::pair<Permutation, Elem>> index;  // sorted lookup
    index.emplace_back(id, Elem(0));
    auto find = [&](const Permutation& p) -> std::optional<Elem> {
      auto it = std::lower_bound(index.begin(), index.end(), p,
                                 [](const auto& e, const Permutation& key) { return e.first < key; });
      if (it != index.end() && it->first == p) return it->second;
      return std::nullopt;
    };
    auto insert = [&](const Permutation& p, Elem at) {
      auto it = std::lower_bound(index.begin(), index.end(), p,
                                 [](const auto& e, const Permutation& key) { return e.first < key; });
      index.emplace(it, p, at);
    };

    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (const Permutation& g : generators) {
        Permutation next = compose(elems[head], g);
        if (!find(next)) {
          if (elems.size() >= opt.order_cap || elems.size() >= kHardOrderLimit)
            throw OrderCapExceeded("closure exceeds order cap " + std::to_string(opt.order_cap));
          insert(next, Elem(elems.size()));
          elems.push_back(std::move(next));
        }
      }
    }

    const std::uint32_t n = std::uint32_t(elems.size());
    std::vector<Elem> table(std::size_t(n) * n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        auto idx = find(compose(elems[i], elems[j]));
        if (!idx) throw InvalidTable("closure is not multiplication-closed");
        table[std::size_t(i) * n + j] = *idx;
      }

    std::vector<std::string> labels(n);
    for (std::uint32_t i = 0; i < n; ++i) labels[i] = cycle_notation(elems[i]);
    if (name.empty()) {
      name = "<";
      for (std::size_t i = 0; i < generators.size(); ++i)
        name += (i ? ", " : "") + cycle_notation(generators[i]);
      name += ">";
    }
    return finish(n, std::move(table), std::move(labels), std::move(name), std::nullopt, opt);
  }

  // Componentwise product; pair (a, b) gets index a*|H2| + b.
  static GroupPtr direct_product(GroupPtr h1, GroupPtr h2, std::string name = "",
                                 const BuildOptions& opt = {}) {
    const std::uint64_t big = std::uint64_t(h1->order()) * h2->order();
    if (big > opt.order_cap || big > kHardOrderLimit)
      throw OrderCapExceeded("product order " + std::to_string(big) + " exceeds cap " +
                             std::to_string(std::min(opt.order_cap, kHardOrderLimit)));
    const std::uint32_t n1 = h1->order(), n2 = h2->order(), n = n1 * n2;

    std::vector<Elem> table(std::size_t(n) * n);
    for (std::uint32_t a1 = 0; a1 < n1; ++a1)
      for (std::uint32_t a2 = 0; a2 < n2; ++a2) {
        const std::uint32_t row = a1 * n2 + a2;
        for (std::uint32_t b1 = 0; b1 < n1; ++b1) {
          const Elem c1 = h1->mul(Elem(a1), Elem(b1));
          for (std::uint32_t b2 = 0; b2 < n2; ++b2)
            table[std::size_t(row) * n + (b1 * n2 + b2)] =
                Elem(std::uint32_t(c1) * n2 + h2->mul(Elem(a2), Elem(b2)));
        }
      }

    std::vector<std::string> labels(n);
    for (std::uint32_t a1 = 0; a1 < n1; ++a1)
      for (std::uint32_t a2 = 0; a2 < n2; ++a2)
        labels[a1 * n2 + a2] = "(" + h1->label(Elem(a1)) + "," + h2->label(Elem(a2)) + ")";

    ProductStructure ps;
    ps.left = h1;
    ps.right = h2;
    ps.right_order_ = n2;
    ps.embed_left.resize(n1);
    ps.embed_right.resize(n2);
    ps.proj_left.resize(n);
    ps.proj_right.resize(n);
    for (std::uint32_t a = 0; a < n1; ++a) ps.embed_left[a] = Elem(a * n2);
    for (std::uint32_t b = 0; b < n2; ++b) ps.embed_right[b] = Elem(b);
    for (std::uint32_t g = 0; g < n; ++g) {
      ps.proj_left[g] = Elem(g / n2);
      ps.proj_right[g] = Elem(g % n2);
    }

    if (name.empty()) name = h1->name() + " x " + h2->name();
    return finish(n, std::move(table), std::move(labels), std::move(name), std::move(ps), opt);
  }

  // Explicit table. Accepts any valid group table; if the identity is not at
  // index 0 the elements are relabeled by swapping it with index 0.
  static GroupPtr from_table_data(std::uint32_t n, std::vector<Elem> table,
                                  std::vector<std::string> labels, std::string name,
                                  const BuildOptions& opt = {}) {
    if (n == 0 || table.size() != std::size_t(n) * n)
      throw InvalidTable("table has wrong shape");
    if (n > opt.order_cap || n > kHardOrderLimit)
      throw OrderCapExceeded("table order exceeds cap");

    std::optional<Elem> identity;
    for (std::uint32_t e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (std::uint32_t x = 0; x < n && ok; ++x)
        ok = table[std::size_t(e) * n + x] == x && table[std::size_t(x) * n + e] == x;
      if (ok) identity = Elem(e);
    }
    if (!identity) throw InvalidTable("table has no identity element");

    if (*identity != 0) {
      // relabel by the transposition 0 <-> identity
      auto rl = [&](Elem x) { return x == 0 ? *identity : (x == *identity ? Elem(0) : x); };
      std::vector<Elem> fixed(std::size_t(n) * n);
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
          fixed[std::size_t(rl(Elem(i))) * n + rl(Elem(j))] = rl(table[std::size_t(i) * n + j]);
      table = std::move(fixed);
      if (!labels.empty()) std::swap(labels[0], labels[*identity]);
    }

    if (labels.empty()) {
      labels.resize(n);
      for (std::uint32_t i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
    }
    if (name.empty()) name = "table-group-" + std::to_string(n);
    return finish(n, std::move(table), std::move(labels), std::move(name), std::nullopt, opt);
  }

 private:
  Group() = default;

  static GroupPtr finish(std::uint32_t n, std::vector<Elem> table,
                         std::vector<std::string> labels, std::string name,
                         std::optional<ProductStructure> ps, const BuildOptions& opt) {
    auto g = std::shared_ptr<Group>(new Group());
    g->n_ = n;
    g->table_ = std::move(table);
    g->labels_ = std::move(labels);
    g->name_ = std::move(name);
    g->product_ = std::move(ps);

    // rows and columns are permutations of {0..n-1}
    std::vector<bool> seen(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), false);
      for (std::uint32_t j = 0; j < n; ++j) {
        Elem v = g->table_[std::size_t(i) * n + j];
        if (v >= n || seen[v]) throw InvalidTable("row is not a permutation");
        seen[v] = true;
      }
      std::fill(seen.begin(), seen.end(), false);
      for (std::uint32_t j = 0; j < n; ++j) {
        Elem v = g->table_[std::size_t(j) * n + i];
        if (seen[v]) throw InvalidTable("column is not a permutation");
        seen[v] = true;
      }
    }
    for (std::uint32_t j = 0; j < n; ++j) {
      if (g->mul(kIdentity, Elem(j)) != j || g->mul(Elem(j), kIdentity) != j)
        throw InvalidTable("identity law fails");
    }

    g->inverses_.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      bool found = false;
      for (std::uint32_t j = 0; j < n; ++j) {
        if (g->mul(Elem(i), Elem(j)) == kIdentity && g->mul(Elem(j), Elem(i)) == kIdentity) {
          g->inverses_[i] = Elem(j);
          found = true;
          break;
        }
      }
      if (!found) throw InvalidTable("element has no two-sided inverse");
    }

    auto assoc = [&](Elem a, Elem b, Elem c) {
      return g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c));
    };
    if (n <= kFullCheckLimit) {
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
          for (std::uint32_t c = 0; c < n; ++c)
            if (!assoc(Elem(a), Elem(b), Elem(c))) throw InvalidTable("associativity fails");
    } else {
      std::mt19937_64 rng(opt.assoc_seed);
      std::uniform_int_distribution<std::uint32_t> dist(0, n - 1);
      for (std::uint32_t s = 0; s < kAssocSamples; ++s)
        if (!assoc(Elem(dist(rng)), Elem(dist(rng)), Elem(dist(rng))))
          throw InvalidTable("associativity fails on sampled triple");
    }
    return g;
  }

  std::uint32_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverses_;
  std::vector<std::string> labels_;
  std::string name_;
  std::optional<ProductStructure> product_;
};

inline std::uint32_t element_order(const Group& g, Elem x) {
  assert(x < g.order());
  std::uint32_t m = 1;
  Elem cur = x;
  while (cur != Group::kIdentity) {
    cur = g.mul(cur, x);
    ++m;
  }
  return m;
}
inline std::uint32_t element_order(const GroupPtr& g, Elem x) { return element_order(*g, x); }

inline bool is_cyclic(const Group& g) {
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (element_order(g, Elem(x)) == g.order()) return true;
  return false;
}
inline bool is_cyclic(const GroupPtr& g) { return is_cyclic(*g); }

// --- plain-text Cayley table import/export -------------------------------
//
// Format: first line "n", then n lines of n space-separated 0-based indices.

inline void write_table(std::ostream& os, const Group& g) {
  os << g.order() << "\n";
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    for (std::uint32_t j = 0; j < g.order(); ++j) os << (j ? " " : "") << g.mul(Elem(i), Elem(j));
    os << "\n";
  }
}

inline GroupPtr read_table(std::istream& is, std::string name = "",
                           const BuildOptions& opt = {}) {
  std::int64_t n = 0;
  if (!(is >> n) || n <= 0 || n > std::int64_t(opt.order_cap))
    throw InvalidTable("bad group order in table file");
  std::vector<Elem> table(std::size_t(n) * n);
  for (auto& v : table) {
    std::int64_t x = 0;
    if (!(is >> x) || x < 0 || x >= n) throw InvalidTable("bad table entry");
    v = Elem(x);
  }
  return Group::from_table_data(std::uint32_t(n), std::move(table), {}, std::move(name), opt);
}

}  // namespace groupcover
