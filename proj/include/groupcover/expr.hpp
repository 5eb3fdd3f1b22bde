// Group-expression DSL.
//
// Grammar (case- and whitespace-insensitive):
//   expr := term ('x' term)*          -- 'x' is left-associative
//   term := 'C'int | 'S'int | 'A'int | 'D'int | 'Q8' | '(' expr ')'
// 'D'int is the dihedral group of order int (even, >= 4).

#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "groupcover/group.hpp"

namespace groupcover {

inline constexpr std::uint32_t kMaxCyclic = 512;
inline constexpr std::uint32_t kMaxSymmetric = 6;
inline constexpr std::uint32_t kMaxAlternating = 6;
inline constexpr std::uint32_t kMaxDihedralOrder = 128;

struct GroupExpr;
using ExprPtr = std::shared_ptr<const GroupExpr>;

struct Cyclic { std::uint32_t n; };
struct Symmetric { std::uint32_t n; };
struct Alternating { std::uint32_t n; };
struct Dihedral { std::uint32_t order; };
struct QuaternionQ8 {};
struct ProductExpr {
  ExprPtr left;
  ExprPtr right;
};

struct GroupExpr {
  std::variant<Cyclic, Symmetric, Alternating, Dihedral, QuaternionQ8, ProductExpr> node;
};

inline bool operator==(const GroupExpr& a, const GroupExpr& b);
inline bool expr_ptr_eq(const ExprPtr& a, const ExprPtr& b) { return *a == *b; }
inline bool operator==(const GroupExpr& a, const GroupExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* c = std::get_if<Cyclic>(&a.node)) return c->n == std::get<Cyclic>(b.node).n;
  if (const auto* s = std::get_if<Symmetric>(&a.node)) return s->n == std::get<Symmetric>(b.node).n;
  if (const auto* l = std::get_if<Alternating>(&a.node))
    return l->n == std::get<Alternating>(b.node).n;
  if (const auto* d = std::get_if<Dihedral>(&a.node))
    return d->order == std::get<Dihedral>(b.node).order;
  if (std::get_if<QuaternionQ8>(&a.node)) return true;
  const auto& pa = std::get<ProductExpr>(a.node);
  const auto& pb = std::get<ProductExpr>(b.node);
  return expr_ptr_eq(pa.left, pb.left) && expr_ptr_eq(pa.right, pb.right);
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return e;
  }

 private:
  ExprPtr parse_expr() {
    ExprPtr left = parse_term();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
        ++pos_;
        ExprPtr right = parse_term();
        left = std::make_shared<GroupExpr>(GroupExpr{ProductExpr{left, right}});
      } else {
        return left;
      }
    }
  }

  ExprPtr parse_term() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("expected a group term", pos_);
    const char c = char(std::toupper(static_cast<unsigned char>(text_[pos_])));
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (c == 'Q') {
      const std::size_t at = pos_;
      ++pos_;
      if (parse_int(at) != 8) throw SyntaxError("only Q8 is supported", at);
      return std::make_shared<GroupExpr>(GroupExpr{QuaternionQ8{}});
    }
    if (c == 'C' || c == 'S' || c == 'A' || c == 'D') {
      const std::size_t at = pos_;
      ++pos_;
      const std::uint32_t n = parse_int(at);
      switch (c) {
        case 'C':
          if (n < 1 || n > kMaxCyclic) throw CapError("cyclic order out of range: C" + std::to_string(n));
          return std::make_shared<GroupExpr>(GroupExpr{Cyclic{n}});
        case 'S':
          if (n < 1 || n > kMaxSymmetric)
            throw CapError("symmetric degree out of range: S" + std::to_string(n));
          return std::make_shared<GroupExpr>(GroupExpr{Symmetric{n}});
        case 'A':
          if (n < 1 || n > kMaxAlternating)
            throw CapError("alternating degree out of range: A" + std::to_string(n));
          return std::make_shared<GroupExpr>(GroupExpr{Alternating{n}});
        default:
          if (n % 2 != 0 || n < 4 || n > kMaxDihedralOrder)
            throw CapError("dihedral order must be even, >= 4 and <= " +
                           std::to_string(kMaxDihedralOrder) + ": D" + std::to_string(n));
          return std::make_shared<GroupExpr>(GroupExpr{Dihedral{n}});
      }
    }
    throw SyntaxError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
  }

  std::uint32_t parse_int(std::size_t term_start) {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError("expected an integer parameter", term_start);
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) throw CapError("parameter too large");
      ++pos_;
    }
    return std::uint32_t(v);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::ExprParser(text).parse(); }

inline std::string print(const GroupExpr& e) {
  if (const auto* c = std::get_if<Cyclic>(&e.node)) return "C" + std::to_string(c->n);
  if (const auto* s = std::get_if<Symmetric>(&e.node)) return "S" + std::to_string(s->n);
  if (const auto* a = std::get_if<Alternating>(&e.node)) return "A" + std::to_string(a->n);
  if (const auto* d = std::get_if<Dihedral>(&e.node)) return "D" + std::to_string(d->order);
  if (std::get_if<QuaternionQ8>(&e.node)) return "Q8";
  const auto& p = std::get<ProductExpr>(e.node);
  const std::string left = print(*p.left);
  std::string right = print(*p.right);
  if (std::holds_alternative<ProductExpr>(p.right->node)) right = "(" + right + ")";
  return left + " x " + right;
}
inline std::string print(const ExprPtr& e) { return print(*e); }

namespace detail {

inline Permutation n_cycle(std::uint32_t n) {
  Permutation p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = Elem((i + 1) % n);
  return p;
}

}  // namespace detail

// Standard permutation realizations: C_n as an n-cycle, S_n from a
// transposition and an n-cycle, A_n from the 3-cycles (1 2 k), D_2m from an
// m-cycle and a reflection (two disjoint transpositions when m = 2), Q8 by
// left multiplication on its 8 elements.
inline GroupPtr evaluate(const GroupExpr& e, const BuildOptions& opt = {}) {
  const std::string name = print(e);
  if (const auto* c = std::get_if<Cyclic>(&e.node)) {
    if (c->n == 1) return Group::from_permutations({}, 1, name, opt);
    return Group::from_permutations({detail::n_cycle(c->n)}, c->n, name, opt);
  }
  if (const auto* s = std::get_if<Symmetric>(&e.node)) {
    if (s->n == 1) return Group::from_permutations({}, 1, name, opt);
    Permutation t(s->n);
    for (std::uint32_t i = 0; i < s->n; ++i) t[i] = Elem(i);
    t[0] = 1;
    t[1] = 0;
    return Group::from_permutations({t, detail::n_cycle(s->n)}, s->n, name, opt);
  }
  if (const auto* a = std::get_if<Alternating>(&e.node)) {
    if (a->n <= 2) return Group::from_permutations({}, 1, name, opt);
    std::vector<Permutation> gens;
    for (std::uint32_t k = 2; k < a->n; ++k) {
      Permutation p(a->n);
      for (std::uint32_t i = 0; i < a->n; ++i) p[i] = Elem(i);
      p[0] = 1;       // (1 2 k+1) in 1-based points
      p[1] = Elem(k);
      p[k] = 0;
      gens.push_back(std::move(p));
    }
    return Group::from_permutations(gens, a->n, name, opt);
  }
  if (const auto* d = std::get_if<Dihedral>(&e.node)) {
    const std::uint32_t m = d->order / 2;
    if (m == 2) {
      // order 4: not faithful on 2 points, use two disjoint transpositions
      return Group::from_permutations({{1, 0, 2, 3}, {0, 1, 3, 2}}, 4, name, opt);
    }
    Permutation refl(m);
    for (std::uint32_t i = 0; i < m; ++i) refl[i] = Elem(m - 1 - i);
    return Group::from_permutations({detail::n_cycle(m), refl}, m, name, opt);
  }
  if (std::get_if<QuaternionQ8>(&e.node)) {
    // elements ordered 1, i, -1, -i, j, k, -j, -k
    const Permutation gi{1, 2, 3, 0, 5, 6, 7, 4};
    const Permutation gj{4, 7, 6, 5, 2, 1, 0, 3};
    return Group::from_permutations({gi, gj}, 8, name, opt);
  }
  const auto& p = std::get<ProductExpr>(e.node);
  return Group::direct_product(evaluate(*p.left, opt), evaluate(*p.right, opt), name, opt);
}
inline GroupPtr evaluate(const ExprPtr& e, const BuildOptions& opt = {}) {
  return evaluate(*e, opt);
}

inline GroupPtr evaluate_expression(std::string_view text, const BuildOptions& opt = {}) {
  return evaluate(parse(text), opt);
}

}  // namespace groupcover
