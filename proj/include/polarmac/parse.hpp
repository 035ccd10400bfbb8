#ifndef POLARMAC_PARSE_HPP
#define POLARMAC_PARSE_HPP

#include <memory>
#include <string>
#include <string_view>

#include "polarmac/polynomial.hpp"

namespace polarmac {

// Grammar (whitespace insignificant):
//   expression := '-'? term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := base ('^' nonneg-int)?
//   base       := integer ('/' integer)? | identifier | '(' expression ')'
namespace ast {

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
  enum class Kind { kInt, kFrac, kVar, kNeg, kAdd, kSub, kMul, kPow };
  Kind kind;
  std::size_t pos = 0;
  std::string text;    // integer digits / variable name / fraction numerator
  std::string text2;   // fraction denominator
  long long exponent = 0;
  NodePtr lhs, rhs;
};

/// Syntax-only parse; throws ParseError with the offending position.
NodePtr parse(std::string_view text);

}  // namespace ast

/// Evaluates a parsed expression in the given ring. Unknown identifiers and
/// unrepresentable coefficients are reported with their source position.
template <class F>
Polynomial<F> ast_to_polynomial(const ast::Node& node, const RingPtr<F>& ring) {
  using P = Polynomial<F>;
  switch (node.kind) {
    case ast::Node::Kind::kInt:
      return P::constant(ring, ring->field.from_decimal(node.text));
    case ast::Node::Kind::kFrac:
      try {
        return P::constant(ring, ring->field.from_fraction(node.text, node.text2));
      } catch (const InputError& e) {
        throw ParseError(e.what(), node.pos);
      }
    case ast::Node::Kind::kVar: {
      int i = ring->index_of(node.text);
      if (i < 0) throw ParseError("unknown variable '" + node.text + "'", node.pos);
      return P::variable(ring, static_cast<std::size_t>(i));
    }
    case ast::Node::Kind::kNeg:
      return -ast_to_polynomial(*node.lhs, ring);
    case ast::Node::Kind::kAdd:
      return ast_to_polynomial(*node.lhs, ring) + ast_to_polynomial(*node.rhs, ring);
    case ast::Node::Kind::kSub:
      return ast_to_polynomial(*node.lhs, ring) - ast_to_polynomial(*node.rhs, ring);
    case ast::Node::Kind::kMul:
      return ast_to_polynomial(*node.lhs, ring) * ast_to_polynomial(*node.rhs, ring);
    case ast::Node::Kind::kPow:
      return ast_to_polynomial(*node.lhs, ring).pow(node.exponent);
  }
  throw EngineError("unreachable ast kind");
}

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return ast_to_polynomial(*ast::parse(text), ring);
}

}  // namespace polarmac

#endif
