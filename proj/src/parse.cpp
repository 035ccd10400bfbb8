#include "polarmac/parse.hpp"

#include <cctype>
#include <vector>

namespace polarmac::ast {
namespace {

// Exponents far beyond this blow up memory long before correctness matters.
constexpr long long kMaxExponent = 1'000'000;

struct Token {
  enum class Kind { kInt, kIdent, kOp, kEnd };
  Kind kind;
  char op = 0;
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::kInt, 0, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_'))
        ++j;
      out.push_back({Token::Kind::kIdent, 0, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (c == '+' || c == '-' || c == '*' || c == '^' || c == '(' || c == ')' ||
        c == '/') {
      out.push_back({Token::Kind::kOp, c, std::string(1, c), i});
      ++i;
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
  }
  out.push_back({Token::Kind::kEnd, 0, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  NodePtr run() {
    NodePtr e = expression();
    if (!at_end())
      throw ParseError("unexpected trailing input '" + cur().text + "'",
                       cur().pos);
    return e;
  }

 private:
  const Token& cur() const { return toks_[idx_]; }
  bool at_end() const { return cur().kind == Token::Kind::kEnd; }
  bool is_op(char c) const {
    return cur().kind == Token::Kind::kOp && cur().op == c;
  }
  Token take() { return toks_[idx_++]; }

  static NodePtr node(Node::Kind k, std::size_t pos) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->pos = pos;
    return n;
  }

  NodePtr expression() {
    NodePtr left;
    if (is_op('-')) {
      Token minus = take();
      left = node(Node::Kind::kNeg, minus.pos);
      left->lhs = term();
    } else {
      left = term();
    }
    while (is_op('+') || is_op('-')) {
      Token op = take();
      NodePtr parent =
          node(op.op == '+' ? Node::Kind::kAdd : Node::Kind::kSub, op.pos);
      parent->lhs = std::move(left);
      parent->rhs = term();
      left = std::move(parent);
    }
    return left;
  }

  NodePtr term() {
    NodePtr left = factor();
    while (is_op('*')) {
      Token op = take();
      NodePtr parent = node(Node::Kind::kMul, op.pos);
      parent->lhs = std::move(left);
      parent->rhs = factor();
      left = std::move(parent);
    }
    return left;
  }

  NodePtr factor() {
    NodePtr b = base();
    if (is_op('^')) {
      Token caret = take();
      if (cur().kind != Token::Kind::kInt)
        throw ParseError("expected a non-negative integer exponent", cur().pos);
      Token e = take();
      long long value = 0;
      for (char c : e.text) {
        value = value * 10 + (c - '0');
        if (value > kMaxExponent)
          throw ParseError("exponent too large", e.pos);
      }
      NodePtr p = node(Node::Kind::kPow, caret.pos);
      p->lhs = std::move(b);
      p->exponent = value;
      return p;
    }
    return b;
  }

  NodePtr base() {
    if (cur().kind == Token::Kind::kInt) {
      Token n = take();
      if (is_op('/')) {
        take();
        if (cur().kind != Token::Kind::kInt)
          throw ParseError("expected an integer denominator", cur().pos);
        Token d = take();
        NodePtr f = node(Node::Kind::kFrac, n.pos);
        f->text = n.text;
        f->text2 = d.text;
        return f;
      }
      NodePtr f = node(Node::Kind::kInt, n.pos);
      f->text = n.text;
      return f;
    }
    if (cur().kind == Token::Kind::kIdent) {
      Token v = take();
      NodePtr f = node(Node::Kind::kVar, v.pos);
      f->text = v.text;
      return f;
    }
    if (is_op('(')) {
      take();
      NodePtr e = expression();
      if (!is_op(')'))
        throw ParseError("expected ')'", cur().pos);
      take();
      return e;
    }
    throw ParseError("expected a number, variable or '('", cur().pos);
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

}  // namespace

NodePtr parse(std::string_view text) { return Parser(text).run(); }

}  // namespace polarmac::ast
