#include <cctype>
#include <string>
#include <vector>

#include "bltk/errors.hpp"
#include "bltk/formula.hpp"

namespace bltk {

namespace {

enum class Tok { Atom, Zero, One, Not, And, Meet, Join, Arrow, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(s.substr(i, len)), line, col});
    i += len;
    col += len;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      push(Tok::Atom, j - i);
      continue;
    }
    const std::string_view rest = s.substr(i);
    if (rest.starts_with("<->")) push(Tok::Iff, 3);
    else if (rest.starts_with("->")) push(Tok::Arrow, 2);
    else if (c == '0') push(Tok::Zero, 1);
    else if (c == '1') push(Tok::One, 1);
    else if (c == '!') push(Tok::Not, 1);
    else if (c == '&') push(Tok::And, 1);
    else if (c == '^') push(Tok::Meet, 1);
    else if (c == '|') push(Tok::Join, 1);
    else if (c == '(') push(Tok::LParen, 1);
    else if (c == ')') push(Tok::RParen, 1);
    else
      throw SyntaxError(ErrorCode::UnknownToken, line, col,
                        "unknown token '" + std::string(1, c) + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse() {
    Formula f = arrows();
    const Token& t = peek();
    if (t.kind == Tok::RParen)
      throw SyntaxError(ErrorCode::UnbalancedParens, t.line, t.column, "unmatched ')'");
    if (t.kind != Tok::End) fail(t, "expected an operator or end of input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw SyntaxError(ErrorCode::SyntaxError, t.line, t.column, what + ", found " + describe(t));
  }

  Formula arrows() {
    std::vector<Formula> operands{lattice()};
    std::vector<const Token*> ops;
    while (peek().kind == Tok::Arrow || peek().kind == Tok::Iff) {
      ops.push_back(&next());
      operands.push_back(lattice());
    }
    if (ops.size() > 1)
      for (const Token* op : ops)
        if (op->kind == Tok::Iff)
          throw SyntaxError(ErrorCode::SyntaxError, op->line, op->column,
                            "'<->' does not associate; add parentheses");
    Formula f = operands.back();
    for (std::size_t k = ops.size(); k-- > 0;)
      f = ops[k]->kind == Tok::Iff ? Formula::iff(operands[k], f) : Formula::impl(operands[k], f);
    return f;
  }

  Formula lattice() {
    Formula f = conjunction();
    for (;;) {
      if (peek().kind == Tok::Meet) {
        next();
        f = Formula::meet(f, conjunction());
      } else if (peek().kind == Tok::Join) {
        next();
        f = Formula::join(f, conjunction());
      } else {
        return f;
      }
    }
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == Tok::And) {
      next();
      f = Formula::conj(f, unary());
    }
    return f;
  }

  Formula unary() {
    if (peek().kind == Tok::Not) {
      next();
      return Formula::neg(unary());
    }
    return primary();
  }

  Formula primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Atom: return Formula::atom(t.text);
      case Tok::Zero: return Formula::bottom();
      case Tok::One: return Formula::top();
      case Tok::LParen: {
        Formula f = arrows();
        const Token& close = peek();
        if (close.kind == Tok::End)
          throw SyntaxError(ErrorCode::UnbalancedParens, t.line, t.column, "'(' is never closed");
        if (close.kind != Tok::RParen) fail(close, "expected ')'");
        next();
        return f;
      }
      case Tok::RParen:
        throw SyntaxError(ErrorCode::UnbalancedParens, t.line, t.column, "unmatched ')'");
      default:
        fail(t, "expected a formula");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

}  // namespace bltk
