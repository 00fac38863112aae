#include <gtest/gtest.h>

#include "bltk/errors.hpp"
#include "bltk/formula.hpp"

using namespace bltk;
using F = Formula;

namespace {

const F p = F::atom("p"), q = F::atom("q"), r = F::atom("r");

struct Position {
  ErrorCode code;
  std::size_t line;
  std::size_t column;
};

Position error_at(const std::string& text) {
  try {
    parse_formula(text);
  } catch (const SyntaxError& e) {
    return {e.code(), e.line(), e.column()};
  }
  ADD_FAILURE() << "parsed: " << text;
  return {ErrorCode::ParseError, 0, 0};
}

}  // namespace

TEST(Parser, Examples) {
  EXPECT_EQ(parse_formula("p -> q"), F::impl(p, q));
  EXPECT_EQ(parse_formula("(p -> q) | (q -> p)"), F::join(F::impl(p, q), F::impl(q, p)));
  EXPECT_EQ(parse_formula("p & q & r"), F::conj(F::conj(p, q), r));
}

TEST(Parser, Precedence) {
  EXPECT_EQ(parse_formula("p -> q -> r"), F::impl(p, F::impl(q, r)));
  EXPECT_EQ(parse_formula("p & q -> r"), F::impl(F::conj(p, q), r));
  EXPECT_EQ(parse_formula("p | q & r"), F::join(p, F::conj(q, r)));
  EXPECT_EQ(parse_formula("p ^ q | r"), F::join(F::meet(p, q), r));
  EXPECT_EQ(parse_formula("p | q ^ r"), F::meet(F::join(p, q), r));
  EXPECT_EQ(parse_formula("!p & q"), F::conj(F::neg(p), q));
  EXPECT_EQ(parse_formula("!!p"), F::neg(F::neg(p)));
  EXPECT_EQ(parse_formula("p <-> q ^ r"), F::iff(p, F::meet(q, r)));
  EXPECT_EQ(parse_formula("(p <-> q) <-> r"), F::iff(F::iff(p, q), r));
  EXPECT_EQ(parse_formula("0 -> 1"), F::impl(F::bottom(), F::top()));
  EXPECT_EQ(parse_formula("x_1 & yZ9"), F::conj(F::atom("x_1"), F::atom("yZ9")));
}

TEST(Parser, PositionedErrors) {
  auto at = [](const std::string& text, ErrorCode code, std::size_t line, std::size_t col) {
    const Position pos = error_at(text);
    EXPECT_EQ(pos.code, code) << text;
    EXPECT_EQ(pos.line, line) << text;
    EXPECT_EQ(pos.column, col) << text;
  };
  at("(p -> q", ErrorCode::UnbalancedParens, 1, 1);
  at("p -> q)", ErrorCode::UnbalancedParens, 1, 7);
  at("p & # q", ErrorCode::UnknownToken, 1, 5);
  at("P & q", ErrorCode::UnknownToken, 1, 1);
  at("p - q", ErrorCode::UnknownToken, 1, 3);
  at("p &", ErrorCode::SyntaxError, 1, 4);
  at("p q", ErrorCode::SyntaxError, 1, 3);
  at("", ErrorCode::SyntaxError, 1, 1);
  at("p <-> q <-> r", ErrorCode::SyntaxError, 1, 3);
  at("p -> q <-> r", ErrorCode::SyntaxError, 1, 8);
  at("p &\n  (q ->\n  )", ErrorCode::UnbalancedParens, 3, 3);
  at("p &\n  2", ErrorCode::UnknownToken, 2, 3);
}

TEST(Printer, MinimalParentheses) {
  EXPECT_EQ(print_formula(F::impl(p, F::impl(q, r))), "p -> q -> r");
  EXPECT_EQ(print_formula(F::impl(F::impl(p, q), r)), "(p -> q) -> r");
  EXPECT_EQ(print_formula(F::conj(F::conj(p, q), r)), "p & q & r");
  EXPECT_EQ(print_formula(F::conj(p, F::conj(q, r))), "p & (q & r)");
  EXPECT_EQ(print_formula(F::join(F::impl(p, q), F::impl(q, p))), "(p -> q) | (q -> p)");
  EXPECT_EQ(print_formula(F::neg(F::conj(p, q))), "!(p & q)");
  EXPECT_EQ(print_formula(F::iff(F::iff(p, q), r)), "(p <-> q) <-> r");
  EXPECT_EQ(print_formula(F::impl(p, F::iff(q, r))), "p -> (q <-> r)");
  EXPECT_EQ(print_formula(F::meet(p, F::join(q, r))), "p ^ (q | r)");
  EXPECT_EQ(print_formula(F::top()), "1");
}

TEST(Printer, ParsePrintParseIsAFixedPoint) {
  for (const char* text : {"p", "p -> q -> r", "(p -> q) -> r", "!(p & q) | r ^ s",
                           "((p <-> q) -> r) <-> !s", "0 -> 1", "p & (q & r)", "!!p -> !q"}) {
    const F f = parse_formula(text);
    const std::string printed = print_formula(f);
    EXPECT_EQ(parse_formula(printed), f) << text;
    EXPECT_EQ(print_formula(parse_formula(printed)), printed) << text;
  }
}

TEST(Desugar, RewritesIntoTheCore) {
  EXPECT_EQ(desugar(F::neg(p)), F::impl(p, F::bottom()));
  EXPECT_EQ(desugar(F::top()), F::impl(F::bottom(), F::bottom()));
  EXPECT_EQ(desugar(F::meet(p, q)), F::conj(p, F::impl(p, q)));
  EXPECT_EQ(desugar(F::iff(p, q)), F::conj(F::impl(p, q), F::impl(q, p)));
  const F j = desugar(F::join(p, q));
  const F left = F::impl(F::impl(p, q), q), right = F::impl(F::impl(q, p), p);
  EXPECT_EQ(j, F::conj(left, F::impl(left, right)));
  const F big = parse_formula("!(p <-> q) | (r ^ 1)");
  EXPECT_TRUE(desugar(big).is_core());
  EXPECT_FALSE(big.is_core());
  EXPECT_EQ(desugar(desugar(big)), desugar(big));
}

TEST(Formula, AtomsAndSize) {
  EXPECT_EQ(atoms_of(parse_formula("q & p -> q | r")), (std::vector<std::string>{"q", "p", "r"}));
  EXPECT_EQ(parse_formula("p -> q").size(), 3u);
  EXPECT_TRUE(atoms_of(parse_formula("0 -> 1")).empty());
}
