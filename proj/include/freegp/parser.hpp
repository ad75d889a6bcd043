#pragma once

// Expression syntax shared by the CLI and the tests:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := rational '*' factor ('*' factor)*
//           | factor ('*' factor)*
//           | rational
//   factor := VAR | '{' expr ',' expr '}' | '(' expr ')'
//   VAR    := letters followed by digits (x1, t3, y12)
//   rational := integer ['/' positive-integer]
//
// '*' is the commutative product; juxtaposition is not multiplication.

#include "freegp/diff_real.hpp"
#include "freegp/gp_core.hpp"
#include "freegp/variable.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace freegp {

struct Expr;

struct BracketExpr {
	std::shared_ptr<const Expr> left;
	std::shared_ptr<const Expr> right;
};

struct ParenExpr {
	std::shared_ptr<const Expr> inner;
};

using Factor = std::variant<Variable, BracketExpr, ParenExpr>;

struct Term {
	Rational coefficient = 1;
	std::vector<Factor> factors; // empty: a constant term
};

struct Expr {
	std::vector<Term> terms;
};

bool operator==(const Expr& a, const Expr& b);

// Throws ParseError (with line, column and expected tokens) on bad input.
Expr parse(std::string_view input);

std::string print(const Expr& e);

// Interprets brackets as gp_bracket and '*' as gp_mul.
GPPoly to_gp(const Expr& e);

// Interprets the expression inside the realization's field: variables must
// be declared there, brackets become realized brackets.
RatFunc to_ratfunc(const Expr& e, const Realization& R);

inline GPPoly parse_gp(std::string_view input) { return to_gp(parse(input)); }

} // namespace freegp
