#include "doctest.h"
#include "oracles.hpp"

#include "freegp/error.hpp"
#include "freegp/parser.hpp"

#include <memory>

using namespace freegp;

namespace {

Expr random_expr(std::mt19937_64& rng, unsigned depth);

Factor random_factor(std::mt19937_64& rng, unsigned depth)
{
	const unsigned kind = depth == 0 ? 0 : rng() % 4;
	if (kind <= 1) {
		static const char* names[] = {"x", "t", "y", "ab"};
		return Variable(names[rng() % 4], 1 + static_cast<unsigned>(rng() % 12));
	}
	if (kind == 2)
		return BracketExpr{std::make_shared<const Expr>(random_expr(rng, depth - 1)),
		                   std::make_shared<const Expr>(random_expr(rng, depth - 1))};
	return ParenExpr{std::make_shared<const Expr>(random_expr(rng, depth - 1))};
}

Expr random_expr(std::mt19937_64& rng, unsigned depth)
{
	Expr e;
	const unsigned terms = 1 + rng() % 3;
	for (unsigned i = 0; i < terms; ++i) {
		Term t;
		if (rng() % 2)
			t.coefficient = oracle::random_rational(rng);
		const unsigned factors = rng() % 5 == 0 ? 0 : 1 + rng() % 3;
		for (unsigned k = 0; k < factors; ++k)
			t.factors.push_back(random_factor(rng, depth));
		e.terms.push_back(std::move(t));
	}
	return e;
}

} // namespace

TEST_CASE("parse examples")
{
	{
		const Expr e = parse("{x1,{x2,x3}}");
		REQUIRE(e.terms.size() == 1);
		REQUIRE(e.terms[0].factors.size() == 1);
		const auto* b = std::get_if<BracketExpr>(&e.terms[0].factors[0]);
		REQUIRE(b);
		CHECK(print(*b->left) == "x1");
		CHECK(print(*b->right) == "{x2,x3}");
	}
	{
		const Expr e = parse("2/3*{x1,x2}*x3 + x1");
		REQUIRE(e.terms.size() == 2);
		CHECK(e.terms[0].coefficient == Rational(2, 3));
		CHECK(e.terms[0].factors.size() == 2);
		CHECK(e.terms[1].coefficient == 1);
	}
	CHECK(print(parse("  - 4/6 * ( x1 + t12 ) ")) == "-2/3*(x1 + t12)");
	CHECK(print(parse("x1 - 1")) == "x1 - 1");
}

TEST_CASE("parse errors")
{
	try {
		parse("{x1,x2");
		FAIL("expected a syntax error");
	} catch (const ParseError& e) {
		CHECK(e.line() == 1);
		CHECK(e.column() == 7);
		const auto& exp = e.expected();
		CHECK(std::find(exp.begin(), exp.end(), "'}'") != exp.end());
	}
	try {
		parse("x1 +\n  * x2");
		FAIL("expected a syntax error");
	} catch (const ParseError& e) {
		CHECK(e.line() == 2);
		CHECK(e.column() == 3);
	}
	CHECK_THROWS_AS(parse("x1 x2"), ParseError);
	CHECK_THROWS_AS(parse("x"), ParseError);
	CHECK_THROWS_AS(parse("1/0"), ParseError);
	CHECK_THROWS_AS(parse(""), ParseError);
	CHECK_THROWS_AS(parse("{x1}"), ParseError);
	CHECK_THROWS_AS(parse("x1 - -1"), ParseError);
}

TEST_CASE("print then parse is the identity on a random corpus")
{
	std::mt19937_64 rng(73);
	for (int i = 0; i < 200; ++i) {
		const Expr e = random_expr(rng, 3);
		const std::string text = print(e);
		const Expr back = parse(text);
		CHECK_MESSAGE(back == e, text);
		CHECK(print(back) == text);
	}
}

TEST_CASE("canonical GP output round-trips")
{
	std::mt19937_64 rng(79);
	for (int i = 0; i < 200; ++i) {
		const GPPoly f = oracle::random_gp(rng, oracle::xs(4), 3, 3, 1 + rng() % 4);
		const std::string text = to_string(f);
		CHECK_MESSAGE(parse_gp(text) == f, text);
		CHECK(print(parse(text)) == text);
	}
}
