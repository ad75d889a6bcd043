#include "doctest.h"
#include "oracles.hpp"

#include "freegp/diff_real.hpp"
#include "freegp/error.hpp"
#include "freegp/identities.hpp"
#include "freegp/parser.hpp"

using namespace freegp;

namespace {

Variable x(unsigned i) { return Variable("x", i); }
Variable y(unsigned i) { return Variable("y", i); }
Variable t(unsigned i) { return Variable("t", i); }
GPPoly gp(std::string_view s) { return parse_gp(s); }

RatFunc rf(std::string_view s, const Realization& R) { return to_ratfunc(parse(s), R); }

// Random polynomial (or quotient of polynomials) over R's variables with
// small integer coefficients.
RatFunc random_rf(std::mt19937_64& rng, const Realization& R, bool allow_fraction)
{
	const auto& vars = R.variables();
	auto poly = [&] {
		MultiPoly p;
		const unsigned terms = 1 + rng() % 3;
		for (unsigned k = 0; k < terms; ++k) {
			MultiPoly m = mp_constant(Rational(static_cast<long>(rng() % 5) - 2));
			for (unsigned d = rng() % 3; d > 0; --d)
				m = mp_mul(m, mp_variable(vars[rng() % vars.size()]));
			p += m;
		}
		return p;
	};
	MultiPoly num = poly();
	if (allow_fraction && rng() % 3 == 0) {
		MultiPoly den = poly();
		if (!den.is_zero())
			return RatFunc(num, den);
	}
	return RatFunc(num);
}

} // namespace

TEST_CASE("RatFunc arithmetic")
{
	const Realization R(Model::poisson, 2);
	const RatFunc a = rf("x1 + 2*y1", R), b = rf("x2 - 1/3", R);
	CHECK((a + b) * (a + b) == a * a + Rational(2) * a * b + b * b);
	CHECK((a / b) * b == a);
	CHECK(a / a == RatFunc(Rational(1)));
	CHECK((a - a).is_zero());
	CHECK_THROWS(RatFunc(mp_variable(x(1)), MultiPoly()));
	CHECK((RatFunc(mp_variable(x(1))) / RatFunc(Rational(-2))).str() == "-1/2*x1");
}

TEST_CASE("RatFunc equality is consistent on random identities")
{
	std::mt19937_64 rng(53);
	const Realization R(Model::poisson, 2);
	for (int i = 0; i < 100; ++i) {
		const RatFunc a = random_rf(rng, R, true), b = random_rf(rng, R, true), c = random_rf(rng, R, true);
		CHECK((a + b) * (a + b) == a * a + Rational(2) * a * b + b * b);
		CHECK(a * (b + c) == a * b + a * c);
		CHECK((a - b) + b == a);
		CHECK(a * b == b * a);
		if (!b.is_zero())
			CHECK((a / b) * b == a);
		CHECK(a.reduced() == a);
	}
}

TEST_CASE("partial derivatives")
{
	const Realization R(Model::poisson, 1);
	CHECK(partial_derivative(rf("x1*x1", R), x(1), R) == rf("2*x1", R));
	const RatFunc inv_y = RatFunc(Rational(1)) / RatFunc::variable(y(1));
	CHECK(partial_derivative(inv_y, y(1), R) == -(inv_y * inv_y));
	const RatFunc q = rf("x1*y1", R) / rf("x1 + y1", R);
	const RatFunc s = rf("x1 + y1", R);
	CHECK(partial_derivative(q, x(1), R) == rf("y1*y1", R) / (s * s));
	CHECK_THROWS_AS(partial_derivative(q, x(2), R), DomainError);
}

TEST_CASE("realized bracket examples")
{
	const Realization P(Model::poisson, 1);
	CHECK(realized_bracket(RatFunc::variable(x(1)), RatFunc::variable(y(1)), P) == RatFunc(Rational(1)));
	CHECK(realized_bracket(RatFunc::variable(x(1)), RatFunc::variable(x(1)), P).is_zero());
	const Realization G(Model::gps, 2);
	CHECK(realized_bracket(RatFunc::variable(x(1)), RatFunc::variable(y(1)), G) == RatFunc::variable(y(2)));
	CHECK(realized_bracket(RatFunc::variable(x(2)), RatFunc::variable(y(2)), G) == RatFunc::variable(y(1)));
}

TEST_CASE("realized bracket is anti-commutative and a biderivation")
{
	for (Model model : {Model::poisson, Model::gps}) {
		std::mt19937_64 rng(59);
		const Realization R(model, 2);
		for (int i = 0; i < 120; ++i) {
			const RatFunc a = random_rf(rng, R, true), b = random_rf(rng, R, true), c = random_rf(rng, R, true);
			CHECK((realized_bracket(a, b, R) + realized_bracket(b, a, R)).is_zero());
			CHECK(realized_bracket(a, b * c, R) == realized_bracket(a, b, R) * c + realized_bracket(a, c, R) * b);
			CHECK(realized_bracket(a * b, c, R) == realized_bracket(a, c, R) * b + realized_bracket(b, c, R) * a);
		}
	}
}

TEST_CASE("Jacobi holds in the poisson realization")
{
	std::mt19937_64 rng(61);
	const Realization R(Model::poisson, 2);
	for (int i = 0; i < 100; ++i) {
		const RatFunc a = random_rf(rng, R, true), b = random_rf(rng, R, true), c = random_rf(rng, R, true);
		const RatFunc jac = realized_bracket(realized_bracket(a, b, R), c, R) +
		                    realized_bracket(realized_bracket(b, c, R), a, R) +
		                    realized_bracket(realized_bracket(c, a, R), b, R);
		CHECK(jac.is_zero());
	}
}

TEST_CASE("gps realization has a nonzero Jacobiator")
{
	const Realization R(Model::gps, 2);
	const RatFunc a = rf("x1*x2", R), b = rf("y1", R), c = rf("y2 + x1", R);
	const RatFunc jac = realized_bracket(realized_bracket(a, b, R), c, R) +
	                    realized_bracket(realized_bracket(b, c, R), a, R) +
	                    realized_bracket(realized_bracket(c, a, R), b, R);
	CHECK_FALSE(jac.is_zero());
}

TEST_CASE("evaluate_gp")
{
	const Realization P1(Model::poisson, 1);
	const Assignment a{{t(1), RatFunc::variable(x(1))}, {t(2), RatFunc::variable(y(1))}};
	CHECK(evaluate_gp(gp("{t1,t2}"), a, P1) == RatFunc(Rational(1)));
	CHECK(evaluate_gp(gp("t1*t2"), a, P1) == rf("x1*y1", P1));
	CHECK(evaluate_gp(gp("t1*t2"), a, Realization(Model::gps, 1)) == rf("x1*y1", P1));
	CHECK_THROWS_AS(evaluate_gp(gp("{t1,t3}"), a, P1), DomainError);

	const Realization P3(Model::poisson, 3);
	const Assignment b{{t(1), RatFunc::variable(x(1))}, {t(2), RatFunc::variable(x(2))}, {t(3), RatFunc::variable(x(3))}};
	CHECK(evaluate_gp(gp_from_ac(j3(t(1), t(2), t(3))), b, P3).is_zero());
}

TEST_CASE("evaluate_gp is a homomorphism")
{
	for (Model model : {Model::poisson, Model::gps}) {
		std::mt19937_64 rng(67);
		const Realization R(model, 2);
		const auto ts = oracle::xs(3, "t");
		for (int i = 0; i < 40; ++i) {
			Assignment asg;
			for (const Variable& v : ts)
				asg[v] = random_rf(rng, R, false);
			const GPPoly f = oracle::random_gp(rng, ts, 2, 2, 2);
			const GPPoly g = oracle::random_gp(rng, ts, 2, 2, 2);
			const RatFunc ef = evaluate_gp(f, asg, R), eg = evaluate_gp(g, asg, R);
			CHECK(evaluate_gp(gp_mul(f, g), asg, R) == ef * eg);
			CHECK(evaluate_gp(gp_bracket(f, g), asg, R) == realized_bracket(ef, eg, R));
		}
	}
}

TEST_CASE("J3 vanishes under random poisson assignments")
{
	std::mt19937_64 rng(71);
	const Realization R(Model::poisson, 2);
	const GPPoly J = gp_from_ac(j3(t(1), t(2), t(3)));
	for (int i = 0; i < 50; ++i) {
		Assignment asg;
		for (unsigned k = 1; k <= 3; ++k)
			asg[t(k)] = random_rf(rng, R, true);
		CHECK(evaluate_gp(J, asg, R).is_zero());
	}
}

TEST_CASE("structured witness")
{
	{
		const auto w = structured_witness(gp("{t1,t2}"), 2);
		REQUIRE(w);
		CHECK(w->assignment.at(t(2)) == RatFunc::variable(y(1)));
		CHECK(w->assignment.at(t(1)) == RatFunc::variable(x(1)));
		CHECK(w->value == RatFunc::variable(y(2)));
	}
	{
		const auto w = structured_witness(gp("{t1,{t2,t3}}"), 3);
		REQUIRE(w);
		CHECK(w->assignment.at(t(3)) == RatFunc::variable(y(1)));
		CHECK(w->assignment.at(t(2)) == RatFunc::variable(x(1)));
		CHECK(w->assignment.at(t(1)) == RatFunc::variable(x(2)));
		CHECK(w->value == RatFunc::variable(y(3)));
	}
	{
		const auto w = structured_witness(gp("{t1,t2}*{t3,t4}"), 5);
		REQUIRE(w);
		CHECK(w->assignment.at(t(3)) == RatFunc::variable(x(3)));
		CHECK(w->value == RatFunc::variable(y(2)) * RatFunc::variable(y(4)));
	}
	CHECK(structured_witness_min_m(gp("{t1,t2}").begin()->first) == 2);
	CHECK(structured_witness_min_m(gp("{t1,{t2,t3}}").begin()->first) == 3);
	CHECK(structured_witness_min_m(gp("{t1,t2}*{t3,t4}").begin()->first) == 4);
	CHECK_THROWS_WITH_AS(structured_witness(gp("{t1,{t2,t3}}"), 2), "m too small: the structured assignment needs m >= 3", DomainError);
	CHECK_FALSE(structured_witness(gp("{{t1,t2},{t3,t4}}"), 6));
}

TEST_CASE("structured witness values are y-monomials")
{
	for (const char* s : {"{t1,t2}", "{t1,{t2,t3}}", "{t1,t2}*{t3,t4}", "{t1,t2}*{t3,{t4,t5}}", "{t1,{t2,t3}}*{t4,{t5,t6}}"}) {
		const GPPoly f = gp(s);
		const auto w = structured_witness(f, 12);
		REQUIRE(w);
		const RatFunc v = w->value.reduced();
		REQUIRE(mp_is_constant(v.denominator()));
		REQUIRE(v.numerator().size() == 1);
		for (const auto& [pp, c] : v.numerator())
			for (const auto& [var, e] : pp.powers)
				CHECK(var.name() == "y");
	}
	// Jacobian inputs of both shapes.
	for (const GPPoly& f : {gp_from_ac(j3(t(1), t(2), t(3))), gp_mul(gp("{t1,t2}"), gp_from_ac(j3(t(3), t(4), t(5))))}) {
		const auto w = structured_witness(f, 10);
		REQUIRE(w);
		CHECK_FALSE(w->value.is_zero());
	}
}

TEST_CASE("witness search")
{
	{
		const auto w = identity_witness_search(gp("{t1,t2}"), Realization(Model::poisson, 1), {200, 0});
		REQUIRE(w);
		CHECK_FALSE(w->value.is_zero());
		CHECK(evaluate_gp(gp("{t1,t2}"), w->assignment, Realization(Model::poisson, 1)) == w->value);
	}
	{
		const GPPoly J = gp_from_ac(j3(t(1), t(2), t(3)));
		CHECK_FALSE(identity_witness_search(J, Realization(Model::poisson, 2), {200, 0}));
		const auto w = identity_witness_search(J, Realization(Model::gps, 4), {200, 0});
		REQUIRE(w);
		CHECK(evaluate_gp(J, w->assignment, Realization(Model::gps, 4)) == w->value);
		CHECK_FALSE(w->value.is_zero());
	}
	{
		// Random search alone (structured search does not apply in poisson).
		const GPPoly f = gp("{t1,t2}*t3 - t1*t2");
		const auto w = identity_witness_search(f, Realization(Model::poisson, 2), {200, 5});
		REQUIRE(w);
		CHECK(w->method == "random");
	}
	{
		// Same seed, same witness.
		const GPPoly f = gp("{{t1,t2},t3}");
		const auto a = identity_witness_search(f, Realization(Model::poisson, 2), {50, 9});
		const auto b = identity_witness_search(f, Realization(Model::poisson, 2), {50, 9});
		REQUIRE(a);
		REQUIRE(b);
		CHECK(a->attempts == b->attempts);
		CHECK(a->value == b->value);
	}
}
