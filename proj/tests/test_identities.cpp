#include "doctest.h"
#include "oracles.hpp"

#include "freegp/error.hpp"
#include "freegp/identities.hpp"
#include "freegp/parser.hpp"

#include <numeric>

using namespace freegp;

namespace {

Variable x(unsigned i) { return Variable("x", i); }
Variable y() { return Variable("y", 1); }
Variable z() { return Variable("z", 1); }
GPPoly gp(std::string_view s) { return parse_gp(s); }
GPPoly J3() { return gp_from_ac(j3(x(1), x(2), x(3))); }
GPPoly C2(unsigned a, unsigned b) { return gp_from_ac(c2(x(a), x(b))); }

// Direct substitution oracle for D(f, x; y, z) on a word given as a tree:
// replaces the leaf x by the product yz and expands with Leibniz by hand.
GPPoly expand_leaf_product(Word w, const Variable& v, const GPPoly& image)
{
	if (w.is_leaf())
		return w.variable() == v ? image : gp_variable(w.variable());
	return gp_bracket(expand_leaf_product(w.left(), v, image), expand_leaf_product(w.right(), v, image));
}

std::vector<Letters> letter_sets(unsigned m)
{
	std::vector<Letters> out(1);
	for (unsigned i = 1; i <= m; ++i)
		out[0].push_back(Word::leaf(Variable("u", i)));
	return out;
}

} // namespace

TEST_CASE("derivation difference")
{
	CHECK(derivation_difference(gp("{x1,x2}"), x(2), y(), z()).is_zero());
	CHECK(derivation_difference(J3(), x(3), y(), z()).is_zero());
	const GPPoly d = derivation_difference(gp("{x1,{x2,x3}}"), x(3), y(), z());
	CHECK_FALSE(d.is_zero());
	CHECK_THROWS_AS(derivation_difference(gp("{x1,x2}*x1"), x(1), y(), z()), DomainError);
}

TEST_CASE("derivation difference against direct substitution")
{
	const Word w = Word::bracket(Word::leaf(x(1)), Word::bracket(Word::leaf(x(2)), Word::leaf(x(3))));
	const GPPoly yz = gp_mul(gp_variable(y()), gp_variable(z()));
	const GPPoly expected = expand_leaf_product(w, x(3), yz) -
	                        gp_mul(gp_variable(y()), expand_leaf_product(w, x(3), gp_variable(z()))) -
	                        gp_mul(gp_variable(z()), expand_leaf_product(w, x(3), gp_variable(y())));
	CHECK(derivation_difference(gp("{x1,{x2,x3}}"), x(3), y(), z()) == expected);
	// {x1,{x2,yz}} - y{x1,{x2,z}} - z{x1,{x2,y}} = {x1,y}{x2,z} + {x1,z}{x2,y}
	CHECK(expected == gp("{x1,y1}*{x2,z1} + {x1,z1}*{x2,y1}"));
}

TEST_CASE("is_derivation_in and is_jacobian")
{
	CHECK(is_derivation_in(gp("{x1,x2}"), x(2)));
	CHECK(is_derivation_in(J3(), x(1)));
	CHECK_FALSE(is_derivation_in(gp("{x1,{x2,x3}}"), x(3)));
	CHECK(is_jacobian(C2(1, 2)));
	CHECK(is_jacobian(J3()));
	CHECK_FALSE(is_jacobian(gp("{x1,{x2,x3}}")));
	CHECK(is_jacobian(gp_mul(C2(1, 2), C2(3, 4))));
	CHECK_THROWS_AS(is_jacobian(gp("{x1,x2}*x1")), DomainError);
}

TEST_CASE("jacobian space dimensions")
{
	const std::vector<std::size_t> expected{1, 1, 0, 0};
	for (unsigned n = 2; n <= 5; ++n) {
		const JacobianSpace js = jacobian_space(n);
		CHECK(js.basis.size() == expected[n - 2]);
		CHECK(oracle::jacobian_dimension_via_coproduct(n) == expected[n - 2]);
	}
	CHECK(jacobian_space(5).ambient_dimension == 105);
	CHECK_THROWS_AS(jacobian_space(7), DomainError);
	CHECK_THROWS_AS(jacobian_space(1), DomainError);
}

TEST_CASE("jacobian space bases")
{
	auto proportional = [](const ACPoly& a, const ACPoly& b) {
		if (a.is_zero() || b.is_zero() || a.size() != b.size())
			return false;
		const auto& [w, c] = *a.begin();
		return a == b * (c / b.coefficient(w));
	};
	const auto s2 = jacobian_space(2);
	REQUIRE(s2.basis.size() == 1);
	CHECK(proportional(s2.basis[0], c2(x(1), x(2))));
	const auto s3 = jacobian_space(3);
	REQUIRE(s3.basis.size() == 1);
	CHECK(proportional(s3.basis[0], j3(x(1), x(2), x(3))));
	for (const auto& space : {s2, s3})
		for (const ACPoly& f : space.basis) {
			CHECK(is_jacobian(gp_from_ac(f)));
			for (const Variable& v : ac_support(f))
				CHECK(flip(f, v) == f);
		}
}

TEST_CASE("alternating sums")
{
	const auto u = letter_sets(5)[0];
	CHECK(alternating_sum(std::span(u).first(1)) == assoc_letter(u[0]));
	CHECK(alternating_sum(std::span(u).first(2)) == commutator(assoc_letter(u[0]), assoc_letter(u[1])));
	const AssocPoly a3 = alternating_sum(std::span(u).first(3));
	CHECK(a3.size() == 6);
	Rational total = 0;
	for (const auto& [w, c] : a3)
		total += c;
	CHECK(total == 0);
	const std::vector<Word> dup{u[0], u[0]};
	CHECK_THROWS_AS(alternating_sum(dup), DomainError);
}

TEST_CASE("alternating sums are Lie only in degrees 1 and 2")
{
	const auto u = letter_sets(5)[0];
	unsigned long long factorial = 1;
	for (unsigned m = 1; m <= 5; ++m) {
		factorial *= m;
		const AssocPoly A = alternating_sum(std::span(u).first(m));
		CHECK(is_lie_element(A) == (m <= 2));
		CHECK(oracle::in_lie_span(A, std::vector<Word>(u.begin(), u.begin() + m)) == (m <= 2));
		const ExteriorElem image = exterior_image(A);
		REQUIRE(image.size() == 1);
		CHECK(image.begin()->first == Letters(u.begin(), u.begin() + m));
		CHECK(image.begin()->second == Rational(static_cast<long>(factorial)));
	}
}

TEST_CASE("Lie test examples")
{
	const auto u = letter_sets(2)[0];
	const AssocPoly u1 = assoc_letter(u[0]), u2 = assoc_letter(u[1]);
	CHECK(is_lie_element(commutator(u1, u2)));
	CHECK_FALSE(is_lie_element(assoc_mul(u1, u2)));
	CHECK(exterior_image(assoc_mul(u1, u1)).is_zero());
	CHECK(exterior_to_string(exterior_image(commutator(u1, u2))) == "2*u1^u2");
	CHECK(exterior_to_string(exterior_image(alternating_sum(std::span(letter_sets(3)[0])))) == "6*u1^u2^u3");
}

TEST_CASE("Lie test agrees with the Lyndon basis oracle")
{
	std::mt19937_64 rng(31);
	const auto all = letter_sets(4)[0];
	unsigned lie = 0, total = 0;
	for (int i = 0; i < 300; ++i) {
		const unsigned k = 1 + rng() % 4;
		const std::vector<Word> letters(all.begin(), all.begin() + k);
		const unsigned d = 1 + rng() % 4;
		AssocPoly L;
		if (rng() % 2 == 0) {
			// Random combination of Lyndon basis elements plus, sometimes, noise.
			for (const AssocPoly& b : oracle::lyndon_lie_basis(letters, d))
				if (rng() % 2)
					L += b * oracle::random_rational(rng);
			if (rng() % 3 == 0) {
				Letters w;
				for (unsigned j = 0; j < d; ++j)
					w.push_back(letters[rng() % k]);
				L.add(w, oracle::random_rational(rng));
			}
		} else {
			for (unsigned t = 0; t < 1 + rng() % 4; ++t) {
				Letters w;
				for (unsigned j = 0; j < d; ++j)
					w.push_back(letters[rng() % k]);
				L.add(w, oracle::random_rational(rng));
			}
		}
		if (L.is_zero())
			continue;
		const bool expected = oracle::in_lie_span(L, letters);
		CHECK(is_lie_element(L) == expected);
		lie += expected;
		++total;
	}
	CHECK(total >= 100);
	CHECK(lie > 20);
	CHECK(total - lie > 20);
}

TEST_CASE("exterior image is multiplicative")
{
	std::mt19937_64 rng(37);
	const auto all = letter_sets(4)[0];
	auto random_assoc = [&] {
		AssocPoly p;
		for (unsigned t = 0; t < 1 + rng() % 4; ++t) {
			Letters w;
			for (unsigned j = 0, d = rng() % 4; j < d; ++j)
				w.push_back(all[rng() % all.size()]);
			p.add(w, oracle::random_rational(rng));
		}
		return p;
	};
	for (int i = 0; i < 100; ++i) {
		const AssocPoly L = random_assoc(), M = random_assoc();
		CHECK(exterior_image(assoc_mul(L, M)) == wedge(exterior_image(L), exterior_image(M)));
	}
}

TEST_CASE("operator of a word")
{
	const ACPoly f = to_ac(gp("{x1,{x2,x3}}"));
	const AssocPoly W = operator_of(f, x(3));
	REQUIRE(W.size() == 1);
	CHECK(W.begin()->first == Letters{Word::leaf(x(1)), Word::leaf(x(2))});
	CHECK(W.begin()->second == 1);
}

TEST_CASE("linearize")
{
	const GPPoly f = gp("{x1,{x2,x3}} - 2*x1*{x2,x3}");
	CHECK(linearize(f) == f);
	// The fresh copy of x1 takes the next free index, x3.
	CHECK(linearize(gp("{x1,x2}*x1")) == gp("{x1,x2}*x3 + {x3,x2}*x1"));
	CHECK(linearize(gp("{x1,{x1,x2}}")) == gp("{x1,{x3,x2}} + {x3,{x1,x2}}"));
	CHECK_THROWS_AS(linearize(gp("x1*x1 + x1")), DomainError);
}

TEST_CASE("linearize at equal arguments recovers d! f")
{
	// Every entry repeats only x1, with the same degree in each monomial.
	const std::vector<std::pair<std::string, long>> corpus{
		{"{x1,x2}*x1", 2},
		{"{x1,{x1,x2}}", 2},
		{"{x1,{x1,{x1,x2}}} + 3*x1*x1*{x1,x2}", 6},
		{"{x1,x2}*{x1,x3}", 2},
		{"{{x1,x2},{x1,x3}}*x1*x4", 6},
		{"x1*x1*x2 - {x1,x2}*x1", 2},
	};
	for (const auto& [s, factorial] : corpus) {
		const GPPoly f = gp(s);
		const GPPoly lin = linearize(f);
		CHECK(is_polylinear(lin));
		const auto orig = support_variables(f);
		std::map<Variable, GPPoly> back;
		for (const Variable& v : support_variables(lin))
			if (std::find(orig.begin(), orig.end(), v) == orig.end())
				back[v] = gp_variable(x(1));
		CHECK(substitute(lin, back) == f * Rational(factorial));
	}
}

TEST_CASE("remove_bare_factors")
{
	CHECK(remove_bare_factors(gp("{x1,x2}*x3")) == gp("{x1,x2}"));
	CHECK(remove_bare_factors(gp("{x1,x2}*{x3,x4}")) == gp("{x1,x2}*{x3,x4}"));
	CHECK(remove_bare_factors(gp("x1*x2 + {x1,x2}")) == gp_one());
	CHECK(remove_bare_factors(gp("x1*{x2,x3} + {x1,x2}*x3")) == gp("{x2,x3}"));
}

TEST_CASE("farkas height")
{
	{
		const FarkasHeight fh = farkas_height(gp("{x1,x2}*{x3,{x4,x5}}"));
		CHECK(fh.per_variable.at(x(1)) == 2);
		CHECK(fh.per_variable.at(x(2)) == 2);
		for (unsigned i = 3; i <= 5; ++i)
			CHECK(fh.per_variable.at(x(i)) == 3);
		CHECK(fh.total == 99);
	}
	CHECK(farkas_height(gp("{x1,x2}")).total == 18);
	CHECK(farkas_height(J3()).total == 81);
	CHECK_THROWS_AS(farkas_height(gp("{x1,x2}*x3")), DomainError);
	CHECK_THROWS_AS(farkas_height(gp("{x1,x2}*x1")), DomainError);
}

TEST_CASE("jacobian_reduce")
{
	CHECK(jacobian_reduce(C2(1, 2)).result == C2(1, 2));
	CHECK(jacobian_reduce(C2(1, 2)).steps.empty());
	CHECK(jacobian_reduce(J3()).result == J3());
	const Reduction r = jacobian_reduce(gp("{x1,{x2,x3}}"));
	CHECK_FALSE(r.result.is_zero());
	CHECK(is_jacobian(r.result));
	CHECK(support_variables(r.result).size() >= 3);
	CHECK_FALSE(r.steps.empty());
	for (const auto& s : r.steps)
		CHECK(s.after.total < s.before.total);
	CHECK_THROWS(jacobian_reduce(GPPoly()));
}

TEST_CASE("jacobian_reduce on random polylinear inputs")
{
	std::mt19937_64 rng(43);
	int reduced = 0;
	for (int i = 0; i < 60 && reduced < 20; ++i) {
		const unsigned n = 3 + rng() % 2;
		const GPPoly f = remove_bare_factors(gp_from_ac(oracle::random_polylinear_ac(rng, oracle::xs(n), 1 + rng() % 3)));
		if (f.is_zero() || !is_polylinear(f) || is_jacobian(f))
			continue;
		const Reduction r = jacobian_reduce(f);
		CHECK(is_jacobian(r.result));
		Integer prev = farkas_height(f).total;
		for (const auto& s : r.steps) {
			CHECK(s.before.total == prev);
			CHECK(s.after.total < s.before.total);
			prev = s.after.total;
		}
		CHECK(farkas_height(r.result).total == prev);
		++reduced;
	}
	CHECK(reduced == 20);
}

TEST_CASE("product decomposition")
{
	{
		const GPPoly f = gp_mul(C2(1, 2), C2(3, 4));
		const Decomposition d = jacobian_product_decompose(f);
		REQUIRE(d.ok);
		REQUIRE(d.terms.size() == 1);
		CHECK(d.terms[0].coefficient == 1);
		CHECK(d.terms[0].product == f);
		CHECK(d.terms[0].blocks == std::vector<std::vector<Variable>>{{x(1), x(2)}, {x(3), x(4)}});
	}
	{
		const Decomposition d = jacobian_product_decompose(J3());
		REQUIRE(d.ok);
		REQUIRE(d.terms.size() == 1);
		CHECK(d.terms[0].coefficient == 1);
		CHECK(d.terms[0].product == J3());
	}
	CHECK_THROWS_AS(jacobian_product_decompose(gp("{x1,{x2,x3}}")), DomainError);
}

TEST_CASE("random C2 products decompose with exact coefficients")
{
	std::mt19937_64 rng(47);
	const std::vector<std::pair<std::pair<unsigned, unsigned>, std::pair<unsigned, unsigned>>> pairings{
		{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}};
	for (int i = 0; i < 20; ++i) {
		GPPoly f;
		std::vector<Rational> coeffs;
		for (const auto& [a, b] : pairings) {
			const Rational c = rng() % 4 == 0 ? Rational(0) : oracle::random_rational(rng);
			coeffs.push_back(c);
			f += gp_mul(C2(a.first, a.second), C2(b.first, b.second)) * c;
		}
		if (f.is_zero())
			continue;
		const Decomposition d = jacobian_product_decompose(f);
		REQUIRE(d.ok);
		GPPoly sum;
		for (const auto& t : d.terms)
			sum += t.product * t.coefficient;
		CHECK(sum == f);
		for (std::size_t p = 0; p < pairings.size(); ++p) {
			Rational got = 0;
			for (const auto& t : d.terms)
				if (t.blocks == std::vector<std::vector<Variable>>{{x(pairings[p].first.first), x(pairings[p].first.second)},
				                                                   {x(pairings[p].second.first), x(pairings[p].second.second)}})
					got += t.coefficient;
			CHECK(got == coeffs[p]);
		}
		CHECK(has_two_three_summand(f));
	}
}

TEST_CASE("two-three summands")
{
	CHECK(has_two_three_summand(J3()));
	CHECK(has_two_three_summand(gp_mul(C2(1, 2), C2(3, 4))));
	CHECK_FALSE(has_two_three_summand(gp("{{x1,x2},{x3,x4}}")));
	CHECK_FALSE(has_two_three_summand(gp("x1*{x2,x3}")));
}
