#pragma once

// Free generic Poisson algebra GP(X) = S(AC(X)): commutative polynomials with
// unit whose indeterminates are normal AC words, with the bracket extended
// from AC(X) by the Leibniz rule in both arguments.

#include "freegp/ac_core.hpp"
#include "freegp/combination.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace freegp {

// A product of normal words, kept sorted in word order. Empty = 1.
struct GPMonomial {
	std::vector<Word> factors;

	unsigned degree() const noexcept;
	// Number of occurrences of v across all factors.
	unsigned count(const Variable& v) const noexcept;
	std::string str() const;

	friend bool operator==(const GPMonomial&, const GPMonomial&) = default;
};

GPMonomial operator*(const GPMonomial& a, const GPMonomial& b);

// Global term order: total degree, then factor count, then factors
// lexicographically.
struct GPMonomialLess {
	bool operator()(const GPMonomial& a, const GPMonomial& b) const noexcept;
};

using GPPoly = Combination<GPMonomial, GPMonomialLess>;

GPPoly gp_one();
GPPoly gp_constant(const Rational& c);
GPPoly gp_variable(const Variable& v);
GPPoly gp_from_ac(const ACPoly& f);

// True when every monomial is a single AC word (f lies in AC(X) ⊂ GP(X)).
bool is_ac(const GPPoly& f);
// Throws DomainError unless is_ac(f).
ACPoly to_ac(const GPPoly& f);

GPPoly gp_mul(const GPPoly& f, const GPPoly& g);
GPPoly gp_bracket(const GPPoly& f, const GPPoly& g);

// A commutative word [u]: the sorted multiset of variables of u.
using CommWord = std::vector<Variable>;

// Element of Z+[X*]: a multiset of commutative words, kept sorted.
struct Weight {
	std::vector<CommWord> parts;

	std::string str() const;
	friend auto operator<=>(const Weight&, const Weight&) = default;
	friend bool operator==(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& a, const Weight& b);

Weight weight(const GPMonomial& m);

// f split by weight, in weight order; the components sum to f.
std::vector<std::pair<Weight, GPPoly>> fine_components(const GPPoly& f);

struct Supports {
	std::set<Variable> variables;
	std::set<Word> words;
};

Supports supports(const GPPoly& f);

// Sorted variables of f.
std::vector<Variable> support_variables(const GPPoly& f);

std::string to_string(const GPPoly& f);

} // namespace freegp
