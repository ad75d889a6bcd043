#pragma once

// Free anti-commutative algebra AC(X).
//
// Elements are combinations of normal words: a word is normal when it is a
// variable, or a bracket {l, r} of normal words with l strictly before r in
// the default word order. Normal words form a linear basis of AC(X), so an
// ACPoly is canonical.

#include "freegp/combination.hpp"
#include "freegp/variable.hpp"
#include "freegp/word.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace freegp {

using ACPoly = Combination<Word>;

struct SignedWord {
	int sign; // +1 or -1
	Word word;
};

bool is_normal(Word w);

// Normal form of a single word: ±u with u normal, or nullopt when the word is
// zero in AC(X) (some subword {a, a}).
std::optional<SignedWord> normal_form(Word w);

ACPoly normalize_word(Word w);
// Re-canonicalizes a combination whose keys may be arbitrary words.
ACPoly normalize(const ACPoly& f);

ACPoly ac_variable(const Variable& v);
ACPoly ac_bracket(const ACPoly& f, const ACPoly& g);

// Sorted distinct variables of f.
std::vector<Variable> ac_support(const ACPoly& f);

// Number of brackets enclosing the single occurrence of x in w, i.e. the k of
// the representation w = ±{u_1, {u_2, ... {u_k, x}...}}.
// Throws DomainError when x is absent or repeated.
unsigned height(Word w, const Variable& x);

// sign · ad u_1 ⋯ ad u_k applied to argument.
struct OperatorWord {
	int sign = 1;
	std::vector<Word> factors;
	Variable argument;
};

// Representation of the normal word u (where normalize_word(w) = ±u) as
// sign · {u_1, {u_2, ... {u_k, x}...}} with each u_j normal and free of x.
// Throws DomainError when x is absent or repeated, or when w is zero.
OperatorWord i_normal_form(Word w, const Variable& x);

// Re-expands an operator word into AC(X).
ACPoly expand(const OperatorWord& op);

// x-flip: W(x) -> -W*(x), where (u_1⋯u_k)* = (-1)^k u_k⋯u_1.
// Every monomial of f must be linear in x.
ACPoly flip(const ACPoly& f, const Variable& x);

struct ACPolyLess {
	bool operator()(const ACPoly& a, const ACPoly& b) const { return a.terms() < b.terms(); }
};

struct FlipOrbit {
	std::set<ACPoly, ACPolyLess> elements;
	bool truncated = false;
};

// Closure of {f} under the flips in every variable of f. Stops once
// max_size elements have been collected and reports truncation.
FlipOrbit flip_orbit(const ACPoly& f, std::size_t max_size);

// All normal words containing each of vars exactly once, in word order.
// Throws DomainError on duplicates or an empty variable list.
std::vector<Word> enumerate_polylinear_basis(std::span<const Variable> vars);

// {x_1, {x_2, ... {x_{n-1}, x_n}...}} as a raw word.
Word right_nested(std::span<const Variable> vars);

std::string to_string(const ACPoly& f);

} // namespace freegp
