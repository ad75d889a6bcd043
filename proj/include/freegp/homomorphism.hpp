#pragma once

#include "freegp/error.hpp"
#include "freegp/gp_core.hpp"

#include <concepts>
#include <unordered_map>

namespace freegp {

// A commutative algebra with a bracket: the target of a GP homomorphism.
template <class A>
concept BracketAlgebra = requires(const A& alg, const typename A::Value& a, const Rational& c) {
	{ alg.constant(c) } -> std::convertible_to<typename A::Value>;
	{ alg.add(a, a) } -> std::convertible_to<typename A::Value>;
	{ alg.scale(a, c) } -> std::convertible_to<typename A::Value>;
	{ alg.mul(a, a) } -> std::convertible_to<typename A::Value>;
	{ alg.bracket(a, a) } -> std::convertible_to<typename A::Value>;
};

// Image of f under the unique homomorphism of generic Poisson algebras that
// sends each variable v to assign(v). assign returns a pointer to the image,
// or nullptr when v is not covered.
template <BracketAlgebra A, class Assign>
typename A::Value evaluate(const GPPoly& f, Assign&& assign, const A& alg)
{
	using Value = typename A::Value;
	std::unordered_map<Word, Value> memo;
	auto word_value = [&](auto&& self, Word w) -> Value {
		if (auto it = memo.find(w); it != memo.end())
			return it->second;
		Value v;
		if (w.is_leaf()) {
			const Value* image = assign(w.variable());
			if (!image)
				throw DomainError("assignment does not cover variable " + w.variable().str());
			v = *image;
		} else {
			v = alg.bracket(self(self, w.left()), self(self, w.right()));
		}
		return memo.emplace(w, std::move(v)).first->second;
	};
	Value total = alg.constant(0);
	for (const auto& [m, c] : f) {
		Value term = alg.constant(c);
		for (Word u : m.factors)
			term = alg.mul(term, word_value(word_value, u));
		total = alg.add(total, term);
	}
	return total;
}

} // namespace freegp
