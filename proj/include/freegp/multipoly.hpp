#pragma once

#include "freegp/combination.hpp"
#include "freegp/variable.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace freegp {

// Commutative monomial: (variable, exponent) pairs, variables strictly
// increasing, exponents positive. Empty = 1.
struct PowerProduct {
	std::vector<std::pair<Variable, unsigned>> powers;

	unsigned degree() const noexcept;
	unsigned exponent(const Variable& v) const noexcept;
	std::string str() const;

	friend bool operator==(const PowerProduct&, const PowerProduct&) = default;
};

PowerProduct operator*(const PowerProduct& a, const PowerProduct& b);
// a / b when b divides a.
std::optional<PowerProduct> divide(const PowerProduct& a, const PowerProduct& b);

// Graded lexicographic order (x1 > x2 > ... within a degree).
struct GrlexLess {
	bool operator()(const PowerProduct& a, const PowerProduct& b) const noexcept;
};

using MultiPoly = Combination<PowerProduct, GrlexLess>;

MultiPoly mp_constant(const Rational& c);
MultiPoly mp_variable(const Variable& v);
MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_derivative(const MultiPoly& a, const Variable& v);
MultiPoly mp_pow(const MultiPoly& a, unsigned e);

bool mp_is_constant(const MultiPoly& a);
// Largest term under GrlexLess; a must be nonzero.
const std::pair<const PowerProduct, Rational>& mp_leading(const MultiPoly& a);

// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<MultiPoly> mp_divide_exact(const MultiPoly& a, const MultiPoly& b);

std::string to_string(const MultiPoly& a);

} // namespace freegp
