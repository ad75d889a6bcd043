#pragma once

// Rational-function fields k(x1, y1, ..., xn, yn) with partial derivatives,
// and their generic Poisson structures:
//
//   poisson: {a,b} = Σ ∂_{x_i}a ∂_{y_i}b − ∂_{x_i}b ∂_{y_i}a
//   gps:     {a,b} = Σ ξ_i(a) ξ'_i(b) − ξ_i(b) ξ'_i(a),
//            ξ_i = y_{i+1} ∂_{x_i} (i < n), ξ_n = y_1 ∂_{x_n}, ξ'_i = ∂_{y_i}
//
// The first is Poisson; the second satisfies Leibniz and anti-commutativity
// but not Jacobi.

#include "freegp/gp_core.hpp"
#include "freegp/multipoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace freegp {

// num / den, kept unreduced except for cheap normalizations (constant
// denominators folded, content removed, denominator leading coefficient
// positive). Equality is by cross-multiplication.
class RatFunc {
public:
	RatFunc() = default;
	RatFunc(const Rational& c) : num_(mp_constant(c)), den_(mp_constant(1)) {} // NOLINT(implicit)
	RatFunc(MultiPoly num) : num_(std::move(num)), den_(mp_constant(1)) {}    // NOLINT(implicit)
	RatFunc(MultiPoly num, MultiPoly den);

	static RatFunc variable(const Variable& v) { return RatFunc(mp_variable(v)); }

	const MultiPoly& numerator() const noexcept { return num_; }
	const MultiPoly& denominator() const noexcept { return den_; }

	bool is_zero() const noexcept { return num_.is_zero(); }

	// Cancels the denominator when it divides the numerator exactly.
	RatFunc reduced() const;

	friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
	friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
	friend RatFunc operator-(const RatFunc& a);
	friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
	friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
	friend bool operator==(const RatFunc& a, const RatFunc& b);

	std::string str() const;

private:
	void normalize();

	MultiPoly num_;
	MultiPoly den_ = mp_constant(1);
};

// Quotient rule.
RatFunc derivative(const RatFunc& r, const Variable& v);

// Variables of r (numerator and denominator), sorted.
std::vector<Variable> variables_of(const RatFunc& r);

enum class Model { poisson, gps };

std::string to_string(Model m);
Model parse_model(const std::string& name);

class Realization {
public:
	Realization(Model model, unsigned n);

	Model model() const noexcept { return model_; }
	unsigned n() const noexcept { return n_; }

	// x1..xn, y1..yn
	const std::vector<Variable>& variables() const noexcept { return vars_; }
	bool declares(const Variable& v) const;
	Variable x(unsigned i) const { return Variable("x", i); }
	Variable y(unsigned i) const { return Variable("y", i); }

	// Throws DomainError when v is not declared.
	RatFunc partial(const RatFunc& r, const Variable& v) const;

	// ∂_i or ξ_i (first slot of pair i), 1-based.
	RatFunc first(const RatFunc& r, unsigned i) const;
	// ∂'_i = ξ'_i
	RatFunc second(const RatFunc& r, unsigned i) const;

	RatFunc bracket(const RatFunc& a, const RatFunc& b) const;

	// Throws DomainError when r mentions an undeclared variable.
	void check(const RatFunc& r) const;

private:
	Model model_;
	unsigned n_;
	std::vector<Variable> vars_;
};

RatFunc partial_derivative(const RatFunc& r, const Variable& v, const Realization& R);
RatFunc realized_bracket(const RatFunc& a, const RatFunc& b, const Realization& R);

using Assignment = std::map<Variable, RatFunc>;

// Image of f under the homomorphism GP -> (field, realized bracket) that
// extends the assignment. Throws DomainError for uncovered variables.
RatFunc evaluate_gp(const GPPoly& f, const Assignment& assignment, const Realization& R);

struct Witness {
	Assignment assignment;
	RatFunc value;
	std::string method; // "structured", "random" or "constant"
	unsigned attempts = 0;
};

// Staggered assignment for a summand α u_1⋯u_l of f whose factors all have
// degree 2 or 3: block i starting at k_i assigns
//   {a, b}      : b -> y_k, a -> x_k                (value y_{k+1})
//   {a, {b, c}} : c -> y_k, b -> x_k, a -> x_{k+1}  (value y_{k+2})
// with k_1 = 1 and k_{i+1} = k_i + m_i + 1, so the summand maps to
// α·y_{k_1+m_1}⋯y_{k_l+m_l}, evaluated in gps(m). Candidate summands are
// tried in term order within each fine component; the first assignment with
// a nonzero value of f is returned.
//
// Throws DomainError when m is smaller than every candidate needs (the
// message names the smallest sufficient m). Returns nullopt when f is not
// polylinear, has no such summand, or every candidate evaluates to zero.
std::optional<Witness> structured_witness(const GPPoly& f, unsigned m);

// Smallest m for which structured_witness can assign the given monomial.
unsigned structured_witness_min_m(const GPMonomial& m);

struct SearchOptions {
	unsigned budget = 200;
	std::uint64_t seed = 0;
};

// Tries structured_witness (gps only), then up to budget random assignments
// of polynomials with coefficients in {-2..2} and degree <= 2 in the field's
// variables. nullopt means no witness was found (inconclusive).
std::optional<Witness> identity_witness_search(const GPPoly& f, const Realization& R, const SearchOptions& opts);

} // namespace freegp
