#pragma once

// Derivation differences, Jacobian polynomials and their classification,
// linearization, Farkas-height reduction and product decomposition of
// Jacobian GP-polynomials.

#include "freegp/ac_core.hpp"
#include "freegp/assoc.hpp"
#include "freegp/gp_core.hpp"

#include <map>
#include <string>
#include <vector>

namespace freegp {

// Simultaneous substitution v -> images[v]; variables without an image are
// left unchanged.
GPPoly substitute(const GPPoly& f, const std::map<Variable, GPPoly>& images);

// Every monomial contains every variable of supp(f) exactly once.
bool is_polylinear(const GPPoly& f);

// Variable with the same name class as like and an index above every index
// of that class in f, shifted by offset (0 = first free index).
Variable fresh_variable(const GPPoly& f, const Variable& like, unsigned offset = 0);

// D(f, x; y, z) = f|x→yz − y·f|x→z − z·f|x→y.
// Throws DomainError unless every monomial of f is linear in x.
GPPoly derivation_difference(const GPPoly& f, const Variable& x, const Variable& y, const Variable& z);

bool is_derivation_in(const GPPoly& f, const Variable& x);

// Derivation in every variable of supp(f). Throws DomainError if f is not
// polylinear.
bool is_jacobian(const GPPoly& f);

// The operator W ∈ As(U_x) with f = W(x); f must be linear in x.
AssocPoly operator_of(const ACPoly& f, const Variable& x);

// C₂(a, b) = {a, b}
ACPoly c2(const Variable& a, const Variable& b);
// J₃(a, b, c) = {{a,b},c} + {{b,c},a} + {{c,a},b}
ACPoly j3(const Variable& a, const Variable& b, const Variable& c);

struct JacobianSpace {
	unsigned n = 0;
	std::size_t ambient_dimension = 0; // (2n-3)!!
	std::vector<ACPoly> basis;
};

// Basis of the Jacobian polylinear AC-polynomials in x1..xn, computed as the
// exact nullspace of the derivation-difference conditions over the
// polylinear normal-word basis.
JacobianSpace jacobian_space(unsigned n, unsigned max_n = 6);

// Full polarization without the 1/d! factor: a variable of degree d is
// replaced by itself and d−1 fresh copies (next free indices in its name
// class) and the multilinear part is kept. f must have constant degree in
// each variable across its monomials.
GPPoly linearize(const GPPoly& f);

// Repeatedly sets a variable occurring as a bare factor to 1.
GPPoly remove_bare_factors(const GPPoly& f);

struct FarkasHeight {
	std::map<Variable, unsigned> per_variable;
	Integer total; // Σ 3^{FH_i}

	friend bool operator==(const FarkasHeight&, const FarkasHeight&) = default;
};

// f polylinear and free of bare-variable factors.
FarkasHeight farkas_height(const GPPoly& f);

struct ReductionStep {
	Variable variable;
	Variable fresh;
	FarkasHeight before;
	FarkasHeight after;
};

struct Reduction {
	GPPoly result;
	std::vector<ReductionStep> steps;
};

// Replaces f by D(f, x; x, fresh) for the smallest variable x in which f is
// not a derivation until f is Jacobian. The Farkas height strictly decreases
// at every step; a violation throws std::logic_error.
Reduction jacobian_reduce(const GPPoly& f);

struct ProductTerm {
	Rational coefficient;
	// Blocks of size 2 (C₂) or 3 (J₃), variables sorted within each block.
	std::vector<std::vector<Variable>> blocks;
	GPPoly product;
};

struct Decomposition {
	bool ok = false;
	std::string diagnosis;
	std::vector<ProductTerm> terms;
};

// Expresses a Jacobian polylinear f as a combination of products of C₂ and
// J₃ instances over set partitions of supp(f) into blocks of sizes 2 and 3.
// Throws DomainError unless f is Jacobian.
Decomposition jacobian_product_decompose(const GPPoly& f);

// Some monomial of f is a nonempty product of words of degree 2 or 3.
bool has_two_three_summand(const GPPoly& f);

std::string to_string(const FarkasHeight& fh);

} // namespace freegp
