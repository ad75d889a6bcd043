#include "freegp/identities.hpp"

#include "freegp/error.hpp"
#include "freegp/homomorphism.hpp"
#include "freegp/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace freegp {

namespace {

struct GPAlgebra {
	using Value = GPPoly;
	Value constant(const Rational& c) const { return gp_constant(c); }
	Value add(const Value& a, const Value& b) const { return a + b; }
	Value scale(const Value& a, const Rational& c) const { return a * c; }
	Value mul(const Value& a, const Value& b) const { return gp_mul(a, b); }
	Value bracket(const Value& a, const Value& b) const { return gp_bracket(a, b); }
};

} // namespace

GPPoly substitute(const GPPoly& f, const std::map<Variable, GPPoly>& images)
{
	std::map<Variable, GPPoly> identity;
	auto assign = [&](const Variable& v) -> const GPPoly* {
		if (auto it = images.find(v); it != images.end())
			return &it->second;
		auto [it, inserted] = identity.try_emplace(v);
		if (inserted)
			it->second = gp_variable(v);
		return &it->second;
	};
	return evaluate(f, assign, GPAlgebra{});
}

bool is_polylinear(const GPPoly& f)
{
	const auto vars = support_variables(f);
	for (const auto& [m, c] : f)
		for (const auto& v : vars)
			if (m.count(v) != 1)
				return false;
	return true;
}

Variable fresh_variable(const GPPoly& f, const Variable& like, unsigned offset)
{
	std::uint32_t top = like.index();
	for (const auto& v : support_variables(f))
		if (v.name() == like.name())
			top = std::max(top, v.index());
	return Variable(like.name(), top + 1 + offset);
}

GPPoly derivation_difference(const GPPoly& f, const Variable& x, const Variable& y, const Variable& z)
{
	for (const auto& [m, c] : f)
		if (m.count(x) != 1)
			throw DomainError("derivation_difference: " + (m.factors.empty() ? std::string("1") : m.str()) +
			                  " is not linear in " + x.str());
	const GPPoly gy = gp_variable(y), gz = gp_variable(z);
	GPPoly d = substitute(f, {{x, gp_mul(gy, gz)}});
	d -= gp_mul(gy, substitute(f, {{x, gz}}));
	d -= gp_mul(gz, substitute(f, {{x, gy}}));
	return d;
}

bool is_derivation_in(const GPPoly& f, const Variable& x)
{
	const Variable y = fresh_variable(f, x, 0);
	const Variable z = fresh_variable(f, x, 1);
	return derivation_difference(f, x, y, z).is_zero();
}

bool is_jacobian(const GPPoly& f)
{
	if (!is_polylinear(f))
		throw DomainError("is_jacobian: input is not polylinear");
	for (const auto& v : support_variables(f))
		if (!is_derivation_in(f, v))
			return false;
	return true;
}

AssocPoly operator_of(const ACPoly& f, const Variable& x)
{
	AssocPoly W;
	for (const auto& [u, c] : f) {
		const OperatorWord op = i_normal_form(u, x);
		W.add(op.factors, op.sign * c);
	}
	return W;
}

ACPoly c2(const Variable& a, const Variable& b) { return ac_bracket(ac_variable(a), ac_variable(b)); }

ACPoly j3(const Variable& a, const Variable& b, const Variable& c)
{
	const ACPoly A = ac_variable(a), B = ac_variable(b), C = ac_variable(c);
	return ac_bracket(ac_bracket(A, B), C) + ac_bracket(ac_bracket(B, C), A) + ac_bracket(ac_bracket(C, A), B);
}

JacobianSpace jacobian_space(unsigned n, unsigned max_n)
{
	if (n < 2)
		throw DomainError("jacobian_space: n must be at least 2");
	if (n > max_n)
		throw DomainError("jacobian_space: n = " + std::to_string(n) + " exceeds the bound " + std::to_string(max_n));

	std::vector<Variable> vars;
	for (unsigned i = 1; i <= n; ++i)
		vars.emplace_back("x", i);
	const std::vector<Word> words = enumerate_polylinear_basis(vars);
	const Variable y("x", n + 1), z("x", n + 2);

	EchelonForm system(words.size());
	for (const auto& x : vars) {
		std::map<GPMonomial, SparseRow, GPMonomialLess> rows;
		for (std::size_t j = 0; j < words.size(); ++j) {
			const GPPoly d = derivation_difference(GPPoly(GPMonomial{{words[j]}}), x, y, z);
			for (const auto& [m, c] : d)
				rows[m].emplace_back(j, c);
		}
		for (auto& [m, row] : rows)
			system.add_row(std::move(row));
	}

	JacobianSpace space;
	space.n = n;
	space.ambient_dimension = words.size();
	for (const auto& v : system.nullspace()) {
		ACPoly f;
		for (std::size_t j = 0; j < words.size(); ++j)
			f.add(words[j], v[j]);
		space.basis.push_back(std::move(f));
	}
	return space;
}

namespace {

Word relabel(Word w, const Variable& v, const std::vector<Variable>& labels, std::size_t& next)
{
	if (w.is_leaf())
		return w.variable() == v ? Word::leaf(labels[next++]) : w;
	if (!w.contains(v))
		return w;
	Word l = relabel(w.left(), v, labels, next);
	Word r = relabel(w.right(), v, labels, next);
	return Word::bracket(l, r);
}

// Multilinear part of f with v replaced by copies[0] + ... + copies[d-1].
GPPoly polarize(const GPPoly& f, const Variable& v, const std::vector<Variable>& copies)
{
	const std::size_t d = copies.size();
	GPPoly out;
	for (const auto& [m, c] : f) {
		std::vector<std::size_t> perm(d);
		std::iota(perm.begin(), perm.end(), 0);
		do {
			std::vector<Variable> labels;
			labels.reserve(d);
			for (std::size_t i : perm)
				labels.push_back(copies[i]);
			std::size_t next = 0;
			GPMonomial image;
			int sign = 1;
			bool zero = false;
			for (Word u : m.factors) {
				auto nf = normal_form(relabel(u, v, labels, next));
				if (!nf) {
					zero = true;
					break;
				}
				sign *= nf->sign;
				image.factors.push_back(nf->word);
			}
			if (zero)
				continue;
			std::sort(image.factors.begin(), image.factors.end());
			out.add(image, sign * c);
		} while (std::next_permutation(perm.begin(), perm.end()));
	}
	return out;
}

} // namespace

GPPoly linearize(const GPPoly& f)
{
	const auto vars = support_variables(f);
	std::map<std::string, std::uint32_t> next_index;
	for (const auto& v : vars)
		next_index[v.name()] = std::max(next_index[v.name()], v.index() + 1);

	GPPoly out = f;
	for (const auto& v : vars) {
		unsigned degree = 0;
		bool first = true;
		for (const auto& [m, c] : f) {
			const unsigned k = m.count(v);
			if (first)
				degree = k;
			else if (k != degree)
				throw DomainError("linearize: input is not homogeneous in " + v.str() +
				                  "; split it into homogeneous components first");
			first = false;
		}
		if (degree < 2)
			continue;
		std::vector<Variable> copies{v};
		for (unsigned i = 1; i < degree; ++i)
			copies.emplace_back(v.name(), next_index[v.name()]++);
		out = polarize(out, v, copies);
	}
	return out;
}

GPPoly remove_bare_factors(const GPPoly& f)
{
	GPPoly g = f;
	for (;;) {
		std::optional<Variable> bare;
		for (const auto& [m, c] : g)
			for (Word u : m.factors)
				if (u.is_leaf() && (!bare || u.variable() < *bare))
					bare = u.variable();
		if (!bare)
			return g;
		g = substitute(g, {{*bare, gp_one()}});
	}
}

FarkasHeight farkas_height(const GPPoly& f)
{
	if (!is_polylinear(f))
		throw DomainError("farkas_height: input is not polylinear");
	FarkasHeight fh;
	fh.total = 0;
	for (const auto& [m, c] : f)
		for (Word u : m.factors) {
			if (u.is_leaf())
				throw DomainError("farkas_height: bare variable factor " + u.str() +
				                  "; substitute 1 for it first (remove_bare_factors)");
			for (const auto& v : u.content()) {
				unsigned& h = fh.per_variable[v];
				h = std::max(h, u.degree());
			}
		}
	for (const auto& [v, h] : fh.per_variable) {
		Integer p;
		mpz_ui_pow_ui(p.get_mpz_t(), 3, h);
		fh.total += p;
	}
	return fh;
}

Reduction jacobian_reduce(const GPPoly& f)
{
	if (f.is_zero())
		throw DomainError("jacobian_reduce: input is zero");
	Reduction red;
	red.result = f;
	FarkasHeight fh = farkas_height(f);
	for (;;) {
		bool progressed = false;
		for (const auto& x : support_variables(red.result)) {
			const Variable fresh = fresh_variable(red.result, x);
			// D(f, x; x, fresh) vanishes iff D(f, x; y, z) does for fresh y, z:
			// renaming y -> x is injective on the x-free image.
			GPPoly d = derivation_difference(red.result, x, x, fresh);
			if (d.is_zero())
				continue;
			FarkasHeight next = farkas_height(d);
			if (next.total >= fh.total)
				throw std::logic_error("jacobian_reduce: Farkas height did not decrease");
			red.steps.push_back({x, fresh, fh, next});
			red.result = std::move(d);
			fh = std::move(next);
			progressed = true;
			break;
		}
		if (!progressed)
			return red;
	}
}

namespace {

void partitions(std::vector<Variable> rest, std::vector<std::vector<Variable>>& current,
                std::vector<std::vector<std::vector<Variable>>>& out)
{
	if (rest.empty()) {
		out.push_back(current);
		return;
	}
	const Variable head = rest.front();
	for (std::size_t i = 1; i < rest.size(); ++i) {
		std::vector<Variable> remaining;
		for (std::size_t k = 1; k < rest.size(); ++k)
			if (k != i)
				remaining.push_back(rest[k]);
		current.push_back({head, rest[i]});
		partitions(remaining, current, out);
		current.pop_back();
		for (std::size_t j = i + 1; j < rest.size(); ++j) {
			std::vector<Variable> remaining3;
			for (std::size_t k = 1; k < rest.size(); ++k)
				if (k != i && k != j)
					remaining3.push_back(rest[k]);
			current.push_back({head, rest[i], rest[j]});
			partitions(remaining3, current, out);
			current.pop_back();
		}
	}
}

} // namespace

Decomposition jacobian_product_decompose(const GPPoly& f)
{
	if (!is_jacobian(f))
		throw DomainError("jacobian_product_decompose: input is not a Jacobian GP-polynomial");
	Decomposition dec;
	const auto vars = support_variables(f);
	if (vars.empty()) {
		dec.ok = true;
		if (!f.is_zero())
			dec.terms.push_back({f.coefficient(GPMonomial{}), {}, gp_one()});
		return dec;
	}
	if (vars.size() == 1) {
		dec.diagnosis = "support of size 1 is not a sum of blocks of sizes 2 and 3";
		return dec;
	}

	std::vector<std::vector<std::vector<Variable>>> parts;
	std::vector<std::vector<Variable>> current;
	partitions(vars, current, parts);

	std::vector<GPPoly> products;
	for (const auto& p : parts) {
		GPPoly prod = gp_one();
		for (const auto& b : p)
			prod = gp_mul(prod, gp_from_ac(b.size() == 2 ? c2(b[0], b[1]) : j3(b[0], b[1], b[2])));
		products.push_back(std::move(prod));
	}

	std::map<GPMonomial, std::size_t, GPMonomialLess> row_of;
	std::vector<SparseRow> rows;
	std::vector<Rational> rhs;
	auto row_index = [&](const GPMonomial& m) {
		auto [it, inserted] = row_of.try_emplace(m, rows.size());
		if (inserted) {
			rows.emplace_back();
			rhs.emplace_back(0);
		}
		return it->second;
	};
	for (std::size_t j = 0; j < products.size(); ++j)
		for (const auto& [m, c] : products[j])
			rows[row_index(m)].emplace_back(j, c);
	for (const auto& [m, c] : f)
		rhs[row_index(m)] = c;

	auto x = solve(products.size(), rows, rhs);
	if (!x) {
		dec.diagnosis = "f is not in the span of products of C2 and J3 instances";
		return dec;
	}
	dec.ok = true;
	for (std::size_t j = 0; j < products.size(); ++j)
		if (!is_zero((*x)[j]))
			dec.terms.push_back({(*x)[j], parts[j], products[j]});
	return dec;
}

bool has_two_three_summand(const GPPoly& f)
{
	return std::any_of(f.begin(), f.end(), [](const auto& t) {
		const auto& fs = t.first.factors;
		return !fs.empty() &&
		       std::all_of(fs.begin(), fs.end(), [](Word u) { return u.degree() == 2 || u.degree() == 3; });
	});
}

std::string to_string(const FarkasHeight& fh)
{
	std::string out;
	for (const auto& [v, h] : fh.per_variable)
		out += "FH(" + v.str() + ") = " + std::to_string(h) + "\n";
	out += "FH = " + fh.total.get_str();
	return out;
}

} // namespace freegp
