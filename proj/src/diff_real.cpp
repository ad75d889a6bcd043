#include "freegp/diff_real.hpp"

#include "freegp/error.hpp"
#include "freegp/homomorphism.hpp"
#include "freegp/identities.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace freegp {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFunc::normalize()
{
	if (den_.is_zero())
		throw DomainError("rational function with zero denominator");
	if (num_.is_zero()) {
		den_ = mp_constant(1);
		return;
	}
	// Monic denominator: folds constant denominators and fixes the sign.
	const Rational lead = mp_leading(den_).second;
	if (lead != 1) {
		const Rational inv = 1 / lead;
		num_ *= inv;
		den_ *= inv;
	}
}

RatFunc RatFunc::reduced() const
{
	if (mp_is_constant(den_))
		return *this;
	if (auto q = mp_divide_exact(num_, den_))
		return RatFunc(std::move(*q));
	return *this;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b)
{
	if (a.den_ == b.den_)
		return RatFunc(a.num_ + b.num_, a.den_);
	return RatFunc(mp_mul(a.num_, b.den_) + mp_mul(b.num_, a.den_), mp_mul(a.den_, b.den_));
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b)
{
	if (a.is_zero() || b.is_zero())
		return RatFunc(Rational(0));
	return RatFunc(mp_mul(a.num_, b.num_), mp_mul(a.den_, b.den_));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b)
{
	if (b.is_zero())
		throw DomainError("division by zero rational function");
	return RatFunc(mp_mul(a.num_, b.den_), mp_mul(a.den_, b.num_));
}

bool operator==(const RatFunc& a, const RatFunc& b)
{
	return mp_mul(a.num_, b.den_) == mp_mul(b.num_, a.den_);
}

std::string RatFunc::str() const
{
	const RatFunc r = reduced();
	const std::string num = to_string(r.num_);
	if (mp_is_constant(r.den_))
		return num;
	const bool num_atomic = r.num_.size() == 1;
	const bool den_atomic = r.den_.size() == 1 && r.den_.begin()->second == 1;
	return (num_atomic ? num : "(" + num + ")") + "/" +
	       (den_atomic ? to_string(r.den_) : "(" + to_string(r.den_) + ")");
}

RatFunc derivative(const RatFunc& r, const Variable& v)
{
	const MultiPoly dn = mp_derivative(r.numerator(), v);
	if (mp_is_constant(r.denominator()))
		return RatFunc(dn, r.denominator());
	const MultiPoly dd = mp_derivative(r.denominator(), v);
	if (dd.is_zero())
		return RatFunc(dn, r.denominator());
	return RatFunc(mp_mul(dn, r.denominator()) - mp_mul(r.numerator(), dd), mp_mul(r.denominator(), r.denominator()));
}

std::vector<Variable> variables_of(const RatFunc& r)
{
	std::set<Variable> vars;
	for (const MultiPoly* p : {&r.numerator(), &r.denominator()})
		for (const auto& [pp, c] : *p)
			for (const auto& [v, e] : pp.powers)
				vars.insert(v);
	return {vars.begin(), vars.end()};
}

std::string to_string(Model m) { return m == Model::poisson ? "poisson" : "gps"; }

Model parse_model(const std::string& name)
{
	if (name == "poisson")
		return Model::poisson;
	if (name == "gps")
		return Model::gps;
	throw DomainError("unknown model '" + name + "' (expected poisson or gps)");
}

Realization::Realization(Model model, unsigned n) : model_(model), n_(n)
{
	if (n == 0)
		throw DomainError("realization size n must be positive");
	for (unsigned i = 1; i <= n; ++i)
		vars_.push_back(x(i));
	for (unsigned i = 1; i <= n; ++i)
		vars_.push_back(y(i));
}

bool Realization::declares(const Variable& v) const
{
	return (v.name() == "x" || v.name() == "y") && v.index() >= 1 && v.index() <= n_;
}

void Realization::check(const RatFunc& r) const
{
	for (const auto& v : variables_of(r))
		if (!declares(v))
			throw DomainError("unknown variable " + v.str() + " for " + to_string(model_) + " with n = " +
			                  std::to_string(n_));
}

RatFunc Realization::partial(const RatFunc& r, const Variable& v) const
{
	if (!declares(v))
		throw DomainError("unknown variable " + v.str() + " for " + to_string(model_) + " with n = " +
		                  std::to_string(n_));
	return derivative(r, v);
}

RatFunc Realization::first(const RatFunc& r, unsigned i) const
{
	RatFunc d = derivative(r, x(i));
	if (model_ == Model::poisson || d.is_zero())
		return d;
	return RatFunc::variable(y(i < n_ ? i + 1 : 1)) * d;
}

RatFunc Realization::second(const RatFunc& r, unsigned i) const { return derivative(r, y(i)); }

RatFunc Realization::bracket(const RatFunc& a, const RatFunc& b) const
{
	RatFunc sum(Rational(0));
	for (unsigned i = 1; i <= n_; ++i) {
		const RatFunc fa = first(a, i), fb = first(b, i);
		if (!fa.is_zero()) {
			const RatFunc sb = second(b, i);
			if (!sb.is_zero())
				sum = sum + fa * sb;
		}
		if (!fb.is_zero()) {
			const RatFunc sa = second(a, i);
			if (!sa.is_zero())
				sum = sum - fb * sa;
		}
	}
	return sum;
}

RatFunc partial_derivative(const RatFunc& r, const Variable& v, const Realization& R) { return R.partial(r, v); }

RatFunc realized_bracket(const RatFunc& a, const RatFunc& b, const Realization& R) { return R.bracket(a, b); }

namespace {

struct FieldAlgebra {
	using Value = RatFunc;
	const Realization* R;
	Value constant(const Rational& c) const { return RatFunc(c); }
	Value add(const Value& a, const Value& b) const { return a + b; }
	Value scale(const Value& a, const Rational& c) const { return a * RatFunc(c); }
	Value mul(const Value& a, const Value& b) const { return a * b; }
	Value bracket(const Value& a, const Value& b) const { return R->bracket(a, b); }
};

} // namespace

RatFunc evaluate_gp(const GPPoly& f, const Assignment& assignment, const Realization& R)
{
	for (const auto& v : support_variables(f))
		if (!assignment.contains(v))
			throw DomainError("assignment does not cover variable " + v.str());
	for (const auto& [v, r] : assignment)
		R.check(r);
	auto assign = [&](const Variable& v) -> const RatFunc* {
		auto it = assignment.find(v);
		return it == assignment.end() ? nullptr : &it->second;
	};
	return evaluate(f, assign, FieldAlgebra{&R});
}

namespace {

struct Staggered {
	Assignment assignment;
	unsigned needed_m = 0;
};

std::optional<Staggered> staggered_assignment(const GPMonomial& mono)
{
	if (mono.factors.empty())
		return std::nullopt;
	Staggered s;
	unsigned k = 1;
	for (Word u : mono.factors) {
		auto leaf = [](Word w) { return w.variable(); };
		if (u.degree() == 2) {
			s.assignment[leaf(u.right())] = RatFunc::variable(Variable("y", k));
			s.assignment[leaf(u.left())] = RatFunc::variable(Variable("x", k));
			s.needed_m = k + 1;
			k += 2;
		} else if (u.degree() == 3 && u.left().is_leaf()) {
			// {a, {b, c}}
			s.assignment[leaf(u.right().right())] = RatFunc::variable(Variable("y", k));
			s.assignment[leaf(u.right().left())] = RatFunc::variable(Variable("x", k));
			s.assignment[leaf(u.left())] = RatFunc::variable(Variable("x", k + 1));
			s.needed_m = k + 2;
			k += 3;
		} else {
			return std::nullopt;
		}
	}
	return s;
}

} // namespace

unsigned structured_witness_min_m(const GPMonomial& m)
{
	auto s = staggered_assignment(m);
	if (!s)
		throw DomainError("monomial " + m.str() + " is not a product of words of degree 2 or 3");
	return s->needed_m;
}

std::optional<Witness> structured_witness(const GPPoly& f, unsigned m)
{
	if (f.is_zero() || !is_polylinear(f))
		return std::nullopt;
	std::optional<unsigned> smallest_need;
	bool fitted = false;
	for (const auto& [w, component] : fine_components(f)) {
		for (const auto& [mono, c] : component) {
			auto s = staggered_assignment(mono);
			if (!s)
				continue;
			if (s->needed_m > m) {
				smallest_need = std::min(smallest_need.value_or(s->needed_m), s->needed_m);
				continue;
			}
			fitted = true;
			const Realization R(Model::gps, m);
			RatFunc value = evaluate_gp(f, s->assignment, R);
			if (!value.is_zero())
				return Witness{std::move(s->assignment), std::move(value), "structured", 1};
		}
	}
	if (!fitted && smallest_need)
		throw DomainError("m too small: the structured assignment needs m >= " + std::to_string(*smallest_need));
	return std::nullopt;
}

namespace {

RatFunc random_polynomial(std::mt19937_64& rng, const std::vector<Variable>& vars)
{
	MultiPoly p;
	const unsigned terms = 1 + static_cast<unsigned>(rng() % 3);
	for (unsigned t = 0; t < terms; ++t) {
		const int coeff = static_cast<int>(rng() % 5) - 2;
		const unsigned degree = static_cast<unsigned>(rng() % 3);
		MultiPoly mono = mp_constant(coeff);
		for (unsigned d = 0; d < degree; ++d)
			mono = mp_mul(mono, mp_variable(vars[rng() % vars.size()]));
		p += mono;
	}
	return RatFunc(p);
}

} // namespace

std::optional<Witness> identity_witness_search(const GPPoly& f, const Realization& R, const SearchOptions& opts)
{
	const auto vars = support_variables(f);
	if (vars.empty()) {
		if (f.is_zero())
			return std::nullopt;
		return Witness{{}, evaluate_gp(f, {}, R), "constant", 0};
	}
	if (R.model() == Model::gps) {
		try {
			if (auto w = structured_witness(f, R.n()))
				return w;
		} catch (const DomainError&) {
			// m too small for the structured scheme; fall back to random search
		}
	}
	std::mt19937_64 rng(opts.seed);
	for (unsigned attempt = 1; attempt <= opts.budget; ++attempt) {
		Assignment a;
		for (const auto& v : vars)
			a[v] = random_polynomial(rng, R.variables());
		RatFunc value = evaluate_gp(f, a, R);
		if (!value.is_zero())
			return Witness{std::move(a), std::move(value), "random", attempt};
	}
	return std::nullopt;
}

} // namespace freegp
