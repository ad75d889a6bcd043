#include "freegp/multipoly.hpp"

#include "freegp/error.hpp"
#include "freegp/printing.hpp"

namespace freegp {

unsigned PowerProduct::degree() const noexcept
{
	unsigned d = 0;
	for (const auto& [v, e] : powers)
		d += e;
	return d;
}

unsigned PowerProduct::exponent(const Variable& v) const noexcept
{
	for (const auto& [w, e] : powers)
		if (w == v)
			return e;
	return 0;
}

std::string PowerProduct::str() const
{
	std::string out;
	for (const auto& [v, e] : powers) {
		if (!out.empty())
			out += '*';
		out += v.str();
		if (e > 1)
			out += '^' + std::to_string(e);
	}
	return out;
}

PowerProduct operator*(const PowerProduct& a, const PowerProduct& b)
{
	PowerProduct p;
	std::size_t i = 0, j = 0;
	while (i < a.powers.size() || j < b.powers.size()) {
		if (j == b.powers.size() || (i < a.powers.size() && a.powers[i].first < b.powers[j].first))
			p.powers.push_back(a.powers[i++]);
		else if (i == a.powers.size() || b.powers[j].first < a.powers[i].first)
			p.powers.push_back(b.powers[j++]);
		else {
			p.powers.emplace_back(a.powers[i].first, a.powers[i].second + b.powers[j].second);
			++i;
			++j;
		}
	}
	return p;
}

std::optional<PowerProduct> divide(const PowerProduct& a, const PowerProduct& b)
{
	PowerProduct q;
	std::size_t i = 0;
	for (const auto& [v, e] : b.powers) {
		while (i < a.powers.size() && a.powers[i].first < v)
			q.powers.push_back(a.powers[i++]);
		if (i == a.powers.size() || a.powers[i].first != v || a.powers[i].second < e)
			return std::nullopt;
		if (a.powers[i].second > e)
			q.powers.emplace_back(v, a.powers[i].second - e);
		++i;
	}
	while (i < a.powers.size())
		q.powers.push_back(a.powers[i++]);
	return q;
}

bool GrlexLess::operator()(const PowerProduct& a, const PowerProduct& b) const noexcept
{
	const unsigned da = a.degree(), db = b.degree();
	if (da != db)
		return da < db;
	// First variable (smallest in variable order) whose exponents differ
	// decides; the larger exponent is the larger monomial.
	std::size_t i = 0, j = 0;
	while (i < a.powers.size() && j < b.powers.size()) {
		const auto& [va, ea] = a.powers[i];
		const auto& [vb, eb] = b.powers[j];
		if (va == vb) {
			if (ea != eb)
				return ea < eb;
			++i;
			++j;
		} else {
			return vb < va; // b has the smaller variable with positive exponent
		}
	}
	return i == a.powers.size() && j < b.powers.size();
}

MultiPoly mp_constant(const Rational& c) { return MultiPoly(PowerProduct{}, c); }

MultiPoly mp_variable(const Variable& v) { return MultiPoly(PowerProduct{{{v, 1u}}}); }

MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b)
{
	MultiPoly out;
	for (const auto& [p, cp] : a)
		for (const auto& [q, cq] : b)
			out.add(p * q, cp * cq);
	return out;
}

MultiPoly mp_derivative(const MultiPoly& a, const Variable& v)
{
	MultiPoly out;
	for (const auto& [p, c] : a) {
		PowerProduct q;
		unsigned e = 0;
		for (const auto& [w, k] : p.powers) {
			if (w == v) {
				e = k;
				if (k > 1)
					q.powers.emplace_back(w, k - 1);
			} else {
				q.powers.emplace_back(w, k);
			}
		}
		if (e)
			out.add(q, c * e);
	}
	return out;
}

MultiPoly mp_pow(const MultiPoly& a, unsigned e)
{
	MultiPoly r = mp_constant(1);
	for (unsigned i = 0; i < e; ++i)
		r = mp_mul(r, a);
	return r;
}

bool mp_is_constant(const MultiPoly& a)
{
	return a.is_zero() || (a.size() == 1 && a.begin()->first.powers.empty());
}

const std::pair<const PowerProduct, Rational>& mp_leading(const MultiPoly& a)
{
	if (a.is_zero())
		throw DomainError("leading term of the zero polynomial");
	return *a.terms().rbegin();
}

std::optional<MultiPoly> mp_divide_exact(const MultiPoly& a, const MultiPoly& b)
{
	if (b.is_zero())
		throw DomainError("division by the zero polynomial");
	const auto& [lb, cb] = mp_leading(b);
	MultiPoly rem = a, quot;
	while (!rem.is_zero()) {
		const auto& [lr, cr] = mp_leading(rem);
		auto m = divide(lr, lb);
		if (!m)
			return std::nullopt;
		MultiPoly t(*m, cr / cb);
		quot += t;
		rem -= mp_mul(t, b);
	}
	return quot;
}

std::string to_string(const MultiPoly& a)
{
	// Highest term first.
	std::vector<std::pair<Rational, std::string>> terms;
	for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it)
		terms.emplace_back(it->second, it->first.str());
	return format_sum(terms);
}

} // namespace freegp
