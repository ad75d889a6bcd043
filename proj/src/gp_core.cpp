#include "freegp/gp_core.hpp"

#include "freegp/error.hpp"
#include "freegp/printing.hpp"

#include <algorithm>

namespace freegp {

unsigned GPMonomial::degree() const noexcept
{
	unsigned d = 0;
	for (Word w : factors)
		d += w.degree();
	return d;
}

unsigned GPMonomial::count(const Variable& v) const noexcept
{
	unsigned n = 0;
	for (Word w : factors)
		n += w.count(v);
	return n;
}

std::string GPMonomial::str() const
{
	std::string out;
	for (std::size_t i = 0; i < factors.size(); ++i) {
		if (i)
			out += '*';
		out += factors[i].str();
	}
	return out;
}

GPMonomial operator*(const GPMonomial& a, const GPMonomial& b)
{
	GPMonomial m;
	m.factors.reserve(a.factors.size() + b.factors.size());
	std::merge(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
	           std::back_inserter(m.factors));
	return m;
}

bool GPMonomialLess::operator()(const GPMonomial& a, const GPMonomial& b) const noexcept
{
	const unsigned da = a.degree(), db = b.degree();
	if (da != db)
		return da < db;
	if (a.factors.size() != b.factors.size())
		return a.factors.size() < b.factors.size();
	return a.factors < b.factors;
}

GPPoly gp_one() { return GPPoly(GPMonomial{}); }

GPPoly gp_constant(const Rational& c) { return GPPoly(GPMonomial{}, c); }

GPPoly gp_variable(const Variable& v) { return GPPoly(GPMonomial{{Word::leaf(v)}}); }

GPPoly gp_from_ac(const ACPoly& f)
{
	GPPoly out;
	for (const auto& [w, c] : f)
		out.add(GPMonomial{{w}}, c);
	return out;
}

bool is_ac(const GPPoly& f)
{
	return std::all_of(f.begin(), f.end(), [](const auto& t) { return t.first.factors.size() == 1; });
}

ACPoly to_ac(const GPPoly& f)
{
	ACPoly out;
	for (const auto& [m, c] : f) {
		if (m.factors.size() != 1)
			throw DomainError("expected an AC-polynomial, found the monomial " +
			                  (m.factors.empty() ? std::string("1") : m.str()));
		out.add(m.factors.front(), c);
	}
	return out;
}

GPPoly gp_mul(const GPPoly& f, const GPPoly& g)
{
	GPPoly out;
	for (const auto& [a, ca] : f)
		for (const auto& [b, cb] : g)
			out.add(a * b, ca * cb);
	return out;
}

namespace {

GPMonomial without(const GPMonomial& m, std::size_t i)
{
	GPMonomial r;
	r.factors.reserve(m.factors.size() - 1);
	for (std::size_t j = 0; j < m.factors.size(); ++j)
		if (j != i)
			r.factors.push_back(m.factors[j]);
	return r;
}

} // namespace

GPPoly gp_bracket(const GPPoly& f, const GPPoly& g)
{
	GPPoly out;
	for (const auto& [a, ca] : f) {
		for (const auto& [b, cb] : g) {
			const Rational coeff = ca * cb;
			// {a_1⋯a_p, b_1⋯b_q} = Σ_ij {a_i, b_j} · Π_{k≠i} a_k · Π_{l≠j} b_l
			for (std::size_t i = 0; i < a.factors.size(); ++i) {
				const GPMonomial rest_a = without(a, i);
				for (std::size_t j = 0; j < b.factors.size(); ++j) {
					auto nf = normal_form(Word::bracket(a.factors[i], b.factors[j]));
					if (!nf)
						continue;
					GPMonomial m = rest_a * without(b, j);
					m.factors.insert(std::lower_bound(m.factors.begin(), m.factors.end(), nf->word), nf->word);
					out.add(m, nf->sign * coeff);
				}
			}
		}
	}
	return out;
}

std::string Weight::str() const
{
	if (parts.empty())
		return "0";
	std::string out;
	for (std::size_t i = 0; i < parts.size(); ++i) {
		if (i)
			out += " + ";
		out += '[';
		const CommWord& p = parts[i];
		for (std::size_t j = 0; j < p.size();) {
			std::size_t k = j;
			while (k < p.size() && p[k] == p[j])
				++k;
			out += p[j].str();
			if (k - j > 1)
				out += "^" + std::to_string(k - j);
			j = k;
		}
		out += ']';
	}
	return out;
}

Weight operator+(const Weight& a, const Weight& b)
{
	Weight w;
	std::merge(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end(), std::back_inserter(w.parts));
	return w;
}

Weight weight(const GPMonomial& m)
{
	Weight w;
	for (Word u : m.factors)
		w.parts.emplace_back(u.content().begin(), u.content().end());
	std::sort(w.parts.begin(), w.parts.end());
	return w;
}

std::vector<std::pair<Weight, GPPoly>> fine_components(const GPPoly& f)
{
	std::map<Weight, GPPoly> parts;
	for (const auto& [m, c] : f)
		parts[weight(m)].add(m, c);
	return {parts.begin(), parts.end()};
}

Supports supports(const GPPoly& f)
{
	Supports s;
	for (const auto& [m, c] : f)
		for (Word u : m.factors) {
			s.words.insert(u);
			s.variables.insert(u.content().begin(), u.content().end());
		}
	return s;
}

std::vector<Variable> support_variables(const GPPoly& f)
{
	auto vars = supports(f).variables;
	return {vars.begin(), vars.end()};
}

std::string to_string(const GPPoly& f)
{
	std::vector<std::pair<Rational, std::string>> terms;
	for (const auto& [m, c] : f)
		terms.emplace_back(c, m.str());
	return format_sum(terms);
}

} // namespace freegp
