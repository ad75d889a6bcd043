#include "freegp/ac_core.hpp"

#include "freegp/error.hpp"
#include "freegp/printing.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

namespace freegp {

bool is_normal(Word w)
{
	if (w.is_leaf())
		return true;
	return w.left() < w.right() && is_normal(w.left()) && is_normal(w.right());
}

std::optional<SignedWord> normal_form(Word w)
{
	if (w.is_leaf())
		return SignedWord{1, w};
	auto l = normal_form(w.left());
	if (!l)
		return std::nullopt;
	auto r = normal_form(w.right());
	if (!r)
		return std::nullopt;
	const int sign = l->sign * r->sign;
	auto c = l->word <=> r->word;
	if (c == 0)
		return std::nullopt; // {a, a} = 0
	if (c < 0)
		return SignedWord{sign, Word::bracket(l->word, r->word)};
	return SignedWord{-sign, Word::bracket(r->word, l->word)};
}

ACPoly normalize_word(Word w)
{
	auto nf = normal_form(w);
	if (!nf)
		return {};
	return ACPoly(nf->word, nf->sign);
}

ACPoly normalize(const ACPoly& f)
{
	ACPoly out;
	for (const auto& [w, c] : f)
		if (auto nf = normal_form(w))
			out.add(nf->word, nf->sign * c);
	return out;
}

ACPoly ac_variable(const Variable& v) { return ACPoly(Word::leaf(v)); }

ACPoly ac_bracket(const ACPoly& f, const ACPoly& g)
{
	ACPoly out;
	for (const auto& [a, ca] : f)
		for (const auto& [b, cb] : g)
			if (auto nf = normal_form(Word::bracket(a, b)))
				out.add(nf->word, nf->sign * ca * cb);
	return out;
}

std::vector<Variable> ac_support(const ACPoly& f)
{
	std::vector<Variable> vars;
	for (const auto& [w, c] : f)
		vars.insert(vars.end(), w.content().begin(), w.content().end());
	std::sort(vars.begin(), vars.end());
	vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
	return vars;
}

namespace {

void require_linear(Word w, const Variable& x)
{
	const unsigned n = w.count(x);
	if (n == 0)
		throw DomainError("variable not present: " + x.str() + " does not occur in " + w.str());
	if (n > 1)
		throw DomainError("variable repeated: " + x.str() + " occurs " + std::to_string(n) + " times in " + w.str());
}

} // namespace

unsigned height(Word w, const Variable& x)
{
	require_linear(w, x);
	unsigned depth = 0;
	while (!w.is_leaf()) {
		w = w.left().contains(x) ? w.left() : w.right();
		++depth;
	}
	return depth;
}

OperatorWord i_normal_form(Word w, const Variable& x)
{
	require_linear(w, x);
	auto nf = normal_form(w);
	if (!nf)
		throw DomainError("word " + w.str() + " is zero in AC(X)");
	OperatorWord op;
	op.argument = x;
	Word cur = nf->word;
	while (!cur.is_leaf()) {
		if (cur.right().contains(x)) {
			op.factors.push_back(cur.left());
			cur = cur.right();
		} else {
			op.factors.push_back(cur.right());
			op.sign = -op.sign;
			cur = cur.left();
		}
	}
	return op;
}

ACPoly expand(const OperatorWord& op)
{
	Word w = Word::leaf(op.argument);
	for (auto it = op.factors.rbegin(); it != op.factors.rend(); ++it)
		w = Word::bracket(*it, w);
	ACPoly out = normalize_word(w);
	if (op.sign < 0)
		out *= -1;
	return out;
}

ACPoly flip(const ACPoly& f, const Variable& x)
{
	ACPoly out;
	for (const auto& [u, c] : f) {
		if (u.count(x) != 1)
			throw DomainError("flip: monomial " + u.str() + " is not linear in " + x.str());
		OperatorWord op = i_normal_form(u, x);
		const bool odd = op.factors.size() % 2 == 1;
		// -(-1)^k
		op.sign *= odd ? 1 : -1;
		std::reverse(op.factors.begin(), op.factors.end());
		out += expand(op) * c;
	}
	return out;
}

FlipOrbit flip_orbit(const ACPoly& f, std::size_t max_size)
{
	FlipOrbit orbit;
	if (max_size == 0) {
		orbit.truncated = true;
		return orbit;
	}
	const auto vars = ac_support(f);
	std::deque<ACPoly> queue{f};
	orbit.elements.insert(f);
	while (!queue.empty()) {
		ACPoly cur = std::move(queue.front());
		queue.pop_front();
		for (const auto& v : vars) {
			ACPoly g = flip(cur, v);
			if (orbit.elements.contains(g))
				continue;
			if (orbit.elements.size() >= max_size) {
				orbit.truncated = true;
				return orbit;
			}
			orbit.elements.insert(g);
			queue.push_back(std::move(g));
		}
	}
	return orbit;
}

std::vector<Word> enumerate_polylinear_basis(std::span<const Variable> vars)
{
	if (vars.empty())
		throw DomainError("enumerate_polylinear_basis: empty variable list");
	if (vars.size() > 16)
		throw DomainError("enumerate_polylinear_basis: too many variables");
	std::vector<Variable> sorted(vars.begin(), vars.end());
	std::sort(sorted.begin(), sorted.end());
	if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
		throw DomainError("enumerate_polylinear_basis: duplicate variables");

	std::unordered_map<unsigned, std::vector<Word>> memo;
	auto words = [&](auto&& self, unsigned mask) -> const std::vector<Word>& {
		if (auto it = memo.find(mask); it != memo.end())
			return it->second;
		std::vector<Word> out;
		if (std::popcount(mask) == 1) {
			out.push_back(Word::leaf(sorted[std::countr_zero(mask)]));
		} else {
			const unsigned low = mask & (~mask + 1);
			// Submasks containing the lowest bit enumerate each unordered split once.
			for (unsigned a = (mask - 1) & mask; a != 0; a = (a - 1) & mask) {
				if (!(a & low))
					continue;
				const unsigned b = mask ^ a;
				const auto left = self(self, a);
				const auto& right = self(self, b);
				for (Word l : left)
					for (Word r : right)
						out.push_back(l < r ? Word::bracket(l, r) : Word::bracket(r, l));
			}
		}
		std::sort(out.begin(), out.end());
		return memo.emplace(mask, std::move(out)).first->second;
	};
	return words(words, (1u << sorted.size()) - 1);
}

Word right_nested(std::span<const Variable> vars)
{
	if (vars.empty())
		throw DomainError("right_nested: empty variable list");
	Word w = Word::leaf(vars.back());
	for (auto it = vars.rbegin() + 1; it != vars.rend(); ++it)
		w = Word::bracket(Word::leaf(*it), w);
	return w;
}

std::string to_string(const ACPoly& f)
{
	std::vector<std::pair<Rational, std::string>> terms;
	for (const auto& [w, c] : f)
		terms.emplace_back(c, w.str());
	return format_sum(terms);
}

} // namespace freegp
