#pragma once

#include "freegp/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <utility>

namespace freegp {

// Finite linear combination of basis elements with exact rational
// coefficients. Zero coefficients are never stored, so two equal elements
// have identical term maps. Iteration follows Compare.
template <class Key, class Compare = std::less<Key>>
class Combination {
public:
	using Terms = std::map<Key, Rational, Compare>;
	using const_iterator = typename Terms::const_iterator;

	Combination() = default;
	explicit Combination(const Key& k, Rational c = 1) { add(k, std::move(c)); }

	void add(const Key& k, const Rational& c)
	{
		if (freegp::is_zero(c))
			return;
		auto [it, inserted] = terms_.try_emplace(k, c);
		if (!inserted) {
			it->second += c;
			if (freegp::is_zero(it->second))
				terms_.erase(it);
		}
	}

	Rational coefficient(const Key& k) const
	{
		auto it = terms_.find(k);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	bool is_zero() const noexcept { return terms_.empty(); }
	std::size_t size() const noexcept { return terms_.size(); }
	const_iterator begin() const { return terms_.begin(); }
	const_iterator end() const { return terms_.end(); }
	const Terms& terms() const noexcept { return terms_; }

	Combination& operator+=(const Combination& o)
	{
		for (const auto& [k, c] : o.terms_)
			add(k, c);
		return *this;
	}
	Combination& operator-=(const Combination& o)
	{
		for (const auto& [k, c] : o.terms_)
			add(k, -c);
		return *this;
	}
	Combination& operator*=(const Rational& s)
	{
		if (freegp::is_zero(s))
			terms_.clear();
		else
			for (auto& [k, c] : terms_)
				c *= s;
		return *this;
	}

	friend Combination operator+(Combination a, const Combination& b) { return a += b; }
	friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
	friend Combination operator-(Combination a) { return a *= Rational(-1); }
	friend Combination operator*(Combination a, const Rational& s) { return a *= s; }
	friend Combination operator*(const Rational& s, Combination a) { return a *= s; }

	friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }

private:
	Terms terms_;
};

} // namespace freegp
