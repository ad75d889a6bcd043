#pragma once

#include "freegp/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace freegp {

// Joins signed terms as "a - 2/3*b + c". An empty body denotes the constant
// monomial, printed as its coefficient alone. An empty list prints as "0".
inline std::string format_sum(const std::vector<std::pair<Rational, std::string>>& terms)
{
	if (terms.empty())
		return "0";
	std::string out;
	bool first = true;
	for (const auto& [c, body] : terms) {
		const bool negative = sgn(c) < 0;
		if (first)
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		first = false;
		const Rational mag = abs(c);
		if (body.empty())
			out += to_string(mag);
		else if (mag == 1)
			out += body;
		else
			out += to_string(mag) + "*" + body;
	}
	return out;
}

} // namespace freegp
