#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace freegp {

// A generator such as x1, t3 or y12: a name class (letters) plus an index.
// Variables are ordered by name class first, then by index.
class Variable {
public:
	Variable() = default;
	Variable(std::string name, std::uint32_t index) : name_(std::move(name)), index_(index) {}

	// Parses "x12" style text. Throws DomainError on anything else.
	static Variable parse(std::string_view text);

	const std::string& name() const noexcept { return name_; }
	std::uint32_t index() const noexcept { return index_; }

	std::string str() const { return name_ + std::to_string(index_); }

	friend auto operator<=>(const Variable&, const Variable&) = default;
	friend bool operator==(const Variable&, const Variable&) = default;

private:
	std::string name_;
	std::uint32_t index_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Variable& v) { return os << v.str(); }

} // namespace freegp

template <>
struct std::hash<freegp::Variable> {
	std::size_t operator()(const freegp::Variable& v) const noexcept
	{
		return std::hash<std::string>{}(v.name()) * 1000003u ^ v.index();
	}
};
