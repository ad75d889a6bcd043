#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace freegp {

// Raised when an operation's precondition is violated by the data it was
// given (variable missing, input not polylinear, bound exceeded, ...).
class DomainError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

// Raised by the expression parser. Carries the 1-based position and the set
// of tokens that would have been accepted there.
class ParseError : public std::runtime_error {
public:
	ParseError(int line, int column, std::vector<std::string> expected, const std::string& message)
	    : std::runtime_error(message), line_(line), column_(column), expected_(std::move(expected))
	{
	}

	int line() const noexcept { return line_; }
	int column() const noexcept { return column_; }
	const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
	int line_;
	int column_;
	std::vector<std::string> expected_;
};

} // namespace freegp
