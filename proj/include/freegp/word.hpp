#pragma once

#include "freegp/variable.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace freegp {

namespace detail {
struct WordNode;
}

// A nonassociative word: a leaf variable or a bracket {left, right} of two
// words. Words are hash-consed: structurally equal words share one node, so
// equality is a pointer comparison and a Word is a cheap value handle.
// Nodes live for the lifetime of the process.
//
// operator<=> is the default word order: degree first, then the left
// subword, then the right subword, with the variable order at leaves.
class Word {
public:
	static Word leaf(const Variable& v);
	// The raw bracket {l, r}; no normalization is applied.
	static Word bracket(Word l, Word r);

	bool is_leaf() const noexcept;
	const Variable& variable() const; // leaf only
	Word left() const;                // bracket only
	Word right() const;               // bracket only

	// Leaf count.
	unsigned degree() const noexcept;
	// Sorted multiset of variables occurring in the word (its commutative image).
	std::span<const Variable> content() const noexcept;
	unsigned count(const Variable& v) const noexcept;
	bool contains(const Variable& v) const noexcept { return count(v) > 0; }

	std::string str() const;

	std::size_t hash() const noexcept;

	friend bool operator==(Word a, Word b) noexcept { return a.node_ == b.node_; }
	friend std::strong_ordering operator<=>(Word a, Word b) noexcept;

private:
	explicit Word(const detail::WordNode* n) : node_(n) {}
	const detail::WordNode* node_;
};

inline std::ostream& operator<<(std::ostream& os, Word w) { return os << w.str(); }

} // namespace freegp

template <>
struct std::hash<freegp::Word> {
	std::size_t operator()(freegp::Word w) const noexcept { return w.hash(); }
};
