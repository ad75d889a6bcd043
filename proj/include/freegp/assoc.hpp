#pragma once

// Free associative algebra As(U) over operator letters (letters are normal
// words u standing for ad u), its exterior image, and the Friedrichs test
// for Lie elements.

#include "freegp/combination.hpp"
#include "freegp/word.hpp"

#include <span>
#include <string>
#include <vector>

namespace freegp {

using Letters = std::vector<Word>;

// Shorter sequences first, then lexicographic.
struct LettersLess {
	bool operator()(const Letters& a, const Letters& b) const noexcept
	{
		if (a.size() != b.size())
			return a.size() < b.size();
		return a < b;
	}
};

using AssocPoly = Combination<Letters, LettersLess>;

// Keys are strictly increasing letter sequences u_1 ∧ ⋯ ∧ u_k.
using ExteriorElem = Combination<Letters, LettersLess>;

AssocPoly assoc_letter(Word u);
AssocPoly assoc_mul(const AssocPoly& a, const AssocPoly& b);
// [a, b] = ab - ba
AssocPoly commutator(const AssocPoly& a, const AssocPoly& b);

// Σ_{s ∈ S_m} sgn(s) u_{s(1)} ⋯ u_{s(m)}. Throws DomainError on repeated
// letters.
AssocPoly alternating_sum(std::span<const Word> letters);

// Friedrichs criterion: L is a Lie element iff Δ(L) = L⊗1 + 1⊗L, where Δ is
// the coproduct making every letter primitive.
bool is_lie_element(const AssocPoly& L);

// Homomorphism As(U) -> Λ(kU) that sends each letter to itself.
ExteriorElem exterior_image(const AssocPoly& L);
ExteriorElem wedge(const ExteriorElem& a, const ExteriorElem& b);

std::string to_string(const AssocPoly& L);
// Printed with "^" between letters, e.g. "6*x1^x2^x3".
std::string exterior_to_string(const ExteriorElem& e);

} // namespace freegp
