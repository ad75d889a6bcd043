#include "freegp/assoc.hpp"

#include "freegp/error.hpp"
#include "freegp/printing.hpp"

#include <algorithm>
#include <numeric>

namespace freegp {

AssocPoly assoc_letter(Word u) { return AssocPoly(Letters{u}); }

AssocPoly assoc_mul(const AssocPoly& a, const AssocPoly& b)
{
	AssocPoly out;
	for (const auto& [x, cx] : a)
		for (const auto& [y, cy] : b) {
			Letters xy = x;
			xy.insert(xy.end(), y.begin(), y.end());
			out.add(xy, cx * cy);
		}
	return out;
}

AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) { return assoc_mul(a, b) - assoc_mul(b, a); }

namespace {

// Parity of the permutation that sorts seq.
int sort_sign(Letters& seq)
{
	int sign = 1;
	for (std::size_t i = 1; i < seq.size(); ++i)
		for (std::size_t j = i; j > 0 && seq[j] < seq[j - 1]; --j) {
			std::swap(seq[j], seq[j - 1]);
			sign = -sign;
		}
	return sign;
}

} // namespace

AssocPoly alternating_sum(std::span<const Word> letters)
{
	Letters sorted(letters.begin(), letters.end());
	std::sort(sorted.begin(), sorted.end());
	if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
		throw DomainError("alternating_sum: letters must be distinct");

	std::vector<std::size_t> perm(letters.size());
	std::iota(perm.begin(), perm.end(), 0);
	AssocPoly out;
	do {
		Letters w;
		w.reserve(perm.size());
		for (std::size_t i : perm)
			w.push_back(letters[i]);
		int sign = 1;
		for (std::size_t i = 0; i < perm.size(); ++i)
			for (std::size_t j = i + 1; j < perm.size(); ++j)
				if (perm[i] > perm[j])
					sign = -sign;
		out.add(w, sign);
	} while (std::next_permutation(perm.begin(), perm.end()));
	return out;
}

bool is_lie_element(const AssocPoly& L)
{
	using Tensor = std::pair<Letters, Letters>;
	struct TensorLess {
		bool operator()(const Tensor& a, const Tensor& b) const noexcept
		{
			LettersLess less;
			if (less(a.first, b.first))
				return true;
			if (less(b.first, a.first))
				return false;
			return less(a.second, b.second);
		}
	};
	Combination<Tensor, TensorLess> residual;
	for (const auto& [w, c] : L) {
		const std::size_t k = w.size();
		if (k >= 8 * sizeof(unsigned long) - 1)
			throw DomainError("is_lie_element: word too long");
		// Δ(u_1⋯u_k) = Σ_S u_S ⊗ u_{S^c} over all subsets S of positions.
		for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
			Tensor t;
			for (std::size_t i = 0; i < k; ++i)
				((mask >> i) & 1 ? t.first : t.second).push_back(w[i]);
			residual.add(t, c);
		}
		residual.add(Tensor{w, {}}, -c);
		residual.add(Tensor{{}, w}, -c);
	}
	return residual.is_zero();
}

ExteriorElem exterior_image(const AssocPoly& L)
{
	ExteriorElem out;
	for (const auto& [w, c] : L) {
		Letters sorted = w;
		const int sign = sort_sign(sorted);
		if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
			continue;
		out.add(sorted, sign * c);
	}
	return out;
}

ExteriorElem wedge(const ExteriorElem& a, const ExteriorElem& b)
{
	ExteriorElem out;
	for (const auto& [x, cx] : a)
		for (const auto& [y, cy] : b) {
			Letters xy = x;
			xy.insert(xy.end(), y.begin(), y.end());
			const int sign = sort_sign(xy);
			if (std::adjacent_find(xy.begin(), xy.end()) != xy.end())
				continue;
			out.add(xy, sign * cx * cy);
		}
	return out;
}

namespace {

std::string join(const Letters& w, const char* sep)
{
	std::string out;
	for (std::size_t i = 0; i < w.size(); ++i) {
		if (i)
			out += sep;
		out += w[i].str();
	}
	return out;
}

} // namespace

std::string to_string(const AssocPoly& L)
{
	std::vector<std::pair<Rational, std::string>> terms;
	for (const auto& [w, c] : L)
		terms.emplace_back(c, join(w, " "));
	return format_sum(terms);
}

std::string exterior_to_string(const ExteriorElem& e)
{
	std::vector<std::pair<Rational, std::string>> terms;
	for (const auto& [w, c] : e)
		terms.emplace_back(c, join(w, "^"));
	return format_sum(terms);
}

} // namespace freegp
