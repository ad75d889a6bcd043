#include "freegp/linalg.hpp"

#include "freegp/error.hpp"

namespace freegp {

namespace {

// row - factor * pivot
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot)
{
	SparseRow out;
	out.reserve(row.size() + pivot.size());
	std::size_t i = 0, j = 0;
	while (i < row.size() || j < pivot.size()) {
		if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
			out.push_back(row[i++]);
		} else if (i == row.size() || pivot[j].first < row[i].first) {
			out.emplace_back(pivot[j].first, -factor * pivot[j].second);
			++j;
		} else {
			Rational v = row[i].second - factor * pivot[j].second;
			if (!is_zero(v))
				out.emplace_back(row[i].first, std::move(v));
			++i;
			++j;
		}
	}
	return out;
}

} // namespace

bool EchelonForm::add_row(SparseRow row)
{
	for (const auto& [col, v] : row)
		if (col >= columns_)
			throw DomainError("EchelonForm: column index out of range");
	while (!row.empty()) {
		const std::size_t lead = row.front().first;
		auto it = pivots_.find(lead);
		if (it == pivots_.end()) {
			const Rational inv = 1 / row.front().second;
			for (auto& [col, v] : row)
				v *= inv;
			pivots_.emplace(lead, std::move(row));
			return true;
		}
		const Rational factor = row.front().second;
		row = axpy(row, factor, it->second);
	}
	return false;
}

std::map<std::size_t, SparseRow> EchelonForm::reduced() const
{
	std::map<std::size_t, SparseRow> rows = pivots_;
	// Back substitution, last pivot first: clear each pivot column from the
	// rows above it.
	for (auto p = rows.rbegin(); p != rows.rend(); ++p) {
		const std::size_t col = p->first;
		for (auto& [other_col, other] : rows) {
			if (other_col >= col)
				break;
			for (const auto& [c, v] : other) {
				if (c == col) {
					const Rational factor = v;
					other = axpy(other, factor, p->second);
					break;
				}
				if (c > col)
					break;
			}
		}
	}
	return rows;
}

std::vector<std::vector<Rational>> EchelonForm::nullspace() const
{
	const auto rows = reduced();
	std::vector<std::vector<Rational>> basis;
	for (std::size_t free = 0; free < columns_; ++free) {
		if (rows.contains(free))
			continue;
		std::vector<Rational> v(columns_);
		v[free] = 1;
		for (const auto& [pivot, row] : rows)
			for (const auto& [c, x] : row)
				if (c == free)
					v[pivot] = -x;
		basis.push_back(std::move(v));
	}
	return basis;
}

std::optional<std::vector<Rational>> solve(std::size_t columns, const std::vector<SparseRow>& rows,
                                           const std::vector<Rational>& rhs)
{
	if (rows.size() != rhs.size())
		throw DomainError("solve: row count does not match right-hand side");
	EchelonForm ech(columns + 1);
	for (std::size_t i = 0; i < rows.size(); ++i) {
		SparseRow r = rows[i];
		if (!is_zero(rhs[i]))
			r.emplace_back(columns, rhs[i]);
		ech.add_row(std::move(r));
	}
	const auto reduced = ech.reduced();
	if (reduced.contains(columns))
		return std::nullopt;
	std::vector<Rational> x(columns);
	for (const auto& [pivot, row] : reduced)
		if (!row.empty() && row.back().first == columns)
			x[pivot] = row.back().second;
	return x;
}

} // namespace freegp
