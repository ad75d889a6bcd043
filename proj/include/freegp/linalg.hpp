#pragma once

#include "freegp/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace freegp {

// Sparse row: (column, value) pairs with strictly increasing columns and
// nonzero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// Incremental exact Gaussian elimination. Rows are reduced against existing
// pivots in the order they are added; a row that survives becomes a new
// pivot row scaled to leading coefficient 1. Results depend only on the
// sequence of rows added.
class EchelonForm {
public:
	explicit EchelonForm(std::size_t columns) : columns_(columns) {}

	// Returns true when the row increased the rank.
	bool add_row(SparseRow row);

	std::size_t rank() const noexcept { return pivots_.size(); }
	std::size_t columns() const noexcept { return columns_; }

	// Basis of {v : M v = 0}, one vector per non-pivot column, with that
	// column's entry equal to 1 (reduced row echelon convention).
	std::vector<std::vector<Rational>> nullspace() const;

	// Rows in reduced row echelon form keyed by pivot column.
	std::map<std::size_t, SparseRow> reduced() const;

private:
	std::size_t columns_;
	std::map<std::size_t, SparseRow> pivots_;
};

// Solves A x = b where A has `columns` columns and is given by rows
// (row i of A paired with b[i]). Free variables are set to zero. Returns
// nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(std::size_t columns, const std::vector<SparseRow>& rows,
                                           const std::vector<Rational>& rhs);

} // namespace freegp
