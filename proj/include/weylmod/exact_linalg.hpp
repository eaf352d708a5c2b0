#pragma once

#include <utility>
#include <vector>

#include "weylmod/exact.hpp"

namespace weylmod {

// Sparse integer row, entries sorted by column.
using SparseRow = std::vector<std::pair<int, ExactInt>>;

// Incremental echelonization over the integers. Each incoming row is
// reduced against the accepted pivot rows by exact cross-multiplication,
// then divided by its content gcd; a nonzero remainder becomes a new pivot
// row. Pivot entries within a row are chosen Markowitz-style: sparsest
// column first (over the current basis), then smallest magnitude. No
// rounding anywhere; rank and the spanned row space are exact.
class SparseEchelon {
public:
    explicit SparseEchelon(int ncols) : ncols_(ncols), col_count_(ncols, 0) {}

    // Returns true if the row increased the rank.
    bool add_row(SparseRow row);

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }

    // Pivot rows in elimination order; rows_[t] has zero entries in the
    // pivot columns of rows_[0..t-1].
    const std::vector<SparseRow>& rows() const { return rows_; }
    const std::vector<int>& pivot_columns() const { return pivots_; }

    // Expresses v (which must lie in the row span) as a combination of the
    // pivot rows; returns the coefficients in elimination order. Throws if
    // v is outside the span.
    std::vector<ExactRat> express(const SparseRow& v) const;

    // Reduces v against the basis and reports whether the remainder is 0.
    bool in_span(const SparseRow& v) const;

private:
    SparseRow reduce(SparseRow row) const;
    int ncols_;
    std::vector<SparseRow> rows_;
    std::vector<int> pivots_;
    std::vector<int> col_count_;  // nonzeros per column over accepted rows
};

void normalize_content(SparseRow& row);

} // namespace weylmod
