#pragma once

#include "sylv/index_selection.hpp"
#include "sylv/matrix.hpp"
#include "sylv/op_counter.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace sylv {

enum class PivotStrategy { leading, greedy };

// Cofactor data for one condensed row: cof[t] is minus the determinant of the
// pivot block with row t+1 replaced by row `row` of the source matrix
// (restricted to the pivot columns), and det_block is the pivot block
// determinant.  The condensed row is the inner product
//   [cof..., det_block] . [pivot rows..., source row]  restricted to the
// complement columns.
struct RowCofactors {
    std::vector<Scalar> cof;
    Scalar det_block;
    std::size_t row = 0;
};

// Copies the (rows x cols) submatrix addressed with 1-based index lists.
Matrix extract_submatrix(const Matrix& a, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols);

// Single condensed entry for row p, column q (both outside the selection):
// the determinant of the pivot block bordered by row p and column q.
// Definition-level evaluation, uncounted; the bulk kernel is condense().
Scalar condensed_entry(const Matrix& a, const IndexSelection& sel, std::size_t p, std::size_t q);

RowCofactors row_cofactors(const Matrix& a, const IndexSelection& sel, std::size_t p,
                           OpCounter& counter);

// Condenses a into the (n-k) x (n-k) matrix of bordered-block determinants.
// Rows are distributed over `workers` threads with per-worker counters merged
// in index order, so both the result and the counter totals are reproducible.
Matrix condense(const Matrix& a, const IndexSelection& sel, OpCounter& counter,
                unsigned workers = 1);

// Order-1 condensation on the trailing entry: e_ij = a_ij*a_nn - a_in*a_nj.
Matrix chio_condense(const Matrix& a, OpCounter& counter);

// Divides every row (and the matching right-hand side entry, if any) by the
// pivot block determinant.  Returns the scaled matrix and right-hand side.
std::pair<Matrix, std::vector<Scalar>> normalize_rows(const Matrix& c,
                                                      const std::vector<Scalar>& rhs,
                                                      const Scalar& det_block,
                                                      OpCounter& counter);

// Picks a nonsingular order-k pivot block.  `leading` takes rows and columns
// (1..k) and fails if that block is singular; `greedy` runs complete pivoting
// on a scratch copy (selection work is not booked on any counter).
IndexSelection select_pivot_block(const Matrix& a, std::size_t k, PivotStrategy strategy);

// Repeated condensation with block order k down to order <= 3, then direct
// cofactor expansion.  Block determinants divide the result once per stage on
// the float backend and as one accumulated division on the exact backend.
Scalar determinant(const Matrix& a, std::size_t k, PivotStrategy strategy, OpCounter& counter,
                   unsigned workers = 1);

namespace detail {

// Gaussian elimination determinant with partial pivoting on a scratch copy.
// Counts its multiplications, divisions and subtractions on `counter`.
Scalar det_gauss(Matrix scratch, OpCounter& counter);

// Cofactor expansion along the first row; counted.
Scalar det_cofactor(const Matrix& a, OpCounter& counter);

struct CondenseResult {
    Matrix condensed;
    std::vector<Scalar> rhs;
    Scalar block_det;
};

// Shared kernel behind condense() and the system condensation: computes the
// block determinant once, then assembles every condensed row (and optional
// right-hand side entry) from that row's cofactors.  With
// require_nonsingular_block set, a zero block determinant raises Errc::singular
// before any row work happens.
CondenseResult condense_core(const Matrix& a, const std::vector<Scalar>* rhs,
                             const IndexSelection& sel, OpCounter& counter, unsigned workers,
                             bool require_nonsingular_block = false);

// Cofactors of source row p against a precomputed pivot block (the block is
// extract_submatrix(a, sel.rows(), cols)); counted on `counter`.
std::vector<Scalar> block_cofactors(const Matrix& a, const Matrix& block,
                                    const std::vector<std::size_t>& cols, std::size_t p,
                                    OpCounter& counter);

// Complete-pivoting block search restricted to the allowed columns; returns
// as many pivot positions as it can find, up to k.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> greedy_pivots(
    const Matrix& a, std::size_t k, const std::vector<bool>& col_allowed);

// select_pivot_block with a column restriction (1-based mask); greedy may
// return a selection of order below k when the allowed columns run out.
IndexSelection select_pivot_block_restricted(const Matrix& a, std::size_t k,
                                             PivotStrategy strategy,
                                             const std::vector<bool>& col_allowed);

}  // namespace detail

}  // namespace sylv
