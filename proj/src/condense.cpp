#include "sylv/condense.hpp"

#include "sylv/error.hpp"
#include "sylv/parallel.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>

namespace sylv {

namespace {

void require_square(const Matrix& a, const char* what) {
    if (!a.is_square()) throw Error(Errc::invalid_argument, std::string(what) + ": matrix must be square");
}

void require_selection_fits(const Matrix& a, const IndexSelection& sel) {
    if (sel.n() != a.rows())
        throw Error(Errc::invalid_argument, "selection order does not match matrix order");
}

}  // namespace

Matrix extract_submatrix(const Matrix& a, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
    if (rows.empty() || cols.empty())
        throw Error(Errc::invalid_argument, "submatrix index lists must be nonempty");
    for (std::size_t r : rows)
        if (r < 1 || r > a.rows()) throw Error(Errc::invalid_argument, "row index out of range");
    for (std::size_t c : cols)
        if (c < 1 || c > a.cols()) throw Error(Errc::invalid_argument, "column index out of range");
    Matrix out(rows.size(), cols.size(), a.backend());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(rows[i] - 1, cols[j] - 1);
    return out;
}

Scalar condensed_entry(const Matrix& a, const IndexSelection& sel, std::size_t p, std::size_t q) {
    require_square(a, "condensed_entry");
    require_selection_fits(a, sel);
    if (p < 1 || p > sel.n() || sel.contains_row(p))
        throw Error(Errc::invalid_argument, "row index must lie outside the selection");
    if (q < 1 || q > sel.n() || sel.contains_col(q))
        throw Error(Errc::invalid_argument, "column index must lie outside the selection");
    std::size_t k = sel.k();
    Matrix bordered(k + 1, k + 1, a.backend());
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) bordered(i, j) = a(sel.rows()[i] - 1, sel.cols()[j] - 1);
        bordered(i, k) = a(sel.rows()[i] - 1, q - 1);
    }
    for (std::size_t j = 0; j < k; ++j) bordered(k, j) = a(p - 1, sel.cols()[j] - 1);
    bordered(k, k) = a(p - 1, q - 1);
    OpCounter scratch;
    return detail::det_gauss(std::move(bordered), scratch);
}

RowCofactors row_cofactors(const Matrix& a, const IndexSelection& sel, std::size_t p,
                           OpCounter& counter) {
    require_square(a, "row_cofactors");
    require_selection_fits(a, sel);
    if (p < 1 || p > sel.n() || sel.contains_row(p))
        throw Error(Errc::invalid_argument, "row index must lie outside the selection");
    Matrix block = extract_submatrix(a, sel.rows(), sel.cols());
    RowCofactors rc;
    rc.row = p;
    rc.det_block = detail::det_gauss(block, counter);
    rc.cof = detail::block_cofactors(a, block, sel.cols(), p, counter);
    return rc;
}

Matrix condense(const Matrix& a, const IndexSelection& sel, OpCounter& counter, unsigned workers) {
    return detail::condense_core(a, nullptr, sel, counter, workers).condensed;
}

Matrix chio_condense(const Matrix& a, OpCounter& counter) {
    require_square(a, "chio_condense");
    std::size_t n = a.rows();
    if (n < 2) throw Error(Errc::invalid_argument, "chio_condense requires order >= 2");
    Matrix out(n - 1, n - 1, a.backend());
    const Scalar& corner = a(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = 0; j + 1 < n; ++j) {
            Scalar lhs = scalar_mul(a(i, j), corner, counter);
            Scalar rhs = scalar_mul(a(i, n - 1), a(n - 1, j), counter);
            out(i, j) = scalar_sub(lhs, rhs, counter);
        }
    }
    return out;
}

std::pair<Matrix, std::vector<Scalar>> normalize_rows(const Matrix& c,
                                                      const std::vector<Scalar>& rhs,
                                                      const Scalar& det_block,
                                                      OpCounter& counter) {
    if (det_block.backend() != c.backend())
        throw Error(Errc::backend_mismatch, "divisor backend does not match matrix backend");
    if (det_block.is_zero())
        throw Error(Errc::division_by_zero, "cannot normalize rows by a zero block determinant");
    if (!rhs.empty() && rhs.size() != c.rows())
        throw Error(Errc::invalid_argument, "right-hand side length does not match row count");
    Matrix out(c.rows(), c.cols(), c.backend());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            out(i, j) = scalar_div(c(i, j), det_block, counter);
    std::vector<Scalar> rhs_out;
    rhs_out.reserve(rhs.size());
    for (const Scalar& v : rhs) rhs_out.push_back(scalar_div(v, det_block, counter));
    return {std::move(out), std::move(rhs_out)};
}

IndexSelection select_pivot_block(const Matrix& a, std::size_t k, PivotStrategy strategy) {
    require_square(a, "select_pivot_block");
    std::vector<bool> allowed(a.cols() + 1, true);
    IndexSelection sel = detail::select_pivot_block_restricted(a, k, strategy, allowed);
    if (sel.k() < k)
        throw Error(Errc::rank_deficient, "no nonsingular pivot block of the requested order");
    return sel;
}

Scalar determinant(const Matrix& a, std::size_t k, PivotStrategy strategy, OpCounter& counter,
                   unsigned workers) {
    require_square(a, "determinant");
    std::size_t n = a.rows();
    if (k < 1) throw Error(Errc::invalid_argument, "block order must be at least 1");
    if (n > 1 && k > n - 1)
        throw Error(Errc::invalid_argument, "block order must be at most n-1");
    Backend b = a.backend();

    Matrix cur = a;
    std::vector<std::pair<Scalar, std::size_t>> divisors;
    std::optional<Scalar> base;
    bool negate = false;
    const std::size_t terminal = std::max<std::size_t>(k, 3);
    for (;;) {
        std::size_t s = cur.rows();
        if (s <= terminal) {
            base = s <= 3 ? detail::det_cofactor(cur, counter)
                          : detail::det_gauss(cur, counter);
            break;
        }
        std::optional<IndexSelection> sel;
        try {
            sel = select_pivot_block(cur, k, strategy);
        } catch (const Error& e) {
            // greedy proving rank < k proves a zero determinant
            if (e.code() == Errc::rank_deficient) return Scalar::zero(b);
            throw;
        }
        // Moving the selected rows and columns to the front is a pair of
        // shuffle permutations; their parity enters the determinant.
        std::size_t shift = 0;
        for (std::size_t t = 0; t < k; ++t)
            shift += (sel->rows()[t] - (t + 1)) + (sel->cols()[t] - (t + 1));
        negate ^= (shift & 1) != 0;
        auto core = detail::condense_core(cur, nullptr, *sel, counter, workers);
        divisors.emplace_back(core.block_det, s - k - 1);
        cur = std::move(core.condensed);
    }

    if (negate) *base = base->negated();
    if (b == Backend::float64) {
        // Divide stage by stage, newest first, to keep magnitudes in check.
        // A divisor that reached exact zero (underflow) leaves nothing to
        // recover; poison with NaN rather than report a confident value.
        for (auto it = divisors.rbegin(); it != divisors.rend(); ++it) {
            if (it->first.is_zero()) {
                *base = Scalar(std::numeric_limits<double>::quiet_NaN());
                continue;
            }
            for (std::size_t e = 0; e < it->second; ++e)
                *base = scalar_div(*base, it->first, counter);
        }
        return *base;
    }
    // Exact backend: a single division by the accumulated power product.
    std::optional<Scalar> acc;
    for (const auto& [d, e] : divisors) {
        for (std::size_t i = 0; i < e; ++i) {
            if (acc)
                *acc = scalar_mul(*acc, d, counter);
            else
                acc = d;
        }
    }
    if (!acc) return *base;
    return scalar_div(*base, *acc, counter);
}

namespace detail {

Scalar det_gauss(Matrix scratch, OpCounter& counter) {
    if (!scratch.is_square())
        throw Error(Errc::invalid_argument, "det_gauss: matrix must be square");
    std::size_t n = scratch.rows();
    Backend b = scratch.backend();
    std::optional<Scalar> det;
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs_less(scratch(pr, col), scratch(r, col))) pr = r;
        if (scratch(pr, col).is_zero()) return Scalar::zero(b);
        if (pr != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(scratch(col, c), scratch(pr, c));
            negate = !negate;
        }
        Scalar pivot = scratch(col, col);
        det = det ? scalar_mul(*det, pivot, counter) : pivot;
        for (std::size_t r = col + 1; r < n; ++r) {
            Scalar factor = scalar_div(scratch(r, col), pivot, counter);
            for (std::size_t c = col + 1; c < n; ++c)
                scratch(r, c) =
                    scalar_sub(scratch(r, c), scalar_mul(factor, scratch(col, c), counter), counter);
        }
    }
    return negate ? det->negated() : *det;
}

Scalar det_cofactor(const Matrix& a, OpCounter& counter) {
    if (!a.is_square())
        throw Error(Errc::invalid_argument, "det_cofactor: matrix must be square");
    std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    if (n == 2) {
        Scalar lhs = scalar_mul(a(0, 0), a(1, 1), counter);
        Scalar rhs = scalar_mul(a(0, 1), a(1, 0), counter);
        return scalar_sub(lhs, rhs, counter);
    }
    std::optional<Scalar> acc;
    Matrix minor(n - 1, n - 1, a.backend());
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t mc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, mc++) = a(r, c);
            }
        }
        Scalar term = scalar_mul(a(0, j), det_cofactor(minor, counter), counter);
        if (!acc)
            acc = term;
        else if (j % 2 == 1)
            *acc = scalar_sub(*acc, term, counter);
        else
            *acc = scalar_add(*acc, term, counter);
    }
    return *acc;
}

// Cofactors of one source row against a fixed pivot block.  scratch reuse is
// deliberate: each cofactor is det of the block with one row swapped out.
std::vector<Scalar> block_cofactors(const Matrix& a, const Matrix& block,
                                    const std::vector<std::size_t>& cols, std::size_t p,
                                    OpCounter& counter) {
    std::size_t k = block.rows();
    std::vector<Scalar> replacement(k);
    for (std::size_t j = 0; j < k; ++j) replacement[j] = a(p - 1, cols[j] - 1);
    std::vector<Scalar> cofs(k);
    for (std::size_t t = 0; t < k; ++t) {
        Matrix scratch = block;
        for (std::size_t j = 0; j < k; ++j) scratch(t, j) = replacement[j];
        cofs[t] = det_gauss(std::move(scratch), counter).negated();
    }
    return cofs;
}

CondenseResult condense_core(const Matrix& a, const std::vector<Scalar>* rhs,
                             const IndexSelection& sel, OpCounter& counter, unsigned workers,
                             bool require_nonsingular_block) {
    require_square(a, "condense");
    require_selection_fits(a, sel);
    if (rhs) {
        if (rhs->size() != a.rows())
            throw Error(Errc::invalid_argument, "right-hand side length does not match order");
        for (const Scalar& v : *rhs)
            if (v.backend() != a.backend())
                throw Error(Errc::backend_mismatch, "right-hand side backend does not match matrix");
    }

    std::size_t k = sel.k();
    const auto& rows = sel.rows();
    const auto& comp_rows = sel.row_complement();
    const auto& comp_cols = sel.col_complement();
    std::size_t m = comp_rows.size();
    Backend b = a.backend();

    Matrix block = extract_submatrix(a, rows, sel.cols());
    OpCounter block_counter;  // block determinant is computed once per stage
    Scalar block_det = det_gauss(block, block_counter);
    if (require_nonsingular_block && block_det.is_zero()) {
        counter.merge(block_counter);
        throw Error(Errc::singular, "singular pivot block; re-pivot with a different selection");
    }

    CondenseResult result{Matrix(m, m, b), {}, block_det};
    if (rhs) result.rhs.assign(m, Scalar::zero(b));

    std::size_t slots = std::max(1u, workers);
    std::vector<OpCounter> worker_counters(slots);
    run_chunked(m, workers, [&](std::size_t begin, std::size_t end, unsigned worker) {
        OpCounter& ctr = worker_counters[worker];
        for (std::size_t r = begin; r < end; ++r) {
            std::size_t p = comp_rows[r];
            std::vector<Scalar> cofs = block_cofactors(a, block, sel.cols(), p, ctr);
            for (std::size_t s = 0; s < m; ++s) {
                std::size_t q = comp_cols[s] - 1;
                Scalar acc = scalar_mul(cofs[0], a(rows[0] - 1, q), ctr);
                for (std::size_t t = 1; t < k; ++t)
                    acc = scalar_add(acc, scalar_mul(cofs[t], a(rows[t] - 1, q), ctr), ctr);
                acc = scalar_add(acc, scalar_mul(block_det, a(p - 1, q), ctr), ctr);
                result.condensed(r, s) = std::move(acc);
            }
            if (rhs) {
                Scalar acc = scalar_mul(cofs[0], (*rhs)[rows[0] - 1], ctr);
                for (std::size_t t = 1; t < k; ++t)
                    acc = scalar_add(acc, scalar_mul(cofs[t], (*rhs)[rows[t] - 1], ctr), ctr);
                acc = scalar_add(acc, scalar_mul(block_det, (*rhs)[p - 1], ctr), ctr);
                result.rhs[r] = std::move(acc);
            }
        }
    });
    counter.merge(block_counter);
    for (const OpCounter& c : worker_counters) counter.merge(c);
    return result;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> greedy_pivots(
    const Matrix& a, std::size_t k, const std::vector<bool>& col_allowed) {
    std::size_t n = a.rows();
    Matrix scratch = a;
    OpCounter dummy;  // selection work stays off the kernel counters
    std::vector<bool> row_used(n, false), col_used(n, false);
    std::vector<std::size_t> rows, cols;
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t best_r = npos, best_c = npos;
        for (std::size_t r = 0; r < n; ++r) {
            if (row_used[r]) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (col_used[c] || !col_allowed[c + 1]) continue;
                if (scratch(r, c).is_zero()) continue;
                if (best_r == npos || abs_less(scratch(best_r, best_c), scratch(r, c))) {
                    best_r = r;
                    best_c = c;
                }
            }
        }
        if (best_r == npos) {
            // Exact zeros everywhere prove rank < k; stop with what we have.
            // On floats that proof means nothing (underflow produces exact
            // zeros), so fill deterministically and keep going.
            if (a.backend() == Backend::exact) break;
            for (std::size_t r = 0; r < n && best_r == npos; ++r)
                if (!row_used[r])
                    for (std::size_t c = 0; c < n; ++c)
                        if (!col_used[c] && col_allowed[c + 1]) {
                            best_r = r;
                            best_c = c;
                            break;
                        }
            if (best_r == npos) break;
            rows.push_back(best_r + 1);
            cols.push_back(best_c + 1);
            row_used[best_r] = true;
            col_used[best_c] = true;
            continue;  // zero pivot: nothing to eliminate
        }
        rows.push_back(best_r + 1);
        cols.push_back(best_c + 1);
        row_used[best_r] = true;
        col_used[best_c] = true;
        const Scalar& pivot = scratch(best_r, best_c);
        for (std::size_t r = 0; r < n; ++r) {
            if (row_used[r]) continue;
            Scalar factor = scalar_div(scratch(r, best_c), pivot, dummy);
            for (std::size_t c = 0; c < n; ++c) {
                if (col_used[c] || !col_allowed[c + 1]) continue;
                scratch(r, c) =
                    scalar_sub(scratch(r, c), scalar_mul(factor, scratch(best_r, c), dummy), dummy);
            }
        }
    }
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    return {std::move(rows), std::move(cols)};
}

IndexSelection select_pivot_block_restricted(const Matrix& a, std::size_t k,
                                             PivotStrategy strategy,
                                             const std::vector<bool>& col_allowed) {
    std::size_t n = a.rows();
    if (k < 1) throw Error(Errc::invalid_argument, "block order must be at least 1");
    if (k > n - 1) throw Error(Errc::invalid_argument, "block order must be at most n-1");
    if (strategy == PivotStrategy::leading) {
        std::vector<std::size_t> rows(k), cols;
        for (std::size_t i = 0; i < k; ++i) rows[i] = i + 1;
        for (std::size_t c = 1; c <= n && cols.size() < k; ++c)
            if (col_allowed[c]) cols.push_back(c);
        if (cols.size() < k)
            throw Error(Errc::invalid_argument, "not enough admissible columns for the block order");
        IndexSelection sel = IndexSelection::make(std::move(rows), std::move(cols), n);
        Matrix block = extract_submatrix(a, sel.rows(), sel.cols());
        OpCounter dummy;
        if (det_gauss(std::move(block), dummy).is_zero())
            throw Error(Errc::singular, "leading pivot block is singular");
        return sel;
    }
    auto [rows, cols] = greedy_pivots(a, k, col_allowed);
    if (rows.empty())
        throw Error(Errc::rank_deficient, "no nonzero pivot available");
    return IndexSelection::make(std::move(rows), std::move(cols), n);
}

}  // namespace detail

}  // namespace sylv
