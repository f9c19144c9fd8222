#include "sylv/solver.hpp"

#include "sylv/error.hpp"
#include "sylv/parallel.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace sylv {

namespace {

void validate_system(const Matrix& a, const std::vector<Scalar>& b) {
    if (!a.is_square()) throw Error(Errc::invalid_argument, "coefficient matrix must be square");
    if (b.size() != a.rows())
        throw Error(Errc::invalid_argument, "right-hand side length does not match order");
    for (const Scalar& v : b)
        if (v.backend() != a.backend())
            throw Error(Errc::backend_mismatch, "right-hand side backend does not match matrix");
}

std::vector<std::size_t> normalize_targets(const std::vector<std::size_t>& targets,
                                           std::size_t n) {
    if (targets.empty()) throw Error(Errc::invalid_argument, "target list is empty");
    std::vector<std::size_t> out = targets;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.front() < 1 || out.back() > n)
        throw Error(Errc::invalid_argument, "target index out of range");
    return out;
}

std::vector<Scalar> back_substitute(const Matrix& u, const std::vector<Scalar>& d,
                                    OpCounter& counter) {
    std::size_t n = u.rows();
    std::vector<Scalar> x(n, Scalar::zero(u.backend()));
    for (std::size_t ii = n; ii-- > 0;) {
        Scalar acc = d[ii];
        for (std::size_t j = ii + 1; j < n; ++j)
            acc = scalar_sub(acc, scalar_mul(u(ii, j), x[j], counter), counter);
        x[ii] = scalar_div(acc, u(ii, ii), counter);
    }
    return x;
}

std::vector<Scalar> solve_gaussian(Matrix c, std::vector<Scalar> d, OpCounter& counter) {
    std::size_t n = c.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs_less(c(pr, col), c(r, col))) pr = r;
        if (c(pr, col).is_zero()) throw Error(Errc::singular, "terminal system is singular");
        if (pr != col) {
            for (std::size_t cc = col; cc < n; ++cc) std::swap(c(col, cc), c(pr, cc));
            std::swap(d[col], d[pr]);
        }
        const Scalar pivot = c(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            Scalar factor = scalar_div(c(r, col), pivot, counter);
            for (std::size_t cc = col + 1; cc < n; ++cc)
                c(r, cc) = scalar_sub(c(r, cc), scalar_mul(factor, c(col, cc), counter), counter);
            d[r] = scalar_sub(d[r], scalar_mul(factor, d[col], counter), counter);
        }
    }
    return back_substitute(c, d, counter);
}

std::vector<Scalar> solve_cramer(const Matrix& c, const std::vector<Scalar>& d,
                                 OpCounter& counter) {
    std::size_t n = c.rows();
    Scalar det = detail::det_gauss(c, counter);
    if (det.is_zero()) throw Error(Errc::singular, "terminal system is singular");
    std::vector<Scalar> x;
    x.reserve(n);
    for (std::size_t col = 0; col < n; ++col) {
        Matrix scratch = c;
        for (std::size_t r = 0; r < n; ++r) scratch(r, col) = d[r];
        Scalar det_col = detail::det_gauss(std::move(scratch), counter);
        x.push_back(scalar_div(det_col, det, counter));
    }
    return x;
}

struct Stage {
    Matrix coeff;
    std::vector<Scalar> rhs;
    std::vector<std::size_t> labels;
};

// One restricted pivot search.  Leading blocks shrink until nonsingular;
// greedy returns whatever rank it finds.  nullopt means no usable pivot.
std::optional<IndexSelection> pick_block(const Matrix& cur, std::size_t step,
                                         PivotStrategy strategy,
                                         const std::vector<bool>& allowed) {
    for (std::size_t s = step; s >= 1; --s) {
        try {
            return detail::select_pivot_block_restricted(cur, s, strategy, allowed);
        } catch (const Error& e) {
            if (e.code() == Errc::singular && s > 1) continue;
            if (e.code() == Errc::singular || e.code() == Errc::rank_deficient) return std::nullopt;
            throw;
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<Scalar> condense_rhs(const Matrix& a, const std::vector<Scalar>& b,
                                 const IndexSelection& sel, OpCounter& counter) {
    validate_system(a, b);
    if (sel.n() != a.rows())
        throw Error(Errc::invalid_argument, "selection order does not match matrix order");
    Matrix block = extract_submatrix(a, sel.rows(), sel.cols());
    Scalar block_det = detail::det_gauss(block, counter);
    const auto& rows = sel.rows();
    const auto& comp_rows = sel.row_complement();
    std::size_t k = sel.k();
    std::vector<Scalar> out;
    out.reserve(comp_rows.size());
    for (std::size_t p : comp_rows) {
        std::vector<Scalar> cofs = detail::block_cofactors(a, block, sel.cols(), p, counter);
        Scalar acc = scalar_mul(cofs[0], b[rows[0] - 1], counter);
        for (std::size_t t = 1; t < k; ++t)
            acc = scalar_add(acc, scalar_mul(cofs[t], b[rows[t] - 1], counter), counter);
        acc = scalar_add(acc, scalar_mul(block_det, b[p - 1], counter), counter);
        out.push_back(std::move(acc));
    }
    return out;
}

CondensedSystem condense_system(const Matrix& a, const std::vector<Scalar>& b,
                                const IndexSelection& sel, OpCounter& counter, unsigned workers) {
    validate_system(a, b);
    auto core = detail::condense_core(a, &b, sel, counter, workers, true);
    return CondensedSystem{std::move(core.condensed), std::move(core.rhs), sel.col_complement()};
}

std::vector<Scalar> terminal_solve(const Matrix& c, const std::vector<Scalar>& d,
                                   TerminalMethod method, OpCounter& counter) {
    validate_system(c, d);
    if (method == TerminalMethod::gaussian) return solve_gaussian(c, d, counter);
    return solve_cramer(c, d, counter);
}

Solution solve_for(const Matrix& a, const std::vector<Scalar>& b,
                   const std::vector<std::size_t>& targets, const SolveOptions& opts,
                   OpCounter& counter) {
    validate_system(a, b);
    if (opts.block < 1) throw Error(Errc::invalid_argument, "block order must be at least 1");
    std::size_t n = a.rows();
    std::vector<std::size_t> want = normalize_targets(targets, n);
    std::vector<bool> is_target(n + 1, false);
    for (std::size_t t : want) is_target[t] = true;

    Stage stage{a, b, {}};
    stage.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) stage.labels[i] = i + 1;

    // Condense away non-target unknowns until only a terminal block is left.
    for (;;) {
        std::size_t size = stage.coeff.rows();
        std::size_t floor = std::max<std::size_t>(want.size(), 4);
        if (size <= floor) break;
        std::size_t step = std::min(opts.block, size - want.size());
        std::vector<bool> allowed(size + 1, false);
        std::size_t avail = 0;
        for (std::size_t pos = 1; pos <= size; ++pos) {
            if (!is_target[stage.labels[pos - 1]]) {
                allowed[pos] = true;
                ++avail;
            }
        }
        step = std::min(step, avail);
        if (step == 0) break;
        std::optional<IndexSelection> sel =
            pick_block(stage.coeff, step, opts.pivot, allowed);
        if (!sel) break;  // let the terminal solve report singularity

        auto core =
            detail::condense_core(stage.coeff, &stage.rhs, *sel, counter, opts.workers, true);
        auto scaled = normalize_rows(core.condensed, core.rhs, core.block_det, counter);
        std::vector<std::size_t> labels;
        labels.reserve(sel->col_complement().size());
        for (std::size_t q : sel->col_complement()) labels.push_back(stage.labels[q - 1]);
        stage.coeff = std::move(scaled.first);
        stage.rhs = std::move(scaled.second);
        stage.labels = std::move(labels);
    }

    std::vector<Scalar> x = terminal_solve(stage.coeff, stage.rhs, opts.terminal, counter);
    Solution out;
    for (std::size_t i = 0; i < stage.labels.size(); ++i)
        if (is_target[stage.labels[i]]) out.values.emplace(stage.labels[i], x[i]);
    return out;
}

Solution solve_all(const Matrix& a, const std::vector<Scalar>& b, std::size_t group_size,
                   const SolveOptions& opts, OpCounter& counter) {
    validate_system(a, b);
    if (group_size < 1) throw Error(Errc::invalid_argument, "group size must be at least 1");
    std::size_t n = a.rows();
    std::size_t groups = (n + group_size - 1) / group_size;

    std::vector<Solution> partial(groups);
    std::vector<OpCounter> group_counters(groups);
    SolveOptions inner = opts;
    if (groups > 1) inner.workers = 1;  // groups are the unit of parallelism

    run_chunked(groups, opts.workers, [&](std::size_t begin, std::size_t end, unsigned) {
        for (std::size_t g = begin; g < end; ++g) {
            std::vector<std::size_t> targets;
            for (std::size_t u = g * group_size + 1; u <= std::min(n, (g + 1) * group_size); ++u)
                targets.push_back(u);
            partial[g] = solve_for(a, b, targets, inner, group_counters[g]);
        }
    });

    Solution out;
    for (std::size_t g = 0; g < groups; ++g) {
        counter.merge(group_counters[g]);
        for (auto& [label, value] : partial[g].values) out.values.emplace(label, std::move(value));
    }
    return out;
}

}  // namespace sylv
