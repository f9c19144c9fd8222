#pragma once

#include "sylv/condense.hpp"
#include "sylv/index_selection.hpp"
#include "sylv/matrix.hpp"
#include "sylv/op_counter.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace sylv {

// A condensed linear system.  unknown_labels[i] is the 1-based index, in the
// original system, of the unknown belonging to column i.
struct CondensedSystem {
    Matrix coeff;
    std::vector<Scalar> rhs;
    std::vector<std::size_t> unknown_labels;
};

enum class TerminalMethod { gaussian, cramer };

// Variable assignments keyed by original 1-based unknown index.
struct Solution {
    std::map<std::size_t, Scalar> values;
};

struct SolveOptions {
    std::size_t block = 3;
    PivotStrategy pivot = PivotStrategy::greedy;
    TerminalMethod terminal = TerminalMethod::gaussian;
    unsigned workers = 1;
};

// Right-hand side of the condensed system: entry r is the pivot block
// bordered by the original right-hand side column and row p (the r-th row
// outside the selection).
std::vector<Scalar> condense_rhs(const Matrix& a, const std::vector<Scalar>& b,
                                 const IndexSelection& sel, OpCounter& counter);

// One condensation stage of A x = b.  The eliminated unknowns are the ones
// picked by the selection's columns; the surviving unknowns keep their
// original labels.  A singular pivot block is an error (re-pivot and retry).
CondensedSystem condense_system(const Matrix& a, const std::vector<Scalar>& b,
                                const IndexSelection& sel, OpCounter& counter,
                                unsigned workers = 1);

// Direct dense solve of the terminal system.
std::vector<Scalar> terminal_solve(const Matrix& c, const std::vector<Scalar>& d,
                                   TerminalMethod method, OpCounter& counter);

// Solves for the target unknowns only (1-based original indices): condenses
// away non-target unknowns block by block, then solves the terminal system.
Solution solve_for(const Matrix& a, const std::vector<Scalar>& b,
                   const std::vector<std::size_t>& targets, const SolveOptions& opts,
                   OpCounter& counter);

// Full solution assembled from independent solve_for passes over groups of
// unknowns of the given size.  Groups run in parallel when opts.workers > 1;
// per-group counters merge in group order.
Solution solve_all(const Matrix& a, const std::vector<Scalar>& b, std::size_t group_size,
                   const SolveOptions& opts, OpCounter& counter);

}  // namespace sylv
