#pragma once

#include "sylv/condense.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace sylv {

// Parameters of the multiplication-count model for block condensation:
// n is the matrix order, k the block order, m the multiplication cost charged
// for one order-k determinant.
struct CostModelParams {
    std::size_t n = 0;
    std::size_t k = 1;
    std::uint64_t m = 1;
};

// Default determinant cost: round(k^3 / 3), never below 1.
std::uint64_t default_block_det_cost(std::size_t k);

// Predicted multiplications/divisions for condensing an order-n matrix down
// with blocks of order k.  The stage sizes n, n-k, n-2k, ... fold their
// remainder into the last full stage so the model stays monotone in n.
std::uint64_t model_mult_cost(const CostModelParams& p);

// Matching addition/subtraction count (k additions per condensed entry plus
// the determinant work).
std::uint64_t model_add_cost(const CostModelParams& p);

// Classic direct-method costs for an order-n determinant.
struct ReferenceCosts {
    std::uint64_t gaussian_mul_div = 0;  // ~ n^3 / 3
    std::uint64_t order1_mul_div = 0;    // order-1 condensation, ~ 2 n^3 / 3
    std::uint64_t add_sub = 0;           // ~ n^3 / 3, shared by both
};

ReferenceCosts reference_costs(std::size_t n);

// Block order minimizing the model cost for order n, searched over
// 1 <= k <= min(n-1, 64); ties break toward the smaller k.  A custom
// determinant cost replaces round(k^3/3); count_adds folds the addition
// model into the objective.
std::size_t optimal_k(std::size_t n,
                      const std::function<std::uint64_t(std::size_t)>& det_cost = {},
                      bool count_adds = false);

// Measured float64 condensation counts against the model.
struct BenchReport {
    std::size_t n = 0;
    std::size_t k = 1;
    std::uint64_t measured_mul = 0;
    std::uint64_t measured_add = 0;
    std::uint64_t model_mul = 0;
    double deviation = 0.0;  // measured_mul / model_mul - 1
};

BenchReport run_benchmark(std::size_t n, std::size_t k, std::uint64_t seed, unsigned workers = 1);

std::string to_json(const BenchReport& r);

}  // namespace sylv
