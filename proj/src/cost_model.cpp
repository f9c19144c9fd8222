#include "sylv/cost_model.hpp"

#include "sylv/error.hpp"

#include <limits>
#include <random>

namespace sylv {

namespace {

using u128 = unsigned __int128;

std::uint64_t saturate(u128 v) {
    constexpr u128 cap = std::numeric_limits<std::uint64_t>::max();
    return v > cap ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(v);
}

void validate_params(const CostModelParams& p) {
    if (p.n < 2) throw Error(Errc::invalid_argument, "model order must be at least 2");
    if (p.k < 1 || p.k > p.n - 1)
        throw Error(Errc::invalid_argument, "block order must lie in [1, n-1]");
}

// Stage sizes are n, n-k, ..., down to order ~k; the t-th stage from the end
// has n - k - tk rows left.  S2 sums the squared stage sizes, S1 the sizes,
// with the remainder of (n-k)/k folded in so the sums grow monotonically in n.
struct StageSums {
    u128 s2 = 0;
    u128 s1 = 0;
    u128 stages = 0;  // ceil((n-k)/k)
};

StageSums stage_sums(std::size_t n, std::size_t k) {
    u128 span = n - k;
    u128 t = span / k;
    u128 r = span - t * k;
    // sum_{i=1..t} (ik)^2 = k^2 t(t+1)(2t+1)/6, sum_{i=1..t} ik = k t(t+1)/2
    StageSums s;
    s.s2 = (u128)k * k * (t * (t + 1) * (2 * t + 1) / 6) + r * r;
    s.s1 = (u128)k * (t * (t + 1) / 2) + r;
    s.stages = (span + k - 1) / k;
    return s;
}

}  // namespace

std::uint64_t default_block_det_cost(std::size_t k) {
    u128 m = ((u128)k * k * k + 1) / 3;
    return m < 1 ? 1 : saturate(m);
}

std::uint64_t model_mult_cost(const CostModelParams& p) {
    validate_params(p);
    StageSums s = stage_sums(p.n, p.k);
    u128 total = (u128)(p.k + 1) * s.s2 + (u128)p.k * p.m * s.s1 + s.stages * ((u128)p.m + 1) + p.m;
    return saturate(total);
}

std::uint64_t model_add_cost(const CostModelParams& p) {
    validate_params(p);
    StageSums s = stage_sums(p.n, p.k);
    u128 total = (u128)p.k * s.s2 + (u128)p.k * p.m * s.s1 + s.stages * (u128)p.m + p.m;
    return saturate(total);
}

ReferenceCosts reference_costs(std::size_t n) {
    if (n < 1) throw Error(Errc::invalid_argument, "order must be at least 1");
    u128 n3 = (u128)n * n * n;
    ReferenceCosts rc;
    rc.gaussian_mul_div = saturate((n3 + 1) / 3);
    rc.order1_mul_div = saturate((2 * n3 + 1) / 3);
    rc.add_sub = rc.gaussian_mul_div;
    return rc;
}

std::size_t optimal_k(std::size_t n, const std::function<std::uint64_t(std::size_t)>& det_cost,
                      bool count_adds) {
    if (n < 2) throw Error(Errc::invalid_argument, "order must be at least 2");
    std::size_t limit = std::min<std::size_t>(n - 1, 64);
    std::size_t best_k = 1;
    u128 best_cost = ~u128{0};
    for (std::size_t k = 1; k <= limit; ++k) {
        CostModelParams p{n, k, det_cost ? det_cost(k) : default_block_det_cost(k)};
        u128 cost = model_mult_cost(p);
        if (count_adds) cost += model_add_cost(p);
        if (cost < best_cost) {
            best_cost = cost;
            best_k = k;
        }
    }
    return best_k;
}

BenchReport run_benchmark(std::size_t n, std::size_t k, std::uint64_t seed, unsigned workers) {
    CostModelParams params{n, k, default_block_det_cost(k)};
    validate_params(params);
    std::mt19937_64 rng(seed);
    // Magnitudes in [1,2]: entries of the raw condensation then grow rather
    // than underflow, so every stage performs its full complement of work and
    // the measured counts stay comparable across runs.
    std::uniform_real_distribution<double> mag(1.0, 2.0);
    Matrix a(n, n, Backend::float64);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            double m = mag(rng);
            a(r, c) = Scalar(rng() & 1 ? m : -m);
        }

    OpCounter counter;
    determinant(a, k, PivotStrategy::greedy, counter, workers);

    BenchReport rep;
    rep.n = n;
    rep.k = k;
    rep.measured_mul = counter.mul_div;
    rep.measured_add = counter.add_sub;
    rep.model_mul = model_mult_cost(params);
    rep.deviation =
        static_cast<double>(rep.measured_mul) / static_cast<double>(rep.model_mul) - 1.0;
    return rep;
}

std::string to_json(const BenchReport& r) {
    std::string out = "{\"n\":" + std::to_string(r.n);
    out += ",\"k\":" + std::to_string(r.k);
    out += ",\"measured_mul\":" + std::to_string(r.measured_mul);
    out += ",\"measured_add\":" + std::to_string(r.measured_add);
    out += ",\"model_mul\":" + std::to_string(r.model_mul);
    out += ",\"deviation\":" + format_double(r.deviation);
    out += "}";
    return out;
}

}  // namespace sylv
