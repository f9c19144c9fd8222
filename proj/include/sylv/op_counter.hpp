#pragma once

#include <cstdint>
#include <vector>

namespace sylv {

// Tally of arithmetic work done by the condensation kernels.  Multiplications
// and divisions share one bucket, additions and subtractions the other.
struct OpCounter {
    std::uint64_t mul_div = 0;
    std::uint64_t add_sub = 0;

    void merge(const OpCounter& o) noexcept {
        mul_div += o.mul_div;
        add_sub += o.add_sub;
    }

    std::uint64_t total() const noexcept { return mul_div + add_sub; }

    friend bool operator==(const OpCounter& a, const OpCounter& b) noexcept {
        return a.mul_div == b.mul_div && a.add_sub == b.add_sub;
    }
};

// Folds per-worker counters in index order.
inline OpCounter counter_merge(const std::vector<OpCounter>& parts) noexcept {
    OpCounter out;
    for (const auto& p : parts) out.merge(p);
    return out;
}

}  // namespace sylv
