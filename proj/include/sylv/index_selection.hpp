#pragma once

#include <cstddef>
#include <vector>

namespace sylv {

// A pivot block of order k inside an n x n matrix: strictly increasing
// 1-based row indices I and column indices J, with their complements kept
// alongside.  Valid selections satisfy 1 <= k <= n-1.
class IndexSelection {
public:
    static IndexSelection make(std::vector<std::size_t> rows, std::vector<std::size_t> cols,
                               std::size_t n);
    // The leading block: I = J = (1, ..., k).
    static IndexSelection leading(std::size_t k, std::size_t n);

    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return rows_.size(); }

    const std::vector<std::size_t>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& cols() const noexcept { return cols_; }
    const std::vector<std::size_t>& row_complement() const noexcept { return row_comp_; }
    const std::vector<std::size_t>& col_complement() const noexcept { return col_comp_; }

    bool contains_row(std::size_t p) const;
    bool contains_col(std::size_t q) const;

private:
    IndexSelection() = default;

    std::size_t n_ = 0;
    std::vector<std::size_t> rows_;
    std::vector<std::size_t> cols_;
    std::vector<std::size_t> row_comp_;
    std::vector<std::size_t> col_comp_;
};

}  // namespace sylv
