#pragma once

#include "sylv/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace sylv {

// Dense row-major matrix over a single scalar backend.  Storage is 0-based;
// the condensation API speaks 1-based indices and converts at the boundary.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Backend backend);

    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static Matrix from_ints(std::initializer_list<std::initializer_list<long long>> rows,
                            Backend backend);
    static Matrix identity(std::size_t n, Backend backend);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Backend backend() const noexcept { return backend_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const Scalar& at(std::size_t r, std::size_t c) const;
    // Bounds- and backend-checked store.
    void set(std::size_t r, std::size_t c, Scalar v);

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_;
    std::size_t cols_;
    Backend backend_;
    std::vector<Scalar> data_;
};

// Column vector with the same backend discipline.
std::vector<Scalar> vector_from_ints(std::initializer_list<long long> entries, Backend backend);

}  // namespace sylv
