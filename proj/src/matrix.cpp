#include "sylv/matrix.hpp"

#include "sylv/error.hpp"

#include <utility>

namespace sylv {

Matrix::Matrix(std::size_t rows, std::size_t cols, Backend backend)
    : rows_(rows), cols_(cols), backend_(backend) {
    if (rows == 0 || cols == 0)
        throw Error(Errc::invalid_argument, "matrix dimensions must be positive");
    data_.assign(rows * cols, Scalar::zero(backend));
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw Error(Errc::invalid_argument, "matrix dimensions must be positive");
    Backend b = rows.front().front().backend();
    Matrix m(rows.size(), rows.front().size(), b);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw Error(Errc::invalid_argument, "ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long long>> rows,
                         Backend backend) {
    if (rows.size() == 0 || rows.begin()->size() == 0)
        throw Error(Errc::invalid_argument, "matrix dimensions must be positive");
    Matrix m(rows.size(), rows.begin()->size(), backend);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != m.cols_) throw Error(Errc::invalid_argument, "ragged matrix rows");
        std::size_t c = 0;
        for (long long v : row) m(r, c++) = Scalar::from_int(v, backend);
        ++r;
    }
    return m;
}

Matrix Matrix::identity(std::size_t n, Backend backend) {
    Matrix m(n, n, backend);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(backend);
    return m;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error(Errc::invalid_argument, "matrix index out of range");
    return (*this)(r, c);
}

void Matrix::set(std::size_t r, std::size_t c, Scalar v) {
    if (r >= rows_ || c >= cols_) throw Error(Errc::invalid_argument, "matrix index out of range");
    if (v.backend() != backend_)
        throw Error(Errc::backend_mismatch, "entry backend does not match matrix backend");
    (*this)(r, c) = std::move(v);
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.backend_ != b.backend_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (a.data_[i] != b.data_[i]) return false;
    return true;
}

std::vector<Scalar> vector_from_ints(std::initializer_list<long long> entries, Backend backend) {
    std::vector<Scalar> v;
    v.reserve(entries.size());
    for (long long e : entries) v.push_back(Scalar::from_int(e, backend));
    return v;
}

}  // namespace sylv
