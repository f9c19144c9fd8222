#include "sylv/index_selection.hpp"

#include "sylv/error.hpp"

#include <algorithm>

namespace sylv {

namespace {

void validate_list(const std::vector<std::size_t>& v, std::size_t n, const char* what) {
    if (v.empty()) throw Error(Errc::invalid_argument, std::string(what) + " list is empty");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1 || v[i] > n)
            throw Error(Errc::invalid_argument, std::string(what) + " index out of range");
        if (i > 0 && v[i] <= v[i - 1])
            throw Error(Errc::invalid_argument,
                        std::string(what) + " indices must be strictly increasing");
    }
}

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& v, std::size_t n) {
    std::vector<std::size_t> out;
    out.reserve(n - v.size());
    std::size_t pos = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (pos < v.size() && v[pos] == i) {
            ++pos;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace

IndexSelection IndexSelection::make(std::vector<std::size_t> rows, std::vector<std::size_t> cols,
                                    std::size_t n) {
    if (n < 2) throw Error(Errc::invalid_argument, "selection requires order >= 2");
    validate_list(rows, n, "row");
    validate_list(cols, n, "column");
    if (rows.size() != cols.size())
        throw Error(Errc::invalid_argument, "row and column lists differ in length");
    if (rows.size() > n - 1)
        throw Error(Errc::invalid_argument, "block order must be at most n-1");
    IndexSelection sel;
    sel.n_ = n;
    sel.rows_ = std::move(rows);
    sel.cols_ = std::move(cols);
    sel.row_comp_ = complement_of(sel.rows_, n);
    sel.col_comp_ = complement_of(sel.cols_, n);
    return sel;
}

IndexSelection IndexSelection::leading(std::size_t k, std::size_t n) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i + 1;
    std::vector<std::size_t> cols = idx;
    return make(std::move(idx), std::move(cols), n);
}

bool IndexSelection::contains_row(std::size_t p) const {
    return std::binary_search(rows_.begin(), rows_.end(), p);
}

bool IndexSelection::contains_col(std::size_t q) const {
    return std::binary_search(cols_.begin(), cols_.end(), q);
}

}  // namespace sylv
