#pragma once

#include "sylv/matrix.hpp"

// Shared worked examples with known-by-hand results.
namespace fixtures {

// 4x4 integer matrix with determinant -217.  Condensing on the leading 2x2
// block (determinant 10) gives [[36, 58], [61, 38]].
inline sylv::Matrix det4(sylv::Backend b = sylv::Backend::exact) {
    return sylv::Matrix::from_ints(
        {
            {1, -2, 3, 1},
            {4, 2, -1, 0},
            {0, 2, 1, 5},
            {-3, 3, 1, 2},
        },
        b);
}

// 6x6 system A x = b with the exact solution
//   x = (4/13, 406/117, -10, 22/3, -118/117, -7/39).
// Condensing rows (1,2,3) against columns (1,3,5) (block determinant 90)
// leaves unknowns (2,4,6) with coefficients [[0,-36,-468],[0,0,-1755],
// [390,-234,-2132]] and right-hand side [-180,315,20].
inline sylv::Matrix sys6_a(sylv::Backend b = sylv::Backend::exact) {
    return sylv::Matrix::from_ints(
        {
            {1, 3, 5, 7, 9, 11},
            {2, 0, 0, 0, 0, 9},
            {3, 0, 5, 7, 0, 7},
            {4, 0, 6, 8, 0, 5},
            {5, 0, 0, 0, 0, 3},
            {6, 5, 4, 3, 2, 1},
        },
        b);
}

inline std::vector<sylv::Scalar> sys6_b(sylv::Backend b = sylv::Backend::exact) {
    return sylv::vector_from_ints({1, -1, 1, -1, 1, -1}, b);
}

}  // namespace fixtures
