#pragma once

// Dense square matrices over the exact ring, with fraction-free elimination.

#include <cstddef>
#include <vector>

#include "octa/algebra.hpp"

namespace octa {

using Matrix = std::vector<std::vector<Value>>;

Matrix identity_matrix(std::size_t n, Kind kind);

// Bareiss fraction-free elimination with row pivoting; every division is exact.
Value bareiss_determinant(Matrix m);

// Rank by fraction-free elimination (integral-domain entries).
std::size_t rank(Matrix m);

// Delete the listed rows and columns (each list sorted ascending, no repeats).
Matrix submatrix_without(const Matrix& m, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols);

Matrix transpose(const Matrix& m);

}  // namespace octa
