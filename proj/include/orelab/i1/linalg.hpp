#pragma once

#include <vector>

#include "orelab/i1/poly.hpp"

namespace orelab::i1 {

using Matrix = std::vector<std::vector<Rational>>;

Matrix zero_matrix(std::size_t rows, std::size_t cols);

struct RowEchelon {
    Matrix rref;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RowEchelon row_reduce(Matrix m, std::size_t cols);
std::size_t rank(const Matrix& m, std::size_t cols);
std::size_t nullity(const Matrix& m, std::size_t cols);

/// Basis of {x | m x = 0}, one vector per free column in ascending order.
std::vector<std::vector<Rational>> nullspace(const Matrix& m, std::size_t cols);

/// Nullspace vector for the first free column with denominators cleared,
/// content removed and the first nonzero entry positive. Empty if the
/// nullspace is trivial.
std::vector<Rational> canonical_null_vector(const Matrix& m, std::size_t cols);

}  // namespace orelab::i1
