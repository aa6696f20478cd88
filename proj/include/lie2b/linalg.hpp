#pragma once

#include "lie2b/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lie2b {

/// Dense row-major rational matrix.
using Matrix = std::vector<std::vector<Scalar>>;

Matrix zero_matrix(std::size_t rows, std::size_t cols);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols);

/// Basis of {v : m v = 0}, one vector per free column.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m, std::size_t cols);

/// Some solution of m v = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b, std::size_t cols);

std::size_t rank(const Matrix& m, std::size_t cols);

} // namespace lie2b
