#include "lie2b/linalg.hpp"

#include <utility>

namespace lie2b {

Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, std::vector<Scalar>(cols, Scalar(0))); }

std::vector<std::size_t> rref(Matrix& m, std::size_t cols)
{
	std::vector<std::size_t> pivots;
	std::size_t row = 0;
	for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
		std::size_t p = row;
		while (p < m.size() && is_zero(m[p][c]))
			++p;
		if (p == m.size())
			continue;
		std::swap(m[p], m[row]);
		Scalar inv = 1 / m[row][c];
		for (auto& v : m[row])
			v *= inv;
		for (std::size_t r = 0; r < m.size(); ++r) {
			if (r == row || is_zero(m[r][c]))
				continue;
			Scalar f = m[r][c];
			for (std::size_t k = c; k < m[r].size(); ++k)
				m[r][k] -= f * m[row][k];
		}
		pivots.push_back(c);
		++row;
	}
	return pivots;
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m, std::size_t cols)
{
	Matrix a = m;
	auto pivots = rref(a, cols);
	std::vector<bool> is_pivot(cols, false);
	for (auto p : pivots)
		is_pivot[p] = true;
	std::vector<std::vector<Scalar>> basis;
	for (std::size_t f = 0; f < cols; ++f) {
		if (is_pivot[f])
			continue;
		std::vector<Scalar> v(cols, Scalar(0));
		v[f] = 1;
		for (std::size_t r = 0; r < pivots.size(); ++r)
			v[pivots[r]] = -a[r][f];
		basis.push_back(std::move(v));
	}
	return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b, std::size_t cols)
{
	Matrix a = m;
	for (std::size_t r = 0; r < a.size(); ++r) {
		a[r].resize(cols);
		a[r].push_back(b[r]);
	}
	auto pivots = rref(a, cols + 1);
	if (!pivots.empty() && pivots.back() == cols)
		return std::nullopt;
	std::vector<Scalar> x(cols, Scalar(0));
	for (std::size_t r = 0; r < pivots.size(); ++r)
		x[pivots[r]] = a[r][cols];
	return x;
}

std::size_t rank(const Matrix& m, std::size_t cols)
{
	Matrix a = m;
	return rref(a, cols).size();
}

} // namespace lie2b
