#include "lie2b/lie_algebra.hpp"

#include <stdexcept>

namespace lie2b {

LieAlgebraData::LieAlgebraData(std::size_t dim)
    : dim_(dim), c_({dim, dim, dim})
{
	rebuild();
}

LieAlgebraData::LieAlgebraData(Tensor constants)
    : c_(std::move(constants))
{
	const auto& s = c_.shape();
	if (s.size() != 3 || s[0] != s[1] || s[1] != s[2])
		throw std::invalid_argument("structure constants must have shape {n,n,n}");
	dim_ = s[0];
	rebuild();
}

void LieAlgebraData::set_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& v)
{
	c_({k, i, j}) = v;
	c_({k, j, i}) = -v;
	rebuild();
}

void LieAlgebraData::rebuild()
{
	table_.assign(dim_ * dim_, {});
	for (std::size_t i = 0; i < dim_; ++i)
		for (std::size_t j = 0; j < dim_; ++j)
			for (std::size_t k = 0; k < dim_; ++k)
				if (!is_zero(c_({k, i, j})))
					table_[i * dim_ + j].emplace_back(k, c_({k, i, j}));
}

std::vector<Scalar> LieAlgebraData::bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const
{
	std::vector<Scalar> r(dim_, Scalar(0));
	for (std::size_t i = 0; i < dim_; ++i) {
		if (is_zero(x[i]))
			continue;
		for (std::size_t j = 0; j < dim_; ++j) {
			if (is_zero(y[j]))
				continue;
			axpy(r, x[i] * y[j], bracket(i, j));
		}
	}
	return r;
}

bool LieAlgebraData::is_antisymmetric() const
{
	for (std::size_t k = 0; k < dim_; ++k)
		for (std::size_t i = 0; i < dim_; ++i)
			for (std::size_t j = i; j < dim_; ++j)
				if (c_({k, i, j}) != -c_({k, j, i}))
					return false;
	return true;
}

std::vector<Scalar> LieAlgebraData::jacobiator(std::size_t i, std::size_t j, std::size_t k) const
{
	std::vector<Scalar> r(dim_, Scalar(0));
	auto term = [&](std::size_t a, std::size_t b, std::size_t c) {
		for (const auto& [m, v] : bracket(a, b))
			axpy(r, v, bracket(m, c));
	};
	term(i, j, k);
	term(j, k, i);
	term(k, i, j);
	return r;
}

Scalar trace_form(const LieAlgebraData& L, std::size_t i, std::size_t j)
{
	// tr(ad_i ad_j) = sum_{m} (ad_i ad_j)_{mm} = sum_{m,p} c(m,i,p) c(p,j,m)
	Scalar t = 0;
	const auto n = L.dim();
	for (std::size_t m = 0; m < n; ++m)
		for (std::size_t p = 0; p < n; ++p)
			t += L.constants()({m, i, p}) * L.constants()({p, j, m});
	return t;
}

void axpy(std::vector<Scalar>& acc, const Scalar& s, const SparseVector& b)
{
	for (const auto& [k, v] : b)
		acc[k] += s * v;
}

} // namespace lie2b

namespace lie2b {

std::string dense_text(const std::vector<Scalar>& v, const std::string& prefix)
{
	std::string s;
	for (std::size_t i = 0; i < v.size(); ++i) {
		if (is_zero(v[i]))
			continue;
		if (s.empty())
			s += sgn(v[i]) < 0 ? "-" : "";
		else
			s += sgn(v[i]) < 0 ? " - " : " + ";
		s += to_string(abs(v[i])) + "*" + prefix + std::to_string(i);
	}
	return s.empty() ? "0" : s;
}

} // namespace lie2b
