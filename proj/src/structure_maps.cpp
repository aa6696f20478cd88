#include "lie2b/structure_maps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lie2b {

namespace {

void require_shape(const Tensor& t, std::vector<std::size_t> shape, const char* name)
{
	if (t.shape() != shape)
		throw std::invalid_argument(std::string(name) + " has the wrong shape");
}

// Checks sign-alternation under swaps of adjacent positions in [from, rank).
void require_alternating(const Tensor& t, std::size_t from, const char* name)
{
	for (std::size_t f = 0; f < t.size(); ++f) {
		auto idx = t.unflatten(f);
		for (std::size_t p = from; p + 1 < idx.size(); ++p) {
			auto sw = idx;
			std::swap(sw[p], sw[p + 1]);
			if (t.flat(f) != -t.at(sw))
				throw std::invalid_argument(std::string(name) + " is not alternating");
		}
	}
}

} // namespace

void set_alternating(Tensor& t, std::vector<std::size_t> prefix, std::vector<std::size_t> tail, const Scalar& v)
{
	std::vector<std::size_t> perm(tail.size());
	std::iota(perm.begin(), perm.end(), 0);
	do {
		int sign = 1;
		for (std::size_t i = 0; i < perm.size(); ++i)
			for (std::size_t j = i + 1; j < perm.size(); ++j)
				if (perm[i] > perm[j])
					sign = -sign;
		auto idx = prefix;
		for (auto p : perm)
			idx.push_back(tail[p]);
		t.at(idx) = sign * v;
	} while (std::next_permutation(perm.begin(), perm.end()));
}

WeakLie2Algebra WeakLie2Algebra::zero(std::size_t m, std::size_t n)
{
	return {m, n, Tensor({n, m}), Tensor({n, n, n}), Tensor({m, n, m}), Tensor({m, n, n, n})};
}

void WeakLie2Algebra::check() const
{
	const auto m = theta_dim, n = g_dim;
	require_shape(phi, {n, m}, "phi");
	require_shape(bracket, {n, n, n}, "bracket");
	require_shape(action, {m, n, m}, "action");
	require_shape(h, {m, n, n, n}, "h");
	require_alternating(bracket, 1, "bracket");
	require_alternating(h, 1, "h");
}

WeakLie2Coalgebra WeakLie2Coalgebra::zero(std::size_t m, std::size_t n)
{
	return {m, n, Tensor({n, m}), Tensor({m, m, m}), Tensor({n, n, m}), Tensor({n, m, m, m})};
}

void WeakLie2Coalgebra::check() const
{
	const auto m = theta_dim, n = g_dim;
	require_shape(phi, {n, m}, "phi");
	require_shape(omega, {m, m, m}, "omega");
	require_shape(delta, {n, n, m}, "delta");
	require_shape(eta, {n, m, m, m}, "eta");
	require_alternating(omega, 1, "omega");
	require_alternating(eta, 1, "eta");
}

void WeakLie2Bialgebra::check() const
{
	algebra.check();
	coalgebra.check();
	if (algebra.theta_dim != coalgebra.theta_dim || algebra.g_dim != coalgebra.g_dim)
		throw std::invalid_argument("algebra and coalgebra dimensions differ");
	if (!(algebra.phi == coalgebra.phi))
		throw std::invalid_argument("algebra and coalgebra must share phi");
}

} // namespace lie2b
