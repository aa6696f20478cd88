#pragma once

#include "lie2b/crossed_module.hpp"
#include "lie2b/lie_algebra.hpp"
#include "lie2b/multivector.hpp"
#include "lie2b/s_element.hpp"
#include "lie2b/structure_maps.hpp"

#include <random>

namespace testing_util {

using lie2b::Scalar;

inline Scalar rand_scalar(std::mt19937& rng, int lo = -3, int hi = 3, bool fractions = true)
{
	std::uniform_int_distribution<int> d(lo, hi);
	Scalar s(d(rng));
	if (fractions && std::uniform_int_distribution<int>(0, 3)(rng) == 0)
		s /= std::uniform_int_distribution<int>(2, 3)(rng);
	return s;
}

inline lie2b::Multivector rand_homogeneous(std::mt19937& rng, lie2b::Space s, unsigned k, int terms = 4)
{
	lie2b::Multivector m(s);
	std::uniform_int_distribution<std::size_t> idx(0, s.dim() - 1);
	for (int t = 0; t < terms; ++t) {
		lie2b::Mask mask = 0;
		while (lie2b::popcount(mask) < k)
			mask |= lie2b::Mask{1} << idx(rng);
		m.add(mask, rand_scalar(rng));
	}
	return m;
}

inline lie2b::SElement rand_selement(std::mt19937& rng, std::size_t theta_dim, std::size_t g_dim, int terms = 3,
                                     std::size_t max_len = 4)
{
	lie2b::SElement e;
	std::uniform_int_distribution<int> fam(0, 3);
	std::uniform_int_distribution<std::size_t> len(1, max_len);
	for (int t = 0; t < terms; ++t) {
		lie2b::SMonomial m;
		auto n = len(rng);
		for (std::size_t i = 0; i < n; ++i) {
			auto f = static_cast<lie2b::Family>(fam(rng));
			std::size_t dim = (f == lie2b::Family::G || f == lie2b::Family::GStar) ? g_dim : theta_dim;
			if (dim == 0)
				continue;
			m.push_back({f, static_cast<std::uint16_t>(std::uniform_int_distribution<std::size_t>(0, dim - 1)(rng))});
		}
		e.add_product(m, rand_scalar(rng));
	}
	return e;
}

// Homogeneous element of total degree `deg` built from random monomials of that degree.
inline lie2b::SElement rand_homogeneous_selement(std::mt19937& rng, std::size_t theta_dim, std::size_t g_dim, int deg,
                                                 int terms = 3)
{
	lie2b::SElement e;
	for (int tries = 0; tries < 200 && static_cast<int>(e.size()) < terms; ++tries) {
		auto cand = rand_selement(rng, theta_dim, g_dim, 1, 5);
		for (const auto& [m, c] : cand.terms())
			if (lie2b::monomial_degree(m) == deg)
				e.add(m, c);
	}
	return e;
}

inline lie2b::LieAlgebraData sl2()
{
	// basis h, e, f
	lie2b::LieAlgebraData L(3);
	L.set_bracket(0, 1, 1, 2);
	L.set_bracket(0, 2, 2, -2);
	L.set_bracket(1, 2, 0, 1);
	return L;
}

inline lie2b::LieAlgebraData heisenberg()
{
	lie2b::LieAlgebraData L(3);
	L.set_bracket(0, 1, 2, 1);
	return L;
}

// Random Lie algebra by rejection sampling on Jacobi.
inline lie2b::LieAlgebraData rand_lie_algebra(std::mt19937& rng, std::size_t n)
{
	for (;;) {
		lie2b::LieAlgebraData L(n);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = i + 1; j < n; ++j)
				for (std::size_t k = 0; k < n; ++k)
					if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
						L.set_bracket(i, j, k, rand_scalar(rng, -2, 2, false));
		bool ok = true;
		for (std::size_t i = 0; i < n && ok; ++i)
			for (std::size_t j = i + 1; j < n && ok; ++j)
				for (std::size_t k = j + 1; k < n && ok; ++k)
					for (const auto& v : L.jacobiator(i, j, k))
						if (sgn(v) != 0)
							ok = false;
		if (ok)
			return L;
	}
}


// exp(ad_e) s, truncated once a term vanishes. Degree -3 elements e give Poisson
// automorphisms preserving {s,s} = 0.
inline lie2b::SElement gauge(const lie2b::SElement& e, const lie2b::SElement& s)
{
	lie2b::SElement result = s, term = s;
	for (int n = 1; n < 64; ++n) {
		term = lie2b::big_bracket(e, term);
		term *= Scalar(1, n);
		if (term.is_zero())
			break;
		result += term;
	}
	return result;
}

// Random c: wedge^2 g -> theta encoded as sum c * xi^i . xi^j . u_a.
inline lie2b::SElement rand_two_cochain(std::mt19937& rng, std::size_t theta_dim, std::size_t g_dim)
{
	using lie2b::Family;
	lie2b::SElement c;
	for (std::size_t i = 0; i < g_dim; ++i)
		for (std::size_t j = i + 1; j < g_dim; ++j)
			for (std::size_t a = 0; a < theta_dim; ++a)
				c.add_product({{Family::GStar, static_cast<std::uint16_t>(i)},
				               {Family::GStar, static_cast<std::uint16_t>(j)},
				               {Family::Theta, static_cast<std::uint16_t>(a)}},
				              rand_scalar(rng, -2, 2, false));
	return c;
}

inline void fill_random(std::mt19937& rng, lie2b::Tensor& t, int density = 3)
{
	for (std::size_t i = 0; i < t.size(); ++i)
		if (std::uniform_int_distribution<int>(0, density)(rng) == 0)
			t.flat(i) = rand_scalar(rng, -2, 2, false);
}

// Random candidate weak Lie 2-algebra: alternation is respected, nothing else.
inline lie2b::WeakLie2Algebra rand_weak_candidate(std::mt19937& rng, std::size_t m, std::size_t n)
{
	auto a = lie2b::WeakLie2Algebra::zero(m, n);
	fill_random(rng, a.phi);
	fill_random(rng, a.action);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
					auto v = rand_scalar(rng, -2, 2, false);
					a.bracket({k, i, j}) = v;
					a.bracket({k, j, i}) = -v;
				}
	for (std::size_t x = 0; x < m; ++x)
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = i + 1; j < n; ++j)
				for (std::size_t k = j + 1; k < n; ++k)
					if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
						lie2b::set_alternating(a.h, {x}, {i, j, k}, rand_scalar(rng, -2, 2, false));
	return a;
}

} // namespace testing_util
