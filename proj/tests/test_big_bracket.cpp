#include "lie2b/encoding.hpp"
#include "lie2b/s_element.hpp"

#include "oracles.hpp"
#include "random_util.hpp"

#include <gtest/gtest.h>

using namespace lie2b;
using F = Family;

namespace {

SElement G(unsigned i) { return SElement::generator(F::G, i); }
SElement U(unsigned a) { return SElement::generator(F::Theta, a); }
SElement XI(unsigned i) { return SElement::generator(F::GStar, i); }
SElement K(unsigned a) { return SElement::generator(F::ThetaStar, a); }

int deg(const SElement& e) { return *e.degree(); }
bool odd(int d) { return (d % 2 + 2) % 2 == 1; }

} // namespace

TEST(Odot, Examples)
{
	EXPECT_TRUE(odot(U(0), U(0)).is_zero());
	EXPECT_FALSE(odot(K(0), K(0)).is_zero());
	EXPECT_EQ(odot(G(0), XI(1)), odot(XI(1), G(0)));
	EXPECT_EQ(odot(U(0), XI(1)), -odot(XI(1), U(0)));
	EXPECT_EQ(odot(U(1), U(0)).to_string(), "-1*u0.u1");
}

TEST(BigBracket, GeneratorPairings)
{
	EXPECT_EQ(big_bracket(G(0), XI(0)), SElement::constant(1));
	EXPECT_EQ(big_bracket(U(1), K(1)), SElement::constant(-1));
	EXPECT_TRUE(big_bracket(G(0), U(0)).is_zero());
	EXPECT_TRUE(big_bracket(XI(0), K(0)).is_zero());
	EXPECT_TRUE(big_bracket(G(0), XI(1)).is_zero());
	// {x.u, k}: Leibniz gives (-1)^{(|k|+3)|x|} x.{u,k} reordered = -x
	EXPECT_EQ(big_bracket(K(0), odot(G(0), U(0))), G(0));
	EXPECT_EQ(big_bracket(odot(G(0), U(0)), K(0)), -G(0));
}

TEST(BigBracket, Degree)
{
	EXPECT_EQ(odot(K(0), G(1)).degree(), -4);
	EXPECT_FALSE(SElement().degree().has_value());
	EXPECT_FALSE((G(0) + U(0)).degree().has_value());
}

TEST(BigBracket, MatchesRecursiveOracle)
{
	std::mt19937 rng(21);
	for (int t = 0; t < 300; ++t) {
		auto a = testing_util::rand_selement(rng, 1 + t % 3, 1 + (t / 3) % 3);
		auto b = testing_util::rand_selement(rng, 1 + t % 3, 1 + (t / 3) % 3);
		EXPECT_EQ(big_bracket(a, b), oracle::bracket(a, b)) << a.to_string() << " | " << b.to_string();
	}
}

TEST(BigBracket, AlgebraLaws)
{
	std::mt19937 rng(22);
	int checked = 0;
	for (int t = 0; checked < 200; ++t) {
		std::size_t m = 1 + t % 3, n = 1 + (t / 3) % 3;
		int d1 = -2 - t % 5, d2 = -2 - (t / 5) % 5, d3 = -2 - (t / 25) % 4;
		auto a = testing_util::rand_homogeneous_selement(rng, m, n, d1);
		auto b = testing_util::rand_homogeneous_selement(rng, m, n, d2);
		auto c = testing_util::rand_homogeneous_selement(rng, m, n, d3);
		if (a.is_zero() || b.is_zero() || c.is_zero())
			continue;
		++checked;
		int p = deg(a), q = deg(b), r = deg(c);
		auto ab = big_bracket(a, b);
		Scalar anti = odd((p + 3) * (q + 3)) ? 1 : -1;
		EXPECT_EQ(ab, anti * big_bracket(b, a));
		if (!ab.is_zero())
			EXPECT_EQ(ab.degree(), p + q + 3);
		Scalar leib = odd((p + 3) * q) ? -1 : 1;
		EXPECT_EQ(big_bracket(a, odot(b, c)), odot(ab, c) + leib * odot(b, big_bracket(a, c)));
		Scalar jac = odd((p + 3) * (q + 3)) ? -1 : 1;
		EXPECT_EQ(big_bracket(a, big_bracket(b, c)), big_bracket(ab, c) + jac * big_bracket(b, big_bracket(a, c)));
	}
}

TEST(Monomial, ParseAndLabel)
{
	auto m = parse_monomial("x0.u1.xi2.k3");
	EXPECT_EQ(monomial_label(m), "x0.u1.xi2.k3");
	EXPECT_EQ(monomial_label(parse_monomial("1")), "1");
	EXPECT_THROW(parse_monomial("y0"), std::invalid_argument);
	EXPECT_THROW(parse_monomial("x"), std::invalid_argument);
	EXPECT_THROW(parse_monomial("x0..u1"), std::invalid_argument);
}

TEST(Encoding, ExtractionIdentitiesCalibrated)
{
	std::mt19937 rng(99);
	const std::size_t m = 3, n = 2;
	auto c = WeakLie2Coalgebra::zero(m, n);
	testing_util::fill_random(rng, c.phi, 1);
	testing_util::fill_random(rng, c.delta, 1);
	for (std::size_t a = 0; a < m; ++a)
		set_alternating(c.omega, {a}, {0, 2}, testing_util::rand_scalar(rng));
	for (std::size_t i = 0; i < n; ++i)
		set_alternating(c.eta, {i}, {0, 1, 2}, testing_util::rand_scalar(rng));
	const auto phi = encode_phi(c.phi), eps = encode_omega(c.omega), alpha = encode_delta(c.delta),
	           eta = encode_eta(c.eta);
	for (unsigned a = 0; a < m; ++a) {
		// phi(u) = {phi, u}
		SElement expected;
		for (unsigned i = 0; i < n; ++i)
			expected += c.phi({i, a}) * G(i);
		EXPECT_EQ(big_bracket(phi, U(a)), expected);
		// <omega(u), k1 ^ k2> = {{{eps,u},k1},k2}
		for (unsigned b = 0; b < m; ++b)
			for (unsigned d = 0; d < m; ++d)
				EXPECT_EQ(big_bracket(big_bracket(big_bracket(eps, U(a)), K(b)), K(d)),
				          SElement::constant(c.omega({a, b, d})));
	}
	for (unsigned i = 0; i < n; ++i) {
		// <delta(x), xi ^ k> = -{{{alpha,x},xi},k}
		for (unsigned j = 0; j < n; ++j)
			for (unsigned b = 0; b < m; ++b)
				EXPECT_EQ(big_bracket(big_bracket(big_bracket(alpha, G(i)), XI(j)), K(b)),
				          SElement::constant(-c.delta({i, j, b})));
		// <eta(x), k1 ^ k2 ^ k3> = -{{{{eta,x},k1},k2},k3}
		for (unsigned a = 0; a < m; ++a)
			for (unsigned b = 0; b < m; ++b)
				for (unsigned d = 0; d < m; ++d)
					EXPECT_EQ(big_bracket(big_bracket(big_bracket(big_bracket(eta, G(i)), K(a)), K(b)), K(d)),
					          SElement::constant(-c.eta({i, a, b, d})));
	}
}
