#include "lie2b/lie2.hpp"
#include "lie2b/lie_bialgebra.hpp"
#include "lie_examples.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lie2b;
using namespace testing_util;

namespace {

// Independent check on words: delta(e_k) = sum_{p<q} c*(k,p,q) e_p e_q and
// delta[e_i,e_j] = [e_i, delta e_j] - [e_j, delta e_i] with the Schouten oracle.
bool oracle_cocycle(const LieAlgebraData& L, const LieAlgebraData& Ls)
{
	const auto n = L.dim();
	auto delta = [&](std::size_t k) {
		oracle::Ext e;
		for (std::size_t p = 0; p < n; ++p)
			for (std::size_t q = p + 1; q < n; ++q)
				if (sgn(Ls.constants()({k, p, q})) != 0)
					oracle::ext_add(e, {p, q}, Ls.constants()({k, p, q}));
		return e;
	};
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j) {
			oracle::Ext lhs;
			for (std::size_t k = 0; k < n; ++k)
				for (const auto& [w, c] : delta(k))
					if (sgn(L.constants()({k, i, j})) != 0)
						oracle::ext_add(lhs, w, c * L.constants()({k, i, j}));
			auto rhs = oracle::schouten(oracle::ext_single(i), delta(j), L);
			for (const auto& [w, c] : oracle::schouten(oracle::ext_single(j), delta(i), L))
				oracle::ext_add(rhs, w, -c);
			if (lhs != rhs)
				return false;
		}
	return true;
}

// Dense Jacobi oracle.
bool oracle_jacobi(const LieAlgebraData& L)
{
	const auto n = L.dim();
	const auto& c = L.constants();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				for (std::size_t m = 0; m < n; ++m) {
					Scalar s = 0;
					for (std::size_t p = 0; p < n; ++p)
						s += c({p, i, j}) * c({m, p, k}) + c({p, j, k}) * c({m, p, i}) + c({p, k, i}) * c({m, p, j});
					if (sgn(s) != 0)
						return false;
				}
	return true;
}

LieAlgebraData rand_bracket(std::mt19937& rng, std::size_t n)
{
	LieAlgebraData L(n);
	std::uniform_int_distribution<int> d(-1, 1), z(0, 2);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				if (z(rng) == 0)
					if (int v = d(rng); v != 0)
						L.set_bracket(i, j, k, v);
	return L;
}

LieAlgebraData two_dim()
{
	LieAlgebraData L(2);
	L.set_bracket(0, 1, 1, 1);
	return L;
}

} // namespace

TEST(LieBialgebra, AbelianDualAlwaysPasses)
{
	for (const auto& L : {sl2(), heisenberg(), gl2(), two_dim()}) {
		EXPECT_TRUE(is_lie_bialgebra(L, LieAlgebraData(L.dim())).pass);
		for (const auto& d : cobracket(LieAlgebraData(L.dim())))
			EXPECT_TRUE(d.is_zero());
	}
}

TEST(LieBialgebra, TwoDimensionalExamples)
{
	EXPECT_TRUE(is_lie_bialgebra(LieAlgebraData(2), two_dim()).pass);
	EXPECT_TRUE(is_lie_bialgebra(two_dim(), two_dim()).pass);
	EXPECT_EQ(is_lie_bialgebra(two_dim(), two_dim()).pass, oracle_cocycle(two_dim(), two_dim()));
	auto d = cobracket(two_dim());
	EXPECT_TRUE(d[0].is_zero());
	EXPECT_EQ(d[1].to_string(), "1*x0^x1");
	EXPECT_THROW(is_lie_bialgebra(two_dim(), sl2()), std::invalid_argument);
}

TEST(LieBialgebra, StandardSl2AndOracleAgreement)
{
	EXPECT_TRUE(is_lie_bialgebra(sl2(), sl2_standard_dual()).pass);
	EXPECT_TRUE(oracle_cocycle(sl2(), sl2_standard_dual()));
	std::mt19937 rng(21);
	int pass = 0, fail_cocycle = 0;
	for (int t = 0; t < 400 && (pass < 5 || fail_cocycle < 5); ++t) {
		auto Ls = rand_bracket(rng, 3);
		if (!oracle_jacobi(Ls))
			continue;
		auto rep = is_lie_bialgebra(sl2(), Ls);
		bool ok = oracle_cocycle(sl2(), Ls);
		EXPECT_EQ(rep.pass, ok);
		if (ok) {
			++pass;
		} else {
			++fail_cocycle;
			ASSERT_FALSE(rep.violations.empty());
			EXPECT_EQ(rep.violations.front().identity, "lie-bialgebra.cocycle");
		}
	}
	EXPECT_GE(pass, 5);
	EXPECT_GE(fail_cocycle, 5);
}

TEST(LieBialgebra, NonJacobiDualReported)
{
	std::mt19937 rng(4);
	for (int t = 0; t < 400; ++t) {
		auto Ls = rand_bracket(rng, 3);
		if (oracle_jacobi(Ls))
			continue;
		auto rep = is_lie_bialgebra(LieAlgebraData(3), Ls);
		ASSERT_FALSE(rep.pass);
		EXPECT_EQ(rep.violations.front().identity.rfind("lie-bialgebra.dual.jacobi", 0), 0u);
		return;
	}
	FAIL() << "no non-Jacobi bracket sampled";
}

TEST(LieBialgebra, SelfDualSymmetry)
{
	// for Lie brackets on both sides the cocycle condition is symmetric in (L, L*)
	std::mt19937 rng(8);
	int checked = 0;
	for (int t = 0; t < 300; ++t) {
		auto A = rand_bracket(rng, 3), B = rand_bracket(rng, 3);
		if (!oracle_jacobi(A) || !oracle_jacobi(B))
			continue;
		++checked;
		EXPECT_EQ(is_lie_bialgebra(A, B).pass, is_lie_bialgebra(B, A).pass);
	}
	EXPECT_GT(checked, 20);
}

TEST(Bicrossed, IdentityFromStandardSl2)
{
	auto b = identity_bicrossed(sl2(), sl2_standard_dual());
	auto rep = is_lie_bialgebra_crossed_module(b);
	EXPECT_TRUE(rep.pass) << (rep.pass ? "" : rep.violations.front().identity);
	EXPECT_TRUE(is_lie_bialgebra_crossed_module(swap_duality(b)).pass);
	EXPECT_EQ(swap_duality(swap_duality(b)), b);
	auto t = to_strict_bialgebra(b);
	auto v = verify_weak_lie2_bialgebra(t, Route::Both);
	EXPECT_TRUE(v.pass);
	EXPECT_EQ(v.classification, "strict");
	EXPECT_EQ(from_strict_bialgebra(t), b);
}

TEST(Bicrossed, IdentityFromNonBialgebraFails)
{
	std::mt19937 rng(21);
	for (int t = 0; t < 400; ++t) {
		auto Ls = rand_bracket(rng, 3);
		if (!oracle_jacobi(Ls) || oracle_cocycle(sl2(), Ls))
			continue;
		auto b = identity_bicrossed(sl2(), Ls);
		EXPECT_FALSE(is_lie_bialgebra_crossed_module(b).pass);
		EXPECT_FALSE(verify_weak_lie2_bialgebra(to_strict_bialgebra(b), Route::Bracket).pass);
		return;
	}
	FAIL() << "no non-cocycle dual sampled";
}

TEST(Bicrossed, ZeroIsSwapFixedPoint)
{
	LieBialgebraCrossedModule z{CrossedModuleData(LieAlgebraData(2), LieAlgebraData(2)),
	                            CrossedModuleData(LieAlgebraData(2), LieAlgebraData(2))};
	EXPECT_EQ(swap_duality(z), z);
	EXPECT_TRUE(is_lie_bialgebra_crossed_module(z).pass);
}

TEST(Bicrossed, PerturbationDetectedByBothChecks)
{
	auto b = identity_bicrossed(sl2(), sl2_standard_dual());
	b.dual.action({0, 1, 1}) += 1;
	EXPECT_FALSE(is_lie_bialgebra_crossed_module(b).pass);
	EXPECT_FALSE(verify_weak_lie2_bialgebra(to_strict_bialgebra(b), Route::Bracket).pass);
}

TEST(Bicrossed, FromStrictRejectsWeak)
{
	auto b = to_strict_bialgebra(identity_bicrossed(sl2(), sl2_standard_dual()));
	EXPECT_EQ(to_strict_bialgebra(from_strict_bialgebra(b)), b);
	b.algebra.h.flat(0) = 1;
	EXPECT_THROW(from_strict_bialgebra(b), std::invalid_argument);
	b.algebra.h.flat(0) = 0;
	b.coalgebra.eta.flat(1) = 1;
	EXPECT_THROW(from_strict_bialgebra(b), std::invalid_argument);
}
