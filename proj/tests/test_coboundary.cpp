#include "lie2b/coboundary.hpp"
#include "lie2b/lie2.hpp"
#include "lie_examples.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lie2b;
using namespace testing_util;

namespace {

Multivector u(const CrossedModuleData& cm, std::size_t a) { return theta_vector(cm, a); }

Multivector rand_r(std::mt19937& rng, const CrossedModuleData& cm)
{
	Multivector r(cm.space());
	for (std::size_t a = 0; a < cm.theta.dim(); ++a)
		for (std::size_t b = a + 1; b < cm.theta.dim(); ++b)
			r += rand_scalar(rng, -2, 2, false) * wedge(u(cm, a), u(cm, b));
	return r;
}

// gl2 coordinates of Id, H = E11 - E22, e = E12, f = E21
std::vector<Multivector> gl2_adapted(const CrossedModuleData& cm)
{
	return {u(cm, 0) + u(cm, 3), u(cm, 0) - u(cm, 3), u(cm, 1), u(cm, 2)};
}

std::string first(const Report& r)
{
	return r.violations.empty() ? "" : r.violations.front().identity + " " + r.violations.front().residual;
}

std::vector<CrossedModuleData> catalog_modules()
{
	return {gl2_to_sl2(), sl2_ideal_in_gl2(), identity_crossed_module(sl2()), identity_crossed_module(heisenberg())};
}

} // namespace

TEST(RMatrix, AbelianThetaAlwaysPasses)
{
	std::mt19937 rng(1);
	CrossedModuleData cm(LieAlgebraData(3), sl2());
	for (int t = 0; t < 10; ++t) {
		RMatrix r{cm, rand_r(rng, cm)};
		EXPECT_TRUE(r_square(r).is_zero());
		EXPECT_TRUE(is_r_matrix(r).pass);
	}
}

TEST(RMatrix, WrongShapeThrows)
{
	auto cm = gl2_to_sl2();
	EXPECT_THROW(is_r_matrix(RMatrix{cm, u(cm, 0)}), std::invalid_argument);
	EXPECT_THROW(is_r_matrix(RMatrix{cm, wedge(g_vector(cm, 0), u(cm, 0))}), std::invalid_argument);
}

TEST(RMatrix, Gl2ToSl2Characterization)
{
	// r = a + Id ^ b with a in wedge^2 sl2, b in sl2: [r,r] = [a,a] + 2[a, Id^b], and
	// [a,a] is invariant, so r is an r-matrix iff [b, a] = 0.
	std::mt19937 rng(5);
	auto cm = gl2_to_sl2();
	auto B = gl2_adapted(cm);
	int yes = 0, no = 0;
	for (int t = 0; t < 60; ++t) {
		Multivector a(cm.space()), b(cm.space());
		for (std::size_t i = 1; i < 4; ++i)
			for (std::size_t j = i + 1; j < 4; ++j)
				a += rand_scalar(rng, -2, 2, false) * wedge(B[i], B[j]);
		if (t % 3 != 0)
			for (std::size_t i = 1; i < 4; ++i)
				b += rand_scalar(rng, -2, 2, false) * B[i];
		RMatrix r{cm, a + wedge(B[0], b)};
		// independent oracle bracket [b, a] on gl2 words
		auto gl = gl2();
		auto shift = [&](const Multivector& m) {
			oracle::Ext e;
			for (const auto& [w, c] : oracle::from_mv(m)) {
				oracle::Word v;
				for (auto i : w)
					v.push_back(i - cm.g.dim());
				e[v] = c;
			}
			return e;
		};
		bool commute = oracle::schouten(shift(b), shift(a), gl).empty();
		bool rm = is_r_matrix(r).pass;
		EXPECT_EQ(rm, commute) << r.r.to_string();
		(rm ? yes : no)++;
	}
	EXPECT_GT(yes, 5);
	EXPECT_GT(no, 5);
}

TEST(RMatrix, E12WedgeE21Pipeline)
{
	auto cm = gl2_to_sl2();
	RMatrix r{cm, wedge(u(cm, 1), u(cm, 2))};
	ASSERT_TRUE(is_r_matrix(r).pass);
	auto tr = coboundary_triple(r);
	EXPECT_TRUE(tr.eta.is_zero());
	auto q = check_quasi_triple(tr, Route::Both);
	EXPECT_TRUE(q.pass) << first(q);
	EXPECT_EQ(q.classification, "strict");
	auto d = dual_crossed_module(r);
	auto bc = is_lie_bialgebra_crossed_module(d);
	EXPECT_TRUE(bc.pass) << first(bc);
	auto t = to_strict_bialgebra(d);
	EXPECT_EQ(t, to_bialgebra(tr));
	auto v = verify_weak_lie2_bialgebra(t, Route::Both);
	EXPECT_TRUE(v.pass) << first(v);
	EXPECT_EQ(v.classification, "strict");
	EXPECT_TRUE(is_lie_bialgebra_crossed_module(swap_duality(d)).pass);
}

TEST(RMatrix, IdealSl2InGl2WithEWedgeF)
{
	// theta = sl2 (h, e, f), g = gl2. [e^f, e^f] from the word oracle, then gl2-invariance.
	auto cm = sl2_ideal_in_gl2();
	RMatrix r{cm, wedge(u(cm, 1), u(cm, 2))};
	oracle::Ext ef{{{1, 2}, Scalar(1)}};
	auto rr = oracle::schouten(ef, ef, sl2());
	Multivector rr_mv(cm.space());
	for (const auto& [w, c] : rr) {
		Mask m = 0;
		for (auto i : w)
			m |= Mask{1} << cm.space().theta_index(i);
		rr_mv.add(m, c);
	}
	EXPECT_EQ(r_square(r), rr_mv);
	bool invariant = true;
	for (std::size_t i = 0; i < cm.g.dim(); ++i)
		invariant = invariant && act(cm, i, rr_mv).is_zero();
	EXPECT_EQ(is_r_matrix(r).pass, invariant);
	EXPECT_TRUE(invariant);
}

TEST(CoboundaryTriple, ZeroAndArbitraryR)
{
	auto cm = gl2_to_sl2();
	auto z = coboundary_triple(RMatrix{cm, Multivector(cm.space())});
	EXPECT_TRUE(z.pair.omega.is_zero() && z.pair.delta.is_zero() && z.eta.is_zero());
	std::mt19937 rng(9);
	for (const auto& c : catalog_modules())
		for (int t = 0; t < 12; ++t) {
			RMatrix r{c, rand_r(rng, c)};
			auto tr = coboundary_triple(r);
			auto rep = check_quasi_triple(tr, Route::Both);
			EXPECT_TRUE(rep.pass) << first(rep);
			EXPECT_EQ(tr.eta.is_zero(), is_r_matrix(r).pass);
		}
}

TEST(CoboundaryTriple, DeltaTwoFormsOnIdentitySl2)
{
	auto cm = identity_crossed_module(sl2());
	RMatrix r{cm, wedge(u(cm, 1), u(cm, 2))};
	auto Dr = d_phi(cm, r.r);
	for (std::size_t i = 0; i < 3; ++i)
		EXPECT_EQ(-d_phi(cm, act(cm, i, r.r)), -act(cm, i, Dr));
	auto tr = coboundary_triple(r);
	// delta_r(h) for r = e^f: h |> (e^f) = 2e^f - 2e^f = 0
	EXPECT_TRUE(tr.pair.delta.images[0].is_zero());
	EXPECT_FALSE(tr.pair.delta.images[1].is_zero());
}

TEST(CocycleTriple, LambdaRMatchesCoboundary)
{
	std::mt19937 rng(13);
	for (const auto& cm : catalog_modules())
		for (int t = 0; t < 5; ++t) {
			RMatrix r{cm, rand_r(rng, cm)};
			auto a = general_cocycle_triple(lambda_r(r), cm);
			auto b = coboundary_triple(r);
			EXPECT_EQ(a.pair.omega, b.pair.omega);
			EXPECT_EQ(a.pair.delta, b.pair.delta);
			EXPECT_EQ(a.eta, b.eta);
			EXPECT_TRUE(check_quasi_triple(a, Route::Both).pass);
		}
}

TEST(CocycleTriple, ZeroAndFlatCases)
{
	auto cm = gl2_to_sl2();
	auto z = general_cocycle_triple(LinearMapData::zero(cm.space(), 2), cm);
	EXPECT_TRUE(z.pair.omega.is_zero() && z.pair.delta.is_zero() && z.eta.is_zero());
	// phi = 0: omega and eta vanish for every cocycle
	const auto s2 = sl2();
	CrossedModuleData flat(LieAlgebraData(3), s2);
	for (std::size_t i = 0; i < 3; ++i)
		for (std::size_t a = 0; a < 3; ++a)
			for (const auto& [b, c] : s2.bracket(i, a))
				flat.action({b, i, a}) = c;
	std::mt19937 rng(3);
	auto basis = cocycle_basis(flat, 2);
	ASSERT_FALSE(basis.empty());
	auto lam = LinearMapData::zero(flat.space(), 2);
	for (const auto& bvec : basis) {
		auto c = rand_scalar(rng);
		for (std::size_t i = 0; i < lam.images.size(); ++i)
			lam.images[i] += c * bvec.images[i];
	}
	auto tr = general_cocycle_triple(lam, flat);
	EXPECT_TRUE(tr.pair.omega.is_zero());
	EXPECT_TRUE(tr.eta.is_zero());
	// a non-cocycle is rejected
	auto bad = LinearMapData::zero(cm.space(), 2);
	bad.images[0] = wedge(u(cm, 0), u(cm, 1));
	EXPECT_THROW(general_cocycle_triple(bad, cm), std::invalid_argument);
}

TEST(DualCrossedModule, ZeroRAndRejection)
{
	auto cm = gl2_to_sl2();
	auto d = dual_crossed_module(RMatrix{cm, Multivector(cm.space())});
	EXPECT_TRUE(d.dual.g.constants().all_zero());
	EXPECT_TRUE(d.dual.action.all_zero());
	EXPECT_TRUE(is_lie_bialgebra_crossed_module(d).pass);
	// r = Id ^ e + H ^ f: [e, H ^ f] = -2 e ^ f is nonzero
	auto B = gl2_adapted(cm);
	EXPECT_THROW(dual_crossed_module(RMatrix{cm, wedge(B[0], B[2]) + wedge(B[1], B[3])}), std::invalid_argument);
}

TEST(DualCrossedModule, RandomRMatricesOnCatalogModules)
{
	std::mt19937 rng(17);
	int checked = 0;
	for (const auto& cm : catalog_modules())
		for (int t = 0; t < 20; ++t) {
			RMatrix r{cm, rand_r(rng, cm)};
			if (!is_r_matrix(r).pass)
				continue;
			++checked;
			auto d = dual_crossed_module(r);
			auto rep = is_lie_bialgebra_crossed_module(d);
			EXPECT_TRUE(rep.pass) << first(rep);
			EXPECT_EQ(is_lie_bialgebra_crossed_module(swap_duality(d)).pass, rep.pass);
			EXPECT_TRUE(verify_weak_lie2_bialgebra(to_strict_bialgebra(d), Route::Bracket).pass);
		}
	EXPECT_GT(checked, 10);
}
