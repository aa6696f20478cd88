#include "lie2b/coboundary.hpp"

#include <memory>
#include <stdexcept>

namespace lie2b {

void RMatrix::check() const
{
	cm.check_shapes();
	if (!(r.space() == cm.space()) || !r.has_bigrade(0, 2))
		throw std::invalid_argument("r must lie in wedge^2 theta");
}

Multivector r_square(const RMatrix& r)
{
	r.check();
	return schouten(r.r, r.r, semidirect_bracket(r.cm));
}

std::vector<Identity> r_matrix_identities(const RMatrix& r)
{
	auto rr = std::make_shared<const Multivector>(r_square(r));
	auto cm = std::make_shared<const CrossedModuleData>(r.cm);
	return {{"r-matrix.invariance", {{"x", cm->g.dim()}}, [cm, rr](std::span<const std::size_t> t) {
		         return act(*cm, t[0], *rr).to_string();
	         }}};
}

Report is_r_matrix(const RMatrix& r) { return run_identities(r_matrix_identities(r)); }

LinearMapData lambda_r(const RMatrix& r)
{
	r.check();
	std::vector<Multivector> imgs;
	for (std::size_t i = 0; i < r.cm.g.dim(); ++i)
		imgs.push_back(-act(r.cm, i, r.r));
	return g_map(r.cm, 2, imgs);
}

QuasiTriple coboundary_triple(const RMatrix& r)
{
	r.check();
	const auto& cm = r.cm;
	const Space s = cm.space();
	auto L = semidirect_bracket(cm);
	auto rr = schouten(r.r, r.r, L);
	auto Dr = d_phi(cm, r.r);
	QuasiTriple t{InfinitesimalPair::zero(cm, 2), LinearMapData::zero(s, 3)};
	for (std::size_t a = 0; a < s.theta_dim; ++a)
		t.pair.omega.images[s.theta_index(a)] = schouten(r.r, theta_vector(cm, a), L);
	for (std::size_t i = 0; i < s.g_dim; ++i) {
		auto d1 = -d_phi(cm, act(cm, i, r.r));
		if (d1 != -act(cm, i, Dr))
			throw std::logic_error("coboundary_triple: the two forms of delta_r disagree");
		t.pair.delta.images[i] = d1;
		t.eta.images[i] = Scalar(-1, 2) * act(cm, i, rr);
	}
	return t;
}

QuasiTriple general_cocycle_triple(const LinearMapData& lambda, const CrossedModuleData& cm)
{
	if (lambda.degree != 2)
		throw std::invalid_argument("general_cocycle_triple: lambda must map g into wedge^2 theta");
	auto rep = cocycle_check(lambda, cm);
	if (!rep.pass)
		throw std::invalid_argument("general_cocycle_triple: lambda is not a 1-cocycle");
	auto p = cocycle_pair(cm, lambda);
	auto eta = LinearMapData::zero(cm.space(), 3);
	for (std::size_t i = 0; i < cm.g.dim(); ++i)
		eta.images[i] = extend_derivation(lambda, p.delta.images[i]);
	return {p, eta};
}

Scalar pair_theta2(const Multivector& w, std::size_t b, std::size_t c)
{
	if (b == c)
		return 0;
	const Space s = w.space();
	Mask m = (Mask{1} << s.theta_index(b)) | (Mask{1} << s.theta_index(c));
	auto it = w.terms().find(m);
	if (it == w.terms().end())
		return 0;
	return b < c ? it->second : -it->second;
}

LieBialgebraCrossedModule dual_crossed_module(const RMatrix& r)
{
	if (!is_r_matrix(r).pass)
		throw std::invalid_argument("dual_crossed_module: r is not an r-matrix");
	const auto& cm = r.cm;
	const auto m = cm.theta.dim(), n = cm.g.dim();
	auto L = semidirect_bracket(cm);
	LieAlgebraData theta_star(m);
	std::vector<Multivector> ad_r;
	for (std::size_t a = 0; a < m; ++a)
		ad_r.push_back(schouten(r.r, theta_vector(cm, a), L));
	for (std::size_t b = 0; b < m; ++b)
		for (std::size_t c = b + 1; c < m; ++c)
			for (std::size_t a = 0; a < m; ++a) {
				auto v = pair_theta2(ad_r[a], b, c);
				if (!is_zero(v))
					theta_star.set_bracket(b, c, a, v);
			}
	CrossedModuleData D(LieAlgebraData(n), theta_star);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t a = 0; a < m; ++a)
			D.phi({a, i}) = -cm.phi({i, a});
	// k^b |> xi^j = sum_i <phi* xi^j ^ k^b, x_i |> r> xi^i, phi* xi^j = sum_a phi(j,a) k^a
	for (std::size_t i = 0; i < n; ++i) {
		auto xr = act(cm, i, r.r);
		for (std::size_t b = 0; b < m; ++b)
			for (std::size_t j = 0; j < n; ++j) {
				Scalar v = 0;
				for (std::size_t a = 0; a < m; ++a)
					v += cm.phi({j, a}) * pair_theta2(xr, a, b);
				D.action({i, b, j}) = v;
			}
	}
	// [xi1, xi2] = phi'(xi1) |> xi2
	LieAlgebraData g_star(n);
	for (std::size_t p = 0; p < n; ++p)
		for (std::size_t q = p + 1; q < n; ++q)
			for (std::size_t k = 0; k < n; ++k) {
				Scalar v = 0;
				for (std::size_t a = 0; a < m; ++a)
					v += D.phi({a, p}) * D.action({k, a, q});
				if (!is_zero(v))
					g_star.set_bracket(p, q, k, v);
			}
	D.theta = g_star;
	return {cm, D};
}

} // namespace lie2b
