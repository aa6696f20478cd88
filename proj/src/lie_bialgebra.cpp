#include "lie2b/lie_bialgebra.hpp"

#include "lie2b/lie2.hpp"

#include <memory>
#include <stdexcept>

namespace lie2b {

namespace {

LieAlgebraData opposite(const LieAlgebraData& L)
{
	LieAlgebraData O(L.dim());
	for (std::size_t i = 0; i < L.dim(); ++i)
		for (std::size_t j = i + 1; j < L.dim(); ++j)
			for (const auto& [k, c] : L.bracket(i, j))
				O.set_bracket(i, j, k, -c);
	return O;
}

} // namespace

std::vector<Multivector> cobracket(const LieAlgebraData& Lstar)
{
	const auto n = Lstar.dim();
	const Space s{n, 0};
	std::vector<Multivector> d(n, Multivector(s));
	for (std::size_t j = 0; j < n; ++j)
		for (std::size_t k = j + 1; k < n; ++k)
			for (const auto& [i, c] : Lstar.bracket(j, k))
				d[i].add((Mask{1} << j) | (Mask{1} << k), c);
	return d;
}

std::vector<Identity> lie_bialgebra_identities(const LieAlgebraData& L, const LieAlgebraData& Lstar,
                                               const std::string& name)
{
	if (L.dim() != Lstar.dim())
		throw std::invalid_argument("is_lie_bialgebra: dimensions differ");
	auto ids = lie_algebra_identities(Lstar, name + ".dual", "e*");
	struct Ctx
	{
		LieAlgebraData L;
		std::vector<Multivector> delta;
	};
	auto ctx = std::make_shared<const Ctx>(Ctx{L, cobracket(Lstar)});
	const auto n = L.dim();
	ids.push_back({name + ".cocycle", {{"e", n}, {"e", n}}, [ctx](std::span<const std::size_t> t) {
		               if (t[0] >= t[1])
			               return std::string("0");
		               const Space s{ctx->L.dim(), 0};
		               Multivector lhs(s);
		               for (const auto& [k, c] : ctx->L.bracket(t[0], t[1]))
			               lhs += c * ctx->delta[k];
		               auto x = Multivector::basis(s, t[0]), y = Multivector::basis(s, t[1]);
		               auto rhs = schouten(x, ctx->delta[t[1]], ctx->L) - schouten(y, ctx->delta[t[0]], ctx->L);
		               return (lhs - rhs).to_string();
	               }});
	return ids;
}

Report is_lie_bialgebra(const LieAlgebraData& L, const LieAlgebraData& Lstar)
{
	return run_identities(lie_bialgebra_identities(L, Lstar));
}

LieAlgebraData paired_dual_semidirect(const CrossedModuleData& dual)
{
	// semidirect_bracket orders (k..., xi...); move xi first.
	const auto m = dual.g.dim(), n = dual.theta.dim();
	auto S = semidirect_bracket(dual);
	auto pos = [&](std::size_t old) { return old < m ? n + old : old - m; };
	LieAlgebraData P(m + n);
	for (std::size_t i = 0; i < m + n; ++i)
		for (std::size_t j = i + 1; j < m + n; ++j)
			for (const auto& [k, c] : S.bracket(i, j)) {
				auto pi = pos(i), pj = pos(j);
				if (pi < pj)
					P.set_bracket(pi, pj, pos(k), c);
				else
					P.set_bracket(pj, pi, pos(k), -c);
			}
	return P;
}

std::vector<Identity> bicrossed_identities(const LieBialgebraCrossedModule& b)
{
	b.primal.check_shapes();
	b.dual.check_shapes();
	const auto m = b.primal.theta.dim(), n = b.primal.g.dim();
	if (b.dual.theta.dim() != n || b.dual.g.dim() != m)
		throw std::invalid_argument("dual crossed module must be g* -> theta*");
	struct Ctx
	{
		LieBialgebraCrossedModule b;
		LieAlgebraData semidirect, paired;
	};
	auto ctx = std::make_shared<const Ctx>(Ctx{b, semidirect_bracket(b.primal), paired_dual_semidirect(b.dual)});
	const auto& P = ctx->b.primal;
	const auto& D = ctx->b.dual;
	auto ids = with_prefix(crossed_module_identities(P), "primal.", ctx);
	auto add = [&ids](std::vector<Identity> more) { ids.insert(ids.end(), more.begin(), more.end()); };
	add(with_prefix(crossed_module_identities(D), "dual.", ctx));
	// phi'(xi^i) = sum_a phi'(a,i) k^a must equal -phi*(xi^i) = -sum_a phi(i,a) k^a
	ids.push_back({"bicrossed.dual-map", {{"xi", n}, {"k", m}}, [ctx](std::span<const std::size_t> t) {
		               return to_string(ctx->b.dual.phi({t[1], t[0]}) + ctx->b.primal.phi({t[0], t[1]}));
	               }});
	add(with_prefix(lie_bialgebra_identities(ctx->semidirect, ctx->paired), "semidirect.", ctx));
	add(with_prefix(lie_bialgebra_identities(P.theta, D.g), "theta-pair.", ctx));
	add(with_prefix(lie_bialgebra_identities(P.g, D.theta), "g-pair.", ctx));
	return ids;
}

Report is_lie_bialgebra_crossed_module(const LieBialgebraCrossedModule& b)
{
	auto rep = run_identities(bicrossed_identities(b));
	rep.classification = "strict";
	return rep;
}

LieBialgebraCrossedModule swap_duality(const LieBialgebraCrossedModule& b) { return {b.dual, b.primal}; }

WeakLie2Bialgebra to_strict_bialgebra(const LieBialgebraCrossedModule& b)
{
	const auto& P = b.primal;
	const auto& D = b.dual;
	const auto m = P.theta.dim(), n = P.g.dim();
	if (D.theta.dim() != n || D.g.dim() != m)
		throw std::invalid_argument("dual crossed module must be g* -> theta*");
	WeakLie2Bialgebra out{to_lie2_algebra(P), WeakLie2Coalgebra::zero(m, n)};
	out.coalgebra.phi = P.phi;
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t c = 0; c < m; ++c)
			for (std::size_t d = 0; d < m; ++d)
				out.coalgebra.omega({a, c, d}) = D.g.constants()({a, c, d});
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t c = 0; c < m; ++c)
				out.coalgebra.delta({i, j, c}) = -D.action({i, c, j});
	return out;
}

LieBialgebraCrossedModule from_strict_bialgebra(const WeakLie2Bialgebra& b)
{
	b.check();
	if (!b.algebra.h.all_zero() || !b.coalgebra.eta.all_zero())
		throw std::invalid_argument("from_strict_bialgebra: h and eta must vanish");
	const auto m = b.algebra.theta_dim, n = b.algebra.g_dim;
	LieBialgebraCrossedModule out;
	out.primal = to_crossed_module(b.algebra);
	LieAlgebraData theta_star(m);
	for (std::size_t c = 0; c < m; ++c)
		for (std::size_t d = c + 1; d < m; ++d)
			for (std::size_t a = 0; a < m; ++a)
				if (!is_zero(b.coalgebra.omega({a, c, d})))
					theta_star.set_bracket(c, d, a, b.coalgebra.omega({a, c, d}));
	CrossedModuleData D(LieAlgebraData(n), theta_star);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t a = 0; a < m; ++a)
			D.phi({a, i}) = -b.algebra.phi({i, a});
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t c = 0; c < m; ++c)
				D.action({i, c, j}) = -b.coalgebra.delta({i, j, c});
	// [xi1, xi2] = phi'(xi1) |> xi2
	LieAlgebraData g_star(n);
	for (std::size_t p = 0; p < n; ++p)
		for (std::size_t q = p + 1; q < n; ++q)
			for (std::size_t r = 0; r < n; ++r) {
				Scalar v = 0;
				for (std::size_t a = 0; a < m; ++a)
					v += D.phi({a, p}) * D.action({r, a, q});
				if (!is_zero(v))
					g_star.set_bracket(p, q, r, v);
			}
	D.theta = g_star;
	out.dual = D;
	return out;
}

LieBialgebraCrossedModule identity_bicrossed(const LieAlgebraData& theta, const LieAlgebraData& theta_star)
{
	if (theta.dim() != theta_star.dim())
		throw std::invalid_argument("identity_bicrossed: dimensions differ");
	const auto m = theta.dim();
	CrossedModuleData D(theta_star, opposite(theta_star));
	for (std::size_t a = 0; a < m; ++a)
		D.phi({a, a}) = -1;
	for (std::size_t c = 0; c < m; ++c)
		for (std::size_t a = 0; a < m; ++a)
			for (const auto& [r, v] : theta_star.bracket(c, a))
				D.action({r, c, a}) = -v;
	return {identity_crossed_module(theta), D};
}

} // namespace lie2b
