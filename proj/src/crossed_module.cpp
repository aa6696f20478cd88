#include "lie2b/crossed_module.hpp"

#include "lie2b/linalg.hpp"

#include <stdexcept>

namespace lie2b {

CrossedModuleData::CrossedModuleData(LieAlgebraData theta_, LieAlgebraData g_)
    : theta(std::move(theta_))
    , g(std::move(g_))
    , phi({g.dim(), theta.dim()})
    , action({theta.dim(), g.dim(), theta.dim()})
{
}

void CrossedModuleData::check_shapes() const
{
	const auto n = g.dim(), m = theta.dim();
	if (phi.shape() != std::vector<std::size_t>{n, m})
		throw std::invalid_argument("phi must have shape [dim g, dim theta]");
	if (action.shape() != std::vector<std::size_t>{m, n, m})
		throw std::invalid_argument("action must have shape [dim theta, dim g, dim theta]");
	check_space(space());
}

namespace {

std::vector<Scalar> act_vec(const CrossedModuleData& cm, std::size_t i, const std::vector<Scalar>& u)
{
	const auto m = cm.theta.dim();
	std::vector<Scalar> r(m, Scalar(0));
	for (std::size_t a = 0; a < m; ++a)
		if (!is_zero(u[a]))
			for (std::size_t b = 0; b < m; ++b)
				r[b] += cm.action({b, i, a}) * u[a];
	return r;
}

std::vector<Scalar> act_vec(const CrossedModuleData& cm, const std::vector<Scalar>& x, const std::vector<Scalar>& u)
{
	std::vector<Scalar> r(cm.theta.dim(), Scalar(0));
	for (std::size_t i = 0; i < x.size(); ++i)
		if (!is_zero(x[i])) {
			auto t = act_vec(cm, i, u);
			for (std::size_t b = 0; b < r.size(); ++b)
				r[b] += x[i] * t[b];
		}
	return r;
}

std::vector<Scalar> phi_vec(const CrossedModuleData& cm, const std::vector<Scalar>& u)
{
	std::vector<Scalar> r(cm.g.dim(), Scalar(0));
	for (std::size_t i = 0; i < r.size(); ++i)
		for (std::size_t a = 0; a < u.size(); ++a)
			r[i] += cm.phi({i, a}) * u[a];
	return r;
}

std::vector<Scalar> unit(std::size_t n, std::size_t i)
{
	std::vector<Scalar> v(n, Scalar(0));
	v[i] = 1;
	return v;
}

std::vector<Scalar> sub(std::vector<Scalar> a, const std::vector<Scalar>& b)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] -= b[i];
	return a;
}

} // namespace

LieAlgebraData semidirect_bracket(const CrossedModuleData& cm)
{
	cm.check_shapes();
	const auto n = cm.g.dim(), m = cm.theta.dim();
	LieAlgebraData L(n + m);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				L.set_bracket(i, j, k, cm.g.constants()({k, i, j}));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t a = 0; a < m; ++a)
			for (std::size_t b = 0; b < m; ++b)
				L.set_bracket(i, n + a, n + b, cm.action({b, i, a}));
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t c = a + 1; c < m; ++c)
			for (std::size_t b = 0; b < m; ++b)
				L.set_bracket(n + a, n + c, n + b, cm.theta.constants()({b, a, c}));
	return L;
}

LieAlgebraData semidirect_product(const CrossedModuleData& cm)
{
	auto rep = is_crossed_module(cm);
	if (!rep.pass)
		throw std::invalid_argument("semidirect_product: not a crossed module (" + rep.violations.front().identity + ")");
	return semidirect_bracket(cm);
}

std::vector<Identity> lie_algebra_identities(const LieAlgebraData& L, const std::string& name, const std::string& prefix)
{
	const auto n = L.dim();
	std::vector<Identity> ids;
	ids.push_back({name + ".antisymmetry", {{prefix, n}, {prefix, n}}, [&L, n, prefix](std::span<const std::size_t> t) {
		               std::vector<Scalar> r(n, Scalar(0));
		               for (std::size_t k = 0; k < n; ++k)
			               r[k] = L.constants()({k, t[0], t[1]}) + L.constants()({k, t[1], t[0]});
		               return dense_text(r, prefix);
	               }});
	ids.push_back({name + ".jacobi", {{prefix, n}, {prefix, n}, {prefix, n}}, [&L, prefix](std::span<const std::size_t> t) {
		               if (!(t[0] < t[1] && t[1] < t[2]))
			               return std::string("0");
		               return dense_text(L.jacobiator(t[0], t[1], t[2]), prefix);
	               }});
	return ids;
}

std::vector<Identity> crossed_module_identities(const CrossedModuleData& cm)
{
	cm.check_shapes();
	const auto n = cm.g.dim(), m = cm.theta.dim();
	auto ids = lie_algebra_identities(cm.g, "g", "x");
	auto th = lie_algebra_identities(cm.theta, "theta", "u");
	ids.insert(ids.end(), th.begin(), th.end());
	const CrossedModuleData* p = &cm;
	// x |> [u,v] = [x|>u, v] + [u, x|>v]
	ids.push_back({"action.derivation", {{"x", n}, {"u", m}, {"u", m}}, [p, m](std::span<const std::size_t> t) {
		               auto u = unit(m, t[1]), v = unit(m, t[2]);
		               auto lhs = act_vec(*p, t[0], p->theta.bracket(u, v));
		               lhs = sub(lhs, p->theta.bracket(act_vec(*p, t[0], u), v));
		               lhs = sub(lhs, p->theta.bracket(u, act_vec(*p, t[0], v)));
		               return dense_text(lhs, "u");
	               }});
	// [x,y] |> u = x|>(y|>u) - y|>(x|>u)
	ids.push_back({"action.representation", {{"x", n}, {"x", n}, {"u", m}}, [p, n, m](std::span<const std::size_t> t) {
		               auto u = unit(m, t[2]);
		               auto xy = p->g.bracket(unit(n, t[0]), unit(n, t[1]));
		               auto r = act_vec(*p, xy, u);
		               r = sub(r, act_vec(*p, t[0], act_vec(*p, t[1], u)));
		               r = sub(r, sub(std::vector<Scalar>(m, Scalar(0)), act_vec(*p, t[1], act_vec(*p, t[0], u))));
		               return dense_text(r, "u");
	               }});
	// phi(u) |> v = [u,v]
	ids.push_back({"crossed-module.phi-action", {{"u", m}, {"u", m}}, [p, m](std::span<const std::size_t> t) {
		               auto u = unit(m, t[0]), v = unit(m, t[1]);
		               return dense_text(sub(act_vec(*p, phi_vec(*p, u), v), p->theta.bracket(u, v)), "u");
	               }});
	// phi(x |> u) = [x, phi(u)]
	ids.push_back({"crossed-module.equivariance", {{"x", n}, {"u", m}}, [p, n, m](std::span<const std::size_t> t) {
		               auto u = unit(m, t[1]);
		               auto lhs = phi_vec(*p, act_vec(*p, t[0], u));
		               return dense_text(sub(lhs, p->g.bracket(unit(n, t[0]), phi_vec(*p, u))), "x");
	               }});
	// consequence of the two conditions above
	ids.push_back({"crossed-module.phi-homomorphism", {{"u", m}, {"u", m}}, [p, m](std::span<const std::size_t> t) {
		               auto u = unit(m, t[0]), v = unit(m, t[1]);
		               auto lhs = phi_vec(*p, p->theta.bracket(u, v));
		               return dense_text(sub(lhs, p->g.bracket(phi_vec(*p, u), phi_vec(*p, v))), "x");
	               }});
	return ids;
}

Report is_crossed_module(const CrossedModuleData& cm) { return run_identities(crossed_module_identities(cm)); }

LinearMapData d_phi_map(const CrossedModuleData& cm)
{
	const Space s = cm.space();
	auto m = LinearMapData::zero(s, 1);
	for (std::size_t a = 0; a < cm.theta.dim(); ++a)
		m.images[s.theta_index(a)] = phi_of(cm, a);
	return m;
}

Multivector d_phi(const CrossedModuleData& cm, const Multivector& a)
{
	if (!(a.space() == cm.space()))
		throw std::invalid_argument("d_phi: element is not in g |x theta");
	return extend_derivation(d_phi_map(cm), a);
}

Multivector d_phi_power(const CrossedModuleData& cm, const Multivector& a, unsigned n)
{
	auto D = d_phi_map(cm);
	Multivector r = a;
	for (unsigned i = 0; i < n && !r.is_zero(); ++i)
		r = extend_derivation(D, r);
	return r;
}

namespace {

Multivector series(const CrossedModuleData& cm, const Multivector& a, unsigned k, bool alternate)
{
	if (!(a.space() == cm.space()))
		throw std::invalid_argument("series_operator: element is not in g |x theta");
	if (!a.is_homogeneous(k))
		throw std::invalid_argument("series_operator: input is not homogeneous of degree k");
	auto D = d_phi_map(cm);
	Multivector acc = a, term = a;
	for (unsigned i = 1; i < k && !term.is_zero(); ++i) {
		term = extend_derivation(D, term);
		Scalar c = Scalar(1) / factorial(i + 1);
		if (alternate && i % 2)
			c = -c;
		acc += c * term;
	}
	return acc;
}

} // namespace

Multivector series_operator(const CrossedModuleData& cm, const Multivector& a, unsigned k) { return series(cm, a, k, true); }

Multivector inverse_series_operator(const CrossedModuleData& cm, const Multivector& a, unsigned k)
{
	// Coefficients of the reciprocal power series, solved term by term from the forward ones.
	if (!a.is_homogeneous(k))
		throw std::invalid_argument("inverse_series_operator: input is not homogeneous of degree k");
	std::vector<Scalar> f(k), g(k, Scalar(0));
	for (unsigned i = 0; i < k; ++i)
		f[i] = Scalar(i % 2 ? -1 : 1) / factorial(i + 1);
	if (k > 0)
		g[0] = 1;
	for (unsigned n = 1; n < k; ++n) {
		Scalar s = 0;
		for (unsigned j = 1; j <= n; ++j)
			s += f[j] * g[n - j];
		g[n] = -s;
	}
	auto D = d_phi_map(cm);
	Multivector acc(a.space()), term = a;
	for (unsigned i = 0; i < k && !term.is_zero(); ++i) {
		if (i > 0)
			term = extend_derivation(D, term);
		acc += g[i] * term;
	}
	return acc;
}

LinearMapData action_map(const CrossedModuleData& cm, const std::vector<Scalar>& x)
{
	const Space s = cm.space();
	const auto n = cm.g.dim(), m = cm.theta.dim();
	auto r = LinearMapData::zero(s, 1);
	for (std::size_t j = 0; j < n; ++j) {
		auto v = cm.g.bracket(x, unit(n, j));
		for (std::size_t k = 0; k < n; ++k)
			r.images[j].add(Mask{1} << k, v[k]);
	}
	for (std::size_t a = 0; a < m; ++a) {
		auto v = act_vec(cm, x, unit(m, a));
		for (std::size_t b = 0; b < m; ++b)
			r.images[s.theta_index(a)].add(Mask{1} << s.theta_index(b), v[b]);
	}
	return r;
}

LinearMapData action_map(const CrossedModuleData& cm, std::size_t i) { return action_map(cm, unit(cm.g.dim(), i)); }

Multivector act(const CrossedModuleData& cm, std::size_t i, const Multivector& a)
{
	return extend_derivation(action_map(cm, i), a);
}

Multivector theta_vector(const CrossedModuleData& cm, std::size_t a)
{
	return Multivector::basis(cm.space(), cm.space().theta_index(a));
}

Multivector g_vector(const CrossedModuleData& cm, std::size_t i) { return Multivector::basis(cm.space(), i); }

Multivector phi_of(const CrossedModuleData& cm, std::size_t a)
{
	Multivector r(cm.space());
	for (std::size_t i = 0; i < cm.g.dim(); ++i)
		r.add(Mask{1} << i, cm.phi({i, a}));
	return r;
}

std::vector<Scalar> g_dual(const CrossedModuleData& cm, std::size_t i) { return unit(cm.space().dim(), i); }

std::vector<Scalar> theta_dual(const CrossedModuleData& cm, std::size_t a)
{
	return unit(cm.space().dim(), cm.space().theta_index(a));
}

std::vector<Scalar> phi_star_g_dual(const CrossedModuleData& cm, std::size_t i)
{
	const Space s = cm.space();
	std::vector<Scalar> z(s.dim(), Scalar(0));
	for (std::size_t a = 0; a < cm.theta.dim(); ++a)
		z[s.theta_index(a)] = cm.phi({i, a});
	return z;
}

CrossedModuleData identity_crossed_module(const LieAlgebraData& L)
{
	CrossedModuleData cm(L, L);
	const auto n = L.dim();
	for (std::size_t i = 0; i < n; ++i)
		cm.phi({i, i}) = 1;
	for (std::size_t b = 0; b < n; ++b)
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t a = 0; a < n; ++a)
				cm.action({b, i, a}) = L.constants()({b, i, a});
	return cm;
}

CrossedModuleData ideal_crossed_module(const LieAlgebraData& g, const std::vector<std::vector<Scalar>>& basis)
{
	const auto n = g.dim(), m = basis.size();
	Matrix M = zero_matrix(n, m);
	for (std::size_t p = 0; p < m; ++p)
		for (std::size_t i = 0; i < n; ++i)
			M[i][p] = basis[p][i];
	if (rank(M, m) != m)
		throw std::invalid_argument("ideal basis is not linearly independent");
	auto coords = [&](const std::vector<Scalar>& v) {
		auto c = solve(M, v, m);
		if (!c)
			throw std::invalid_argument("subspace is not an ideal");
		return *c;
	};
	LieAlgebraData theta(m);
	for (std::size_t p = 0; p < m; ++p)
		for (std::size_t q = p + 1; q < m; ++q) {
			auto c = coords(g.bracket(basis[p], basis[q]));
			for (std::size_t r = 0; r < m; ++r)
				theta.set_bracket(p, q, r, c[r]);
		}
	CrossedModuleData cm(theta, g);
	for (std::size_t p = 0; p < m; ++p)
		for (std::size_t i = 0; i < n; ++i)
			cm.phi({i, p}) = basis[p][i];
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t p = 0; p < m; ++p) {
			auto c = coords(g.bracket(unit(n, i), basis[p]));
			for (std::size_t r = 0; r < m; ++r)
				cm.action({r, i, p}) = c[r];
		}
	return cm;
}

} // namespace lie2b
