#include "lie2b/infinitesimal.hpp"

#include "lie2b/encoding.hpp"
#include "lie2b/linalg.hpp"

#include <map>

#include <memory>
#include <stdexcept>

namespace lie2b {

namespace {

Mask g_indices(const Space& s) { return s.g_mask(); }
Mask theta_indices(const Space& s) { return s.theta_mask(); }

void require_bigrade(const Multivector& m, unsigned gc, unsigned tc, const char* what)
{
	if (!m.has_bigrade(gc, tc))
		throw std::invalid_argument(std::string(what) + " has the wrong bigrade");
}

Multivector bracket_of_g(const CrossedModuleData& cm, std::size_t i, std::size_t j)
{
	Multivector r(cm.space());
	for (const auto& [k, c] : cm.g.bracket(i, j))
		r.add(Mask{1} << k, c);
	return r;
}

Multivector bracket_of_theta(const CrossedModuleData& cm, std::size_t a, std::size_t b)
{
	Multivector r(cm.space());
	for (const auto& [c, v] : cm.theta.bracket(a, b))
		r.add(Mask{1} << cm.space().theta_index(c), v);
	return r;
}

// Shared, immutable evaluation context for identity closures.
struct Ctx
{
	CrossedModuleData cm;
	LieAlgebraData L;
	LinearMapData D;
	std::vector<LinearMapData> ad;

	explicit Ctx(const CrossedModuleData& c)
	    : cm(c)
	    , L(semidirect_bracket(c))
	    , D(d_phi_map(c))
	{
		for (std::size_t i = 0; i < c.g.dim(); ++i)
			ad.push_back(action_map(c, i));
	}

	Multivector act(std::size_t i, const Multivector& a) const { return extend_derivation(ad[i], a); }
};

Identity w_identity(const std::string& name, std::shared_ptr<const Ctx> ctx, std::vector<Multivector> ws, std::string slot)
{
	const auto n = ctx->cm.g.dim();
	return {name, {{slot, ws.size()}, {"xi", n}, {"xi", n}}, [ctx, ws](std::span<const std::size_t> t) {
		        if (t[1] > t[2])
			        return std::string("0");
		        const auto& cm = ctx->cm;
		        const auto& w = ws[t[0]];
		        auto z1 = g_dual(cm, t[1]), z2 = g_dual(cm, t[2]);
		        auto p1 = phi_star_g_dual(cm, t[1]), p2 = phi_star_g_dual(cm, t[2]);
		        return (interior(z1, interior(p2, w)) + interior(z2, interior(p1, w))).to_string();
	        }};
}

} // namespace

InfinitesimalPair InfinitesimalPair::zero(const CrossedModuleData& cm, unsigned k)
{
	return {cm, k, LinearMapData::zero(cm.space(), k), LinearMapData::zero(cm.space(), k)};
}

InfinitesimalPair InfinitesimalPair::degree_zero(const CrossedModuleData& cm, const std::vector<Scalar>& values)
{
	if (values.size() != cm.theta.dim())
		throw std::invalid_argument("degree-zero pair needs one value per theta basis vector");
	auto p = zero(cm, 0);
	for (std::size_t a = 0; a < values.size(); ++a)
		p.omega.images[cm.space().theta_index(a)] = Multivector::scalar(cm.space(), values[a]);
	return p;
}

LinearMapData InfinitesimalPair::generator_map() const
{
	LinearMapData m = omega;
	for (std::size_t i = 0; i < m.images.size(); ++i)
		m.images[i] += delta.images[i];
	return m;
}

void InfinitesimalPair::check() const
{
	cm.check_shapes();
	const Space s = cm.space();
	if (!(omega.space == s) || !(delta.space == s) || omega.degree != k || delta.degree != k)
		throw std::invalid_argument("pair maps do not match the crossed module or degree");
	omega.check();
	delta.check();
	for (std::size_t i = 0; i < s.g_dim; ++i) {
		if (!omega.images[i].is_zero())
			throw std::invalid_argument("omega must vanish on g");
		if (k == 0 && !delta.images[i].is_zero())
			throw std::invalid_argument("a degree-zero pair has delta = 0");
		if (k > 0)
			require_bigrade(delta.images[i], 1, k - 1, "delta(x)");
	}
	for (std::size_t a = 0; a < s.theta_dim; ++a) {
		if (!delta.images[s.theta_index(a)].is_zero())
			throw std::invalid_argument("delta must vanish on theta");
		require_bigrade(omega.images[s.theta_index(a)], 0, k, "omega(u)");
	}
}

void QuasiTriple::check() const
{
	pair.check();
	if (pair.k != 2)
		throw std::invalid_argument("a quasi triple has k = 2");
	if (!(eta.space == pair.cm.space()) || eta.degree != 3)
		throw std::invalid_argument("eta must map g into wedge^3 theta");
	eta.check();
	const Space s = pair.cm.space();
	for (std::size_t i = 0; i < s.dim(); ++i) {
		if (i < s.g_dim)
			require_bigrade(eta.images[i], 0, 3, "eta(x)");
		else if (!eta.images[i].is_zero())
			throw std::invalid_argument("eta must vanish on theta");
	}
}

Report in_W_k(const Multivector& w, unsigned k, const CrossedModuleData& cm)
{
	if (k == 0 || !(w.space() == cm.space()))
		throw std::invalid_argument("in_W_k: element is not in g |x theta or k = 0");
	require_bigrade(w, 1, k - 1, "W_k candidate");
	auto ctx = std::make_shared<const Ctx>(cm);
	return run_identities({w_identity("W_k.symmetric-contraction", ctx, {w}, "w")});
}

std::vector<Identity> id_identities(const InfinitesimalPair& p)
{
	p.check();
	auto ctx = std::make_shared<const Ctx>(p.cm);
	auto pp = std::make_shared<const InfinitesimalPair>(p);
	const Space s = p.cm.space();
	const auto n = s.g_dim, m = s.theta_dim;
	std::vector<Identity> ids;
	if (p.k == 0) {
		ids.push_back({"A0.invariance", {{"x", n}, {"u", m}}, [ctx, pp](std::span<const std::size_t> t) {
			               auto xu = ctx->act(t[0], theta_vector(ctx->cm, t[1]));
			               return pp->omega.apply(xu).to_string();
		               }});
		return ids;
	}
	ids.push_back({"ID1.phi-compatibility", {{"u", m}}, [ctx, pp](std::span<const std::size_t> t) {
		               auto u = theta_vector(ctx->cm, t[0]);
		               auto lhs = extend_derivation(ctx->D, pp->omega.apply(u));
		               return (lhs - pp->delta.apply(phi_of(ctx->cm, t[0]))).to_string();
	               }});
	ids.push_back({"ID2.cocycle", {{"x", n}, {"x", n}}, [ctx, pp](std::span<const std::size_t> t) {
		               if (t[0] >= t[1])
			               return std::string("0");
		               const auto& cm = ctx->cm;
		               auto x = g_vector(cm, t[0]), y = g_vector(cm, t[1]);
		               auto lhs = pp->delta.apply(bracket_of_g(cm, t[0], t[1]));
		               auto rhs = schouten(pp->delta.apply(x), y, ctx->L) + schouten(x, pp->delta.apply(y), ctx->L);
		               return (lhs - rhs).to_string();
	               }});
	std::vector<Multivector> deltas(pp->delta.images.begin(), pp->delta.images.begin() + static_cast<long>(n));
	ids.push_back(w_identity("ID2.W_k", ctx, deltas, "x"));
	ids.push_back({"ID3.action", {{"x", n}, {"u", m}}, [ctx, pp](std::span<const std::size_t> t) {
		               const auto& cm = ctx->cm;
		               auto u = theta_vector(cm, t[1]);
		               auto lhs = ctx->act(t[0], pp->omega.apply(u)) - pp->omega.apply(ctx->act(t[0], u));
		               auto rhs = project_bigrade(schouten(u, pp->delta.images[t[0]], ctx->L), 0, pp->k);
		               return (lhs - rhs).to_string();
	               }});
	return ids;
}

Report check_ID(const InfinitesimalPair& p) { return run_identities(id_identities(p)); }

InfinitesimalPair a_k_bracket(const InfinitesimalPair& p1, const InfinitesimalPair& p2)
{
	if (!(p1.cm == p2.cm))
		throw std::invalid_argument("a_k_bracket: pairs live over different crossed modules");
	p1.check();
	p2.check();
	auto E = graded_commutator(p1.generator_map(), p2.generator_map());
	const Space s = p1.cm.space();
	InfinitesimalPair r{p1.cm, E.degree, restrict_to(E, theta_indices(s)), restrict_to(E, g_indices(s))};
	return r;
}

LinearMapData build_partial(const InfinitesimalPair& p)
{
	auto rep = check_ID(p);
	if (!rep.pass)
		throw std::invalid_argument("build_partial: pair fails " + rep.violations.front().identity);
	const Space s = p.cm.space();
	LinearMapData d = p.omega;
	for (std::size_t i = 0; i < s.g_dim; ++i)
		d.images[i] = p.k == 0 ? p.delta.images[i] : series_operator(p.cm, p.delta.images[i], p.k);
	return d;
}

std::vector<Identity> k_differential_identities(const LinearMapData& d, const LieAlgebraData& L, unsigned k)
{
	if (d.degree != k || d.space.dim() != L.dim())
		throw std::invalid_argument("is_k_differential: map does not match the algebra or degree");
	d.check();
	auto dd = std::make_shared<const LinearMapData>(d);
	auto LL = std::make_shared<const LieAlgebraData>(L);
	const auto n = L.dim();
	return {{"k-differential.cocycle", {{"e", n}, {"e", n}}, [dd, LL](std::span<const std::size_t> t) {
		                        if (t[0] >= t[1])
			                        return std::string("0");
		                        const Space s = dd->space;
		                        auto x = Multivector::basis(s, t[0]), y = Multivector::basis(s, t[1]);
		                        Multivector xy(s);
		                        for (const auto& [k, c] : LL->bracket(t[0], t[1]))
			                        xy.add(Mask{1} << k, c);
		                        auto lhs = dd->apply(xy);
		                        auto rhs = schouten(dd->apply(x), y, *LL) + schouten(x, dd->apply(y), *LL);
		                        return (lhs - rhs).to_string();
	                        }}};
}

Report is_k_differential(const LinearMapData& d, const LieAlgebraData& L, unsigned k)
{
	return run_identities(k_differential_identities(d, L, k));
}

LinearMapData differential_commutator(const LinearMapData& d1, const LinearMapData& d2, const LieAlgebraData& L)
{
	if (!is_k_differential(d1, L, d1.degree).pass || !is_k_differential(d2, L, d2.degree).pass)
		throw std::invalid_argument("differential_commutator: inputs must be differentials");
	return graded_commutator(d1, d2);
}

std::vector<Identity> cocycle_identities(const LinearMapData& lambda, const CrossedModuleData& cm, const std::string& name)
{
	if (!(lambda.space == cm.space()))
		throw std::invalid_argument("cocycle_check: map does not live on g |x theta");
	lambda.check();
	auto ctx = std::make_shared<const Ctx>(cm);
	auto lp = std::make_shared<const LinearMapData>(lambda);
	const auto n = cm.g.dim();
	return {{name, {{"x", n}, {"x", n}}, [ctx, lp](std::span<const std::size_t> t) {
		                        if (t[0] >= t[1])
			                        return std::string("0");
		                        auto lhs = lp->apply(bracket_of_g(ctx->cm, t[0], t[1]));
		                        auto rhs = ctx->act(t[0], lp->images[t[1]]) - ctx->act(t[1], lp->images[t[0]]);
		                        return (lhs - rhs).to_string();
	                        }}};
}

Report cocycle_check(const LinearMapData& lambda, const CrossedModuleData& cm, const std::string& name)
{
	return run_identities(cocycle_identities(lambda, cm, name));
}

Report theta_cocycle_check(const LinearMapData& omega, const CrossedModuleData& cm)
{
	auto ctx = std::make_shared<const Ctx>(cm);
	auto op = std::make_shared<const LinearMapData>(omega);
	const auto m = cm.theta.dim();
	return run_identities({{"omega.theta-cocycle", {{"u", m}, {"u", m}}, [ctx, op](std::span<const std::size_t> t) {
		                        if (t[0] >= t[1])
			                        return std::string("0");
		                        const auto& cm = ctx->cm;
		                        auto u = theta_vector(cm, t[0]), v = theta_vector(cm, t[1]);
		                        auto lhs = op->apply(bracket_of_theta(cm, t[0], t[1]));
		                        auto rhs = schouten(u, op->apply(v), ctx->L) - schouten(v, op->apply(u), ctx->L);
		                        return (lhs - rhs).to_string();
	                        }}});
}

std::vector<Identity> quasi_triple_identities(const QuasiTriple& tr)
{
	tr.check();
	auto ctx = std::make_shared<const Ctx>(tr.pair.cm);
	auto tp = std::make_shared<const QuasiTriple>(tr);
	auto E = std::make_shared<const LinearMapData>(tr.pair.generator_map());
	const Space s = tr.pair.cm.space();
	const auto n = s.g_dim, m = s.theta_dim;
	std::vector<Identity> ids;
	ids.push_back({"quasi.phi-compatibility", {{"u", m}}, [ctx, tp](std::span<const std::size_t> t) {
		               const auto& w = tp->pair.omega;
		               auto lhs = extend_derivation(ctx->D, w.apply(theta_vector(ctx->cm, t[0])));
		               return (lhs - tp->pair.delta.apply(phi_of(ctx->cm, t[0]))).to_string();
	               }});
	ids.push_back({"quasi.omega-square", {{"u", m}}, [ctx, tp](std::span<const std::size_t> t) {
		               const auto& w = tp->pair.omega;
		               auto lhs = extend_derivation(w, w.apply(theta_vector(ctx->cm, t[0])));
		               return (lhs - tp->eta.apply(phi_of(ctx->cm, t[0]))).to_string();
	               }});
	ids.push_back({"quasi.delta-square", {{"x", n}}, [ctx, tp, E](std::span<const std::size_t> t) {
		               auto lhs = extend_derivation(*E, tp->pair.delta.images[t[0]]);
		               return (lhs - extend_derivation(ctx->D, tp->eta.images[t[0]])).to_string();
	               }});
	ids.push_back({"quasi.eta-compatibility", {{"x", n}}, [tp](std::span<const std::size_t> t) {
		               auto lhs = extend_derivation(tp->pair.omega, tp->eta.images[t[0]]);
		               return (lhs - extend_derivation(tp->eta, tp->pair.delta.images[t[0]])).to_string();
	               }});
	auto cocycle = [ctx](std::shared_ptr<const LinearMapData> f) {
		return [ctx, f](std::span<const std::size_t> t) {
			if (t[0] >= t[1])
				return std::string("0");
			auto lhs = f->apply(bracket_of_g(ctx->cm, t[0], t[1]));
			auto rhs = ctx->act(t[0], f->images[t[1]]) - ctx->act(t[1], f->images[t[0]]);
			return (lhs - rhs).to_string();
		};
	};
	ids.push_back({"quasi.eta-cocycle", {{"x", n}, {"x", n}}, cocycle(std::make_shared<const LinearMapData>(tr.eta))});
	ids.push_back(
	    {"quasi.delta-cocycle", {{"x", n}, {"x", n}}, cocycle(std::make_shared<const LinearMapData>(tr.pair.delta))});
	ids.push_back({"quasi.action", {{"x", n}, {"u", m}}, [ctx, tp](std::span<const std::size_t> t) {
		               const auto& w = tp->pair.omega;
		               auto u = theta_vector(ctx->cm, t[1]);
		               auto lhs = ctx->act(t[0], w.apply(u)) - w.apply(ctx->act(t[0], u));
		               auto rhs = project_bigrade(schouten(u, tp->pair.delta.images[t[0]], ctx->L), 0, 2);
		               return (lhs - rhs).to_string();
	               }});
	std::vector<Multivector> deltas(tr.pair.delta.images.begin(), tr.pair.delta.images.begin() + static_cast<long>(n));
	ids.push_back(w_identity("quasi.delta-in-W2", ctx, deltas, "x"));
	return ids;
}

Report check_quasi_triple(const QuasiTriple& t, Route route)
{
	t.check();
	Report u, b;
	if (route != Route::Bracket)
		u = run_identities(quasi_triple_identities(t));
	if (route != Route::Unfolded)
		b = bracket_square_report(encode(to_bialgebra(t)), "bracket.oc");
	Report r;
	if (route == Route::Unfolded)
		r = u;
	else if (route == Route::Bracket)
		r = b;
	else {
		bool agree = u.pass == b.pass;
		r = u;
		r.merge(b);
		if (!agree)
			r.add({"route.agreement", {}, "seven-condition and bracket verdicts differ"});
		r.finalize();
	}
	r.classification = t.eta.is_zero() ? "strict" : "quasi";
	return r;
}

LinearMapData g_map(const CrossedModuleData& cm, unsigned degree, const std::vector<Multivector>& images_of_g)
{
	auto m = LinearMapData::zero(cm.space(), degree);
	if (images_of_g.size() != cm.g.dim())
		throw std::invalid_argument("g_map: one image per g basis vector required");
	for (std::size_t i = 0; i < images_of_g.size(); ++i)
		m.images[i] = images_of_g[i];
	return m;
}

QuasiTriple to_quasi_triple(const CrossedModuleData& cm, const WeakLie2Coalgebra& c)
{
	c.check();
	if (c.theta_dim != cm.theta.dim() || c.g_dim != cm.g.dim())
		throw std::invalid_argument("coalgebra does not match the crossed module");
	const Space s = cm.space();
	auto bit = [&](std::size_t a) { return Mask{1} << s.theta_index(a); };
	auto p = InfinitesimalPair::zero(cm, 2);
	auto eta = LinearMapData::zero(s, 3);
	for (std::size_t a = 0; a < s.theta_dim; ++a)
		for (std::size_t b = 0; b < s.theta_dim; ++b)
			for (std::size_t d = b + 1; d < s.theta_dim; ++d)
				p.omega.images[s.theta_index(a)].add(bit(b) | bit(d), c.omega({a, b, d}));
	for (std::size_t i = 0; i < s.g_dim; ++i) {
		for (std::size_t j = 0; j < s.g_dim; ++j)
			for (std::size_t b = 0; b < s.theta_dim; ++b)
				p.delta.images[i].add((Mask{1} << j) | bit(b), c.delta({i, j, b}));
		for (std::size_t a = 0; a < s.theta_dim; ++a)
			for (std::size_t b = a + 1; b < s.theta_dim; ++b)
				for (std::size_t d = b + 1; d < s.theta_dim; ++d)
					eta.images[i].add(bit(a) | bit(b) | bit(d), c.eta({i, a, b, d}));
	}
	return {p, eta};
}

WeakLie2Coalgebra to_coalgebra(const QuasiTriple& t)
{
	t.check();
	const auto& cm = t.pair.cm;
	const Space s = cm.space();
	auto c = WeakLie2Coalgebra::zero(s.theta_dim, s.g_dim);
	c.phi = cm.phi;
	auto idx = [&](Mask m) {
		std::vector<std::size_t> v;
		for (; m; m &= m - 1)
			v.push_back(static_cast<std::size_t>(std::countr_zero(m)));
		return v;
	};
	for (std::size_t a = 0; a < s.theta_dim; ++a)
		for (const auto& [m, v] : t.pair.omega.images[s.theta_index(a)].terms()) {
			auto ix = idx(m);
			set_alternating(c.omega, {a}, {ix[0] - s.g_dim, ix[1] - s.g_dim}, v);
		}
	for (std::size_t i = 0; i < s.g_dim; ++i) {
		for (const auto& [m, v] : t.pair.delta.images[i].terms()) {
			auto ix = idx(m);
			c.delta({i, ix[0], ix[1] - s.g_dim}) = v;
		}
		for (const auto& [m, v] : t.eta.images[i].terms()) {
			auto ix = idx(m);
			set_alternating(c.eta, {i}, {ix[0] - s.g_dim, ix[1] - s.g_dim, ix[2] - s.g_dim}, v);
		}
	}
	return c;
}

InfinitesimalPair cocycle_pair(const CrossedModuleData& cm, const LinearMapData& lambda)
{
	if (!(lambda.space == cm.space()))
		throw std::invalid_argument("cocycle_pair: map does not live on g |x theta");
	const Space s = cm.space();
	for (std::size_t i = 0; i < s.dim(); ++i) {
		if (i < s.g_dim)
			require_bigrade(lambda.images[i], 0, lambda.degree, "lambda(x)");
		else if (!lambda.images[i].is_zero())
			throw std::invalid_argument("lambda must vanish on theta");
	}
	auto p = InfinitesimalPair::zero(cm, lambda.degree);
	auto D = d_phi_map(cm);
	for (std::size_t a = 0; a < s.theta_dim; ++a)
		p.omega.images[s.theta_index(a)] = lambda.apply(phi_of(cm, a));
	for (std::size_t i = 0; i < s.g_dim; ++i)
		p.delta.images[i] = extend_derivation(D, lambda.images[i]);
	return p;
}

std::vector<LinearMapData> cocycle_basis(const CrossedModuleData& cm, unsigned l)
{
	const Space s = cm.space();
	std::vector<Mask> masks;
	for (Mask m = 0; m < (Mask{1} << s.dim()); ++m)
		if ((m & s.g_mask()) == 0 && static_cast<unsigned>(std::popcount(m)) == l)
			masks.push_back(m);
	const std::size_t n = s.g_dim, cols = n * masks.size();
	// Residual of the unit map x_i -> monomial, keyed by (pair, output monomial).
	std::map<std::pair<std::size_t, Mask>, std::size_t> row_of;
	std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns(cols);
	std::vector<LinearMapData> ad;
	for (std::size_t i = 0; i < n; ++i)
		ad.push_back(action_map(cm, i));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t mi = 0; mi < masks.size(); ++mi) {
			auto col = i * masks.size() + mi;
			auto unit = Multivector::monomial(s, masks[mi]);
			for (std::size_t p = 0; p < n; ++p)
				for (std::size_t q = p + 1; q < n; ++q) {
					Multivector res(s);
					for (const auto& [k, c] : cm.g.bracket(p, q))
						if (k == i)
							res += c * unit;
					if (q == i)
						res -= extend_derivation(ad[p], unit);
					if (p == i)
						res += extend_derivation(ad[q], unit);
					for (const auto& [m, c] : res.terms()) {
						auto key = std::make_pair(p * n + q, m);
						auto it = row_of.try_emplace(key, row_of.size()).first;
						columns[col].push_back({it->second, c});
					}
				}
		}
	Matrix A = zero_matrix(row_of.size(), cols);
	for (std::size_t c = 0; c < cols; ++c)
		for (const auto& [r, v] : columns[c])
			A[r][c] += v;
	std::vector<LinearMapData> basis;
	for (const auto& v : nullspace(A, cols)) {
		auto lam = LinearMapData::zero(s, l);
		for (std::size_t c = 0; c < cols; ++c)
			if (!is_zero(v[c]))
				lam.images[c / masks.size()].add(masks[c % masks.size()], v[c]);
		basis.push_back(std::move(lam));
	}
	return basis;
}

std::vector<Multivector> w_k_basis(const CrossedModuleData& cm, unsigned k)
{
	if (k == 0)
		throw std::invalid_argument("w_k_basis: k must be at least 1");
	const Space s = cm.space();
	std::vector<Mask> masks;
	for (Mask m = 0; m < (Mask{1} << s.dim()); ++m)
		if (std::popcount(m & s.g_mask()) == 1 && static_cast<unsigned>(std::popcount(m)) == k)
			masks.push_back(m);
	const auto n = s.g_dim;
	std::map<std::pair<std::size_t, Mask>, std::size_t> row_of;
	std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns(masks.size());
	for (std::size_t c = 0; c < masks.size(); ++c) {
		auto w = Multivector::monomial(s, masks[c]);
		for (std::size_t p = 0; p < n; ++p)
			for (std::size_t q = p; q < n; ++q) {
				auto res = interior(g_dual(cm, p), interior(phi_star_g_dual(cm, q), w)) +
				           interior(g_dual(cm, q), interior(phi_star_g_dual(cm, p), w));
				for (const auto& [m, v] : res.terms()) {
					auto it = row_of.try_emplace({p * n + q, m}, row_of.size()).first;
					columns[c].push_back({it->second, v});
				}
			}
	}
	Matrix A = zero_matrix(row_of.size(), masks.size());
	for (std::size_t c = 0; c < masks.size(); ++c)
		for (const auto& [r, v] : columns[c])
			A[r][c] += v;
	std::vector<Multivector> basis;
	for (const auto& v : nullspace(A, masks.size())) {
		Multivector w(s);
		for (std::size_t c = 0; c < masks.size(); ++c)
			w.add(masks[c], v[c]);
		basis.push_back(std::move(w));
	}
	return basis;
}

WeakLie2Bialgebra to_bialgebra(const QuasiTriple& t) { return {to_lie2_algebra(t.pair.cm), to_coalgebra(t)}; }

} // namespace lie2b
