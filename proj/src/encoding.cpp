#include "lie2b/encoding.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace lie2b {

namespace {

using F = Family;

Generator gen(F f, std::size_t i) { return {f, static_cast<std::uint16_t>(i)}; }

struct Shape
{
	Component component;
	std::array<int, 4> counts; // G, Theta, GStar, ThetaStar
	std::vector<F> written;    // family order of the displayed product
	const Scalar* constant;
};

const std::vector<Shape>& shapes()
{
	static const std::vector<Shape> s = {
	    {Component::Phi, {1, 0, 0, 1}, {F::ThetaStar, F::G}, &encoding::phi_constant},
	    {Component::Bracket, {1, 0, 2, 0}, {F::GStar, F::G}, &encoding::bracket_constant},
	    {Component::Action, {0, 1, 1, 1}, {F::GStar, F::ThetaStar, F::Theta}, &encoding::action_constant},
	    {Component::H, {0, 1, 3, 0}, {F::GStar, F::Theta}, &encoding::h_constant},
	    {Component::Omega, {0, 2, 0, 1}, {F::ThetaStar, F::Theta}, &encoding::omega_constant},
	    {Component::Delta, {1, 1, 1, 0}, {F::GStar, F::G, F::Theta}, &encoding::delta_constant},
	    {Component::Eta, {0, 3, 1, 0}, {F::GStar, F::Theta}, &encoding::eta_constant},
	};
	return s;
}

const Shape& shape_of(const SMonomial& m)
{
	std::array<int, 4> counts{};
	for (auto g : m)
		++counts[static_cast<int>(g.family)];
	for (const auto& s : shapes())
		if (s.counts == counts)
			return s;
	throw std::invalid_argument("term " + monomial_label(m) + " is not one of the admissible degree -4 shapes");
}

const Shape& shape_for(Component c)
{
	for (const auto& s : shapes())
		if (s.component == c)
			return s;
	throw std::logic_error("unknown component");
}

// Coefficient of the displayed product relative to the canonical monomial.
SMonomial written_order(const SMonomial& m, const Shape& s, int& sign)
{
	SMonomial w = m;
	auto rank = [&](F f) { return std::find(s.written.begin(), s.written.end(), f) - s.written.begin(); };
	std::stable_sort(w.begin(), w.end(), [&](Generator a, Generator b) {
		auto ra = rank(a.family), rb = rank(b.family);
		return ra != rb ? ra < rb : a.index < b.index;
	});
	SMonomial c = w;
	sign = canonicalize(c);
	return w;
}

void add(SElement& e, Component c, SMonomial written, const Scalar& v)
{
	if (!is_zero(v))
		e.add_product(std::move(written), *shape_for(c).constant * v);
}

std::size_t dim_for(F f, std::size_t theta_dim, std::size_t g_dim)
{
	return (f == F::G || f == F::GStar) ? g_dim : theta_dim;
}

} // namespace

std::string component_name(Component c)
{
	switch (c) {
	case Component::Phi: return "phi";
	case Component::Bracket: return "bracket";
	case Component::Action: return "action";
	case Component::H: return "h";
	case Component::Omega: return "omega";
	case Component::Delta: return "delta";
	case Component::Eta: return "eta";
	}
	return "?";
}

Component classify(const SMonomial& m) { return shape_of(m).component; }

SElement encode_phi(const Tensor& phi)
{
	SElement e;
	for (std::size_t i = 0; i < phi.shape()[0]; ++i)
		for (std::size_t a = 0; a < phi.shape()[1]; ++a)
			add(e, Component::Phi, {gen(F::ThetaStar, a), gen(F::G, i)}, phi({i, a}));
	return e;
}

SElement encode_bracket(const Tensor& b)
{
	SElement e;
	const auto n = b.shape()[0];
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				add(e, Component::Bracket, {gen(F::GStar, i), gen(F::GStar, j), gen(F::G, k)}, b({k, i, j}));
	return e;
}

SElement encode_action(const Tensor& A)
{
	SElement e;
	const auto m = A.shape()[0], n = A.shape()[1];
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t a = 0; a < m; ++a)
			for (std::size_t b = 0; b < m; ++b)
				add(e, Component::Action, {gen(F::GStar, i), gen(F::ThetaStar, a), gen(F::Theta, b)}, A({b, i, a}));
	return e;
}

SElement encode_h(const Tensor& h)
{
	SElement e;
	const auto m = h.shape()[0], n = h.shape()[1];
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			for (std::size_t k = j + 1; k < n; ++k)
				for (std::size_t a = 0; a < m; ++a)
					add(e, Component::H, {gen(F::GStar, i), gen(F::GStar, j), gen(F::GStar, k), gen(F::Theta, a)},
					    h({a, i, j, k}));
	return e;
}

SElement encode_omega(const Tensor& w)
{
	SElement e;
	const auto m = w.shape()[0];
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t b = 0; b < m; ++b)
			for (std::size_t c = b + 1; c < m; ++c)
				add(e, Component::Omega, {gen(F::ThetaStar, a), gen(F::Theta, b), gen(F::Theta, c)}, w({a, b, c}));
	return e;
}

SElement encode_delta(const Tensor& d)
{
	SElement e;
	const auto n = d.shape()[0], m = d.shape()[2];
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t b = 0; b < m; ++b)
				add(e, Component::Delta, {gen(F::GStar, i), gen(F::G, j), gen(F::Theta, b)}, d({i, j, b}));
	return e;
}

SElement encode_eta(const Tensor& t)
{
	SElement e;
	const auto n = t.shape()[0], m = t.shape()[1];
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t a = 0; a < m; ++a)
			for (std::size_t b = a + 1; b < m; ++b)
				for (std::size_t c = b + 1; c < m; ++c)
					add(e, Component::Eta, {gen(F::GStar, i), gen(F::Theta, a), gen(F::Theta, b), gen(F::Theta, c)},
					    t({i, a, b, c}));
	return e;
}

SElement encode(const WeakLie2Algebra& a)
{
	a.check();
	return encode_phi(a.phi) + encode_bracket(a.bracket) + encode_action(a.action) + encode_h(a.h);
}

SElement encode(const WeakLie2Coalgebra& c)
{
	c.check();
	return encode_phi(c.phi) + encode_omega(c.omega) + encode_delta(c.delta) + encode_eta(c.eta);
}

SElement encode(const WeakLie2Bialgebra& b)
{
	b.check();
	return encode(b.algebra) + encode_omega(b.coalgebra.omega) + encode_delta(b.coalgebra.delta) +
	       encode_eta(b.coalgebra.eta);
}

namespace {

// Visits each term as (component, generators in displayed order, classical value).
template <class Fn> void for_each_component(const SElement& e, std::size_t theta_dim, std::size_t g_dim, Fn fn)
{
	for (const auto& [m, c] : e.terms()) {
		const Shape& s = shape_of(m);
		for (auto g : m)
			if (g.index >= dim_for(g.family, theta_dim, g_dim))
				throw std::invalid_argument("term " + monomial_label(m) + " has an index beyond the declared dimensions");
		int sign = 1;
		SMonomial w = written_order(m, s, sign);
		fn(s.component, w, c / (sign * *s.constant));
	}
}

[[noreturn]] void inadmissible(Component c, const char* kind)
{
	throw std::invalid_argument("component " + component_name(c) + " is not allowed in a " + kind + " element");
}

} // namespace

WeakLie2Algebra decode_algebra(const SElement& e, std::size_t m, std::size_t n)
{
	auto a = WeakLie2Algebra::zero(m, n);
	for_each_component(e, m, n, [&](Component c, const SMonomial& w, const Scalar& v) {
		switch (c) {
		case Component::Phi: a.phi({w[1].index, w[0].index}) = v; break;
		case Component::Bracket:
			a.bracket({w[2].index, w[0].index, w[1].index}) = v;
			a.bracket({w[2].index, w[1].index, w[0].index}) = -v;
			break;
		case Component::Action: a.action({w[2].index, w[0].index, w[1].index}) = v; break;
		case Component::H: set_alternating(a.h, {w[3].index}, {w[0].index, w[1].index, w[2].index}, v); break;
		default: inadmissible(c, "Lie 2-algebra");
		}
	});
	return a;
}

WeakLie2Coalgebra decode_coalgebra(const SElement& e, std::size_t m, std::size_t n)
{
	auto k = WeakLie2Coalgebra::zero(m, n);
	for_each_component(e, m, n, [&](Component c, const SMonomial& w, const Scalar& v) {
		switch (c) {
		case Component::Phi: k.phi({w[1].index, w[0].index}) = v; break;
		case Component::Omega:
			k.omega({w[0].index, w[1].index, w[2].index}) = v;
			k.omega({w[0].index, w[2].index, w[1].index}) = -v;
			break;
		case Component::Delta: k.delta({w[0].index, w[1].index, w[2].index}) = v; break;
		case Component::Eta: set_alternating(k.eta, {w[0].index}, {w[1].index, w[2].index, w[3].index}, v); break;
		default: inadmissible(c, "Lie 2-coalgebra");
		}
	});
	return k;
}

WeakLie2Bialgebra decode_bialgebra(const SElement& e, std::size_t m, std::size_t n)
{
	SElement alg, co;
	for (const auto& [mono, c] : e.terms()) {
		auto comp = classify(mono);
		if (comp == Component::Phi) {
			alg.add(mono, c);
			co.add(mono, c);
		} else if (comp == Component::Bracket || comp == Component::Action || comp == Component::H) {
			alg.add(mono, c);
		} else {
			co.add(mono, c);
		}
	}
	return {decode_algebra(alg, m, n), decode_coalgebra(co, m, n)};
}

SElement swap_roles(const SElement& e)
{
	SElement r;
	for (const auto& [m, c] : e.terms()) {
		SMonomial w = m;
		for (auto& g : w) {
			switch (g.family) {
			case F::G: g.family = F::ThetaStar; break;
			case F::ThetaStar: g.family = F::G; break;
			case F::Theta: g.family = F::GStar; break;
			case F::GStar: g.family = F::Theta; break;
			}
		}
		r.add_product(std::move(w), c);
	}
	return r;
}

WeakLie2Algebra dual_algebra(const WeakLie2Coalgebra& c)
{
	return decode_algebra(swap_roles(encode(c)), c.g_dim, c.theta_dim);
}

WeakLie2Coalgebra dual_coalgebra(const WeakLie2Algebra& a)
{
	return decode_coalgebra(swap_roles(encode(a)), a.g_dim, a.theta_dim);
}

} // namespace lie2b
