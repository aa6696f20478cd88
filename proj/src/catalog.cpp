#include "lie2b/catalog.hpp"

#include "lie2b/linalg.hpp"

#include <array>
#include <functional>
#include <stdexcept>

namespace lie2b {

namespace {

// 2x2 complex matrices with rational real and imaginary parts.
struct Cx
{
	Scalar re = 0, im = 0;
};
Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

using Mat = std::array<Cx, 4>; // row-major

Mat real(Scalar a, Scalar b, Scalar c, Scalar d) { return {Cx{a, 0}, Cx{b, 0}, Cx{c, 0}, Cx{d, 0}}; }
Mat times_i(const Mat& m)
{
	Mat r;
	for (std::size_t k = 0; k < 4; ++k)
		r[k] = {-m[k].im, m[k].re};
	return r;
}

Mat mul(const Mat& a, const Mat& b)
{
	Mat r;
	for (std::size_t i = 0; i < 2; ++i)
		for (std::size_t j = 0; j < 2; ++j)
			r[2 * i + j] = a[2 * i] * b[j] + a[2 * i + 1] * b[2 + j];
	return r;
}

Mat commutator(const Mat& a, const Mat& b)
{
	auto p = mul(a, b), q = mul(b, a);
	Mat r;
	for (std::size_t k = 0; k < 4; ++k)
		r[k] = p[k] - q[k];
	return r;
}

Mat lincomb(const std::vector<Mat>& basis, const std::vector<Scalar>& c)
{
	Mat r;
	for (std::size_t i = 0; i < basis.size(); ++i)
		for (std::size_t k = 0; k < 4; ++k)
			r[k] = r[k] + Cx{c[i] * basis[i][k].re, c[i] * basis[i][k].im};
	return r;
}

Scalar im_trace(const Mat& m) { return m[0].im + m[3].im; }

/// Real coordinates of m in `basis`; throws if m is outside the span.
std::vector<Scalar> coords(const std::vector<Mat>& basis, const Mat& m)
{
	Matrix A = zero_matrix(8, basis.size());
	std::vector<Scalar> b(8);
	for (std::size_t k = 0; k < 4; ++k) {
		for (std::size_t i = 0; i < basis.size(); ++i) {
			A[2 * k][i] = basis[i][k].re;
			A[2 * k + 1][i] = basis[i][k].im;
		}
		b[2 * k] = m[k].re;
		b[2 * k + 1] = m[k].im;
	}
	auto x = solve(A, b, basis.size());
	if (!x)
		throw std::logic_error("catalog: matrix outside the span of the basis");
	return *x;
}

LieAlgebraData matrix_algebra(const std::vector<Mat>& basis)
{
	LieAlgebraData L(basis.size());
	for (std::size_t i = 0; i < basis.size(); ++i)
		for (std::size_t j = i + 1; j < basis.size(); ++j) {
			auto c = coords(basis, commutator(basis[i], basis[j]));
			for (std::size_t k = 0; k < c.size(); ++k)
				if (!is_zero(c[k]))
					L.set_bracket(i, j, k, c[k]);
		}
	return L;
}

/// Crossed module theta -> g of matrix algebras with g acting on theta by commutators.
CrossedModuleData matrix_crossed_module(const std::vector<Mat>& theta, const std::vector<Mat>& g,
                                        const std::function<Mat(const Mat&)>& phi)
{
	CrossedModuleData cm(matrix_algebra(theta), matrix_algebra(g));
	for (std::size_t a = 0; a < theta.size(); ++a) {
		auto p = coords(g, phi(theta[a]));
		for (std::size_t i = 0; i < g.size(); ++i)
			cm.phi({i, a}) = p[i];
	}
	for (std::size_t i = 0; i < g.size(); ++i)
		for (std::size_t a = 0; a < theta.size(); ++a) {
			auto c = coords(theta, commutator(g[i], theta[a]));
			for (std::size_t b = 0; b < theta.size(); ++b)
				cm.action({b, i, a}) = c[b];
		}
	return cm;
}

std::vector<Mat> gl2_basis() { return {real(1, 0, 0, 0), real(0, 1, 0, 0), real(0, 0, 1, 0), real(0, 0, 0, 1)}; }
std::vector<Mat> sl2_basis() { return {real(1, 0, 0, -1), real(0, 1, 0, 0), real(0, 0, 1, 0)}; }

Mat traceless_part(const Mat& a)
{
	Cx half_tr{(a[0].re + a[3].re) / 2, (a[0].im + a[3].im) / 2};
	return {a[0] - half_tr, a[1], a[2], a[3] - half_tr};
}

WeakLie2Bialgebra string_plus_fixed_x()
{
	return {string_lie2_algebra(examples::sl2(), 1), examples::fixed_x_coalgebra()};
}

RMatrix gl2_r_matrix()
{
	auto cm = examples::gl2_to_sl2();
	const Space s = cm.space();
	return {cm, wedge(Multivector::basis(s, s.theta_index(1)), Multivector::basis(s, s.theta_index(2)))};
}

struct Item
{
	const char* name;
	const char* description;
	Structure (*make)();
};

const std::vector<Item>& items()
{
	static const std::vector<Item> list = {
	    {"string-sl2", "string Lie 2-algebra R -> sl(2), h = K(x,[y,z]) with hbar = 1",
	     [] { return Structure{string_lie2_algebra(examples::sl2(), 1)}; }},
	    {"string-sl2-half", "string Lie 2-algebra R -> sl(2) with hbar = 1/2",
	     [] { return Structure{string_lie2_algebra(examples::sl2(), Scalar(1, 2))}; }},
	    {"fixed-x-coalgebra", "weak Lie 2-coalgebra on R -> sl(2) from the fixed element x = h",
	     [] { return Structure{examples::fixed_x_coalgebra()}; }},
	    {"weak-bialgebra-string+fixed-x", "string Lie 2-algebra and the fixed-x coalgebra as one weak Lie 2-bialgebra",
	     [] { return Structure{string_plus_fixed_x()}; }},
	    {"identity-bicrossed-from-bialgebra", "sl(2) -> sl(2) identity with its standard dual, phi' = -id",
	     [] { return Structure{identity_bicrossed(examples::sl2(), examples::sl2_standard_dual())}; }},
	    {"u2-manin", "upper triangular (real diagonal) -> its traceless part, dual su(2) -> u(2) under Im tr(XY)",
	     [] { return Structure{examples::u2_manin()}; }},
	    {"gl2-sl2-projection", "gl(2) -> sl(2), A |-> A - (trA/2) I, adjoint action",
	     [] { return Structure{examples::gl2_to_sl2()}; }},
	    {"sl2-ideal-in-gl2", "inclusion of the ideal sl(2) in gl(2)", [] { return Structure{examples::sl2_ideal_in_gl2()}; }},
	    {"identity-sl2", "identity crossed module sl(2) -> sl(2)",
	     [] { return Structure{identity_crossed_module(examples::sl2())}; }},
	    {"gl2-sl2-r-matrix", "r = E12 ^ E21 on gl(2) -> sl(2)", [] { return Structure{gl2_r_matrix()}; }},
	};
	return list;
}

} // namespace

namespace examples {

LieAlgebraData sl2() { return matrix_algebra(sl2_basis()); }
LieAlgebraData gl2() { return matrix_algebra(gl2_basis()); }

LieAlgebraData sl2_standard_dual()
{
	LieAlgebraData L(3);
	L.set_bracket(0, 1, 1, -1);
	L.set_bracket(0, 2, 2, -1);
	return L;
}

CrossedModuleData gl2_to_sl2() { return matrix_crossed_module(gl2_basis(), sl2_basis(), traceless_part); }

CrossedModuleData sl2_ideal_in_gl2()
{
	return matrix_crossed_module(sl2_basis(), gl2_basis(), [](const Mat& m) { return m; });
}

WeakLie2Coalgebra fixed_x_coalgebra()
{
	auto g = sl2();
	auto c = WeakLie2Coalgebra::zero(1, 3);
	for (std::size_t y = 0; y < 3; ++y)
		for (const auto& [j, v] : g.bracket(0, y))
			c.delta({y, j, 0}) = -v;
	return c;
}

LieBialgebraCrossedModule u2_manin()
{
	const Mat E11 = real(1, 0, 0, 0), E22 = real(0, 0, 0, 1), E12 = real(0, 1, 0, 0), E21 = real(0, 0, 1, 0);
	const std::vector<Mat> theta = {E11, E22, E12, times_i(E12)};
	const std::vector<Mat> g = {real(1, 0, 0, -1), E12, times_i(E12)};
	auto primal = matrix_crossed_module(theta, g, traceless_part);
	const auto m = theta.size(), n = g.size();

	// kappa_b in u(2) with Im tr(t_a kappa_b) = delta_ab
	Mat A12 = real(0, 1, -1, 0);
	const std::vector<Mat> u2 = {times_i(E11), times_i(E22), A12, times_i(real(0, 1, 1, 0))};
	Matrix P = zero_matrix(m, m);
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t c = 0; c < m; ++c)
			P[a][c] = im_trace(mul(theta[a], u2[c]));
	std::vector<Mat> kappa;
	for (std::size_t b = 0; b < m; ++b) {
		std::vector<Scalar> e(m, 0);
		e[b] = 1;
		kappa.push_back(lincomb(u2, *solve(P, e, m)));
	}
	auto theta_star = matrix_algebra(kappa);

	// g* embedded in u(2) by phi*: phi*(xi^i) = sum_a phi(i,a) kappa_a
	std::vector<Mat> gstar;
	for (std::size_t i = 0; i < n; ++i) {
		std::vector<Scalar> c(m);
		for (std::size_t a = 0; a < m; ++a)
			c[a] = primal.phi({i, a});
		gstar.push_back(lincomb(kappa, c));
	}
	CrossedModuleData dual(LieAlgebraData(n), theta_star);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t a = 0; a < m; ++a)
			dual.phi({a, i}) = -primal.phi({i, a});
	// phi' is injective, so phi'(k |> xi) = [k, phi'(xi)] determines the action
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t i = 0; i < n; ++i) {
			auto c = coords(gstar, commutator(kappa[a], gstar[i]));
			for (std::size_t j = 0; j < n; ++j)
				dual.action({j, a, i}) = c[j];
		}
	// [xi1, xi2] = phi'(xi1) |> xi2
	LieAlgebraData gs(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t l = i + 1; l < n; ++l)
			for (std::size_t j = 0; j < n; ++j) {
				Scalar v = 0;
				for (std::size_t a = 0; a < m; ++a)
					v += dual.phi({a, i}) * dual.action({j, a, l});
				if (!is_zero(v))
					gs.set_bracket(i, l, j, v);
			}
	CrossedModuleData d(gs, theta_star);
	d.phi = dual.phi;
	d.action = dual.action;
	return {primal, d};
}

} // namespace examples

const std::vector<std::string>& catalog_names()
{
	static const std::vector<std::string> names = [] {
		std::vector<std::string> v;
		for (const auto& it : items())
			v.push_back(it.name);
		return v;
	}();
	return names;
}

CatalogEntry catalog_entry(const std::string& name)
{
	for (const auto& it : items())
		if (name == it.name)
			return {it.name, it.description, it.make()};
	throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

} // namespace lie2b
