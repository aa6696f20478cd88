#pragma once

#include "lie2b/tensor.hpp"

#include <cstddef>

namespace lie2b {

/// Classical data of a weak Lie 2-algebra on theta -> g.
///   phi(u_a)        = sum_i phi(i,a) x_i                   {g, theta}
///   [x_i, x_j]      = sum_k bracket(k,i,j) x_k             {g, g, g}, antisymmetric in (i,j)
///   x_i |> u_a      = sum_b action(b,i,a) u_b              {theta, g, theta}
///   h(x_i,x_j,x_k)  = sum_a h(a,i,j,k) u_a                 {theta, g, g, g}, alternating in (i,j,k)
struct WeakLie2Algebra
{
	std::size_t theta_dim = 0;
	std::size_t g_dim = 0;
	Tensor phi, bracket, action, h;

	static WeakLie2Algebra zero(std::size_t theta_dim, std::size_t g_dim);
	/// Throws std::invalid_argument on wrong shapes or non-alternating bracket / h.
	void check() const;
	bool is_strict() const { return h.all_zero(); }

	friend bool operator==(const WeakLie2Algebra&, const WeakLie2Algebra&) = default;
};

/// Classical data of a weak Lie 2-coalgebra on theta -> g.
///   omega(u_a) = sum_{b<c} omega(a,b,c) u_b ^ u_c            {theta, theta, theta}, alternating in (b,c)
///   delta(x_i) = sum_{j,b} delta(i,j,b) x_j ^ u_b            {g, g, theta}
///   eta(x_i)   = sum_{a<b<c} eta(i,a,b,c) u_a ^ u_b ^ u_c    {g, theta, theta, theta}, alternating
/// omega is the cobracket of theta (transpose of the bracket of theta*).
struct WeakLie2Coalgebra
{
	std::size_t theta_dim = 0;
	std::size_t g_dim = 0;
	Tensor phi, omega, delta, eta;

	static WeakLie2Coalgebra zero(std::size_t theta_dim, std::size_t g_dim);
	void check() const;

	friend bool operator==(const WeakLie2Coalgebra&, const WeakLie2Coalgebra&) = default;
};

/// Both halves share phi.
struct WeakLie2Bialgebra
{
	WeakLie2Algebra algebra;
	WeakLie2Coalgebra coalgebra;

	void check() const;
	friend bool operator==(const WeakLie2Bialgebra&, const WeakLie2Bialgebra&) = default;
};

/// Sets t(prefix..., permuted tail) = sign(perm) * v for every permutation of `tail`.
void set_alternating(Tensor& t, std::vector<std::size_t> prefix, std::vector<std::size_t> tail, const Scalar& v);

} // namespace lie2b
