#pragma once

#include "lie2b/lie_algebra.hpp"
#include "lie2b/linear_map.hpp"
#include "lie2b/multivector.hpp"
#include "lie2b/report.hpp"
#include "lie2b/tensor.hpp"

#include <vector>

namespace lie2b {

/// phi: theta -> g and an action of g on theta.
///   phi(u_a)    = sum_i phi(i, a) x_i            shape {g, theta}
///   x_i |> u_a  = sum_b action(b, i, a) u_b      shape {theta, g, theta}
struct CrossedModuleData
{
	LieAlgebraData theta;
	LieAlgebraData g;
	Tensor phi;
	Tensor action;

	CrossedModuleData() = default;
	CrossedModuleData(LieAlgebraData theta, LieAlgebraData g);

	/// The based space g (+) theta.
	Space space() const { return {g.dim(), theta.dim()}; }
	/// Throws std::invalid_argument if tensor shapes disagree with the algebra dimensions.
	void check_shapes() const;

	friend bool operator==(const CrossedModuleData&, const CrossedModuleData&) = default;
};

/// Semidirect product g |x theta on basis (x..., u...):
/// [(x,u),(y,v)] = ([x,y], x|>v - y|>u + [u,v]). Does not validate.
LieAlgebraData semidirect_bracket(const CrossedModuleData& cm);

/// Validating form: throws std::invalid_argument if cm is not a crossed module.
LieAlgebraData semidirect_product(const CrossedModuleData& cm);

/// Jacobi identity of a Lie algebra over all i<j<k, plus antisymmetry.
std::vector<Identity> lie_algebra_identities(const LieAlgebraData& L, const std::string& name, const std::string& prefix);

std::vector<Identity> crossed_module_identities(const CrossedModuleData& cm);
Report is_crossed_module(const CrossedModuleData& cm);

/// D_phi on generators of g |x theta: u |-> phi(u), x |-> 0.
LinearMapData d_phi_map(const CrossedModuleData& cm);
Multivector d_phi(const CrossedModuleData& cm, const Multivector& a);
Multivector d_phi_power(const CrossedModuleData& cm, const Multivector& a, unsigned n);

/// sum_{i<k} (-1)^i/(i+1)! D_phi^i(a) for a homogeneous of degree k, i.e. (1-e^{-D})/D
/// truncated. The truncation is exact when a has at least one g-factor, since then D^k a = 0.
Multivector series_operator(const CrossedModuleData& cm, const Multivector& a, unsigned k);
/// The compositional inverse D/(1-e^{-D}) = 1 + D/2 + D^2/12 - ..., truncated the same way.
Multivector inverse_series_operator(const CrossedModuleData& cm, const Multivector& a, unsigned k);

/// ad_x on g |x theta as a generator map: y |-> [x,y], u |-> x|>u.
LinearMapData action_map(const CrossedModuleData& cm, const std::vector<Scalar>& x);
LinearMapData action_map(const CrossedModuleData& cm, std::size_t i);
/// x |> a, extended as a derivation.
Multivector act(const CrossedModuleData& cm, std::size_t i, const Multivector& a);

/// Images of the basis of theta (resp. g) as elements of g |x theta.
Multivector theta_vector(const CrossedModuleData& cm, std::size_t a);
Multivector g_vector(const CrossedModuleData& cm, std::size_t i);
Multivector phi_of(const CrossedModuleData& cm, std::size_t a);

/// Covector on g |x theta: the dual basis vector xi^i, resp. phi^* xi^i (supported on theta).
std::vector<Scalar> g_dual(const CrossedModuleData& cm, std::size_t i);
std::vector<Scalar> phi_star_g_dual(const CrossedModuleData& cm, std::size_t i);
std::vector<Scalar> theta_dual(const CrossedModuleData& cm, std::size_t a);

/// The identity crossed module L -> L with the adjoint action.
CrossedModuleData identity_crossed_module(const LieAlgebraData& L);
/// Inclusion of the ideal spanned by `basis` (coordinates in g) with the adjoint action.
/// The ideal's structure constants are solved exactly; throws if it is not an ideal.
CrossedModuleData ideal_crossed_module(const LieAlgebraData& g, const std::vector<std::vector<Scalar>>& basis);

} // namespace lie2b
