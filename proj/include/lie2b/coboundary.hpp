#pragma once

#include "lie2b/crossed_module.hpp"
#include "lie2b/infinitesimal.hpp"
#include "lie2b/lie_bialgebra.hpp"
#include "lie2b/report.hpp"

namespace lie2b {

/// Candidate r-matrix: r in wedge^2 theta over a crossed module.
struct RMatrix
{
	CrossedModuleData cm;
	Multivector r;

	/// Throws std::invalid_argument unless r has bigrade (0, 2) in cm.space().
	void check() const;

	friend bool operator==(const RMatrix&, const RMatrix&) = default;
};

/// [r, r] in wedge^3 theta (Schouten bracket of theta).
Multivector r_square(const RMatrix& r);

/// x |> [r,r] = 0 for every basis vector of g.
std::vector<Identity> r_matrix_identities(const RMatrix& r);
Report is_r_matrix(const RMatrix& r);

/// lambda_r(x) = -x |> r, a 1-cocycle g -> wedge^2 theta.
LinearMapData lambda_r(const RMatrix& r);

/// omega_r(u) = [r,u], delta_r(x) = -D_phi(x |> r), eta_r(x) = -1/2 x |> [r,r].
/// Asserts delta_r = -x |> (D_phi r) and throws std::logic_error if the forms disagree.
QuasiTriple coboundary_triple(const RMatrix& r);

/// (lambda phi, D_phi lambda, lambda D_phi lambda). Throws unless lambda is a cocycle g -> wedge^2 theta.
QuasiTriple general_cocycle_triple(const LinearMapData& lambda, const CrossedModuleData& cm);

/// Dual crossed module g* -> theta* of an r-matrix:
/// <[k1,k2], u> = <k1 ^ k2, [r,u]>, <k |> xi, x> = <phi* xi ^ k, x |> r>, phi' = -phi*.
/// The action takes this wedge order so that it represents the bracket above.
/// Throws std::invalid_argument if r fails is_r_matrix.
LieBialgebraCrossedModule dual_crossed_module(const RMatrix& r);

/// Pairing <k^b ^ k^c, w> = coefficient of u_b ^ u_c in w (determinant convention).
Scalar pair_theta2(const Multivector& w, std::size_t b, std::size_t c);

} // namespace lie2b
