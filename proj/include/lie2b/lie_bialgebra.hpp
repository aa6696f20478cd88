#pragma once

#include "lie2b/crossed_module.hpp"
#include "lie2b/report.hpp"
#include "lie2b/structure_maps.hpp"

#include <string>
#include <vector>

namespace lie2b {

/// Identities of a Lie bialgebra (L, L*): Jacobi of L* and the cocycle condition
/// delta[x,y] = ad_x delta(y) - ad_y delta(x), delta the transpose of the L* bracket.
std::vector<Identity> lie_bialgebra_identities(const LieAlgebraData& L, const LieAlgebraData& Lstar,
                                               const std::string& name = "lie-bialgebra");
/// Throws std::invalid_argument if the dimensions differ.
Report is_lie_bialgebra(const LieAlgebraData& L, const LieAlgebraData& Lstar);

/// Cobracket delta(e_i) = sum_{j<k} <[e^j,e^k]*, e_i> e_j ^ e_k on Space{dim, 0}.
std::vector<Multivector> cobracket(const LieAlgebraData& Lstar);

/// A pair of crossed modules in duality: primal theta -> g and dual g* -> theta*.
/// The dual's theta is g* (basis xi^i) and its g is theta* (basis k^a).
struct LieBialgebraCrossedModule
{
	CrossedModuleData primal;
	CrossedModuleData dual;

	friend bool operator==(const LieBialgebraCrossedModule&, const LieBialgebraCrossedModule&) = default;
};

/// The dual semidirect product theta* |x g* re-based as (xi..., k...), so basis vector i
/// pairs with basis vector i of g |x theta under <(x,u),(k,xi)> = <x,xi> + <u,k>.
LieAlgebraData paired_dual_semidirect(const CrossedModuleData& dual);

/// Both crossed modules, phi' = -phi*, the semidirect pair, and the consequences that
/// (theta, theta*) and (g, g*) are Lie bialgebras. Violation names carry a prefix:
/// primal., dual., bicrossed.dual-map, semidirect., theta-pair., g-pair.
std::vector<Identity> bicrossed_identities(const LieBialgebraCrossedModule& b);
Report is_lie_bialgebra_crossed_module(const LieBialgebraCrossedModule& b);

/// (g* -> theta*, theta -> g). An involution.
LieBialgebraCrossedModule swap_duality(const LieBialgebraCrossedModule& b);

/// Strict Lie 2-bialgebra: omega transposes the theta* bracket,
/// <delta(x), xi ^ k> = -<k |> xi, x>, eta = h = 0.
WeakLie2Bialgebra to_strict_bialgebra(const LieBialgebraCrossedModule& b);
/// Inverse of to_strict_bialgebra; the g* bracket is [xi1, xi2] = phi'(xi1) |> xi2.
/// Throws std::invalid_argument unless h = eta = 0.
LieBialgebraCrossedModule from_strict_bialgebra(const WeakLie2Bialgebra& b);

/// theta -> theta identity with theta* -> theta* given by phi' = -id, the opposite
/// bracket on the acting copy and k2 |> k1 = -[k2, k1], for a Lie bialgebra (theta, theta*).
LieBialgebraCrossedModule identity_bicrossed(const LieAlgebraData& theta, const LieAlgebraData& theta_star);

} // namespace lie2b
