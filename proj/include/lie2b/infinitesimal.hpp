#pragma once

#include "lie2b/crossed_module.hpp"
#include "lie2b/lie2.hpp"
#include "lie2b/linear_map.hpp"
#include "lie2b/report.hpp"
#include "lie2b/structure_maps.hpp"

#include <vector>

namespace lie2b {

/// Candidate element (omega, delta) of A_k over a crossed module. Both maps live on the
/// generators of g |x theta with the complementary generators sent to zero:
/// omega: theta -> wedge^k theta, delta: g -> g ^ wedge^{k-1} theta.
/// For k = 0, omega: theta -> scalars and delta = 0.
struct InfinitesimalPair
{
	CrossedModuleData cm;
	unsigned k = 1;
	LinearMapData omega;
	LinearMapData delta;

	static InfinitesimalPair zero(const CrossedModuleData& cm, unsigned k);
	/// Degenerate k = 0 pair from the values omega(u_a).
	static InfinitesimalPair degree_zero(const CrossedModuleData& cm, const std::vector<Scalar>& omega_values);

	/// omega + delta as one generator map (the full derivation of degree k-1).
	LinearMapData generator_map() const;
	/// Throws std::invalid_argument if the maps have the wrong bigrades.
	void check() const;

	friend bool operator==(const InfinitesimalPair&, const InfinitesimalPair&) = default;
};

struct QuasiTriple
{
	InfinitesimalPair pair; ///< k = 2
	LinearMapData eta;      ///< g -> wedge^3 theta, zero on theta

	void check() const;
	friend bool operator==(const QuasiTriple&, const QuasiTriple&) = default;
};

/// Symmetric-contraction condition i_{z1} i_{phi* z2} w = -i_{z2} i_{phi* z1} w for all
/// dual basis vectors z1, z2 of g. Throws unless w has bigrade (1, k-1).
Report in_W_k(const Multivector& w, unsigned k, const CrossedModuleData& cm);

std::vector<Identity> id_identities(const InfinitesimalPair& p);
/// ID1 (D_phi omega = delta phi), ID2 (delta a 1-cocycle; delta valued in W_k, reported
/// separately), ID3 (x|>omega(u) - omega(x|>u) = pr [u, delta(x)]). k = 0 uses its own pair of conditions.
Report check_ID(const InfinitesimalPair& p);

/// Graded commutator of the generator maps; k = k1 + k2 - 1.
InfinitesimalPair a_k_bracket(const InfinitesimalPair& p1, const InfinitesimalPair& p2);

/// d(u) = omega(u), d(x) = ((1-e^{-D})/D) delta(x). Throws if p fails check_ID.
LinearMapData build_partial(const InfinitesimalPair& p);

/// d[X,Y] = [dX,Y] + [X,dY] on generators, Schouten brackets in wedge L.
std::vector<Identity> k_differential_identities(const LinearMapData& d, const LieAlgebraData& L, unsigned k);
Report is_k_differential(const LinearMapData& d, const LieAlgebraData& L, unsigned k);
/// [d1,d2] = d1 d2 - (-1)^{(k1-1)(k2-1)} d2 d1. Throws unless both are differentials.
LinearMapData differential_commutator(const LinearMapData& d1, const LinearMapData& d2, const LieAlgebraData& L);

/// lambda[x,y] = x|>lambda(y) - y|>lambda(x) for lambda on the g-generators.
std::vector<Identity> cocycle_identities(const LinearMapData& lambda, const CrossedModuleData& cm,
                                         const std::string& name = "cocycle");
Report cocycle_check(const LinearMapData& lambda, const CrossedModuleData& cm, const std::string& name = "cocycle");
/// omega[u,v] = [u,omega(v)] - [v,omega(u)] on theta.
Report theta_cocycle_check(const LinearMapData& omega, const CrossedModuleData& cm);

std::vector<Identity> quasi_triple_identities(const QuasiTriple& t);
/// Seven conditions plus delta valued in W_2 (unfolded), or {o+c,o+c} = 0 with
/// o the crossed-module part and c the encoded triple (bracket).
Report check_quasi_triple(const QuasiTriple& t, Route route);

QuasiTriple to_quasi_triple(const CrossedModuleData& cm, const WeakLie2Coalgebra& c);
WeakLie2Coalgebra to_coalgebra(const QuasiTriple& t);
/// The bialgebra element pairing the crossed module with the triple.
WeakLie2Bialgebra to_bialgebra(const QuasiTriple& t);

/// Pair (lambda o phi, D_phi o lambda) of a cocycle lambda: g -> wedge^l theta.
InfinitesimalPair cocycle_pair(const CrossedModuleData& cm, const LinearMapData& lambda);

/// Basis of the 1-cocycles g -> wedge^l theta, computed as an exact nullspace.
std::vector<LinearMapData> cocycle_basis(const CrossedModuleData& cm, unsigned l);

/// Basis of W_k inside g ^ wedge^{k-1} theta, computed as an exact nullspace.
std::vector<Multivector> w_k_basis(const CrossedModuleData& cm, unsigned k);

/// Generator map of a degree-l map given on the g-generators only.
LinearMapData g_map(const CrossedModuleData& cm, unsigned degree, const std::vector<Multivector>& images_of_g);

} // namespace lie2b
