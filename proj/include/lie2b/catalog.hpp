#pragma once

#include "lie2b/io.hpp"
#include "lie2b/lie2.hpp"

#include <string>
#include <vector>

namespace lie2b {

struct CatalogEntry
{
	std::string name;
	std::string description;
	Structure structure;
};

/// Names in listing order.
const std::vector<std::string>& catalog_names();
/// Throws std::invalid_argument for unknown names.
CatalogEntry catalog_entry(const std::string& name);

namespace examples {

/// sl(2) on (h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebraData sl2();
/// gl(2) on (E11, E12, E21, E22).
LieAlgebraData gl2();
/// The standard dual of sl(2): [k0,k1] = -k1, [k0,k2] = -k2 (a Lie bialgebra with sl2()).
LieAlgebraData sl2_standard_dual();
/// gl(2) -> sl(2), A |-> A - (trA/2) I, sl(2) acting on gl(2) by commutators.
CrossedModuleData gl2_to_sl2();
/// sl(2) (basis E11-E22, E12, E21) included in gl(2) as an ideal.
CrossedModuleData sl2_ideal_in_gl2();
/// theta = R, g = sl(2): delta(y) = -[x,y] ^ u0 for the fixed element x = h.
WeakLie2Coalgebra fixed_x_coalgebra();
/// theta = upper triangular 2x2 complex matrices with real diagonal, g = its traceless part,
/// phi(A) = A - (trA/2) I; dual side theta* = u(2) under <X,Y> = Im tr(XY), g* = su(2) via phi*.
LieBialgebraCrossedModule u2_manin();

} // namespace examples

} // namespace lie2b
