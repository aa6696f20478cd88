#pragma once

#include "lie2b/crossed_module.hpp"
#include "lie2b/encoding.hpp"
#include "lie2b/report.hpp"
#include "lie2b/structure_maps.hpp"

#include <string>
#include <vector>

namespace lie2b {

enum class Route { Unfolded, Bracket, Both };

/// The five compatibility equations of a weak Lie 2-algebra, one Identity each:
/// lie2.jacobiator, lie2.action-curvature, lie2.phi-symmetry, lie2.equivariance,
/// lie2.homotopy-coherence. `g_prefix`/`theta_prefix` label the basis vectors.
/// The returned identities reference `a`, which must outlive them.
std::vector<Identity> weak_lie2_algebra_identities(const WeakLie2Algebra& a, const std::string& name_prefix = "lie2",
                                                   const std::string& g_prefix = "x",
                                                   const std::string& theta_prefix = "u");

/// {e,e} = 0 checked term by term; each nonzero monomial becomes a violation
/// whose tuple is the monomial's generator labels.
Report bracket_square_report(const SElement& e, const std::string& identity);
/// Coefficient text of the violation's monomial in {e,e}.
std::string bracket_square_residual(const SElement& e, const Violation& v);
/// {a,b} = 0 checked term by term, as bracket_square_report.
Report bracket_product_report(const SElement& a, const SElement& b, const std::string& identity);
/// Coefficient text of the violation's monomial in {a,b}.
std::string bracket_product_residual(const SElement& a, const SElement& b, const Violation& v);

Report verify_weak_lie2_algebra(const WeakLie2Algebra& a, Route route);
/// Unfolded route = the five equations on the dual algebra g* -> theta*.
Report verify_weak_lie2_coalgebra(const WeakLie2Coalgebra& c, Route route);
/// {t,t} = 0 and classification weak / quasi (h = 0) / strict (h = eta = 0).
/// Quasi and strict data are cross-checked with the seven-condition criterion.
Report verify_weak_lie2_bialgebra(const WeakLie2Bialgebra& b, Route route);

/// Strict Lie 2-algebra of a crossed module, and back (theta bracket [u,v] = phi(u)|>v).
WeakLie2Algebra to_lie2_algebra(const CrossedModuleData& cm);
CrossedModuleData to_crossed_module(const WeakLie2Algebra& a);

/// String Lie 2-algebra R -> g: phi = 0, trivial action, h(x,y,z) = hbar * K(x,[y,z])
/// with K the trace form of the adjoint representation.
WeakLie2Algebra string_lie2_algebra(const LieAlgebraData& g, const Scalar& hbar);

} // namespace lie2b
