#pragma once

#include "lie2b/s_element.hpp"
#include "lie2b/structure_maps.hpp"

#include <string>

namespace lie2b {

/// Normalization constants of the encoding. Each component is the sum over dual bases
/// written in the displayed generator order, times the constant, then canonicalized.
/// phi, delta and omega make the extraction identities hold verbatim. eta is fixed by
/// requiring {o+c,o+c} = 0 to match the seven quasi-triple conditions, which puts a
/// minus sign in its extraction identity. The test suite re-derives all of them.
namespace encoding {
inline const Scalar phi_constant = 1;     // k^a . x_i
inline const Scalar bracket_constant = 1; // xi^i . xi^j . x_k   (i<j)
inline const Scalar action_constant = -1; // xi^i . k^a . u_b
inline const Scalar h_constant = -1;      // xi^i . xi^j . xi^k . u_a   (i<j<k)
inline const Scalar omega_constant = -1;  // k^a . u_b . u_c   (b<c)
inline const Scalar delta_constant = 1;   // xi^i . x_j . u_b
inline const Scalar eta_constant = -1;    // xi^i . u_a . u_b . u_c   (a<b<c)
} // namespace encoding

/// The seven admissible degree -4 shapes.
enum class Component { Phi, Bracket, Action, H, Omega, Delta, Eta };
std::string component_name(Component c);
/// Component of a canonical monomial, or throws std::invalid_argument.
Component classify(const SMonomial& m);

SElement encode_phi(const Tensor& phi);
SElement encode_bracket(const Tensor& bracket);
SElement encode_action(const Tensor& action);
SElement encode_h(const Tensor& h);
SElement encode_omega(const Tensor& omega);
SElement encode_delta(const Tensor& delta);
SElement encode_eta(const Tensor& eta);

/// s = phi + bracket + action + h
SElement encode(const WeakLie2Algebra& a);
/// c = phi + omega + delta + eta
SElement encode(const WeakLie2Coalgebra& c);
/// t = phi + bracket + action + h + omega + delta + eta
SElement encode(const WeakLie2Bialgebra& b);

/// Inverses of encode. Throw std::invalid_argument when `e` has a term outside
/// the admissible shapes for the requested kind, or indices beyond the dims.
WeakLie2Algebra decode_algebra(const SElement& e, std::size_t theta_dim, std::size_t g_dim);
WeakLie2Coalgebra decode_coalgebra(const SElement& e, std::size_t theta_dim, std::size_t g_dim);
WeakLie2Bialgebra decode_bialgebra(const SElement& e, std::size_t theta_dim, std::size_t g_dim);

/// The Poisson automorphism exchanging the roles of V and V*:
/// x_i <-> k^i and u_a <-> xi^a. It turns a coalgebra element on theta -> g into an
/// algebra element on g* -> theta*.
SElement swap_roles(const SElement& e);

/// The weak Lie 2-algebra on g* -> theta* dual to a coalgebra.
WeakLie2Algebra dual_algebra(const WeakLie2Coalgebra& c);
WeakLie2Coalgebra dual_coalgebra(const WeakLie2Algebra& a);

} // namespace lie2b
