#pragma once

#include "lie2b/lie_algebra.hpp"
#include "lie2b/scalar.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lie2b {

/// Set of basis indices of an exterior monomial, bit i <-> e_i. Indices are < 32.
using Mask = std::uint32_t;

inline unsigned popcount(Mask m) { return static_cast<unsigned>(std::popcount(m)); }

/// Canonical monomial order: exterior degree first, then the increasing index tuples lexicographically.
struct MonomialLess
{
	bool operator()(Mask a, Mask b) const
	{
		auto da = popcount(a), db = popcount(b);
		if (da != db)
			return da < db;
		if (a == b)
			return false;
		Mask diff = a ^ b;
		Mask low = diff & (~diff + 1);
		return (a & low) != 0;
	}
};

/// Sign (+1/-1) of reordering e_A ^ e_B into increasing order; A and B must be disjoint.
int wedge_sign(Mask a, Mask b);

/// Based space g (+) theta with basis: g-basis first, then theta-basis.
/// A bare Lie algebra uses theta_dim = 0, a bare theta uses g_dim = 0.
struct Space
{
	std::size_t g_dim = 0;
	std::size_t theta_dim = 0;

	std::size_t dim() const { return g_dim + theta_dim; }
	Mask g_mask() const { return g_dim == 0 ? 0u : static_cast<Mask>((std::uint64_t{1} << g_dim) - 1); }
	Mask theta_mask() const { return static_cast<Mask>(((std::uint64_t{1} << dim()) - 1) & ~std::uint64_t{g_mask()}); }
	std::size_t theta_index(std::size_t a) const { return g_dim + a; }

	friend bool operator==(const Space&, const Space&) = default;
};

/// Throws std::invalid_argument if the space has more than 32 basis vectors.
void check_space(const Space& s);

/// Sparse element of the exterior algebra over a Space, in canonical form.
class Multivector
{
  public:
	using Terms = std::map<Mask, Scalar, MonomialLess>;

	Multivector() = default;
	explicit Multivector(Space space);

	static Multivector basis(Space space, std::size_t index);
	static Multivector monomial(Space space, Mask m, Scalar coeff = 1);
	static Multivector scalar(Space space, Scalar coeff);

	const Space& space() const { return space_; }
	const Terms& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }

	/// Adds c * e_m; zero results are pruned.
	void add(Mask m, const Scalar& c);
	Scalar coefficient(Mask m) const;

	/// Exterior degree if all terms agree; nullopt for zero or mixed.
	std::optional<unsigned> degree() const;
	bool is_homogeneous(unsigned k) const;
	bool has_bigrade(unsigned g_count, unsigned theta_count) const;

	Multivector& operator+=(const Multivector& o);
	Multivector& operator-=(const Multivector& o);
	Multivector& operator*=(const Scalar& s);

	friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
	friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
	friend Multivector operator*(const Scalar& s, Multivector a) { return a *= s; }
	friend Multivector operator-(Multivector a) { return a *= Scalar(-1); }
	friend bool operator==(const Multivector& a, const Multivector& b)
	{
		return a.space_ == b.space_ && a.terms_ == b.terms_;
	}

	/// e.g. "2*x0^u1 - 1/2*u0"; "0" for zero.
	std::string to_string() const;

  private:
	void require_same_space(const Multivector& o) const;

	Space space_;
	Terms terms_;
};

/// Label of basis vector i: "x<i>" in g, "u<a>" in theta.
std::string basis_label(const Space& s, std::size_t i);

Multivector wedge(const Multivector& a, const Multivector& b);

/// Left contraction by a covector on the ambient space:
/// i(u1^...^uk) = sum_i (-1)^(i-1) <zeta,u_i> u1^..^(u_i omitted)^..^uk.
Multivector interior(std::span<const Scalar> covector, const Multivector& a);

/// Schouten bracket on the exterior algebra of the Lie algebra L (L.dim() == space dim):
/// [a1^..^ap, b1^..^bq] = sum (-1)^(i+j) [a_i,b_j] ^ (a without a_i) ^ (b without b_j).
Multivector schouten(const Multivector& a, const Multivector& b, const LieAlgebraData& L);

/// Terms with exactly g_count g-indices and theta_count theta-indices.
Multivector project_bigrade(const Multivector& a, unsigned g_count, unsigned theta_count);

/// Re-bases an element of the theta-only space {0,n} (or g-only {n,0}) into `target`.
Multivector embed_theta(const Multivector& a, const Space& target);
Multivector embed_g(const Multivector& a, const Space& target);
/// Inverse of embed_theta; throws if `a` has g-components.
Multivector restrict_theta(const Multivector& a);

/// Degree-1 element sum_i v_i e_i.
Multivector from_vector(const Space& s, std::span<const Scalar> v);

} // namespace lie2b
