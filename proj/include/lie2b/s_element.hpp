#pragma once

#include "lie2b/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lie2b {

/// Generator families of S(V[2] + V*[1]) with V = theta + g.
/// G = g[2] (degree -2), Theta = theta[1] (-1), GStar = g*[1] (-1), ThetaStar = theta*[2] (-2).
enum class Family : std::uint8_t { G = 0, Theta = 1, GStar = 2, ThetaStar = 3 };

struct Generator
{
	Family family = Family::G;
	std::uint16_t index = 0;

	int degree() const { return (family == Family::G || family == Family::ThetaStar) ? -2 : -1; }
	bool odd() const { return family == Family::Theta || family == Family::GStar; }

	friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Sorted generator list; odd generators appear at most once.
using SMonomial = std::vector<Generator>;

/// Sorts `m` into canonical order. Returns the Koszul sign (+1/-1),
/// or 0 when an odd generator repeats and the monomial vanishes.
int canonicalize(SMonomial& m);

int monomial_degree(const SMonomial& m);

/// Labels: x<i> (G), u<a> (Theta), xi<i> (GStar), k<a> (ThetaStar).
std::string generator_label(Generator g);
Generator parse_generator(std::string_view text);
/// Dot-separated labels, "1" for the empty monomial. Throws std::invalid_argument.
SMonomial parse_monomial(std::string_view text);
std::string monomial_label(const SMonomial& m);

/// Sparse element of the graded symmetric algebra in canonical form.
class SElement
{
  public:
	using Terms = std::map<SMonomial, Scalar>;

	SElement() = default;

	static SElement generator(Family f, unsigned index, Scalar coeff = 1);
	static SElement constant(Scalar coeff);
	/// Product of the listed generators in the written order.
	static SElement product(SMonomial gens, Scalar coeff = 1);

	const Terms& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }

	/// Adds c times an already canonical monomial.
	void add(const SMonomial& canonical, const Scalar& c);
	/// Adds c times the product of `gens` in the written order.
	void add_product(SMonomial gens, const Scalar& c);
	Scalar coefficient(const SMonomial& canonical) const;

	/// Total degree if all terms agree; nullopt for zero or inhomogeneous elements.
	std::optional<int> degree() const;

	SElement& operator+=(const SElement& o);
	SElement& operator-=(const SElement& o);
	SElement& operator*=(const Scalar& s);

	friend SElement operator+(SElement a, const SElement& b) { return a += b; }
	friend SElement operator-(SElement a, const SElement& b) { return a -= b; }
	friend SElement operator*(const Scalar& s, SElement a) { return a *= s; }
	friend SElement operator-(SElement a) { return a *= Scalar(-1); }
	friend bool operator==(const SElement&, const SElement&) = default;

	/// e.g. "2*x0.k1 - 1/2*u0"; "0" for zero.
	std::string to_string() const;

  private:
	Terms terms_;
};

SElement odot(const SElement& a, const SElement& b);

/// Degree-3 graded Poisson bracket determined by
/// {x_i, xi^j} = delta_ij, {u_a, k^b} = -delta_ab and the graded Leibniz rule.
SElement big_bracket(const SElement& a, const SElement& b);

} // namespace lie2b
