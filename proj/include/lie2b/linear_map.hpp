#pragma once

#include "lie2b/multivector.hpp"

#include <vector>

namespace lie2b {

/// Linear map on the degree-1 generators of a based space, valued in the
/// degree-`degree` part of its exterior algebra. images[i] is the image of e_i.
struct LinearMapData
{
	Space space;
	unsigned degree = 1;
	std::vector<Multivector> images;

	static LinearMapData zero(Space space, unsigned degree);

	/// Image of a degree-1 element.
	Multivector apply(const Multivector& v) const;
	bool is_zero() const;
	/// Throws std::invalid_argument unless every image is homogeneous of `degree` in `space`.
	void check() const;

	friend bool operator==(const LinearMapData&, const LinearMapData&) = default;
};

/// Unique extension of m to a derivation of degree (m.degree - 1):
/// D(a1^..^ap) = sum_i (-1)^((k-1)(i-1)) a1^..^m(a_i)^..^ap.
Multivector extend_derivation(const LinearMapData& m, const Multivector& a);

/// Generator map of the composite derivation m1 o m2, i.e. e |-> m1(m2(e)).
LinearMapData compose(const LinearMapData& m1, const LinearMapData& m2);

/// Graded commutator m1 o m2 - (-1)^((k1-1)(k2-1)) m2 o m1 on generators.
LinearMapData graded_commutator(const LinearMapData& m1, const LinearMapData& m2);

/// Maps that agree on the generators in `indices` and vanish elsewhere.
LinearMapData restrict_to(const LinearMapData& m, Mask indices);

} // namespace lie2b
