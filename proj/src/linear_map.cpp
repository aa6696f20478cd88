#include "lie2b/linear_map.hpp"

#include <stdexcept>

namespace lie2b {

LinearMapData LinearMapData::zero(Space space, unsigned degree)
{
	return {space, degree, std::vector<Multivector>(space.dim(), Multivector(space))};
}

Multivector LinearMapData::apply(const Multivector& v) const
{
	Multivector out(space);
	for (const auto& [m, c] : v.terms()) {
		if (popcount(m) != 1)
			throw std::invalid_argument("linear map applied to a non-degree-1 element");
		out += c * images[static_cast<std::size_t>(std::countr_zero(m))];
	}
	return out;
}

bool LinearMapData::is_zero() const
{
	for (const auto& im : images)
		if (!im.is_zero())
			return false;
	return true;
}

void LinearMapData::check() const
{
	check_space(space);
	if (images.size() != space.dim())
		throw std::invalid_argument("linear map is not defined on every generator");
	for (const auto& im : images) {
		if (!(im.space() == space))
			throw std::invalid_argument("linear map image lives in a different space");
		if (!im.is_homogeneous(degree))
			throw std::invalid_argument("linear map image has the wrong exterior degree");
	}
}

Multivector extend_derivation(const LinearMapData& m, const Multivector& a)
{
	if (!(a.space() == m.space) || m.images.size() != m.space.dim())
		throw std::invalid_argument("extend_derivation: map not defined on the generators of this space");
	const bool odd = (m.degree + 1) % 2 == 1; // parity of k-1
	Multivector out(m.space);
	for (const auto& [mask, c] : a.terms()) {
		unsigned pos = 0;
		for (Mask rest = mask; rest; rest &= rest - 1, ++pos) {
			auto i = static_cast<std::size_t>(std::countr_zero(rest));
			const Multivector& img = m.images[i];
			if (img.is_zero())
				continue;
			Mask bit = Mask{1} << i;
			Mask prefix = mask & (bit - 1);
			Mask suffix = mask & ~(prefix | bit);
			int koszul = (odd && (pos % 2)) ? -1 : 1;
			for (const auto& [im, ic] : img.terms()) {
				if ((im & prefix) || (im & suffix))
					continue;
				int s = koszul * wedge_sign(prefix, im) * wedge_sign(prefix | im, suffix);
				out.add(prefix | im | suffix, s * c * ic);
			}
		}
	}
	return out;
}

LinearMapData compose(const LinearMapData& m1, const LinearMapData& m2)
{
	if (!(m1.space == m2.space))
		throw std::invalid_argument("compose: space mismatch");
	if (m1.degree + m2.degree == 0)
		throw std::invalid_argument("compose: two contractions have no degree-(-1) generator map");
	LinearMapData r{m1.space, m1.degree + m2.degree - 1, {}};
	r.images.reserve(m2.images.size());
	for (const auto& im : m2.images)
		r.images.push_back(extend_derivation(m1, im));
	return r;
}

LinearMapData graded_commutator(const LinearMapData& m1, const LinearMapData& m2)
{
	LinearMapData a = compose(m1, m2);
	LinearMapData b = compose(m2, m1);
	bool minus = ((m1.degree + 1) % 2 == 1) && ((m2.degree + 1) % 2 == 1);
	for (std::size_t i = 0; i < a.images.size(); ++i) {
		if (minus)
			a.images[i] += b.images[i];
		else
			a.images[i] -= b.images[i];
	}
	return a;
}

LinearMapData restrict_to(const LinearMapData& m, Mask indices)
{
	LinearMapData r = m;
	for (std::size_t i = 0; i < r.images.size(); ++i)
		if (!(indices & (Mask{1} << i)))
			r.images[i] = Multivector(m.space);
	return r;
}

} // namespace lie2b
