#include "lie2b/multivector.hpp"

#include "lie2b/kernels.hpp"
#include "lie2b/parallel.hpp"

#include <sstream>
#include <stdexcept>

namespace lie2b {

int wedge_sign(Mask a, Mask b)
{
	unsigned inversions = 0;
	while (b) {
		unsigned j = static_cast<unsigned>(std::countr_zero(b));
		b &= b - 1;
		inversions += popcount(j + 1 >= 32 ? 0u : (a >> (j + 1)));
	}
	return (inversions & 1u) ? -1 : 1;
}

void check_space(const Space& s)
{
	if (s.dim() > 32)
		throw std::invalid_argument("based spaces are limited to 32 basis vectors");
}

Multivector::Multivector(Space space)
    : space_(space)
{
	check_space(space_);
}

Multivector Multivector::basis(Space space, std::size_t index)
{
	if (index >= space.dim())
		throw std::out_of_range("basis index out of range");
	return monomial(space, Mask{1} << index);
}

Multivector Multivector::monomial(Space space, Mask m, Scalar coeff)
{
	Multivector r(space);
	r.add(m, coeff);
	return r;
}

Multivector Multivector::scalar(Space space, Scalar coeff) { return monomial(space, 0, std::move(coeff)); }

void Multivector::add(Mask m, const Scalar& c)
{
	if (lie2b::is_zero(c))
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (!inserted) {
		it->second += c;
		if (lie2b::is_zero(it->second))
			terms_.erase(it);
	}
}

Scalar Multivector::coefficient(Mask m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<unsigned> Multivector::degree() const
{
	if (terms_.empty())
		return std::nullopt;
	unsigned d = popcount(terms_.begin()->first);
	for (const auto& [m, c] : terms_)
		if (popcount(m) != d)
			return std::nullopt;
	return d;
}

bool Multivector::is_homogeneous(unsigned k) const
{
	for (const auto& [m, c] : terms_)
		if (popcount(m) != k)
			return false;
	return true;
}

bool Multivector::has_bigrade(unsigned g_count, unsigned theta_count) const
{
	for (const auto& [m, c] : terms_)
		if (popcount(m & space_.g_mask()) != g_count || popcount(m & space_.theta_mask()) != theta_count)
			return false;
	return true;
}

void Multivector::require_same_space(const Multivector& o) const
{
	if (!(space_ == o.space_))
		throw std::invalid_argument("ambient space mismatch");
}

Multivector& Multivector::operator+=(const Multivector& o)
{
	require_same_space(o);
	for (const auto& [m, c] : o.terms_)
		add(m, c);
	return *this;
}

Multivector& Multivector::operator-=(const Multivector& o)
{
	require_same_space(o);
	for (const auto& [m, c] : o.terms_)
		add(m, -c);
	return *this;
}

Multivector& Multivector::operator*=(const Scalar& s)
{
	if (lie2b::is_zero(s)) {
		terms_.clear();
		return *this;
	}
	for (auto& [m, c] : terms_)
		c *= s;
	return *this;
}

std::string basis_label(const Space& s, std::size_t i)
{
	if (i < s.g_dim)
		return "x" + std::to_string(i);
	return "u" + std::to_string(i - s.g_dim);
}

std::string Multivector::to_string() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [m, c] : terms_) {
		Scalar mag = abs(c);
		if (first)
			os << (sgn(c) < 0 ? "-" : "");
		else
			os << (sgn(c) < 0 ? " - " : " + ");
		first = false;
		os << lie2b::to_string(mag);
		if (m != 0) {
			os << '*';
			bool f = true;
			for (std::size_t i = 0; i < space_.dim(); ++i)
				if (m & (Mask{1} << i)) {
					os << (f ? "" : "^") << basis_label(space_, i);
					f = false;
				}
		}
	}
	return os.str();
}

Multivector wedge(const Multivector& a, const Multivector& b)
{
	if (!(a.space() == b.space()))
		throw std::invalid_argument("wedge: ambient space mismatch");
	if (static_cast<long>(a.size()) * static_cast<long>(b.size()) >= parallel_threshold && thread_count() > 1)
		return kernels::wedge_parallel(a, b);
	return kernels::wedge_serial(a, b);
}

Multivector interior(std::span<const Scalar> covector, const Multivector& a)
{
	const auto& s = a.space();
	if (covector.size() != s.dim())
		throw std::invalid_argument("interior: covector does not match the ambient space");
	Multivector r(s);
	for (const auto& [m, c] : a.terms()) {
		int pos = 0;
		for (Mask rest = m; rest; rest &= rest - 1) {
			auto i = static_cast<std::size_t>(std::countr_zero(rest));
			const Scalar& z = covector[i];
			if (!is_zero(z))
				r.add(m & ~(Mask{1} << i), (pos % 2 ? -1 : 1) * z * c);
			++pos;
		}
	}
	return r;
}

Multivector schouten(const Multivector& a, const Multivector& b, const LieAlgebraData& L)
{
	if (!(a.space() == b.space()) || a.space().dim() != L.dim())
		throw std::invalid_argument("schouten: ambient space mismatch");
	if (static_cast<long>(a.size()) * static_cast<long>(b.size()) >= parallel_threshold && thread_count() > 1)
		return kernels::schouten_parallel(a, b, L);
	return kernels::schouten_serial(a, b, L);
}

Multivector project_bigrade(const Multivector& a, unsigned g_count, unsigned theta_count)
{
	const auto& s = a.space();
	Multivector r(s);
	for (const auto& [m, c] : a.terms())
		if (popcount(m & s.g_mask()) == g_count && popcount(m & s.theta_mask()) == theta_count)
			r.add(m, c);
	return r;
}

Multivector embed_theta(const Multivector& a, const Space& target)
{
	if (a.space().g_dim != 0 || a.space().theta_dim != target.theta_dim)
		throw std::invalid_argument("embed_theta: source must be the bare theta space");
	Multivector r(target);
	for (const auto& [m, c] : a.terms())
		r.add(m << target.g_dim, c);
	return r;
}

Multivector embed_g(const Multivector& a, const Space& target)
{
	if (a.space().theta_dim != 0 || a.space().g_dim != target.g_dim)
		throw std::invalid_argument("embed_g: source must be the bare g space");
	Multivector r(target);
	for (const auto& [m, c] : a.terms())
		r.add(m, c);
	return r;
}

Multivector restrict_theta(const Multivector& a)
{
	const auto& s = a.space();
	Multivector r(Space{0, s.theta_dim});
	for (const auto& [m, c] : a.terms()) {
		if (m & s.g_mask())
			throw std::invalid_argument("restrict_theta: element has g-components");
		r.add(m >> s.g_dim, c);
	}
	return r;
}

Multivector from_vector(const Space& s, std::span<const Scalar> v)
{
	if (v.size() != s.dim())
		throw std::invalid_argument("from_vector: length mismatch");
	Multivector r(s);
	for (std::size_t i = 0; i < v.size(); ++i)
		r.add(Mask{1} << i, v[i]);
	return r;
}

} // namespace lie2b
