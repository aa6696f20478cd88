#include "lie2b/s_element.hpp"

#include "lie2b/kernels.hpp"
#include "lie2b/parallel.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace lie2b {

int canonicalize(SMonomial& m)
{
	int sign = 1;
	for (std::size_t i = 1; i < m.size(); ++i) {
		Generator g = m[i];
		std::size_t j = i;
		while (j > 0 && g < m[j - 1]) {
			if (g.odd() && m[j - 1].odd())
				sign = -sign;
			m[j] = m[j - 1];
			--j;
		}
		m[j] = g;
	}
	for (std::size_t i = 1; i < m.size(); ++i)
		if (m[i].odd() && m[i] == m[i - 1])
			return 0;
	return sign;
}

int monomial_degree(const SMonomial& m)
{
	int d = 0;
	for (auto g : m)
		d += g.degree();
	return d;
}

std::string generator_label(Generator g)
{
	static const char* prefix[] = {"x", "u", "xi", "k"};
	return prefix[static_cast<int>(g.family)] + std::to_string(g.index);
}

Generator parse_generator(std::string_view text)
{
	Generator g;
	std::size_t n;
	if (text.starts_with("xi")) {
		g.family = Family::GStar;
		n = 2;
	} else if (text.starts_with("x")) {
		g.family = Family::G;
		n = 1;
	} else if (text.starts_with("u")) {
		g.family = Family::Theta;
		n = 1;
	} else if (text.starts_with("k")) {
		g.family = Family::ThetaStar;
		n = 1;
	} else {
		throw std::invalid_argument("unknown generator '" + std::string(text) + "'");
	}
	auto digits = text.substr(n);
	unsigned v = 0;
	auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
	if (digits.empty() || ec != std::errc() || p != digits.data() + digits.size() || v > 0xffff)
		throw std::invalid_argument("bad generator index in '" + std::string(text) + "'");
	g.index = static_cast<std::uint16_t>(v);
	return g;
}

SMonomial parse_monomial(std::string_view text)
{
	SMonomial m;
	if (text == "1")
		return m;
	std::size_t start = 0;
	while (true) {
		auto dot = text.find('.', start);
		m.push_back(parse_generator(text.substr(start, dot - start)));
		if (dot == std::string_view::npos)
			break;
		start = dot + 1;
	}
	return m;
}

std::string monomial_label(const SMonomial& m)
{
	if (m.empty())
		return "1";
	std::string s;
	for (std::size_t i = 0; i < m.size(); ++i) {
		if (i)
			s += '.';
		s += generator_label(m[i]);
	}
	return s;
}

SElement SElement::generator(Family f, unsigned index, Scalar coeff)
{
	return product({Generator{f, static_cast<std::uint16_t>(index)}}, std::move(coeff));
}

SElement SElement::constant(Scalar coeff) { return product({}, std::move(coeff)); }

SElement SElement::product(SMonomial gens, Scalar coeff)
{
	SElement e;
	e.add_product(std::move(gens), coeff);
	return e;
}

void SElement::add(const SMonomial& m, const Scalar& c)
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

void SElement::add_product(SMonomial gens, const Scalar& c)
{
	int s = canonicalize(gens);
	if (s != 0)
		add(gens, s * c);
}

Scalar SElement::coefficient(const SMonomial& m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<int> SElement::degree() const
{
	if (terms_.empty())
		return std::nullopt;
	int d = monomial_degree(terms_.begin()->first);
	for (const auto& [m, c] : terms_)
		if (monomial_degree(m) != d)
			return std::nullopt;
	return d;
}

SElement& SElement::operator+=(const SElement& o)
{
	for (const auto& [m, c] : o.terms_)
		add(m, c);
	return *this;
}

SElement& SElement::operator-=(const SElement& o)
{
	for (const auto& [m, c] : o.terms_)
		add(m, -c);
	return *this;
}

SElement& SElement::operator*=(const Scalar& s)
{
	if (lie2b::is_zero(s)) {
		terms_.clear();
		return *this;
	}
	for (auto& [m, c] : terms_)
		c *= s;
	return *this;
}

std::string SElement::to_string() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [m, c] : terms_) {
		if (first)
			os << (sgn(c) < 0 ? "-" : "");
		else
			os << (sgn(c) < 0 ? " - " : " + ");
		first = false;
		os << lie2b::to_string(abs(c));
		if (!m.empty())
			os << '*' << monomial_label(m);
	}
	return os.str();
}

SElement odot(const SElement& a, const SElement& b) { return kernels::odot_serial(a, b); }

SElement big_bracket(const SElement& a, const SElement& b)
{
	if (static_cast<long>(a.size()) * static_cast<long>(b.size()) >= parallel_threshold && thread_count() > 1)
		return kernels::big_bracket_parallel(a, b);
	return kernels::big_bracket_serial(a, b);
}

} // namespace lie2b
