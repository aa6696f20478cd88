#include "lie2b/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace lie2b {

namespace {

bool valid_integer(std::string_view s, bool allow_sign)
{
	if (s.empty())
		return false;
	std::size_t i = 0;
	if (allow_sign && s[0] == '-')
		i = 1;
	if (i == s.size())
		return false;
	for (; i < s.size(); ++i)
		if (!std::isdigit(static_cast<unsigned char>(s[i])))
			return false;
	return true;
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
	auto slash = text.find('/');
	auto num = text.substr(0, slash);
	if (!valid_integer(num, true))
		throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
	if (slash == std::string_view::npos)
		return Scalar(mpz_class(std::string(num)));
	auto den = text.substr(slash + 1);
	if (!valid_integer(den, false))
		throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
	mpz_class d(std::string{den});
	if (d == 0)
		throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
	Scalar q(mpz_class(std::string(num)), d);
	q.canonicalize();
	return q;
}

std::string to_string(const Scalar& s)
{
	return s.get_str();
}

Scalar factorial(unsigned n)
{
	mpz_class f = 1;
	for (unsigned i = 2; i <= n; ++i)
		f *= i;
	return Scalar(f);
}

} // namespace lie2b
