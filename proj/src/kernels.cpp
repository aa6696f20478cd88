#include "lie2b/kernels.hpp"

#include "lie2b/parallel.hpp"
#include "lie2b/s_element.hpp"

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lie2b::kernels {

namespace {

void schouten_terms(Mask ma, const Scalar& ca, const Multivector::Terms& b, const LieAlgebraData& L,
                    Multivector& out)
{
	int s = 0;
	for (Mask ra = ma; ra; ra &= ra - 1, ++s) {
		auto i = static_cast<std::size_t>(std::countr_zero(ra));
		Mask a_rest = ma & ~(Mask{1} << i);
		for (const auto& [mb, cb] : b) {
			int t = 0;
			for (Mask rb = mb; rb; rb &= rb - 1, ++t) {
				auto j = static_cast<std::size_t>(std::countr_zero(rb));
				Mask b_rest = mb & ~(Mask{1} << j);
				if (a_rest & b_rest)
					continue;
				const auto& br = L.bracket(i, j);
				if (br.empty())
					continue;
				Mask rest = a_rest | b_rest;
				int sign = ((s + t) % 2 ? -1 : 1) * wedge_sign(a_rest, b_rest);
				for (const auto& [k, c] : br) {
					Mask bit = Mask{1} << k;
					if (rest & bit)
						continue;
					out.add(bit | rest, (sign * wedge_sign(bit, rest)) * c * ca * cb);
				}
			}
		}
	}
}

void wedge_terms(Mask ma, const Scalar& ca, const Multivector::Terms& b, Multivector& out)
{
	for (const auto& [mb, cb] : b)
		if (!(ma & mb))
			out.add(ma | mb, wedge_sign(ma, mb) * ca * cb);
}

// Pairing of generators under the bracket; nonzero only on matched dual pairs.
int generator_bracket(Generator a, Generator b)
{
	if (a.index != b.index)
		return 0;
	switch (a.family) {
	case Family::G: return b.family == Family::GStar ? 1 : 0;
	case Family::GStar: return b.family == Family::G ? -1 : 0;
	case Family::Theta: return b.family == Family::ThetaStar ? -1 : 0;
	case Family::ThetaStar: return b.family == Family::Theta ? 1 : 0;
	}
	return 0;
}

// {A,B} = sum_{i,j} eps_i eps_j {a_i,b_j} (A without a_i)(B without b_j), where eps_i moves a_i
// to the right end of A and eps_j moves b_j to the left end of B.
void bracket_terms(const SMonomial& A, const Scalar& ca, const SElement::Terms& b, SElement& out)
{
	const std::size_t na = A.size();
	std::vector<int> eps_a(na, 1);
	int odd_after = 0;
	for (std::size_t i = na; i-- > 0;) {
		if (A[i].odd() && (odd_after % 2))
			eps_a[i] = -1;
		if (A[i].odd())
			++odd_after;
	}
	SMonomial buf;
	for (const auto& [B, cb] : b) {
		int odd_before = 0;
		for (std::size_t j = 0; j < B.size(); ++j) {
			int eps_b = (B[j].odd() && (odd_before % 2)) ? -1 : 1;
			if (B[j].odd())
				++odd_before;
			for (std::size_t i = 0; i < na; ++i) {
				int p = generator_bracket(A[i], B[j]);
				if (!p)
					continue;
				buf.clear();
				for (std::size_t r = 0; r < na; ++r)
					if (r != i)
						buf.push_back(A[r]);
				for (std::size_t r = 0; r < B.size(); ++r)
					if (r != j)
						buf.push_back(B[r]);
				int s = canonicalize(buf);
				if (s)
					out.add(buf, (s * p * eps_a[i] * eps_b) * ca * cb);
			}
		}
	}
}

template <class Result, class TermsA, class Body>
Result run_parallel(const Result& zero, const TermsA& a, Body body)
{
	std::vector<typename TermsA::const_iterator> items;
	items.reserve(a.size());
	for (auto it = a.begin(); it != a.end(); ++it)
		items.push_back(it);
	const int nt = thread_count();
	std::vector<Result> partial(static_cast<std::size_t>(nt), zero);
	const long n = static_cast<long>(items.size());
#pragma omp parallel num_threads(nt)
	{
#ifdef _OPENMP
		auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
		auto& local = partial[0];
#endif
#pragma omp for schedule(dynamic, 4)
		for (long t = 0; t < n; ++t)
			body(items[static_cast<std::size_t>(t)], local);
	}
	Result out = zero;
	for (const auto& p : partial)
		out += p;
	return out;
}

} // namespace

Multivector schouten_serial(const Multivector& a, const Multivector& b, const LieAlgebraData& L)
{
	Multivector out(a.space());
	for (const auto& [ma, ca] : a.terms())
		schouten_terms(ma, ca, b.terms(), L, out);
	return out;
}

Multivector schouten_parallel(const Multivector& a, const Multivector& b, const LieAlgebraData& L)
{
	return run_parallel(Multivector(a.space()), a.terms(), [&](auto it, Multivector& local) {
		schouten_terms(it->first, it->second, b.terms(), L, local);
	});
}

Multivector wedge_serial(const Multivector& a, const Multivector& b)
{
	Multivector out(a.space());
	for (const auto& [ma, ca] : a.terms())
		wedge_terms(ma, ca, b.terms(), out);
	return out;
}

Multivector wedge_parallel(const Multivector& a, const Multivector& b)
{
	return run_parallel(Multivector(a.space()), a.terms(),
	                    [&](auto it, Multivector& local) { wedge_terms(it->first, it->second, b.terms(), local); });
}

SElement big_bracket_serial(const SElement& a, const SElement& b)
{
	SElement out;
	for (const auto& [ma, ca] : a.terms())
		bracket_terms(ma, ca, b.terms(), out);
	return out;
}

SElement big_bracket_parallel(const SElement& a, const SElement& b)
{
	return run_parallel(SElement(), a.terms(),
	                    [&](auto it, SElement& local) { bracket_terms(it->first, it->second, b.terms(), local); });
}

SElement odot_serial(const SElement& a, const SElement& b)
{
	SElement out;
	SMonomial buf;
	for (const auto& [ma, ca] : a.terms())
		for (const auto& [mb, cb] : b.terms()) {
			buf = ma;
			buf.insert(buf.end(), mb.begin(), mb.end());
			int s = canonicalize(buf);
			if (s)
				out.add(buf, s * ca * cb);
		}
	return out;
}

} // namespace lie2b::kernels
