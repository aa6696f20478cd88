// Serial reference vs OpenMP kernels on inputs large enough to cross the
// parallel threshold. Thread count follows LIE2B_THREADS.

#include "lie2b/kernels.hpp"
#include "lie2b/parallel.hpp"
#include "lie2b/s_element.hpp"
#include "random_util.hpp"

#include <benchmark/benchmark.h>

using namespace lie2b;
using namespace testing_util;

namespace {

constexpr std::size_t dim = 12;

LieAlgebraData random_algebra()
{
	std::mt19937 rng(1);
	LieAlgebraData L(dim);
	for (std::size_t i = 0; i < dim; ++i)
		for (std::size_t j = i + 1; j < dim; ++j)
			for (std::size_t k = 0; k < dim; ++k)
				if (std::uniform_int_distribution<int>(0, 3)(rng) == 0)
					L.set_bracket(i, j, k, rand_scalar(rng));
	return L;
}

Multivector random_multivector(unsigned seed, unsigned degree, int terms)
{
	std::mt19937 rng(seed);
	return rand_homogeneous(rng, Space{dim, 0}, degree, terms);
}

SElement random_selement(unsigned seed, int terms)
{
	std::mt19937 rng(seed);
	return rand_selement(rng, 4, 4, terms, 5);
}

template <class F> void run(benchmark::State& state, F f)
{
	for (auto _ : state)
		benchmark::DoNotOptimize(f());
	state.counters["threads"] = thread_count();
}

void BM_schouten_serial(benchmark::State& s)
{
	static const auto L = random_algebra();
	auto a = random_multivector(2, 3, static_cast<int>(s.range(0)));
	auto b = random_multivector(3, 3, static_cast<int>(s.range(0)));
	run(s, [&] { return kernels::schouten_serial(a, b, L); });
}
void BM_schouten_parallel(benchmark::State& s)
{
	static const auto L = random_algebra();
	auto a = random_multivector(2, 3, static_cast<int>(s.range(0)));
	auto b = random_multivector(3, 3, static_cast<int>(s.range(0)));
	run(s, [&] { return kernels::schouten_parallel(a, b, L); });
}

void BM_wedge_serial(benchmark::State& s)
{
	auto a = random_multivector(4, 3, static_cast<int>(s.range(0)));
	auto b = random_multivector(5, 4, static_cast<int>(s.range(0)));
	run(s, [&] { return kernels::wedge_serial(a, b); });
}
void BM_wedge_parallel(benchmark::State& s)
{
	auto a = random_multivector(4, 3, static_cast<int>(s.range(0)));
	auto b = random_multivector(5, 4, static_cast<int>(s.range(0)));
	run(s, [&] { return kernels::wedge_parallel(a, b); });
}

void BM_big_bracket_serial(benchmark::State& s)
{
	auto a = random_selement(6, static_cast<int>(s.range(0)));
	auto b = random_selement(7, static_cast<int>(s.range(0)));
	run(s, [&] { return kernels::big_bracket_serial(a, b); });
}
void BM_big_bracket_parallel(benchmark::State& s)
{
	auto a = random_selement(6, static_cast<int>(s.range(0)));
	auto b = random_selement(7, static_cast<int>(s.range(0)));
	run(s, [&] { return kernels::big_bracket_parallel(a, b); });
}

} // namespace

BENCHMARK(BM_schouten_serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_schouten_parallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wedge_serial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wedge_parallel)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_big_bracket_serial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_big_bracket_parallel)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
