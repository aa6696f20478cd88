#include "lie2b/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lie2b {

namespace {

int initial_threads()
{
	if (const char* env = std::getenv("LIE2B_THREADS")) {
		try {
			int n = std::stoi(env);
			if (n > 0)
				return n;
		} catch (...) {
		}
	}
#ifdef _OPENMP
	return omp_get_max_threads();
#else
	return 1;
#endif
}

int& threads()
{
	static int n = initial_threads();
	return n;
}

} // namespace

int thread_count() { return threads(); }

void set_thread_count(int n) { threads() = n > 0 ? n : 1; }

} // namespace lie2b
