#pragma once

// Hot loops of the library in two forms: a plain serial reference and an
// OpenMP version that splits the outer term loop across threads. Both must
// give identical results; the public entry points pick one by size.

#include "lie2b/multivector.hpp"

namespace lie2b {
class SElement;
}

namespace lie2b::kernels {

Multivector schouten_serial(const Multivector& a, const Multivector& b, const LieAlgebraData& L);
Multivector schouten_parallel(const Multivector& a, const Multivector& b, const LieAlgebraData& L);

Multivector wedge_serial(const Multivector& a, const Multivector& b);
Multivector wedge_parallel(const Multivector& a, const Multivector& b);

SElement big_bracket_serial(const SElement& a, const SElement& b);
SElement big_bracket_parallel(const SElement& a, const SElement& b);

SElement odot_serial(const SElement& a, const SElement& b);

} // namespace lie2b::kernels
