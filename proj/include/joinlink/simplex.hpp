#pragma once

#include <gmpxx.h>

#include <vector>

namespace jl {

// Exact feasibility of {A x = b, x >= 0} over the rationals, decided by
// phase-1 simplex with Bland's rule (finite by anti-cycling).  When the system
// is feasible and out is non-null, *out receives one feasible point.
bool lp_feasible(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b,
                 std::vector<mpq_class>* out = nullptr);

}  // namespace jl
