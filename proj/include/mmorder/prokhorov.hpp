#pragma once

#include <vector>

#include "mmorder/rational.hpp"
#include "mmorder/space.hpp"

namespace mm {

// Exact Prokhorov distance between two mass vectors on the point set of
// `metric` (only its distances are used; zero entries in mu/nu are fine).
//
// Computed by scanning the breakpoints t in {0} union {distinct distances}:
// with f(t) = 1 - max coupling mass on {(i,j) : d(i,j) <= t}, the distance is
// min over breakpoints of max(t, f(t)). On finite spaces this equals the
// definitional infimum with open neighborhoods (prokhorov_oracle).
Rat prokhorov(const FiniteMMSpace& metric, const std::vector<Rat>& mu,
              const std::vector<Rat>& nu);

// Definitional brute force: max over nonempty subsets A of the least eps
// with mu(U_eps(A)) >= nu(A) - eps. Exponential in the point count; guarded
// by max_points.
Rat prokhorov_oracle(const FiniteMMSpace& metric, const std::vector<Rat>& mu,
                     const std::vector<Rat>& nu, int max_points = 16);

// Ky Fan distance between two maps out of a common mass vector into a common
// codomain: min eps >= 0 with m({x : d(f(x), g(x)) > eps}) <= eps.
Rat ky_fan(const std::vector<Rat>& mass, const FiniteMMSpace& codomain, const PointMap& f,
           const PointMap& g);

}  // namespace mm
