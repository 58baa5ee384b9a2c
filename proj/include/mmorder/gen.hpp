#pragma once

#include <cstdint>

#include "mmorder/rational.hpp"
#include "mmorder/space.hpp"
#include "mmorder/transport.hpp"

namespace mm {

struct Remark46Family {
    FiniteMMSpace Xn;      // one-point space
    FiniteMMSpace Yn;      // {-r, 0, r} with mass ((1-1/n)/2, 1/n, (1-1/n)/2)
    FiniteMMSpace Xlimit;  // one-point space
    FiniteMMSpace Ylimit;  // {-r, r} uniform
};

// The three-point counterexample family; n >= 2, r > 0 (r = 1/4 classically).
Remark46Family gen_remark46(int n, const Rat& r);

// Deterministic random space: distances drawn on a rational grid and
// repaired to a metric by all-pairs shortest paths; masses drawn on the
// granularity grid and normalized. Always canonical.
FiniteMMSpace gen_random(std::uint64_t seed, int n, const Rat& diam_bound = Rat(1),
                         int mass_granularity = 64);

// Same points and masses, distances multiplied by c > 0.
FiniteMMSpace gen_scaled(const FiniteMMSpace& X, const Rat& c);

// Path 0 - 1 - ... - (n-1) with spacing 1/n, uniform mass.
FiniteMMSpace gen_path(int n);

// Cycle with arc metric min(|i-j|, n-|i-j|)/n, uniform mass.
FiniteMMSpace gen_cycle(int n);

// Random mass vector on n points summing to one; zeros allowed unless
// positive = true.
std::vector<Rat> gen_random_mass(std::uint64_t seed, int n, int granularity = 64,
                                 bool positive = false);

// Deterministic random coupling between two marginals (greedy filling along
// a seeded permutation of the cells).
Coupling gen_random_coupling(std::uint64_t seed, const std::vector<Rat>& mu,
                             const std::vector<Rat>& nu);

}  // namespace mm
