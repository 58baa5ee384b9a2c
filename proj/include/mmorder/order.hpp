#pragma once

#include <optional>

#include "mmorder/rational.hpp"
#include "mmorder/space.hpp"
#include "mmorder/transport.hpp"

namespace mm {

struct SearchBudget {
    // Hard cap on branch-and-bound nodes before SizeLimitExceeded.
    long long bb_nodes = 2'000'000;
    // Cap on |Y|^|X| for brute-force map searches.
    long long map_total = 10'000'000;
    // Cap on |X|*|Y| for the subset-enumeration oracles (MM_MAX_EXACT_PAIRS).
    int oracle_pairs = 16;
    // Bitmask bound of the exact searches; not configurable.
    static constexpr int max_cells = 64;
};

const SearchBudget& default_budget();

// dis S: max over pairs of elements of S of |d_X - d_Y|; 0 for empty S.
Rat distortion(const FiniteMMSpace& X, const FiniteMMSpace& Y, const PairSet& S);

// dis_> S: max over pairs of (d_Y - d_X), floored at 0 for nonempty S.
Rat lip_distortion(const FiniteMMSpace& X, const FiniteMMSpace& Y, const PairSet& S);

// Certificate that X dominates Y with additive error epsilon.
struct OrderWitness {
    Rat epsilon;
    PairSet S;
    Coupling pi;
    Rat dis_value;  // lip_distortion(S) <= epsilon
    Rat uncovered;  // 1 - pi(S) <= epsilon
};

// Decides X >_eps Y: searches pair sets S with lip_distortion(S) <= eps and
// max coupling mass >= 1 - eps, by branch-and-bound over the
// pair-compatibility graph; falls back to subset enumeration when the node
// budget runs out and the problem fits in oracle_pairs.
std::optional<OrderWitness> check_order(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                        const Rat& eps,
                                        const SearchBudget& budget = default_budget());

struct BoxResult {
    Rat value;
    OrderWitness witness;  // lexicographically least minimizer S
};

// Unilateral box: min over S of max(lip_distortion(S), 1 - max coupling mass).
BoxResult unilateral_box(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                         const SearchBudget& budget = default_budget());

// Box metric: same with the symmetric distortion.
BoxResult box(const FiniteMMSpace& X, const FiniteMMSpace& Y,
              const SearchBudget& budget = default_budget());

// Exhaustive enumeration of all 2^(|X||Y|) pair sets; same value formula.
BoxResult unilateral_box_oracle(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                const SearchBudget& budget = default_budget());
BoxResult box_oracle(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                     const SearchBudget& budget = default_budget());

// Brute-force search for a 1-Lipschitz map with f_* m_X = m_Y; returns the
// lexicographically least image vector or nullopt.
std::optional<PointMap> check_lipschitz_order(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                              const SearchBudget& budget = default_budget());

// Least eps such that f : X -> Y is 1-Lipschitz up to eps, i.e. some subset
// X0 has m(X0) >= 1 - eps and d_Y(f x, f x') <= d_X(x, x') + eps on X0 x X0.
Rat min_lip_up_to(const FiniteMMSpace& X, const FiniteMMSpace& Y, const PointMap& f);

// A witness X0 for "f is 1-Lipschitz up to eps": the lexicographically least
// maximum-mass subset compatible at threshold eps; nullopt when no subset
// reaches mass 1 - eps.
std::optional<Subset> lip_up_to_witness(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                        const PointMap& f, const Rat& eps);

struct KYWitness {
    PointMap f;
    Subset X0;
    Rat epsilon;
};

// Decides the map-based order: exists Borel (here: any) f with
// d_P(f_* m_X, m_Y) <= eps that is 1-Lipschitz up to eps.
std::optional<KYWitness> check_ky_order(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                        const Rat& eps,
                                        const SearchBudget& budget = default_budget());

// min over maps f of max(min_lip_up_to(f), d_P(f_* m_X, m_Y)).
Rat ky_unilateral_box(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                      const SearchBudget& budget = default_budget());

}  // namespace mm
