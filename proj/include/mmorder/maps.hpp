#pragma once

#include <optional>

#include "mmorder/order.hpp"
#include "mmorder/rational.hpp"
#include "mmorder/space.hpp"

namespace mm {

// True iff m_X(X0) >= 1 - eps and d_Y(f x, f x') <= d_X(x, x') + eps on
// X0 x X0.
bool lip_up_to_check(const FiniteMMSpace& X, const FiniteMMSpace& Y, const PointMap& f,
                     const Subset& X0, const Rat& eps);

// Greedy net: add points by descending mass (least index on ties) until
// m_X(B_{t/2}(N)) >= 1 - t/2.
Subset epsilon_net(const FiniteMMSpace& X, const Rat& t);

// Maps each point to its nearest point of N, least index on ties; fixes N.
PointMap nearest_projection(const FiniteMMSpace& X, const Subset& N);

// On finite spaces the exact nearest projection is a t-projection for every
// t >= 0; t is kept only for bound bookkeeping.
PointMap t_projection(const FiniteMMSpace& Y, const Subset& Y0, const Rat& t);

struct Discretization {
    FiniteMMSpace space;             // net points, restricted metric, pushforward mass
    PointMap projection;             // X -> space (net indices)
    Subset net;                      // net as indices of X
    std::vector<Rat> pushed_on_x;    // pushforward mass expressed on X's points
};

// The discretized space built from the greedy t-net and nearest projection.
// Satisfies d_P((pi_N)_* m_X, m_X) <= t/2 and box(X, X') <= t.
Discretization discretize(const FiniteMMSpace& X, const Rat& t);

struct ComposeReport {
    Rat eps1, eps2, s, t;
    Subset X0, Y0, X0_tilde;
    // 1-Lipschitz-up-to bound on X0_tilde:
    Rat lip_excess;       // max over X0_tilde pairs of d_Z(h., h.) - d_X
    Rat lip_budget;       // eps1 + eps2 + s
    bool lip_ok;
    // mass bound:
    Rat mass_x0_tilde;
    Rat mass_floor;       // 1 - eps1 - eps2 - s
    bool mass_ok;
    // Prokhorov bound:
    Rat dp_value;         // d_P(h_* m_X, m_Z)
    Rat dp_budget;        // eps1 + 4 eps2 + s
    bool dp_ok;
};

struct ComposeResult {
    PointMap h;
    ComposeReport report;
};

// The constructive composition h = g . pi . f with the t-projection pi onto
// g's witness set Y0, t = s/8, and X0_tilde = X0 intersect f^{-1}(B_t(Y0)).
// Witness sets may be supplied; by default the least optimal ones are
// computed. Verifies the three reported bounds exactly; throws
// PreconditionViolated (InputError) when a hypothesis fails and
// BoundViolation when a verified bound does not hold.
ComposeResult compose_lip_up_to(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                const FiniteMMSpace& Z, const PointMap& f, const PointMap& g,
                                const Rat& eps1, const Rat& eps2, const Rat& s,
                                const std::optional<Subset>& supplied_X0 = std::nullopt,
                                const std::optional<Subset>& supplied_Y0 = std::nullopt);

}  // namespace mm
