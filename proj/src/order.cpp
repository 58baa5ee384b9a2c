#include "mmorder/order.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "mmorder/errors.hpp"
#include "mmorder/prokhorov.hpp"

namespace mm {

const SearchBudget& default_budget() {
    static const SearchBudget budget{};
    return budget;
}

Rat distortion(const FiniteMMSpace& X, const FiniteMMSpace& Y, const PairSet& S) {
    Rat best = 0;
    for (size_t a = 0; a < S.pairs.size(); ++a)
        for (size_t b = a + 1; b < S.pairs.size(); ++b) {
            auto [i, j] = S.pairs[a];
            auto [i2, j2] = S.pairs[b];
            best = rat_max(best, rat_abs(X.d(i, i2) - Y.d(j, j2)));
        }
    return best;
}

Rat lip_distortion(const FiniteMMSpace& X, const FiniteMMSpace& Y, const PairSet& S) {
    Rat best = 0;  // the pair of an element with itself contributes 0
    for (size_t a = 0; a < S.pairs.size(); ++a)
        for (size_t b = a + 1; b < S.pairs.size(); ++b) {
            auto [i, j] = S.pairs[a];
            auto [i2, j2] = S.pairs[b];
            best = rat_max(best, Rat(Y.d(j, j2) - X.d(i, i2)));
        }
    return best;
}

namespace {

using Mask = std::uint64_t;

int lowest_bit(Mask m) { return __builtin_ctzll(m); }

// The pair-compatibility problem over cells (i, j) of X x Y. Two cells
// conflict at threshold t when their gap exceeds t; a pair set S with
// distortion <= t is exactly a clique of the threshold graph.
struct CellProblem {
    const FiniteMMSpace* X;
    const FiniteMMSpace* Y;
    int nx, ny, n;
    std::vector<std::pair<int, int>> cells;  // row-major, ascending
    std::vector<std::vector<Rat>> gap;       // symmetric; gap[a][a] = 0
    std::vector<int> by_mass;                // cells ordered by min-mass desc, id asc
    // Coverage depends only on the cell mask, never on the threshold, so one
    // cache serves the whole scan.
    mutable std::unordered_map<std::uint64_t, Rat> coverage_cache;
};

CellProblem make_cell_problem(const FiniteMMSpace& X, const FiniteMMSpace& Y, bool symmetric) {
    CellProblem P;
    P.X = &X;
    P.Y = &Y;
    P.nx = X.size();
    P.ny = Y.size();
    P.n = P.nx * P.ny;
    P.cells.reserve(P.n);
    for (int i = 0; i < P.nx; ++i)
        for (int j = 0; j < P.ny; ++j) P.cells.emplace_back(i, j);

    P.gap.assign(P.n, std::vector<Rat>(P.n, Rat(0)));
    for (int a = 0; a < P.n; ++a)
        for (int b = a + 1; b < P.n; ++b) {
            auto [i, j] = P.cells[a];
            auto [i2, j2] = P.cells[b];
            Rat g = Y.d(j, j2) - X.d(i, i2);
            if (symmetric) g = rat_abs(g);
            P.gap[a][b] = g;
            P.gap[b][a] = g;
        }

    P.by_mass.resize(P.n);
    for (int a = 0; a < P.n; ++a) P.by_mass[a] = a;
    std::stable_sort(P.by_mass.begin(), P.by_mass.end(), [&](int a, int b) {
        const Rat ma = rat_min(X.mass[P.cells[a].first], Y.mass[P.cells[a].second]);
        const Rat mb = rat_min(X.mass[P.cells[b].first], Y.mass[P.cells[b].second]);
        return mb < ma;
    });
    return P;
}

PairSet mask_to_pair_set(const CellProblem& P, Mask mask) {
    std::vector<std::pair<int, int>> pairs;
    for (Mask m = mask; m; m &= m - 1) pairs.push_back(P.cells[lowest_bit(m)]);
    return PairSet{P.nx, P.ny, std::move(pairs)};
}

MaxMassResult coverage_witness(const CellProblem& P, Mask mask) {
    return max_coupling_mass(P.X->mass, P.Y->mass, mask_to_pair_set(P, mask));
}

const Rat& coverage_value(const CellProblem& P, Mask mask) {
    auto it = P.coverage_cache.find(mask);
    if (it != P.coverage_cache.end()) return it->second;
    Rat value = coverage_witness(P, mask).value;
    return P.coverage_cache.emplace(mask, std::move(value)).first->second;
}

Rat mask_distortion(const CellProblem& P, Mask mask) {
    Rat best = 0;
    for (Mask m = mask; m; m &= m - 1) {
        int a = lowest_bit(m);
        for (Mask r = m & (m - 1); r; r &= r - 1) best = rat_max(best, P.gap[a][lowest_bit(r)]);
    }
    return best;
}

std::vector<Mask> threshold_adjacency(const CellProblem& P, const Rat& t) {
    std::vector<Mask> adj(P.n, 0);
    for (int a = 0; a < P.n; ++a)
        for (int b = 0; b < P.n; ++b)
            if (a != b && P.gap[a][b] <= t) adj[a] |= Mask(1) << b;
    return adj;
}

// Branch-and-bound for cliques maximizing coupling coverage. Candidate cells
// are taken in mass-descending order; the upper bound at a node is the
// fractional coverage of the current clique plus all remaining compatible
// cells (a max-flow value, monotone in the cell set).
//
// Two modes: with a target, stops at the first clique whose coverage reaches
// it; without one, computes the exact max among cliques with coverage
// strictly above the floor.
struct CoverageSearch {
    const CellProblem& P;
    std::vector<Mask> adj;
    Rat floor;  // exclusive lower bound in max mode
    std::optional<Rat> target;
    Rat best;
    Mask best_set = 0;
    bool found = false;
    bool done = false;
    long long nodes = 0;
    long long node_budget;

    CoverageSearch(const CellProblem& problem, const Rat& threshold, Rat floor_exclusive,
                   std::optional<Rat> stop_at, long long budget)
        : P(problem),
          adj(threshold_adjacency(problem, threshold)),
          floor(std::move(floor_exclusive)),
          target(std::move(stop_at)),
          best(floor),
          node_budget(budget) {}

    void consider(Mask clique, const Rat& value) {
        if (target) {
            if (value >= *target) {
                best = value;
                best_set = clique;
                found = true;
                done = true;
            }
        } else if (value > best) {
            best = value;
            best_set = clique;
            found = true;
        }
    }

    bool prunable(const Rat& bound) const { return target ? bound < *target : bound <= best; }

    void expand(Mask clique, Mask candidates) {
        if (done) return;
        if (++nodes > node_budget)
            throw SizeLimitError("branch-and-bound node budget exceeded");
        while (candidates) {
            if (prunable(coverage_value(P, clique | candidates))) return;
            int v = -1;
            for (int a : P.by_mass)
                if (candidates & (Mask(1) << a)) {
                    v = a;
                    break;
                }
            candidates &= ~(Mask(1) << v);
            Mask next = clique | (Mask(1) << v);
            consider(next, coverage_value(P, next));
            if (done) return;
            expand(next, candidates & adj[v]);
            if (done) return;
        }
    }

    // forced_in must be internally compatible; returns false if it is not.
    bool run(Mask forced_in, Mask forced_out) {
        for (Mask m = forced_in; m; m &= m - 1) {
            int a = lowest_bit(m);
            Mask rest = m & (m - 1);
            if ((rest & adj[a]) != rest) return false;
        }
        Mask candidates = ~Mask(0);
        if (P.n < 64) candidates = (Mask(1) << P.n) - 1;
        candidates &= ~forced_in & ~forced_out;
        for (Mask m = forced_in; m; m &= m - 1) candidates &= adj[lowest_bit(m)];
        consider(forced_in, forced_in ? coverage_value(P, forced_in) : Rat(0));
        if (!done) expand(forced_in, candidates);
        return true;
    }
};

// Does some clique S containing forced_in and avoiding forced_out reach
// coverage >= target at the given threshold?
std::optional<Mask> clique_reaching(const CellProblem& P, const Rat& threshold,
                                    const Rat& target, Mask forced_in, Mask forced_out,
                                    const SearchBudget& budget) {
    if (target <= 0) return forced_in;  // the forced cells alone suffice
    CoverageSearch search(P, threshold, Rat(0), target, budget.bb_nodes);
    if (!search.run(forced_in, forced_out)) return std::nullopt;
    if (!search.found) return std::nullopt;
    return search.best_set;
}

// Lexicographically least clique at the threshold with coverage >= target,
// comparing pair sets as sorted sequences (a proper prefix sorts first).
// Precondition: such a clique exists.
Mask lex_least_clique(const CellProblem& P, const Rat& threshold, const Rat& target,
                      const SearchBudget& budget) {
    if (target <= 0) return 0;
    std::vector<Mask> adj = threshold_adjacency(P, threshold);
    Mask committed = 0, excluded = 0;
    while (true) {
        if (committed && coverage_value(P, committed) >= target) return committed;
        bool extended = false;
        for (int a = 0; a < P.n && !extended; ++a) {
            Mask bit = Mask(1) << a;
            if ((committed | excluded) & bit) continue;
            bool compatible = (committed & adj[a]) == committed;
            if (compatible &&
                clique_reaching(P, threshold, target, committed | bit, excluded, budget)) {
                committed |= bit;
                extended = true;
            } else {
                excluded |= bit;
            }
        }
        if (!extended)
            throw std::logic_error("witness reconstruction failed to extend a feasible prefix");
    }
}

OrderWitness make_witness(const CellProblem& P, const Rat& eps, Mask mask) {
    PairSet S = mask_to_pair_set(P, mask);
    MaxMassResult flow = max_coupling_mass(P.X->mass, P.Y->mass, S);
    return OrderWitness{eps, std::move(S), std::move(flow.witness), mask_distortion(P, mask),
                        Rat(1) - flow.value};
}

std::vector<Rat> gap_thresholds(const CellProblem& P) {
    std::vector<Rat> ts{Rat(0)};
    for (int a = 0; a < P.n; ++a)
        for (int b = a + 1; b < P.n; ++b)
            if (P.gap[a][b] > 0) ts.push_back(P.gap[a][b]);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

void require_cells(const CellProblem& P, const char* where) {
    if (P.n > SearchBudget::max_cells)
        throw SizeLimitError(std::string(where) + ": |X|*|Y| = " + std::to_string(P.n) +
                             " exceeds the exact-search bound of " +
                             std::to_string(SearchBudget::max_cells));
}

BoxResult solve_box(const FiniteMMSpace& X, const FiniteMMSpace& Y, bool symmetric,
                    const SearchBudget& budget, const char* where) {
    require_canonical(X, where);
    require_canonical(Y, where);
    CellProblem P = make_cell_problem(X, Y, symmetric);
    require_cells(P, where);

    Rat value = 1;  // cost of the empty pair set
    for (const Rat& t : gap_thresholds(P)) {
        if (t >= value) break;
        CoverageSearch search(P, t, Rat(1) - value, std::nullopt, budget.bb_nodes);
        search.run(0, 0);
        if (search.found) value = rat_min(value, rat_max(t, Rat(1) - search.best));
        // Full coverage: later thresholds only raise the distortion term.
        if (search.found && search.best == 1) break;
    }
    Mask witness = lex_least_clique(P, value, Rat(1) - value, budget);
    return BoxResult{value, make_witness(P, value, witness)};
}

BoxResult solve_box_oracle(const FiniteMMSpace& X, const FiniteMMSpace& Y, bool symmetric,
                           const SearchBudget& budget, const char* where) {
    require_canonical(X, where);
    require_canonical(Y, where);
    CellProblem P = make_cell_problem(X, Y, symmetric);
    if (P.n > budget.oracle_pairs)
        throw SizeLimitError(std::string(where) + ": |X|*|Y| = " + std::to_string(P.n) +
                             " exceeds the enumeration budget of " +
                             std::to_string(budget.oracle_pairs));

    // dis over each subset via the lowest-bit recurrence.
    const Mask total = Mask(1) << P.n;
    std::vector<Rat> dis(total, Rat(0));
    for (Mask mask = 1; mask < total; ++mask) {
        int a = lowest_bit(mask);
        Mask rest = mask & (mask - 1);
        Rat best = dis[rest];
        for (Mask m = rest; m; m &= m - 1) best = rat_max(best, P.gap[a][lowest_bit(m)]);
        dis[mask] = best;
    }

    auto cells_of = [&](Mask mask) {
        std::vector<int> ids;
        for (Mask m = mask; m; m &= m - 1) ids.push_back(lowest_bit(m));
        return ids;
    };

    Rat value = 1;
    Mask best_mask = 0;
    for (Mask mask = 0; mask < total; ++mask) {
        Rat cost = rat_max(dis[mask], Rat(1) - coverage_value(P, mask));
        if (cost < value) {
            value = cost;
            best_mask = mask;
        } else if (cost == value && mask != best_mask) {
            auto a = cells_of(mask);
            auto b = cells_of(best_mask);
            if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()))
                best_mask = mask;
        }
    }
    return BoxResult{value, make_witness(P, value, best_mask)};
}

}  // namespace

std::optional<OrderWitness> check_order(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                        const Rat& eps, const SearchBudget& budget) {
    require_canonical(X, "check_order");
    require_canonical(Y, "check_order");
    if (eps < 0) throw InputError("check_order: epsilon must be nonnegative");

    CellProblem P = make_cell_problem(X, Y, /*symmetric=*/false);
    const Rat target = Rat(1) - eps;
    if (target <= 0) return make_witness(P, eps, 0);  // the empty pair set certifies eps >= 1

    require_cells(P, "check_order");
    try {
        if (!clique_reaching(P, eps, target, 0, 0, budget)) return std::nullopt;
        return make_witness(P, eps, lex_least_clique(P, eps, target, budget));
    } catch (const SizeLimitError&) {
        if (P.n > budget.oracle_pairs) throw;
        // Subset-enumeration fallback; same lexicographic tie-break.
        const Mask total = Mask(1) << P.n;
        std::optional<Mask> best;
        std::vector<int> best_cells;
        for (Mask mask = 0; mask < total; ++mask) {
            PairSet S = mask_to_pair_set(P, mask);
            if (lip_distortion(X, Y, S) > eps) continue;
            if (coverage_value(P, mask) < target) continue;
            std::vector<int> ids;
            for (Mask m = mask; m; m &= m - 1) ids.push_back(lowest_bit(m));
            if (!best || std::lexicographical_compare(ids.begin(), ids.end(),
                                                      best_cells.begin(), best_cells.end())) {
                best = mask;
                best_cells = std::move(ids);
            }
        }
        if (!best) return std::nullopt;
        return make_witness(P, eps, *best);
    }
}

BoxResult unilateral_box(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                         const SearchBudget& budget) {
    return solve_box(X, Y, /*symmetric=*/false, budget, "unilateral_box");
}

BoxResult box(const FiniteMMSpace& X, const FiniteMMSpace& Y, const SearchBudget& budget) {
    return solve_box(X, Y, /*symmetric=*/true, budget, "box");
}

BoxResult unilateral_box_oracle(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                const SearchBudget& budget) {
    return solve_box_oracle(X, Y, /*symmetric=*/false, budget, "unilateral_box_oracle");
}

BoxResult box_oracle(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                     const SearchBudget& budget) {
    return solve_box_oracle(X, Y, /*symmetric=*/true, budget, "box_oracle");
}

namespace {

void require_map_budget(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                        const SearchBudget& budget, const char* where) {
    Int total = boost::multiprecision::pow(Int(Y.size()), static_cast<unsigned>(X.size()));
    if (total > budget.map_total)
        throw SizeLimitError(std::string(where) + ": |Y|^|X| = " + total.str() +
                             " exceeds the map budget of " + std::to_string(budget.map_total));
}

bool next_image(std::vector<int>& image, int base) {
    for (int i = static_cast<int>(image.size()) - 1; i >= 0; --i) {
        if (++image[i] < base) return true;
        image[i] = 0;
    }
    return false;
}

bool extend_lipschitz(const FiniteMMSpace& X, const FiniteMMSpace& Y, std::vector<int>& image,
                      std::vector<Rat>& pushed, int i) {
    const int n = X.size();
    if (i == n) return true;  // pushed <= m_Y pointwise and totals agree, so equality
    for (int j = 0; j < Y.size(); ++j) {
        if (pushed[j] + X.mass[i] > Y.mass[j]) continue;
        bool ok = true;
        for (int k = 0; k < i && ok; ++k)
            if (Y.d(j, image[k]) > X.d(i, k)) ok = false;
        if (!ok) continue;
        image[i] = j;
        pushed[j] += X.mass[i];
        if (extend_lipschitz(X, Y, image, pushed, i + 1)) return true;
        pushed[j] -= X.mass[i];
    }
    return false;
}

}  // namespace

std::optional<PointMap> check_lipschitz_order(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                              const SearchBudget& budget) {
    require_canonical(X, "check_lipschitz_order");
    require_canonical(Y, "check_lipschitz_order");
    require_map_budget(X, Y, budget, "check_lipschitz_order");

    std::vector<int> image(X.size(), -1);
    std::vector<Rat> pushed(Y.size(), Rat(0));
    if (!extend_lipschitz(X, Y, image, pushed, 0)) return std::nullopt;
    return PointMap{std::move(image)};
}

namespace {

// Max-mass subset machinery over the points of X: subsets whose pairwise
// f-gaps stay below a threshold are cliques of a compatibility graph.
struct PointClique {
    int n;
    std::vector<Rat> weight;
    std::vector<std::vector<Rat>> gap;
    std::vector<int> by_weight;

    PointClique(const FiniteMMSpace& X, const FiniteMMSpace& Y, const PointMap& f)
        : n(X.size()), weight(X.mass), gap(n, std::vector<Rat>(n, Rat(0))) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                Rat g = Y.d(f(a), f(b)) - X.d(a, b);
                gap[a][b] = g;
                gap[b][a] = g;
            }
        by_weight.resize(n);
        for (int a = 0; a < n; ++a) by_weight[a] = a;
        std::stable_sort(by_weight.begin(), by_weight.end(),
                         [&](int a, int b) { return weight[b] < weight[a]; });
    }

    std::vector<Mask> adjacency(const Rat& t) const {
        std::vector<Mask> adj(n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && gap[a][b] <= t) adj[a] |= Mask(1) << b;
        return adj;
    }

    Rat mass_of(Mask mask) const {
        Rat total = 0;
        for (Mask m = mask; m; m &= m - 1) total += weight[lowest_bit(m)];
        return total;
    }

    // Max clique mass at the threshold among cliques containing forced_in
    // and avoiding forced_out; nullopt when forced_in is incompatible.
    std::optional<Rat> max_mass(const std::vector<Mask>& adj, Mask forced_in, Mask forced_out,
                                Mask* best_set = nullptr) const {
        for (Mask m = forced_in; m; m &= m - 1) {
            int a = lowest_bit(m);
            Mask rest = m & (m - 1);
            if ((rest & adj[a]) != rest) return std::nullopt;
        }
        Mask candidates = n < 64 ? (Mask(1) << n) - 1 : ~Mask(0);
        candidates &= ~forced_in & ~forced_out;
        for (Mask m = forced_in; m; m &= m - 1) candidates &= adj[lowest_bit(m)];

        const Rat root_mass = mass_of(forced_in);
        Rat best = root_mass;
        Mask best_mask = forced_in;
        rec(adj, forced_in, root_mass, candidates, best, best_mask);
        if (best_set) *best_set = best_mask;
        return best;
    }

private:
    void rec(const std::vector<Mask>& adj, Mask clique, const Rat& clique_mass, Mask candidates,
             Rat& best, Mask& best_mask) const {
        while (candidates) {
            if (clique_mass + mass_of(candidates) <= best) return;
            int v = -1;
            for (int a : by_weight)
                if (candidates & (Mask(1) << a)) {
                    v = a;
                    break;
                }
            candidates &= ~(Mask(1) << v);
            Mask next = clique | (Mask(1) << v);
            Rat next_mass = clique_mass + weight[v];
            if (next_mass > best) {
                best = next_mass;
                best_mask = next;
            }
            rec(adj, next, next_mass, candidates & adj[v], best, best_mask);
        }
    }
};

// Lexicographically least clique of mass >= target at the threshold.
Subset lex_least_point_clique(const PointClique& pc, const std::vector<Mask>& adj,
                              const Rat& target) {
    Mask committed = 0, excluded = 0;
    while (true) {
        if (pc.mass_of(committed) >= target) break;
        bool extended = false;
        for (int a = 0; a < pc.n && !extended; ++a) {
            Mask bit = Mask(1) << a;
            if ((committed | excluded) & bit) continue;
            if ((committed & adj[a]) != committed) {
                excluded |= bit;
                continue;
            }
            auto reach = pc.max_mass(adj, committed | bit, excluded);
            if (reach && *reach >= target) {
                committed |= bit;
                extended = true;
            } else {
                excluded |= bit;
            }
        }
        if (!extended) throw std::logic_error("point clique reconstruction failed");
    }
    std::vector<int> indices;
    for (Mask m = committed; m; m &= m - 1) indices.push_back(lowest_bit(m));
    return Subset{std::move(indices)};
}

std::vector<Rat> point_gap_thresholds(const PointClique& pc) {
    std::vector<Rat> ts{Rat(0)};
    for (int a = 0; a < pc.n; ++a)
        for (int b = a + 1; b < pc.n; ++b)
            if (pc.gap[a][b] > 0) ts.push_back(pc.gap[a][b]);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

}  // namespace

Rat min_lip_up_to(const FiniteMMSpace& X, const FiniteMMSpace& Y, const PointMap& f) {
    if (f.domain_size() != X.size()) throw InputError("min_lip_up_to: map domain mismatch");
    if (X.size() > SearchBudget::max_cells)
        throw SizeLimitError("min_lip_up_to: domain exceeds the exact-search bound");
    PointClique pc(X, Y, f);
    Rat best = 1;  // X0 = empty set always works at eps = 1
    for (const Rat& t : point_gap_thresholds(pc)) {
        if (t >= best) break;
        auto mass = pc.max_mass(pc.adjacency(t), 0, 0);
        best = rat_min(best, rat_max(t, Rat(1) - *mass));
    }
    return best;
}

std::optional<Subset> lip_up_to_witness(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                        const PointMap& f, const Rat& eps) {
    if (f.domain_size() != X.size()) throw InputError("lip_up_to_witness: map domain mismatch");
    if (eps < 0) return std::nullopt;
    PointClique pc(X, Y, f);
    auto adj = pc.adjacency(eps);
    auto best = pc.max_mass(adj, 0, 0);
    if (!best || *best < Rat(1) - eps) return std::nullopt;
    return lex_least_point_clique(pc, adj, *best);
}

std::optional<KYWitness> check_ky_order(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                        const Rat& eps, const SearchBudget& budget) {
    require_canonical(X, "check_ky_order");
    require_canonical(Y, "check_ky_order");
    if (eps < 0) throw InputError("check_ky_order: epsilon must be nonnegative");
    require_map_budget(X, Y, budget, "check_ky_order");

    std::vector<int> image(X.size(), 0);
    do {
        PointMap f{image};
        if (prokhorov(Y, pushforward(X.mass, f, Y.size()), Y.mass) > eps) continue;
        auto X0 = lip_up_to_witness(X, Y, f, eps);
        if (!X0) continue;
        return KYWitness{std::move(f), std::move(*X0), eps};
    } while (next_image(image, Y.size()));
    return std::nullopt;
}

Rat ky_unilateral_box(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                      const SearchBudget& budget) {
    require_canonical(X, "ky_unilateral_box");
    require_canonical(Y, "ky_unilateral_box");
    require_map_budget(X, Y, budget, "ky_unilateral_box");

    std::optional<Rat> best;
    std::vector<int> image(X.size(), 0);
    do {
        PointMap f{image};
        Rat dp = prokhorov(Y, pushforward(X.mass, f, Y.size()), Y.mass);
        if (best && dp >= *best) continue;
        Rat candidate = rat_max(dp, min_lip_up_to(X, Y, f));
        if (!best || candidate < *best) best = candidate;
    } while (next_image(image, Y.size()));
    return *best;
}

}  // namespace mm
