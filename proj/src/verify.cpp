#include "mmorder/verify.hpp"

#include <algorithm>
#include <random>

#include "mmorder/errors.hpp"
#include "mmorder/gen.hpp"
#include "mmorder/maps.hpp"
#include "mmorder/prokhorov.hpp"
#include "mmorder/transport.hpp"

namespace mm {

void SuiteResult::check(bool ok, const std::string& message) {
    ++checks;
    if (!ok) {
        ++failures;
        failure_messages.push_back(message);
    }
}

namespace {

const Rat kQuarter = Rat(1) / 4;

FiniteMMSpace with_mass(const FiniteMMSpace& X, const std::vector<Rat>& mass,
                        const std::string& suffix) {
    FiniteMMSpace out = X;
    out.mass = mass;
    out.label += suffix;
    return out;
}

FiniteMMSpace reversed_space(const FiniteMMSpace& X) {
    const int n = X.size();
    FiniteMMSpace out;
    out.label = X.label + "/rev";
    out.dist.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int a = 0; a < n; ++a) {
        int i = n - 1 - a;
        out.points.push_back(X.points[i]);
        out.mass.push_back(X.mass[i]);
        for (int b = 0; b < n; ++b) out.dist[a][b] = X.d(i, n - 1 - b);
    }
    return out;
}

PairSet seeded_pair_subset(std::uint64_t seed, int rows, int cols) {
    std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dULL);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (rng() % 2 == 0) pairs.emplace_back(i, j);
    return make_pair_set(rows, cols, std::move(pairs));
}

PointMap seeded_map(std::uint64_t seed, int domain, int codomain) {
    std::mt19937_64 rng(seed ^ 0x94d049bb133111ebULL);
    PointMap f;
    f.image.resize(domain);
    for (int i = 0; i < domain; ++i) f.image[i] = static_cast<int>(rng() % codomain);
    return f;
}

std::string rs(const Rat& v) { return format_rational(v); }

// --- remark46: exact values of the three-point family ----------------------

SuiteResult suite_remark46(int trials, std::uint64_t, const SearchBudget& budget) {
    SuiteResult res{"remark46"};
    const int n_max = trials > 0 ? 2 + trials - 1 : 8;
    for (int n = 2; n <= n_max; ++n) {
        auto fam = gen_remark46(n, kQuarter);
        const Rat expected = Rat(n - 1) / (2 * n);
        BoxResult ub = unilateral_box(fam.Xn, fam.Yn, budget);
        res.check(ub.value == expected, "unilateral_box(X_" + std::to_string(n) + ", Y_" +
                                            std::to_string(n) + ") = " + rs(ub.value) +
                                            ", expected " + rs(expected));
        res.check(ub.witness.dis_value <= ub.value && ub.witness.uncovered <= ub.value,
                  "unilateral_box witness invariants fail at n = " + std::to_string(n));
        Rat ky = ky_unilateral_box(fam.Xn, fam.Yn, budget);
        res.check(ky == kQuarter, "ky_unilateral_box(X_" + std::to_string(n) + ", Y_" +
                                      std::to_string(n) + ") = " + rs(ky) + ", expected 1/4");
    }
    auto fam = gen_remark46(2, kQuarter);
    BoxResult lim = unilateral_box(fam.Xlimit, fam.Ylimit, budget);
    res.check(lim.value == Rat(1) / 2,
              "unilateral_box(X_limit, Y_limit) = " + rs(lim.value) + ", expected 1/2");
    Rat kylim = ky_unilateral_box(fam.Xlimit, fam.Ylimit, budget);
    res.check(kylim == Rat(1) / 2,
              "ky_unilateral_box(X_limit, Y_limit) = " + rs(kylim) + ", expected 1/2");
    return res;
}

// --- oracle: solver equals subset enumeration on the tiny corpus -----------

SuiteResult suite_oracle(int trials, std::uint64_t seed, const SearchBudget& budget) {
    SuiteResult res{"oracle"};
    const int count = trials > 0 ? trials : 200;
    for (int k = 0; k < count; ++k) {
        std::uint64_t s = seed + k;
        const int nx = 1 + static_cast<int>(s % 3);
        const int ny = 1 + static_cast<int>((s / 3) % 3);
        FiniteMMSpace X = gen_random(2 * s, nx, Rat(1), 8);
        FiniteMMSpace Y = gen_random(2 * s + 1, ny, Rat(1), 8);

        BoxResult fast = unilateral_box(X, Y, budget);
        BoxResult slow = unilateral_box_oracle(X, Y, budget);
        res.check(fast.value == slow.value,
                  "seed " + std::to_string(s) + ": unilateral_box " + rs(fast.value) +
                      " != oracle " + rs(slow.value));
        res.check(fast.witness.S.pairs == slow.witness.S.pairs,
                  "seed " + std::to_string(s) + ": unilateral witness tie-break differs");

        BoxResult bfast = box(X, Y, budget);
        BoxResult bslow = box_oracle(X, Y, budget);
        res.check(bfast.value == bslow.value, "seed " + std::to_string(s) + ": box " +
                                                  rs(bfast.value) + " != oracle " +
                                                  rs(bslow.value));
        res.check(bfast.witness.S.pairs == bslow.witness.S.pairs,
                  "seed " + std::to_string(s) + ": box witness tie-break differs");
    }
    return res;
}

// --- triangle: ubox triangle inequality plus the explicit gluing witness ---

SuiteResult suite_triangle(int trials, std::uint64_t seed, const SearchBudget& budget) {
    SuiteResult res{"triangle"};
    const int count = trials > 0 ? trials : 200;
    for (int k = 0; k < count; ++k) {
        std::uint64_t s = seed + k;
        FiniteMMSpace X = gen_random(3 * s, 1 + static_cast<int>(s % 4), Rat(1), 8);
        FiniteMMSpace Y = gen_random(3 * s + 1, 1 + static_cast<int>((s / 4) % 4), Rat(1), 8);
        FiniteMMSpace Z = gen_random(3 * s + 2, 1 + static_cast<int>((s / 16) % 4), Rat(1), 8);

        BoxResult xy = unilateral_box(X, Y, budget);
        BoxResult yz = unilateral_box(Y, Z, budget);
        BoxResult xz = unilateral_box(X, Z, budget);
        const Rat sum = xy.value + yz.value;
        res.check(xz.value <= sum, "seed " + std::to_string(s) + ": ubox(X,Z) = " +
                                       rs(xz.value) + " > " + rs(sum));

        // The composed witness from the gluing certifies the sum directly.
        PairSet S = compose_pair_sets(xy.witness.S, yz.witness.S);
        Coupling pi = compose_couplings(xy.witness.pi, yz.witness.pi);
        res.check(lip_distortion(X, Z, S) <= sum,
                  "seed " + std::to_string(s) + ": composed witness distortion exceeds " +
                      rs(sum));
        res.check(coupling_mass_on(pi, S) >= Rat(1) - sum,
                  "seed " + std::to_string(s) + ": composed witness coverage below 1 - " +
                      rs(sum));
        validate_coupling(pi, X.mass, Z.mass);

        res.check(check_order(X, Z, sum, budget).has_value(),
                  "seed " + std::to_string(s) + ": check_order(X, Z, s + t) failed");
    }
    return res;
}

// --- order-zero: ubox = 0 iff a 1-Lipschitz measure-preserving map exists --

SuiteResult suite_order_zero(int trials, std::uint64_t seed, const SearchBudget& budget) {
    SuiteResult res{"order-zero"};
    const int count = trials > 0 ? trials : 100;
    for (int k = 0; k < count; ++k) {
        std::uint64_t s = seed + k;
        FiniteMMSpace X = gen_random(5 * s, 1 + static_cast<int>(s % 3), Rat(1), 8);
        FiniteMMSpace Y;
        switch (s % 4) {
            case 0: Y = reversed_space(X); break;
            case 1: Y = gen_scaled(X, s % 8 < 4 ? Rat(1) / 2 : Rat(3) / 4); break;
            case 2: Y = gen_random(5 * s + 3, 1 + static_cast<int>((s / 4) % 3), Rat(1), 8); break;
            default: {
                Y.label = "pt";
                Y.points = {"*"};
                Y.dist = {{Rat(0)}};
                Y.mass = {Rat(1)};
            }
        }
        for (int dir = 0; dir < 2; ++dir) {
            const FiniteMMSpace& A = dir == 0 ? X : Y;
            const FiniteMMSpace& B = dir == 0 ? Y : X;
            bool zero = unilateral_box(A, B, budget).value == 0;
            bool map = check_lipschitz_order(A, B, budget).has_value();
            res.check(zero == map, "seed " + std::to_string(s) + " dir " + std::to_string(dir) +
                                       ": ubox-zero " + (zero ? "yes" : "no") +
                                       " vs lipschitz map " + (map ? "yes" : "no"));
        }
    }
    return res;
}

// --- box-bounds: order holds both ways at the box value; ubox <= box -------

SuiteResult suite_box_bounds(int trials, std::uint64_t seed, const SearchBudget& budget) {
    SuiteResult res{"box-bounds"};
    const int count = trials > 0 ? trials : 200;
    for (int k = 0; k < count; ++k) {
        std::uint64_t s = seed + k;
        FiniteMMSpace X = gen_random(7 * s, 1 + static_cast<int>(s % 4), Rat(1), 8);
        FiniteMMSpace Y = gen_random(7 * s + 1, 1 + static_cast<int>((s / 4) % 4), Rat(1), 8);

        BoxResult b = box(X, Y, budget);
        res.check(check_order(X, Y, b.value, budget).has_value(),
                  "seed " + std::to_string(s) + ": X not >=_box Y at " + rs(b.value));
        res.check(check_order(Y, X, b.value, budget).has_value(),
                  "seed " + std::to_string(s) + ": Y not >=_box X at " + rs(b.value));
        res.check(unilateral_box(X, Y, budget).value <= b.value,
                  "seed " + std::to_string(s) + ": ubox exceeds box");
        res.check(box(Y, X, budget).value == b.value,
                  "seed " + std::to_string(s) + ": box not symmetric");
    }
    return res;
}

// --- prokhorov-oracle: flow value vs definition, metric axioms, box bound --

SuiteResult suite_prokhorov(int trials, std::uint64_t seed, const SearchBudget& budget) {
    SuiteResult res{"prokhorov-oracle"};
    const int count = trials > 0 ? trials : 100;
    for (int k = 0; k < count; ++k) {
        std::uint64_t s = seed + k;
        const int n = 1 + static_cast<int>(s % 4);
        FiniteMMSpace X = gen_random(11 * s, n, Rat(1), 8);
        auto mu = gen_random_mass(11 * s + 1, n, 8);
        auto nu = gen_random_mass(11 * s + 2, n, 8);
        auto lam = gen_random_mass(11 * s + 3, n, 8);

        Rat flow = prokhorov(X, mu, nu);
        Rat defn = prokhorov_oracle(X, mu, nu);
        res.check(flow == defn, "seed " + std::to_string(s) + ": flow " + rs(flow) +
                                    " != definitional " + rs(defn));

        res.check(prokhorov(X, nu, mu) == flow, "seed " + std::to_string(s) + ": not symmetric");
        res.check(prokhorov(X, mu, mu) == 0, "seed " + std::to_string(s) + ": d_P(mu,mu) != 0");
        res.check((flow == 0) == (mu == nu),
                  "seed " + std::to_string(s) + ": identity of indiscernibles fails");
        Rat lhs = prokhorov(X, mu, lam);
        res.check(lhs <= flow + prokhorov(X, nu, lam),
                  "seed " + std::to_string(s) + ": triangle inequality fails");

        // box((X,mu),(X,nu)) <= 2 d_P(mu,nu).
        FiniteMMSpace A = canonicalize(with_mass(X, mu, "/mu"));
        FiniteMMSpace B = canonicalize(with_mass(X, nu, "/nu"));
        res.check(box(A, B, budget).value <= 2 * flow,
                  "seed " + std::to_string(s) + ": box exceeds 2 d_P");
    }
    return res;
}

// --- ky-implications: map order vs coupling order on a tiny corpus ---------

SuiteResult suite_ky_implications(int trials, std::uint64_t seed, const SearchBudget& budget) {
    SuiteResult res{"ky-implications"};
    const int count = trials > 0 ? trials : 50;

    std::vector<std::pair<FiniteMMSpace, FiniteMMSpace>> corpus;
    for (int k = 0; k < count; ++k) {
        std::uint64_t s = seed + k;
        corpus.emplace_back(gen_random(13 * s, 1 + static_cast<int>(s % 3), Rat(1), 8),
                            gen_random(13 * s + 1, 1 + static_cast<int>((s / 3) % 3), Rat(1), 8));
    }
    for (int n = 2; n <= 4; ++n) {
        auto fam = gen_remark46(n, kQuarter);
        corpus.emplace_back(fam.Xn, fam.Yn);
        if (n == 2) corpus.emplace_back(fam.Xlimit, fam.Ylimit);
    }

    const Rat bump = Rat(1) / 100;
    for (size_t idx = 0; idx < corpus.size(); ++idx) {
        const auto& [X, Y] = corpus[idx];
        std::vector<Rat> grid{Rat(0), Rat(1) / 8, kQuarter, Rat(1) / 2, Rat(1),
                              unilateral_box(X, Y, budget).value, ky_unilateral_box(X, Y, budget)};
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        for (const Rat& eps : grid) {
            if (check_ky_order(X, Y, eps, budget)) {
                res.check(check_order(X, Y, 3 * eps, budget).has_value(),
                          "pair " + std::to_string(idx) + ": ky at " + rs(eps) +
                              " but no order at " + rs(3 * eps));
            }
            if (check_order(X, Y, eps, budget)) {
                const Rat relaxed = 2 * (eps + bump);
                res.check(check_ky_order(X, Y, relaxed, budget).has_value(),
                          "pair " + std::to_string(idx) + ": order at " + rs(eps) +
                              " but no ky at " + rs(relaxed));
            }
        }
    }
    return res;
}

// --- gluing: disintegration identities and the union mass bound ------------

SuiteResult suite_gluing(int trials, std::uint64_t seed, const SearchBudget&) {
    SuiteResult res{"gluing"};
    const int count = trials > 0 ? trials : 100;
    for (int k = 0; k < count; ++k) {
        std::uint64_t s = seed + k;
        FiniteMMSpace X = gen_random(23 * s, 1 + static_cast<int>(s % 4), Rat(1), 8);
        FiniteMMSpace Y = gen_random(23 * s + 1, 1 + static_cast<int>((s / 4) % 4), Rat(1), 8);
        FiniteMMSpace Z = gen_random(23 * s + 2, 1 + static_cast<int>((s / 16) % 4), Rat(1), 8);

        Coupling sigma = gen_random_coupling(31 * s, X.mass, Y.mass);
        Coupling tau = gen_random_coupling(31 * s + 1, Y.mass, Z.mass);
        validate_coupling(sigma, X.mass, Y.mass);
        validate_coupling(tau, Y.mass, Z.mass);

        TripleMeasure glued = glue(sigma, tau);
        res.check(marginal_12(glued) == sigma.matrix,
                  "seed " + std::to_string(s) + ": pr_12 of gluing != sigma");
        res.check(marginal_23(glued) == tau.matrix,
                  "seed " + std::to_string(s) + ": pr_23 of gluing != tau");

        Coupling composed = compose_couplings(sigma, tau);
        res.check(marginal_13(glued).matrix == composed.matrix,
                  "seed " + std::to_string(s) + ": pr_13 of gluing != composition");
        validate_coupling(composed, X.mass, Z.mass);

        PairSet S = seeded_pair_subset(41 * s, X.size(), Y.size());
        PairSet T = seeded_pair_subset(41 * s + 1, Y.size(), Z.size());
        Rat lhs = glued.mass_on_cylinder(S, T);
        Rat rhs = coupling_mass_on(sigma, S) + coupling_mass_on(tau, T) - 1;
        res.check(lhs >= rhs, "seed " + std::to_string(s) + ": cylinder mass " + rs(lhs) +
                                  " below " + rs(rhs));

        // Monotonicity of the inner maximization and witness exactness.
        PairSet S2 = full_pair_set(X.size(), Y.size());
        MaxMassResult small = max_coupling_mass(X, Y, S);
        MaxMassResult big = max_coupling_mass(X, Y, S2);
        res.check(small.value <= big.value, "seed " + std::to_string(s) + ": monotonicity");
        validate_coupling(small.witness, X.mass, Y.mass);
        res.check(coupling_mass_on(small.witness, S) == small.value,
                  "seed " + std::to_string(s) + ": witness does not attain the flow value");
    }
    return res;
}

// --- lemma32: dis_> of the open l1 neighborhood --------------------------

SuiteResult suite_lemma32(int trials, std::uint64_t seed, const SearchBudget&) {
    SuiteResult res{"lemma32"};
    const int count = trials > 0 ? trials : 200;
    for (int k = 0; k < count; ++k) {
        std::uint64_t s = seed + k;
        FiniteMMSpace X = gen_random(19 * s, 1 + static_cast<int>(s % 3), Rat(1), 8);
        FiniteMMSpace Y = gen_random(19 * s + 1, 1 + static_cast<int>((s / 3) % 3), Rat(1), 8);
        PairSet S = seeded_pair_subset(19 * s + 2, X.size(), Y.size());
        const Rat t = Rat(1 + static_cast<int>(s % 8)) / 8;

        PairSet U = product_neighborhood(X, Y, S, t, /*closed=*/false);
        res.check(lip_distortion(X, Y, U) <= lip_distortion(X, Y, S) + 2 * t,
                  "seed " + std::to_string(s) + ": dis_>(U_t(S)) exceeds dis_>(S) + 2t");
    }
    return res;
}

// --- semicontinuity: the three-point family sequence and the map-order jump 

SuiteResult suite_semicontinuity(int trials, std::uint64_t, const SearchBudget& budget) {
    SuiteResult res{"semicontinuity"};
    const int n_max = trials > 0 ? 2 + trials - 1 : 8;

    Rat previous = 0;
    for (int n = 2; n <= n_max; ++n) {
        auto fam = gen_remark46(n, kQuarter);
        Rat value = unilateral_box(fam.Xn, fam.Yn, budget).value;
        res.check(value == Rat(n - 1) / (2 * n), "ubox sequence wrong at n = " + std::to_string(n));
        res.check(value >= previous, "ubox sequence not nondecreasing at n = " + std::to_string(n));
        previous = value;

        Rat ky = ky_unilateral_box(fam.Xn, fam.Yn, budget);
        res.check(ky == kQuarter, "ky sequence wrong at n = " + std::to_string(n));
    }

    auto fam = gen_remark46(2, kQuarter);
    Rat limit = unilateral_box(fam.Xlimit, fam.Ylimit, budget).value;
    res.check(limit == Rat(1) / 2, "ubox limit is " + rs(limit) + ", expected 1/2");
    res.check(previous <= limit, "liminf of the sequence exceeds the limit value");
    Rat ky_limit = ky_unilateral_box(fam.Xlimit, fam.Ylimit, budget);
    res.check(ky_limit == Rat(1) / 2, "ky limit is " + rs(ky_limit) + ", expected 1/2");

    // Box convergence of Y_n to Y_limit: nonincreasing, ending at 1/16.
    Rat prev_box = 1;
    Rat last = 0;
    for (int n = 2; n <= 16; ++n) {
        auto f = gen_remark46(n, kQuarter);
        Rat b = box(f.Yn, f.Ylimit, budget).value;
        res.check(b <= prev_box, "box(Y_n, Y_limit) increases at n = " + std::to_string(n));
        prev_box = b;
        last = b;
    }
    res.check(last == Rat(1) / 16, "box(Y_16, Y_limit) = " + rs(last) + ", expected 1/16");
    return res;
}

// --- composition: projection construction and the scaled two-point family --

SuiteResult suite_composition(int trials, std::uint64_t seed, const SearchBudget&) {
    SuiteResult res{"composition"};

    // The scaled two-point family at n = 4: direct composition needs error
    // 1/2 while the constructed map satisfies every reported bound.
    {
        const int n = 4;
        const Rat gap = Rat(1) / n;
        FiniteMMSpace X;
        X.label = "twopoint/base";
        X.points = {"0", format_rational(gap)};
        X.dist = {{Rat(0), gap}, {gap, Rat(0)}};
        X.mass = {Rat(1) / 2, Rat(1) / 2};
        FiniteMMSpace Y = with_mass(X, {Rat(1) - gap, gap}, "/skew");
        FiniteMMSpace Z = gen_scaled(Y, Rat(n * n));
        PointMap f = identity_map(2);
        PointMap g = identity_map(2);

        res.check(min_lip_up_to(X, Y, f) == 0, "f should be exactly 1-Lipschitz");
        Rat dpf = prokhorov(Y, pushforward(X.mass, f, 2), Y.mass);
        res.check(dpf == gap, "d_P(f_* m_X, m_Y) = " + rs(dpf) + ", expected " + rs(gap));
        res.check(min_lip_up_to(Y, Z, g) == gap, "g should be 1-Lipschitz up to 1/n");
        res.check(prokhorov(Z, pushforward(Y.mass, g, 2), Z.mass) == 0,
                  "g should push m_Y onto m_Z");

        PointMap gf = compose_maps(f, g);
        res.check(min_lip_up_to(X, Z, gf) == Rat(1) / 2,
                  "direct composition should need error exactly 1/2");
        Rat dp_direct = prokhorov(Z, pushforward(X.mass, gf, 2), Z.mass);
        res.check(dp_direct == Rat(1) / 2 - gap,
                  "d_P((g.f)_* m_X, m_Z) = " + rs(dp_direct) + ", expected " +
                      rs(Rat(1) / 2 - gap));

        try {
            auto built = compose_lip_up_to(X, Y, Z, f, g, gap, gap, Rat(1) / 8);
            res.check(built.report.lip_ok && built.report.mass_ok && built.report.dp_ok,
                      "constructed composition bounds fail on the two-point family");
        } catch (const std::exception& e) {
            res.check(false, std::string("compose_lip_up_to threw: ") + e.what());
        }
    }

    const int count = trials > 0 ? trials : 50;
    for (int k = 0; k < count; ++k) {
        std::uint64_t s = seed + k;
        FiniteMMSpace X = gen_random(17 * s, 2 + static_cast<int>(s % 3), Rat(1), 8);
        FiniteMMSpace Y = gen_random(17 * s + 1, 2 + static_cast<int>((s / 3) % 3), Rat(1), 8);
        FiniteMMSpace Z = gen_random(17 * s + 2, 2 + static_cast<int>((s / 9) % 3), Rat(1), 8);
        PointMap f = seeded_map(29 * s, X.size(), Y.size());
        PointMap g = seeded_map(29 * s + 1, Y.size(), Z.size());

        // Tight hypothesis constants computed from the maps themselves; the
        // slack s must dominate 8 * eps1 for the constructed bounds to hold.
        Rat eps1 = rat_max(min_lip_up_to(X, Y, f),
                           prokhorov(Y, pushforward(X.mass, f, Y.size()), Y.mass));
        Rat eps2 = rat_max(min_lip_up_to(Y, Z, g),
                           prokhorov(Z, pushforward(Y.mass, g, Z.size()), Z.mass));
        Rat slack = 8 * eps1 + Rat(1) / 8;

        try {
            auto built = compose_lip_up_to(X, Y, Z, f, g, eps1, eps2, slack);
            res.check(built.report.lip_ok && built.report.mass_ok && built.report.dp_ok,
                      "seed " + std::to_string(s) + ": constructed bounds fail");
            res.check(lip_up_to_check(X, Z, built.h, built.report.X0_tilde,
                                      eps1 + eps2 + slack),
                      "seed " + std::to_string(s) + ": lip_up_to_check disagrees with report");
        } catch (const std::exception& e) {
            res.check(false, "seed " + std::to_string(s) + ": compose_lip_up_to threw: " +
                                 e.what());
        }
    }
    return res;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"remark46",  "oracle",          "triangle",        "order-zero",
            "box-bounds", "prokhorov-oracle", "ky-implications", "gluing",
            "lemma32",   "semicontinuity",  "composition"};
}

SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed,
                      const SearchBudget& budget) {
    if (name == "remark46") return suite_remark46(trials, seed, budget);
    if (name == "oracle") return suite_oracle(trials, seed, budget);
    if (name == "triangle") return suite_triangle(trials, seed, budget);
    if (name == "order-zero") return suite_order_zero(trials, seed, budget);
    if (name == "box-bounds") return suite_box_bounds(trials, seed, budget);
    if (name == "prokhorov-oracle") return suite_prokhorov(trials, seed, budget);
    if (name == "ky-implications") return suite_ky_implications(trials, seed, budget);
    if (name == "gluing") return suite_gluing(trials, seed, budget);
    if (name == "lemma32") return suite_lemma32(trials, seed, budget);
    if (name == "semicontinuity") return suite_semicontinuity(trials, seed, budget);
    if (name == "composition") return suite_composition(trials, seed, budget);
    std::string known;
    for (const auto& n : suite_names()) known += " " + n;
    throw InputError("unknown suite '" + name + "'; valid suites:" + known);
}

}  // namespace mm
