#include "mmorder/gen.hpp"

#include <algorithm>
#include <random>

#include "mmorder/errors.hpp"

namespace mm {

namespace {

FiniteMMSpace one_point_space(const std::string& label) {
    FiniteMMSpace X;
    X.label = label;
    X.points = {"*"};
    X.dist = {{Rat(0)}};
    X.mass = {Rat(1)};
    return X;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

Remark46Family gen_remark46(int n, const Rat& r) {
    if (n < 2) throw InputError("gen_remark46: n must be at least 2");
    if (r <= 0) throw InputError("gen_remark46: r must be positive");

    Remark46Family fam;
    fam.Xn = one_point_space("X" + std::to_string(n));
    fam.Xlimit = one_point_space("Xlimit");

    const Rat side = (Rat(1) - Rat(1) / n) / 2;
    fam.Yn.label = "Y" + std::to_string(n);
    fam.Yn.points = {"-" + format_rational(r), "0", format_rational(r)};
    fam.Yn.dist = {{Rat(0), r, 2 * r}, {r, Rat(0), r}, {2 * r, r, Rat(0)}};
    fam.Yn.mass = {side, Rat(1) / n, side};

    fam.Ylimit.label = "Ylimit";
    fam.Ylimit.points = {"-" + format_rational(r), format_rational(r)};
    fam.Ylimit.dist = {{Rat(0), 2 * r}, {2 * r, Rat(0)}};
    fam.Ylimit.mass = {Rat(1) / 2, Rat(1) / 2};
    return fam;
}

FiniteMMSpace gen_random(std::uint64_t seed, int n, const Rat& diam_bound,
                         int mass_granularity) {
    if (n < 1) throw InputError("gen_random: n must be at least 1");
    if (diam_bound <= 0) throw InputError("gen_random: diam_bound must be positive");
    if (mass_granularity < 1) throw InputError("gen_random: granularity must be at least 1");

    std::mt19937_64 rng(seed);
    FiniteMMSpace X;
    X.label = "rnd" + std::to_string(seed) + "n" + std::to_string(n);
    for (int i = 0; i < n; ++i) X.points.push_back("p" + std::to_string(i));

    constexpr int kDistSteps = 16;
    X.dist.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat d = diam_bound * Rat(1 + static_cast<long long>(draw(rng, kDistSteps))) /
                    kDistSteps;
            X.dist[i][j] = d;
            X.dist[j][i] = d;
        }
    // Shortest-path completion repairs the triangle inequality and keeps the
    // matrix symmetric and positive off the diagonal.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) X.dist[i][j] = rat_min(X.dist[i][j], X.dist[i][k] + X.dist[k][j]);

    std::vector<long long> weights(n);
    long long total = 0;
    for (int i = 0; i < n; ++i) {
        weights[i] = 1 + static_cast<long long>(draw(rng, mass_granularity));
        total += weights[i];
    }
    X.mass.resize(n);
    for (int i = 0; i < n; ++i) X.mass[i] = Rat(weights[i]) / total;

    validate(X, /*allow_zero_mass=*/false);
    return X;
}

FiniteMMSpace gen_scaled(const FiniteMMSpace& X, const Rat& c) {
    require_canonical(X, "gen_scaled");
    if (c <= 0) throw InputError("gen_scaled: scale must be positive");
    FiniteMMSpace out = X;
    out.label = X.label + "*" + format_rational(c);
    for (auto& row : out.dist)
        for (auto& d : row) d *= c;
    return out;
}

FiniteMMSpace gen_path(int n) {
    if (n < 1) throw InputError("gen_path: n must be at least 1");
    FiniteMMSpace X;
    X.label = "path" + std::to_string(n);
    X.dist.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        X.points.push_back("v" + std::to_string(i));
        X.mass.push_back(Rat(1) / n);
        for (int j = 0; j < n; ++j) X.dist[i][j] = Rat(std::abs(i - j)) / n;
    }
    return X;
}

FiniteMMSpace gen_cycle(int n) {
    if (n < 1) throw InputError("gen_cycle: n must be at least 1");
    FiniteMMSpace X;
    X.label = "cycle" + std::to_string(n);
    X.dist.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        X.points.push_back("v" + std::to_string(i));
        X.mass.push_back(Rat(1) / n);
        for (int j = 0; j < n; ++j) {
            int around = std::abs(i - j);
            X.dist[i][j] = Rat(std::min(around, n - around)) / n;
        }
    }
    return X;
}

std::vector<Rat> gen_random_mass(std::uint64_t seed, int n, int granularity, bool positive) {
    if (n < 1) throw InputError("gen_random_mass: n must be at least 1");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<long long> weights(n, 0);
    long long total = 0;
    while (total == 0) {
        total = 0;
        for (int i = 0; i < n; ++i) {
            weights[i] = static_cast<long long>(draw(rng, granularity + 1));
            if (positive && weights[i] == 0) weights[i] = 1;
            total += weights[i];
        }
    }
    std::vector<Rat> mass(n);
    for (int i = 0; i < n; ++i) mass[i] = Rat(weights[i]) / total;
    return mass;
}

Coupling gen_random_coupling(std::uint64_t seed, const std::vector<Rat>& mu,
                             const std::vector<Rat>& nu) {
    const int n = static_cast<int>(mu.size());
    const int m = static_cast<int>(nu.size());
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);

    std::vector<std::pair<int, int>> cells;
    cells.reserve(static_cast<size_t>(n) * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) cells.emplace_back(i, j);
    for (size_t k = cells.size(); k > 1; --k)
        std::swap(cells[k - 1], cells[draw(rng, k)]);

    // One greedy pass over all cells always exhausts both marginals: a row
    // with leftover mass would mean every column it met was already empty.
    std::vector<Rat> row_left = mu, col_left = nu;
    Coupling pi{n, m, std::vector<std::vector<Rat>>(n, std::vector<Rat>(m, Rat(0)))};
    for (auto [i, j] : cells) {
        Rat put = rat_min(row_left[i], col_left[j]);
        if (put <= 0) continue;
        pi.matrix[i][j] = put;
        row_left[i] -= put;
        col_left[j] -= put;
    }
    return pi;
}

}  // namespace mm
