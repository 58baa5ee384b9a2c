#include "mmorder/prokhorov.hpp"

#include <algorithm>

#include "mmorder/errors.hpp"
#include "mmorder/transport.hpp"

namespace mm {

namespace {

void check_mass_vector(const std::vector<Rat>& v, const char* name) {
    Rat total = 0;
    for (const Rat& m : v) {
        if (m < 0) throw InputError(std::string("NegativeEntry in mass vector ") + name);
        total += m;
    }
    if (total != 1)
        throw InputError(std::string("MassNotOne: ") + name + " sums to " +
                         format_rational(total));
}

std::vector<Rat> distance_breakpoints(const FiniteMMSpace& metric) {
    std::vector<Rat> values{Rat(0)};
    const int n = metric.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) values.push_back(metric.d(i, j));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

}  // namespace

Rat prokhorov(const FiniteMMSpace& metric, const std::vector<Rat>& mu,
              const std::vector<Rat>& nu) {
    const int n = metric.size();
    if (static_cast<int>(mu.size()) != n || static_cast<int>(nu.size()) != n)
        throw InputError("prokhorov: mass vectors must live on the metric's point set");
    check_mass_vector(mu, "mu");
    check_mass_vector(nu, "nu");

    std::optional<Rat> best;
    for (const Rat& t : distance_breakpoints(metric)) {
        if (best && t >= *best) break;
        std::vector<std::pair<int, int>> close;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (metric.d(i, j) <= t) close.emplace_back(i, j);
        Rat deficit = Rat(1) - max_coupling_mass(mu, nu, make_pair_set(n, n, close)).value;
        Rat candidate = rat_max(t, deficit);
        if (!best || candidate < *best) best = candidate;
    }
    return *best;
}

Rat prokhorov_oracle(const FiniteMMSpace& metric, const std::vector<Rat>& mu,
                     const std::vector<Rat>& nu, int max_points) {
    const int n = metric.size();
    if (static_cast<int>(mu.size()) != n || static_cast<int>(nu.size()) != n)
        throw InputError("prokhorov_oracle: mass vectors must live on the metric's point set");
    if (n > max_points)
        throw SizeLimitError("prokhorov_oracle: space exceeds " + std::to_string(max_points) +
                             " points");
    check_mass_vector(mu, "mu");
    check_mass_vector(nu, "nu");

    Rat worst = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Rat nu_A = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) nu_A += nu[i];

        // Distinct values of d(., A) ascending; mu(U_eps(A)) is constant on
        // each interval between consecutive values.
        std::vector<Rat> radii;
        std::vector<Rat> point_dist(n);
        for (int i = 0; i < n; ++i) {
            Rat d;
            bool first = true;
            for (int a = 0; a < n; ++a) {
                if (!(mask & (1u << a))) continue;
                if (first || metric.d(i, a) < d) d = metric.d(i, a);
                first = false;
            }
            point_dist[i] = d;
            radii.push_back(d);
        }
        std::sort(radii.begin(), radii.end());
        radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

        // e_A = least eps > 0 with mu(U_eps(A)) >= nu(A) - eps, as the min
        // over intervals (r_k, r_{k+1}] of max(r_k, nu(A) - M_k).
        std::optional<Rat> least;
        for (size_t k = 0; k < radii.size(); ++k) {
            Rat covered = 0;
            for (int i = 0; i < n; ++i)
                if (point_dist[i] <= radii[k]) covered += mu[i];
            Rat needed = nu_A - covered;
            if (k + 1 < radii.size() && needed > radii[k + 1]) continue;
            Rat candidate = rat_max(radii[k], needed < 0 ? Rat(0) : needed);
            if (!least || candidate < *least) least = candidate;
        }
        worst = rat_max(worst, *least);
    }
    return worst;
}

Rat ky_fan(const std::vector<Rat>& mass, const FiniteMMSpace& codomain, const PointMap& f,
           const PointMap& g) {
    const int n = static_cast<int>(mass.size());
    if (f.domain_size() != n || g.domain_size() != n)
        throw InputError("ky_fan: maps must share the mass vector's domain");

    std::vector<Rat> gaps(n);
    for (int i = 0; i < n; ++i) gaps[i] = codomain.d(f(i), g(i));

    std::vector<Rat> candidates{Rat(0)};
    candidates.insert(candidates.end(), gaps.begin(), gaps.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::optional<Rat> best;
    for (const Rat& eps : candidates) {
        Rat tail = 0;
        for (int i = 0; i < n; ++i)
            if (gaps[i] > eps) tail += mass[i];
        Rat candidate = rat_max(eps, tail);
        if (!best || candidate < *best) best = candidate;
    }
    return *best;
}

}  // namespace mm
