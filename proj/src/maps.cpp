#include "mmorder/maps.hpp"

#include <algorithm>

#include "mmorder/errors.hpp"
#include "mmorder/prokhorov.hpp"

namespace mm {

bool lip_up_to_check(const FiniteMMSpace& X, const FiniteMMSpace& Y, const PointMap& f,
                     const Subset& X0, const Rat& eps) {
    if (f.domain_size() != X.size()) throw InputError("lip_up_to_check: map domain mismatch");
    if (subset_mass(X, X0) < Rat(1) - eps) return false;
    for (size_t a = 0; a < X0.indices.size(); ++a)
        for (size_t b = a + 1; b < X0.indices.size(); ++b) {
            int x = X0.indices[a], x2 = X0.indices[b];
            if (Y.d(f(x), f(x2)) > X.d(x, x2) + eps) return false;
        }
    return true;
}

Subset epsilon_net(const FiniteMMSpace& X, const Rat& t) {
    require_canonical(X, "epsilon_net");
    if (t <= 0) throw InputError("epsilon_net: t must be positive");
    const Rat radius = t / 2;
    const Rat needed = Rat(1) - t / 2;

    std::vector<int> by_mass(X.size());
    for (int i = 0; i < X.size(); ++i) by_mass[i] = i;
    std::stable_sort(by_mass.begin(), by_mass.end(),
                     [&](int a, int b) { return X.mass[b] < X.mass[a]; });

    std::vector<int> net;
    for (int pick : by_mass) {
        net.push_back(pick);
        Subset N = make_subset(net, X.size());
        if (subset_mass(X, neighborhood(X, N, radius, /*closed=*/true)) >= needed) return N;
    }
    return make_subset(net, X.size());  // all points; covers everything
}

PointMap nearest_projection(const FiniteMMSpace& X, const Subset& N) {
    if (N.empty()) throw InputError("EmptyNet: nearest_projection needs a nonempty net");
    PointMap f;
    f.image.resize(X.size());
    for (int i = 0; i < X.size(); ++i) {
        int best = N.indices.front();
        for (int a : N.indices)
            if (X.d(i, a) < X.d(i, best)) best = a;
        f.image[i] = best;
    }
    return f;
}

PointMap t_projection(const FiniteMMSpace& Y, const Subset& Y0, const Rat& t) {
    if (Y0.empty()) throw InputError("EmptySubset: t_projection needs a nonempty target");
    if (t < 0) throw InputError("t_projection: t must be nonnegative");
    return nearest_projection(Y, Y0);
}

Discretization discretize(const FiniteMMSpace& X, const Rat& t) {
    require_canonical(X, "discretize");
    if (t <= 0) throw InputError("discretize: t must be positive");

    Subset net = epsilon_net(X, t);
    PointMap proj = nearest_projection(X, net);  // images are X-indices in net

    std::vector<Rat> pushed(X.size(), Rat(0));
    for (int i = 0; i < X.size(); ++i) pushed[proj(i)] += X.mass[i];

    FiniteMMSpace dot;
    dot.label = X.label + "/net";
    std::vector<int> net_pos(X.size(), -1);
    for (size_t a = 0; a < net.indices.size(); ++a) {
        int i = net.indices[a];
        net_pos[i] = static_cast<int>(a);
        dot.points.push_back(X.points[i]);
        dot.mass.push_back(pushed[i]);
    }
    dot.dist.resize(net.size());
    for (int a = 0; a < net.size(); ++a) {
        dot.dist[a].reserve(net.size());
        for (int b = 0; b < net.size(); ++b)
            dot.dist[a].push_back(X.d(net.indices[a], net.indices[b]));
    }

    PointMap to_dot;
    to_dot.image.resize(X.size());
    for (int i = 0; i < X.size(); ++i) to_dot.image[i] = net_pos[proj(i)];

    return Discretization{std::move(dot), std::move(to_dot), std::move(net), std::move(pushed)};
}

ComposeResult compose_lip_up_to(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                const FiniteMMSpace& Z, const PointMap& f, const PointMap& g,
                                const Rat& eps1, const Rat& eps2, const Rat& s,
                                const std::optional<Subset>& supplied_X0,
                                const std::optional<Subset>& supplied_Y0) {
    require_canonical(X, "compose_lip_up_to");
    require_canonical(Y, "compose_lip_up_to");
    require_canonical(Z, "compose_lip_up_to");
    if (f.domain_size() != X.size() || g.domain_size() != Y.size())
        throw InputError("compose_lip_up_to: map shapes do not match the spaces");
    if (eps1 < 0 || eps2 < 0)
        throw InputError("PreconditionViolated: eps1 and eps2 must be nonnegative");
    if (s <= 0) throw InputError("PreconditionViolated: s must be positive");

    std::optional<Subset> X0 = supplied_X0;
    if (X0) {
        if (!lip_up_to_check(X, Y, f, *X0, eps1))
            throw InputError("PreconditionViolated: supplied X0 does not witness f at eps1");
    } else {
        X0 = lip_up_to_witness(X, Y, f, eps1);
        if (!X0) throw InputError("PreconditionViolated: f is not 1-Lipschitz up to eps1");
    }
    std::optional<Subset> Y0 = supplied_Y0;
    if (Y0) {
        if (Y0->empty() || !lip_up_to_check(Y, Z, g, *Y0, eps2))
            throw InputError("PreconditionViolated: supplied Y0 does not witness g at eps2");
    } else {
        Y0 = lip_up_to_witness(Y, Z, g, eps2);
        if (!Y0) throw InputError("PreconditionViolated: g is not 1-Lipschitz up to eps2");
    }
    if (prokhorov(Y, pushforward(X.mass, f, Y.size()), Y.mass) > eps1)
        throw InputError("PreconditionViolated: d_P(f_* m_X, m_Y) exceeds eps1");
    if (prokhorov(Z, pushforward(Y.mass, g, Z.size()), Z.mass) > eps2)
        throw InputError("PreconditionViolated: d_P(g_* m_Y, m_Z) exceeds eps2");

    const Rat t = s / 8;
    PointMap pi = t_projection(Y, *Y0, t);
    PointMap h = compose_maps(compose_maps(f, pi), g);

    Subset ball = neighborhood(Y, *Y0, t, /*closed=*/true);
    std::vector<int> tilde;
    for (int x : X0->indices)
        if (ball.contains(f(x))) tilde.push_back(x);
    Subset X0_tilde{std::move(tilde)};

    ComposeReport report;
    report.eps1 = eps1;
    report.eps2 = eps2;
    report.s = s;
    report.t = t;
    report.X0 = *X0;
    report.Y0 = *Y0;
    report.X0_tilde = X0_tilde;

    report.lip_budget = eps1 + eps2 + s;
    report.lip_excess = 0;
    for (size_t a = 0; a < X0_tilde.indices.size(); ++a)
        for (size_t b = a + 1; b < X0_tilde.indices.size(); ++b) {
            int x = X0_tilde.indices[a], x2 = X0_tilde.indices[b];
            report.lip_excess = rat_max(report.lip_excess, Rat(Z.d(h(x), h(x2)) - X.d(x, x2)));
        }
    report.mass_x0_tilde = subset_mass(X, X0_tilde);
    report.mass_floor = Rat(1) - eps1 - eps2 - s;
    report.lip_ok = report.lip_excess <= report.lip_budget &&
                    report.mass_x0_tilde >= Rat(1) - report.lip_budget;
    report.mass_ok = report.mass_x0_tilde >= report.mass_floor;

    report.dp_value = prokhorov(Z, pushforward(X.mass, h, Z.size()), Z.mass);
    report.dp_budget = eps1 + 4 * eps2 + s;
    report.dp_ok = report.dp_value <= report.dp_budget;

    if (!report.lip_ok || !report.mass_ok || !report.dp_ok) {
        std::string which;
        if (!report.lip_ok) which += " 1-Lipschitz-up-to";
        if (!report.mass_ok) which += " mass";
        if (!report.dp_ok) which += " Prokhorov";
        throw BoundViolation("compose_lip_up_to: constructed map violates:" + which);
    }
    return ComposeResult{std::move(h), std::move(report)};
}

}  // namespace mm
