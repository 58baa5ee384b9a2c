#include "mmorder/transport.hpp"

#include <algorithm>

#include "mmorder/errors.hpp"
#include "mmorder/maxflow.hpp"

namespace mm {

Coupling identity_coupling(const std::vector<Rat>& mass) {
    const int n = static_cast<int>(mass.size());
    Coupling pi{n, n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0)))};
    for (int i = 0; i < n; ++i) pi.matrix[i][i] = mass[i];
    return pi;
}

Coupling product_coupling(const std::vector<Rat>& mu, const std::vector<Rat>& nu) {
    const int n = static_cast<int>(mu.size());
    const int m = static_cast<int>(nu.size());
    Coupling pi{n, m, std::vector<std::vector<Rat>>(n, std::vector<Rat>(m))};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) pi.matrix[i][j] = mu[i] * nu[j];
    return pi;
}

std::vector<Rat> row_sums(const Coupling& pi) {
    std::vector<Rat> out(pi.rows, Rat(0));
    for (int i = 0; i < pi.rows; ++i)
        for (int j = 0; j < pi.cols; ++j) out[i] += pi.matrix[i][j];
    return out;
}

std::vector<Rat> col_sums(const Coupling& pi) {
    std::vector<Rat> out(pi.cols, Rat(0));
    for (int i = 0; i < pi.rows; ++i)
        for (int j = 0; j < pi.cols; ++j) out[j] += pi.matrix[i][j];
    return out;
}

void validate_coupling(const Coupling& pi, const std::vector<Rat>& mu,
                       const std::vector<Rat>& nu) {
    if (pi.rows != static_cast<int>(mu.size()) || pi.cols != static_cast<int>(nu.size()))
        throw InputError("MarginalMismatch: coupling is " + std::to_string(pi.rows) + "x" +
                         std::to_string(pi.cols) + ", marginals are " +
                         std::to_string(mu.size()) + " and " + std::to_string(nu.size()));
    for (int i = 0; i < pi.rows; ++i)
        for (int j = 0; j < pi.cols; ++j)
            if (pi.matrix[i][j] < 0)
                throw InputError("NegativeEntry at coupling(" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    auto rows = row_sums(pi);
    for (int i = 0; i < pi.rows; ++i)
        if (rows[i] != mu[i])
            throw InputError("MarginalMismatch: row " + std::to_string(i) + " sums to " +
                             format_rational(rows[i]) + ", expected " + format_rational(mu[i]));
    auto cols = col_sums(pi);
    for (int j = 0; j < pi.cols; ++j)
        if (cols[j] != nu[j])
            throw InputError("MarginalMismatch: column " + std::to_string(j) + " sums to " +
                             format_rational(cols[j]) + ", expected " + format_rational(nu[j]));
}

bool PairSet::contains(int i, int j) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(i, j));
}

PairSet make_pair_set(int rows, int cols, std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (auto [i, j] : pairs)
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            throw InputError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                             ") out of range " + std::to_string(rows) + "x" +
                             std::to_string(cols));
    return PairSet{rows, cols, std::move(pairs)};
}

PairSet full_pair_set(int rows, int cols) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) pairs.emplace_back(i, j);
    return PairSet{rows, cols, std::move(pairs)};
}

Rat coupling_mass_on(const Coupling& pi, const PairSet& S) {
    Rat total = 0;
    for (auto [i, j] : S.pairs) total += pi.at(i, j);
    return total;
}

MaxMassResult max_coupling_mass(const std::vector<Rat>& mu, const std::vector<Rat>& nu,
                                const PairSet& S) {
    const int n = static_cast<int>(mu.size());
    const int m = static_cast<int>(nu.size());
    if (S.rows != n || S.cols != m)
        throw InputError("max_coupling_mass: pair set shape does not match marginals");

    std::vector<Rat> all = mu;
    all.insert(all.end(), nu.begin(), nu.end());
    const Int denom = common_denominator(all);
    auto scaled = [&](const Rat& q) { return rat_num(q) * (denom / rat_den(q)); };

    // Nodes: 0 = source, 1..n = left, n+1..n+m = right, n+m+1 = sink.
    MaxFlowGraph graph(n + m + 2);
    const int source = 0, sink = n + m + 1;
    for (int i = 0; i < n; ++i) graph.add_edge(source, 1 + i, scaled(mu[i]));
    std::vector<int> middle_edges;
    middle_edges.reserve(S.pairs.size());
    for (auto [i, j] : S.pairs)
        middle_edges.push_back(graph.add_edge(1 + i, 1 + n + j, scaled(rat_min(mu[i], nu[j]))));
    for (int j = 0; j < m; ++j) graph.add_edge(1 + n + j, sink, scaled(nu[j]));

    const Int flow = graph.run(source, sink);
    const Rat value = Rat(flow) / Rat(denom);

    Coupling pi{n, m, std::vector<std::vector<Rat>>(n, std::vector<Rat>(m, Rat(0)))};
    for (size_t k = 0; k < S.pairs.size(); ++k) {
        auto [i, j] = S.pairs[k];
        pi.matrix[i][j] = Rat(graph.flow_on(middle_edges[k])) / Rat(denom);
    }

    // Distribute the leftover mass as a product of the two deficits. At a
    // maximum flow no cell of S has positive deficit on both sides, so the
    // completion never adds mass on S and pi(S) stays equal to the value.
    const Rat uncovered = Rat(1) - value;
    if (uncovered > 0) {
        auto rows = row_sums(pi);
        auto cols = col_sums(pi);
        std::vector<Rat> rdef(n), cdef(m);
        for (int i = 0; i < n; ++i) rdef[i] = mu[i] - rows[i];
        for (int j = 0; j < m; ++j) cdef[j] = nu[j] - cols[j];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                if (rdef[i] > 0 && cdef[j] > 0) pi.matrix[i][j] += rdef[i] * cdef[j] / uncovered;
    }
    return MaxMassResult{value, std::move(pi)};
}

MaxMassResult max_coupling_mass(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                const PairSet& S) {
    require_canonical(X, "max_coupling_mass");
    require_canonical(Y, "max_coupling_mass");
    return max_coupling_mass(X.mass, Y.mass, S);
}

Rat TripleMeasure::mass_on_cylinder(const PairSet& S, const PairSet& T) const {
    Rat total = 0;
    for (auto [i, j] : S.pairs)
        for (auto [j2, k] : T.pairs)
            if (j2 == j) total += tensor[i][j][k];
    return total;
}

namespace {

std::vector<Rat> shared_marginal(const Coupling& sigma, const Coupling& tau) {
    if (sigma.cols != tau.rows)
        throw InputError("MarginalMismatch: gluing " + std::to_string(sigma.cols) +
                         "-column coupling with " + std::to_string(tau.rows) +
                         "-row coupling");
    auto middle = col_sums(sigma);
    auto other = row_sums(tau);
    for (int j = 0; j < sigma.cols; ++j)
        if (middle[j] != other[j])
            throw InputError("MarginalMismatch: shared marginal differs at index " +
                             std::to_string(j) + " (" + format_rational(middle[j]) + " vs " +
                             format_rational(other[j]) + ")");
    for (int j = 0; j < sigma.cols; ++j)
        if (middle[j] <= 0)
            throw InputError("MarginalMismatch: shared marginal has zero mass at index " +
                             std::to_string(j) + "; disintegration undefined");
    return middle;
}

}  // namespace

TripleMeasure glue(const Coupling& sigma, const Coupling& tau) {
    auto middle = shared_marginal(sigma, tau);
    TripleMeasure out;
    out.nx = sigma.rows;
    out.ny = sigma.cols;
    out.nz = tau.cols;
    out.tensor.assign(out.nx, std::vector<std::vector<Rat>>(
                                  out.ny, std::vector<Rat>(out.nz, Rat(0))));
    for (int i = 0; i < out.nx; ++i)
        for (int j = 0; j < out.ny; ++j) {
            if (sigma.at(i, j) == 0) continue;
            for (int k = 0; k < out.nz; ++k)
                out.tensor[i][j][k] = sigma.at(i, j) * tau.at(j, k) / middle[j];
        }
    return out;
}

std::vector<std::vector<Rat>> marginal_12(const TripleMeasure& t) {
    std::vector<std::vector<Rat>> out(t.nx, std::vector<Rat>(t.ny, Rat(0)));
    for (int i = 0; i < t.nx; ++i)
        for (int j = 0; j < t.ny; ++j)
            for (int k = 0; k < t.nz; ++k) out[i][j] += t.tensor[i][j][k];
    return out;
}

std::vector<std::vector<Rat>> marginal_23(const TripleMeasure& t) {
    std::vector<std::vector<Rat>> out(t.ny, std::vector<Rat>(t.nz, Rat(0)));
    for (int i = 0; i < t.nx; ++i)
        for (int j = 0; j < t.ny; ++j)
            for (int k = 0; k < t.nz; ++k) out[j][k] += t.tensor[i][j][k];
    return out;
}

Coupling marginal_13(const TripleMeasure& t) {
    Coupling out{t.nx, t.nz,
                 std::vector<std::vector<Rat>>(t.nx, std::vector<Rat>(t.nz, Rat(0)))};
    for (int i = 0; i < t.nx; ++i)
        for (int j = 0; j < t.ny; ++j)
            for (int k = 0; k < t.nz; ++k) out.matrix[i][k] += t.tensor[i][j][k];
    return out;
}

Coupling compose_couplings(const Coupling& sigma, const Coupling& tau) {
    auto middle = shared_marginal(sigma, tau);
    Coupling out{sigma.rows, tau.cols,
                 std::vector<std::vector<Rat>>(sigma.rows, std::vector<Rat>(tau.cols, Rat(0)))};
    for (int i = 0; i < sigma.rows; ++i)
        for (int j = 0; j < sigma.cols; ++j) {
            if (sigma.at(i, j) == 0) continue;
            for (int k = 0; k < tau.cols; ++k)
                out.matrix[i][k] += sigma.at(i, j) * tau.at(j, k) / middle[j];
        }
    return out;
}

PairSet compose_pair_sets(const PairSet& S, const PairSet& T) {
    if (S.cols != T.rows)
        throw InputError("compose_pair_sets: inner dimensions differ (" +
                         std::to_string(S.cols) + " vs " + std::to_string(T.rows) + ")");
    std::vector<std::pair<int, int>> pairs;
    for (auto [i, j] : S.pairs)
        for (auto [j2, k] : T.pairs)
            if (j2 == j) pairs.emplace_back(i, k);
    return make_pair_set(S.rows, T.cols, std::move(pairs));
}

PairSet product_neighborhood(const FiniteMMSpace& X, const FiniteMMSpace& Y, const PairSet& S,
                             const Rat& r, bool closed) {
    if (r < 0) throw InputError("product_neighborhood: radius must be nonnegative");
    std::vector<std::pair<int, int>> out;
    if (S.empty()) return PairSet{X.size(), Y.size(), out};
    for (int i = 0; i < X.size(); ++i)
        for (int j = 0; j < Y.size(); ++j)
            for (auto [a, b] : S.pairs) {
                Rat d = X.d(i, a) + Y.d(j, b);
                if (closed ? d <= r : d < r) {
                    out.emplace_back(i, j);
                    break;
                }
            }
    return PairSet{X.size(), Y.size(), std::move(out)};
}

}  // namespace mm
