#include "mmorder/space.hpp"

#include <algorithm>

#include "mmorder/errors.hpp"

namespace mm {

bool Subset::contains(int i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
}

Subset make_subset(std::vector<int> indices, int space_size) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (int i : indices)
        if (i < 0 || i >= space_size)
            throw InputError("subset index " + std::to_string(i) + " out of range [0," +
                             std::to_string(space_size) + ")");
    return Subset{std::move(indices)};
}

Subset full_subset(const FiniteMMSpace& space) {
    std::vector<int> all(space.size());
    for (int i = 0; i < space.size(); ++i) all[i] = i;
    return Subset{std::move(all)};
}

PointMap identity_map(int n) {
    PointMap f;
    f.image.resize(n);
    for (int i = 0; i < n; ++i) f.image[i] = i;
    return f;
}

PointMap compose_maps(const PointMap& first, const PointMap& then) {
    PointMap h;
    h.image.reserve(first.domain_size());
    for (int i = 0; i < first.domain_size(); ++i) h.image.push_back(then(first(i)));
    return h;
}

void validate(const FiniteMMSpace& space, bool allow_zero_mass) {
    const int n = space.size();
    if (n == 0) throw InputError("space '" + space.label + "' has no points");
    if (static_cast<int>(space.dist.size()) != n)
        throw InputError("dist matrix of '" + space.label + "' has " +
                         std::to_string(space.dist.size()) + " rows, expected " +
                         std::to_string(n));
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(space.dist[i].size()) != n)
            throw InputError("dist row " + std::to_string(i) + " of '" + space.label +
                             "' has wrong length");
    if (static_cast<int>(space.mass.size()) != n)
        throw InputError("mass vector of '" + space.label + "' has wrong length");

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (space.dist[i][j] < 0)
                throw InputError("NegativeEntry at dist(" + std::to_string(i) + "," +
                                 std::to_string(j) + ") of '" + space.label + "'");
    for (int i = 0; i < n; ++i)
        if (space.mass[i] < 0)
            throw InputError("NegativeEntry at mass(" + std::to_string(i) + ") of '" +
                             space.label + "'");

    for (int i = 0; i < n; ++i)
        if (space.dist[i][i] != 0)
            throw InputError("NonSymmetricMatrix at (" + std::to_string(i) + "," +
                             std::to_string(i) + ") of '" + space.label +
                             "': diagonal entry is nonzero");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (space.dist[i][j] != space.dist[j][i])
                throw InputError("NonSymmetricMatrix at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") of '" + space.label + "'");

    // Genuine metric: distinct points must be at positive distance, otherwise
    // they are the same point and measure-preserving map extraction breaks.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (space.dist[i][j] == 0)
                throw InputError("ZeroDistance at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") of '" + space.label +
                                 "': distinct points at distance 0");

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (space.dist[i][k] > space.dist[i][j] + space.dist[j][k])
                    throw InputError("TriangleViolation at (" + std::to_string(i) + "," +
                                     std::to_string(j) + "," + std::to_string(k) + ") of '" +
                                     space.label + "'");

    Rat total = 0;
    for (int i = 0; i < n; ++i) total += space.mass[i];
    if (total != 1)
        throw InputError("MassNotOne in '" + space.label + "': total is " +
                         format_rational(total));
    if (!allow_zero_mass)
        for (int i = 0; i < n; ++i)
            if (space.mass[i] == 0)
                throw InputError("zero mass at point " + std::to_string(i) + " of '" +
                                 space.label + "' (not canonical)");
}

FiniteMMSpace canonicalize(const FiniteMMSpace& space) {
    validate(space, /*allow_zero_mass=*/true);
    std::vector<int> keep;
    for (int i = 0; i < space.size(); ++i)
        if (space.mass[i] > 0) keep.push_back(i);
    if (static_cast<int>(keep.size()) == space.size()) return space;

    FiniteMMSpace out;
    out.label = space.label;
    for (int i : keep) {
        out.points.push_back(space.points[i]);
        out.mass.push_back(space.mass[i]);
    }
    out.dist.resize(keep.size());
    for (size_t a = 0; a < keep.size(); ++a) {
        out.dist[a].reserve(keep.size());
        for (size_t b = 0; b < keep.size(); ++b) out.dist[a].push_back(space.dist[keep[a]][keep[b]]);
    }
    return out;
}

void require_canonical(const FiniteMMSpace& space, const char* where) {
    if (space.size() == 0)
        throw InputError(std::string(where) + ": space '" + space.label + "' is empty");
    Rat total = 0;
    for (const Rat& m : space.mass) {
        if (m <= 0)
            throw InputError(std::string(where) + ": space '" + space.label +
                             "' is not canonical (zero-mass point); canonicalize first");
        total += m;
    }
    if (total != 1)
        throw InputError(std::string(where) + ": MassNotOne in '" + space.label + "'");
}

std::optional<Rat> distance_to_subset(const FiniteMMSpace& space, int i, const Subset& A) {
    std::optional<Rat> best;
    for (int a : A.indices) {
        const Rat& d = space.d(i, a);
        if (!best || d < *best) best = d;
    }
    return best;
}

Subset neighborhood(const FiniteMMSpace& space, const Subset& A, const Rat& r, bool closed) {
    if (r < 0) throw InputError("neighborhood radius must be nonnegative");
    std::vector<int> out;
    if (A.empty()) return Subset{out};
    for (int i = 0; i < space.size(); ++i) {
        Rat d = *distance_to_subset(space, i, A);
        if (closed ? d <= r : d < r) out.push_back(i);
    }
    return Subset{std::move(out)};
}

Rat diameter(const FiniteMMSpace& space, const Subset& A) {
    Rat best = 0;
    for (size_t a = 0; a < A.indices.size(); ++a)
        for (size_t b = a + 1; b < A.indices.size(); ++b)
            best = rat_max(best, space.d(A.indices[a], A.indices[b]));
    return best;
}

Rat subset_mass(const FiniteMMSpace& space, const Subset& A) {
    Rat total = 0;
    for (int i : A.indices) total += space.mass[i];
    return total;
}

ProductSpaceL1 product_l1(const FiniteMMSpace& X, const FiniteMMSpace& Y) {
    return ProductSpaceL1{&X, &Y};
}

std::vector<Rat> pushforward(const std::vector<Rat>& mass, const PointMap& f,
                             int codomain_size) {
    if (f.domain_size() != static_cast<int>(mass.size()))
        throw InputError("pushforward: map domain size does not match mass vector");
    std::vector<Rat> out(codomain_size, Rat(0));
    for (int i = 0; i < f.domain_size(); ++i) {
        int j = f(i);
        if (j < 0 || j >= codomain_size)
            throw InputError("pushforward: image index " + std::to_string(j) + " out of range");
        out[j] += mass[i];
    }
    return out;
}

namespace {

// Backtracking over images in ascending order: the first full assignment
// found is the lexicographically least bijective isometry.
bool extend_isometry(const FiniteMMSpace& X, const FiniteMMSpace& Y, std::vector<int>& image,
                     std::vector<bool>& used, int i) {
    const int n = X.size();
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
        if (used[j]) continue;
        if (X.mass[i] != Y.mass[j]) continue;
        bool ok = true;
        for (int k = 0; k < i && ok; ++k)
            if (X.d(i, k) != Y.d(j, image[k])) ok = false;
        if (!ok) continue;
        image[i] = j;
        used[j] = true;
        if (extend_isometry(X, Y, image, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace

std::optional<PointMap> check_mm_isomorphic(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                            int max_points) {
    require_canonical(X, "check_mm_isomorphic");
    require_canonical(Y, "check_mm_isomorphic");
    if (X.size() > max_points || Y.size() > max_points)
        throw SizeLimitError("check_mm_isomorphic: spaces exceed " +
                             std::to_string(max_points) + " points");
    if (X.size() != Y.size()) return std::nullopt;

    std::vector<int> image(X.size(), -1);
    std::vector<bool> used(X.size(), false);
    if (!extend_isometry(X, Y, image, used, 0)) return std::nullopt;
    return PointMap{std::move(image)};
}

}  // namespace mm
