#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmorder/rational.hpp"

namespace mm {

// A finite metric measure space: named points, an exact rational distance
// matrix, and an exact rational probability mass on each point.
struct FiniteMMSpace {
    std::string label;
    std::vector<std::string> points;
    std::vector<std::vector<Rat>> dist;
    std::vector<Rat> mass;

    int size() const { return static_cast<int>(points.size()); }
    const Rat& d(int i, int j) const { return dist[i][j]; }
};

// A subset of a space's points, by index. Kept sorted and unique.
struct Subset {
    std::vector<int> indices;

    int size() const { return static_cast<int>(indices.size()); }
    bool empty() const { return indices.empty(); }
    bool contains(int i) const;
};

Subset make_subset(std::vector<int> indices, int space_size);
Subset full_subset(const FiniteMMSpace& space);

// A total map between point sets; image[i] is the codomain index of point i.
struct PointMap {
    std::vector<int> image;

    int operator()(int i) const { return image[i]; }
    int domain_size() const { return static_cast<int>(image.size()); }
};

PointMap identity_map(int n);
PointMap compose_maps(const PointMap& first, const PointMap& then);

// Structural validation. Checks, in order: matrix shapes, negative entries,
// nonzero diagonal / asymmetry, zero distance between distinct points,
// triangle inequality, mass range and total. Throws InputError whose message
// names the error kind and the first offending index tuple.
// With allow_zero_mass = false, also rejects zero-mass points.
void validate(const FiniteMMSpace& space, bool allow_zero_mass = true);

// Drops zero-mass points (validating first); idempotent. The result carries
// full support and is what every solver expects.
FiniteMMSpace canonicalize(const FiniteMMSpace& space);

// Cheap canonicality check used as a solver precondition: positive masses
// summing to one. Throws InputError when violated.
void require_canonical(const FiniteMMSpace& space, const char* where);

// d(i, A) = min over a in A of d(i, a); nullopt for empty A (infimum empty).
std::optional<Rat> distance_to_subset(const FiniteMMSpace& space, int i, const Subset& A);

// Open variant {y : d(y,A) < r}, closed variant {y : d(y,A) <= r}.
// Neighborhoods of the empty set are empty.
Subset neighborhood(const FiniteMMSpace& space, const Subset& A, const Rat& r, bool closed);

// Max pairwise distance over A; 0 for the empty or singleton subset.
Rat diameter(const FiniteMMSpace& space, const Subset& A);

Rat subset_mass(const FiniteMMSpace& space, const Subset& A);

// The product of two point sets with the l1 (sum) metric. No measure.
struct ProductSpaceL1 {
    const FiniteMMSpace* left;
    const FiniteMMSpace* right;

    Rat d(int i, int j, int i2, int j2) const {
        return left->d(i, i2) + right->d(j, j2);
    }
};

ProductSpaceL1 product_l1(const FiniteMMSpace& X, const FiniteMMSpace& Y);

// (f_* m)(j) = sum of m(i) over i with f(i) = j.
std::vector<Rat> pushforward(const std::vector<Rat>& mass, const PointMap& f,
                             int codomain_size);

// Brute force over bijections: a mass-preserving isometry if one exists,
// lexicographically least image vector; nullopt otherwise.
// Throws SizeLimitError when either space has more than max_points points.
std::optional<PointMap> check_mm_isomorphic(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                            int max_points = 8);

}  // namespace mm
