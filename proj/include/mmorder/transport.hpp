#pragma once

#include <utility>
#include <vector>

#include "mmorder/rational.hpp"
#include "mmorder/space.hpp"

namespace mm {

// A transport plan between two mass vectors: nonnegative matrix whose row
// sums are the left marginal and column sums the right marginal.
struct Coupling {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Rat>> matrix;

    const Rat& at(int i, int j) const { return matrix[i][j]; }
};

Coupling identity_coupling(const std::vector<Rat>& mass);
Coupling product_coupling(const std::vector<Rat>& mu, const std::vector<Rat>& nu);

std::vector<Rat> row_sums(const Coupling& pi);
std::vector<Rat> col_sums(const Coupling& pi);

// Throws InputError (MarginalMismatch / NegativeEntry) when pi is not a
// coupling of the given marginals.
void validate_coupling(const Coupling& pi, const std::vector<Rat>& mu,
                       const std::vector<Rat>& nu);

// A set of index pairs S subset X x Y, kept sorted and unique.
struct PairSet {
    int rows = 0;
    int cols = 0;
    std::vector<std::pair<int, int>> pairs;

    bool empty() const { return pairs.empty(); }
    int size() const { return static_cast<int>(pairs.size()); }
    bool contains(int i, int j) const;
};

PairSet make_pair_set(int rows, int cols, std::vector<std::pair<int, int>> pairs);
PairSet full_pair_set(int rows, int cols);

// pi(S) = total coupling mass on the pairs of S.
Rat coupling_mass_on(const Coupling& pi, const PairSet& S);

struct MaxMassResult {
    Rat value;         // max over couplings of pi(S)
    Coupling witness;  // a full coupling attaining the value
};

// Max over the coupling polytope of the mass placed on S, as a max-flow on
// the bipartite graph whose admissible edges are exactly the pairs of S.
// Capacities are scaled to exact integers by the common denominator of the
// marginals; the witness is deterministic (lexicographic edge order) and is
// completed off S with the product of the leftover marginals.
MaxMassResult max_coupling_mass(const std::vector<Rat>& mu, const std::vector<Rat>& nu,
                                const PairSet& S);
MaxMassResult max_coupling_mass(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                                const PairSet& S);

// Joint measure on X x Y x Z obtained by disintegrating two couplings over
// their shared middle marginal.
struct TripleMeasure {
    int nx = 0, ny = 0, nz = 0;
    // tensor[i][j][k]
    std::vector<std::vector<std::vector<Rat>>> tensor;

    Rat mass_on_cylinder(const PairSet& S, const PairSet& T) const;
};

// tensor[i][j][k] = sigma[i][j] * tau[j][k] / m_Y(j). Requires the shared
// marginal to match exactly (MarginalMismatch otherwise) and to be positive
// everywhere, which canonical middle spaces guarantee.
TripleMeasure glue(const Coupling& sigma, const Coupling& tau);

std::vector<std::vector<Rat>> marginal_12(const TripleMeasure& t);
std::vector<std::vector<Rat>> marginal_23(const TripleMeasure& t);
Coupling marginal_13(const TripleMeasure& t);

// (pr_13) of the gluing: matrix[i][k] = sum_j sigma[i][j] tau[j][k] / m_Y(j).
Coupling compose_couplings(const Coupling& sigma, const Coupling& tau);

// {(i,k) : exists j with (i,j) in S and (j,k) in T}.
PairSet compose_pair_sets(const PairSet& S, const PairSet& T);

// Neighborhood of a pair set inside the l1 product of the two spaces:
// {(i,j) : d_X(i,a) + d_Y(j,b) < r for some (a,b) in S} (or <= r if closed).
PairSet product_neighborhood(const FiniteMMSpace& X, const FiniteMMSpace& Y, const PairSet& S,
                             const Rat& r, bool closed);

}  // namespace mm
