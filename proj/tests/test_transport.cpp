#include "doctest.h"
#include "mmorder/errors.hpp"
#include "mmorder/gen.hpp"
#include "mmorder/transport.hpp"
#include "test_helpers.hpp"

using namespace mm;
using mmtest::Q;

TEST_CASE("max coupling mass on simple pair sets") {
    FiniteMMSpace X = mmtest::two_point_space("X", Rat(1), Q("1/2"));

    auto all = max_coupling_mass(X, X, full_pair_set(2, 2));
    CHECK(all.value == 1);
    validate_coupling(all.witness, X.mass, X.mass);

    auto none = max_coupling_mass(X, X, make_pair_set(2, 2, {}));
    CHECK(none.value == 0);
    validate_coupling(none.witness, X.mass, X.mass);

    auto diag = max_coupling_mass(X, X, make_pair_set(2, 2, {{0, 0}, {1, 1}}));
    CHECK(diag.value == 1);
    CHECK(diag.witness.at(0, 0) == Q("1/2"));
    CHECK(diag.witness.at(1, 1) == Q("1/2"));
    CHECK(diag.witness.at(0, 1) == 0);
}

TEST_CASE("gluing identities") {
    FiniteMMSpace Y = mmtest::line_space("Y", {Q("0"), Q("1/2"), Q("1")},
                                         {Q("1/2"), Q("1/4"), Q("1/4")});
    Coupling id = identity_coupling(Y.mass);

    SUBCASE("identity glued with identity is the diagonal tensor") {
        TripleMeasure t = glue(id, id);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    CHECK(t.tensor[i][j][k] == ((i == j && j == k) ? Y.mass[j] : Rat(0)));
    }
    SUBCASE("product glued with product is the triple product") {
        FiniteMMSpace X = mmtest::two_point_space("X", Rat(1), Q("1/4"));
        FiniteMMSpace Z = mmtest::two_point_space("Z", Q("1/2"), Q("3/4"));
        Coupling sigma = product_coupling(X.mass, Y.mass);
        Coupling tau = product_coupling(Y.mass, Z.mass);
        TripleMeasure t = glue(sigma, tau);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 2; ++k)
                    CHECK(t.tensor[i][j][k] == X.mass[i] * Y.mass[j] * Z.mass[k]);
        SUBCASE("independent couplings compose to the product") {
            Coupling c = compose_couplings(sigma, tau);
            CHECK(c.matrix == product_coupling(X.mass, Z.mass).matrix);
        }
    }
    SUBCASE("identity glued with a swap on the uniform pair") {
        std::vector<Rat> uniform{Q("1/2"), Q("1/2")};
        Coupling ident = identity_coupling(uniform);
        Coupling swap{2, 2, {{Rat(0), Q("1/2")}, {Q("1/2"), Rat(0)}}};
        TripleMeasure t = glue(ident, swap);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    CHECK(t.tensor[i][j][k] == ((i == j && k == 1 - j) ? Q("1/2") : Rat(0)));
    }
    SUBCASE("marginal mismatch is rejected") {
        Coupling skew{3, 3, {{Q("1/4"), Rat(0), Rat(0)},
                             {Rat(0), Q("1/2"), Rat(0)},
                             {Rat(0), Rat(0), Q("1/4")}}};
        CHECK_THROWS_WITH_AS(glue(id, skew), doctest::Contains("MarginalMismatch"), InputError);
    }
}

TEST_CASE("coupling composition has identities") {
    FiniteMMSpace Y = mmtest::line_space("Y", {Q("0"), Q("1")}, {Q("1/4"), Q("3/4")});
    FiniteMMSpace Z = mmtest::line_space("Z", {Q("0"), Q("2")}, {Q("1/2"), Q("1/2")});
    Coupling tau = gen_random_coupling(7, Y.mass, Z.mass);
    CHECK(compose_couplings(identity_coupling(Y.mass), tau).matrix == tau.matrix);
    CHECK(compose_couplings(tau, identity_coupling(Z.mass)).matrix == tau.matrix);
}

TEST_CASE("pair set composition") {
    PairSet full_xy = full_pair_set(2, 3);
    PairSet full_yz = full_pair_set(3, 2);
    CHECK(compose_pair_sets(full_xy, full_yz).pairs == full_pair_set(2, 2).pairs);
    CHECK(compose_pair_sets(make_pair_set(2, 3, {}), full_yz).pairs.empty());

    // graph of g after graph of f is the graph of the composition
    PairSet graph_f = make_pair_set(2, 3, {{0, 2}, {1, 0}});
    PairSet graph_g = make_pair_set(3, 2, {{0, 1}, {1, 1}, {2, 0}});
    CHECK(compose_pair_sets(graph_f, graph_g).pairs ==
          std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
}

TEST_CASE("product neighborhood basics") {
    FiniteMMSpace X = mmtest::two_point_space("X", Rat(1), Q("1/2"));
    FiniteMMSpace Y = mmtest::two_point_space("Y", Q("1/2"), Q("1/2"));
    PairSet empty = make_pair_set(2, 2, {});
    CHECK(product_neighborhood(X, Y, empty, Q("3"), false).empty());
    PairSet one = make_pair_set(2, 2, {{0, 0}});
    auto open_half = product_neighborhood(X, Y, one, Q("1/2"), false);
    CHECK(open_half.pairs == std::vector<std::pair<int, int>>{{0, 0}});
    auto closed_half = product_neighborhood(X, Y, one, Q("1/2"), true);
    CHECK(closed_half.pairs == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}});
}
