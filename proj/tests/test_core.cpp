#include "doctest.h"
#include "mmorder/errors.hpp"
#include "mmorder/gen.hpp"
#include "mmorder/space.hpp"
#include "test_helpers.hpp"

using namespace mm;
using mmtest::Q;

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/4") == Rat(3) / 4);
    CHECK(parse_rational("-3/4") == Rat(-3) / 4);
    CHECK(parse_rational("0.25") == Rat(1) / 4);
    CHECK(parse_rational("-0.5") == Rat(-1) / 2);
    CHECK(parse_rational(".125") == Rat(1) / 8);
    CHECK(parse_rational("7") == Rat(7));
    CHECK(parse_rational("2/4") == parse_rational("1/2"));
    CHECK(format_rational(Rat(6) / 8) == "3/4");
    CHECK(format_rational(Rat(-2)) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("a"), InputError);
    CHECK_THROWS_AS(parse_rational("1e3"), InputError);
    for (const char* s : {"-17/6", "0", "1/3", "1000000000000000000000/7"}) {
        Rat v = parse_rational(s);
        CHECK(parse_rational(format_rational(v)) == v);
    }
}

TEST_CASE("canonicalize removes zero-mass points and is idempotent") {
    FiniteMMSpace X = mmtest::two_point_space("X", Rat(1), Rat(1));
    FiniteMMSpace C = canonicalize(X);
    CHECK(C.size() == 1);
    CHECK(C.points[0] == "a");
    CHECK(C.mass[0] == 1);

    FiniteMMSpace Y = mmtest::line_space("Y", {Q("0"), Q("1/2")}, {Q("1/4"), Q("3/4")});
    FiniteMMSpace CY = canonicalize(Y);
    CHECK(CY.points == Y.points);
    CHECK(CY.dist == Y.dist);
    FiniteMMSpace CCY = canonicalize(CY);
    CHECK(CCY.points == CY.points);
    CHECK(CCY.mass == CY.mass);
}

TEST_CASE("validation names the first offending tuple") {
    FiniteMMSpace X = mmtest::line_space("bad", {Q("0"), Q("1"), Q("2")},
                                         {Q("1/2"), Q("1/4"), Q("1/4")});
    SUBCASE("triangle violation") {
        X.dist[0][2] = Q("4");
        X.dist[2][0] = Q("4");
        CHECK_THROWS_WITH_AS(canonicalize(X), doctest::Contains("TriangleViolation at (0,1,2)"),
                             InputError);
    }
    SUBCASE("asymmetry") {
        X.dist[0][1] = Q("3");
        CHECK_THROWS_WITH_AS(canonicalize(X), doctest::Contains("NonSymmetricMatrix at (0,1)"),
                             InputError);
    }
    SUBCASE("nonzero diagonal") {
        X.dist[1][1] = Q("1");
        CHECK_THROWS_WITH_AS(canonicalize(X), doctest::Contains("NonSymmetricMatrix at (1,1)"),
                             InputError);
    }
    SUBCASE("negative entries") {
        X.mass[1] = Q("-1/4");
        X.mass[2] = Q("3/4");
        CHECK_THROWS_WITH_AS(canonicalize(X), doctest::Contains("NegativeEntry at mass(1)"),
                             InputError);
    }
    SUBCASE("mass sum") {
        X.mass[0] = Q("1/4");
        CHECK_THROWS_WITH_AS(canonicalize(X), doctest::Contains("MassNotOne"), InputError);
    }
    SUBCASE("distinct points at distance zero") {
        X.dist[1][2] = 0;
        X.dist[2][1] = 0;
        X.dist[0][2] = X.dist[0][1];
        X.dist[2][0] = X.dist[0][1];
        CHECK_THROWS_WITH_AS(canonicalize(X), doctest::Contains("ZeroDistance at (1,2)"),
                             InputError);
    }
}

TEST_CASE("neighborhoods on the three-point line") {
    FiniteMMSpace X = mmtest::line_space("line", {Q("-1/4"), Q("0"), Q("1/4")},
                                         {Q("1/4"), Q("1/2"), Q("1/4")});
    Subset empty{};
    CHECK(neighborhood(X, empty, Q("5"), true).empty());
    CHECK(neighborhood(X, empty, Q("5"), false).empty());

    Subset A = make_subset({1}, 3);
    CHECK(neighborhood(X, A, Q("1/4"), true).indices == std::vector<int>{0, 1, 2});
    CHECK(neighborhood(X, A, Q("1/4"), false).indices == std::vector<int>{1});

    SUBCASE("nesting U_r within B_r within U_r'") {
        for (int k = 0; k <= 4; ++k) {
            Rat r = Rat(k) / 8;
            auto open_r = neighborhood(X, A, r, false);
            auto closed_r = neighborhood(X, A, r, true);
            auto open_bigger = neighborhood(X, A, r + Rat(1) / 16, false);
            for (int i : open_r.indices) CHECK(closed_r.contains(i));
            for (int i : closed_r.indices) CHECK(open_bigger.contains(i));
        }
    }
}

TEST_CASE("diameter") {
    FiniteMMSpace X = mmtest::line_space("line", {Q("-1/4"), Q("0"), Q("1/4")},
                                         {Q("1/4"), Q("1/2"), Q("1/4")});
    CHECK(diameter(X, Subset{}) == 0);
    CHECK(diameter(X, make_subset({1}, 3)) == 0);
    CHECK(diameter(X, full_subset(X)) == Q("1/2"));
}

TEST_CASE("l1 product metric") {
    FiniteMMSpace X = mmtest::two_point_space("X", Rat(1), Q("1/2"));
    auto P = product_l1(X, X);
    CHECK(P.d(0, 0, 0, 0) == 0);
    CHECK(P.d(0, 0, 1, 1) == 2);
    CHECK(P.d(0, 0, 1, 0) == 1);
    SUBCASE("metric axioms on a random product") {
        FiniteMMSpace A = gen_random(3, 3, Rat(1), 8);
        FiniteMMSpace B = gen_random(4, 2, Rat(1), 8);
        auto PP = product_l1(A, B);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j)
                for (int i2 = 0; i2 < 3; ++i2)
                    for (int j2 = 0; j2 < 2; ++j2) {
                        CHECK(PP.d(i, j, i2, j2) == PP.d(i2, j2, i, j));
                        CHECK((PP.d(i, j, i2, j2) == 0) == (i == i2 && j == j2));
                        for (int i3 = 0; i3 < 3; ++i3)
                            for (int j3 = 0; j3 < 2; ++j3)
                                CHECK(PP.d(i, j, i3, j3) <=
                                      PP.d(i, j, i2, j2) + PP.d(i2, j2, i3, j3));
                    }
    }
}

TEST_CASE("pushforward") {
    FiniteMMSpace X = mmtest::line_space("u3", {Q("0"), Q("1/2"), Q("1")},
                                         {Q("1/3"), Q("1/3"), Q("1/3")});
    CHECK(pushforward(X.mass, identity_map(3), 3) == X.mass);

    PointMap constant{{1, 1, 1}};
    auto push = pushforward(X.mass, constant, 3);
    CHECK(push == std::vector<Rat>{Rat(0), Rat(1), Rat(0)});

    PointMap collapse{{0, 0, 1}};
    auto collapsed = pushforward(X.mass, collapse, 2);
    CHECK(collapsed == std::vector<Rat>{Q("2/3"), Q("1/3")});

    SUBCASE("total mass is preserved and support equals the image") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            FiniteMMSpace A = gen_random(seed, 1 + seed % 4, Rat(1), 8);
            PointMap f;
            for (int i = 0; i < A.size(); ++i) f.image.push_back((i * 7 + 1) % A.size());
            auto out = pushforward(A.mass, f, A.size());
            Rat total = 0;
            std::vector<bool> hit(A.size(), false);
            for (int i = 0; i < A.size(); ++i) hit[f(i)] = true;
            for (int j = 0; j < A.size(); ++j) {
                total += out[j];
                CHECK((out[j] > 0) == hit[j]);
            }
            CHECK(total == 1);
        }
    }
}

TEST_CASE("mm-isomorphism brute force") {
    FiniteMMSpace X = gen_random(11, 4, Rat(1), 8);
    auto self = check_mm_isomorphic(X, X);
    REQUIRE(self.has_value());
    CHECK(self->image == identity_map(4).image);

    SUBCASE("permuted copy produces the permutation; witness inverts") {
        FiniteMMSpace Y;
        Y.label = "perm";
        std::vector<int> perm{2, 0, 3, 1};
        Y.dist.assign(4, std::vector<Rat>(4, Rat(0)));
        for (int a = 0; a < 4; ++a) {
            Y.points.push_back(X.points[perm[a]]);
            Y.mass.push_back(X.mass[perm[a]]);
            for (int b = 0; b < 4; ++b) Y.dist[a][b] = X.d(perm[a], perm[b]);
        }
        auto f = check_mm_isomorphic(X, Y);
        REQUIRE(f.has_value());
        for (int i = 0; i < 4; ++i) {
            CHECK(X.mass[i] == Y.mass[f->image[i]]);
            for (int k = 0; k < 4; ++k) CHECK(X.d(i, k) == Y.d(f->image[i], f->image[k]));
        }
        auto g = check_mm_isomorphic(Y, X);
        REQUIRE(g.has_value());
        std::vector<bool> seen(4, false);
        for (int i = 0; i < 4; ++i) seen[f->image[i]] = true;
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    }
    SUBCASE("different two-point scales are not isomorphic") {
        auto A = mmtest::two_point_space("A", Rat(1), Q("1/2"));
        auto B = mmtest::two_point_space("B", Q("1/2"), Q("1/2"));
        CHECK(!check_mm_isomorphic(A, B).has_value());
    }
    SUBCASE("size limit") {
        FiniteMMSpace big = gen_random(5, 9, Rat(1), 8);
        CHECK_THROWS_AS(check_mm_isomorphic(big, big), SizeLimitError);
    }
}
