#include "doctest.h"
#include "mmorder/errors.hpp"
#include "mmorder/gen.hpp"
#include "mmorder/prokhorov.hpp"
#include "test_helpers.hpp"

using namespace mm;
using mmtest::Q;

TEST_CASE("prokhorov distance examples") {
    FiniteMMSpace line = mmtest::line_space("line", {Q("-1/4"), Q("0"), Q("1/4")},
                                            {Q("1/4"), Q("1/2"), Q("1/4")});
    SUBCASE("equal measures") {
        CHECK(prokhorov(line, line.mass, line.mass) == 0);
        CHECK(prokhorov_oracle(line, line.mass, line.mass) == 0);
    }
    SUBCASE("point mass against the three-point family") {
        std::vector<Rat> delta{Rat(0), Rat(1), Rat(0)};
        for (int n = 2; n <= 6; ++n) {
            Rat side = (Rat(1) - Rat(1) / n) / 2;
            std::vector<Rat> yn{side, Rat(1) / n, side};
            CHECK(prokhorov(line, delta, yn) == Q("1/4"));
            CHECK(prokhorov_oracle(line, delta, yn) == Q("1/4"));
        }
    }
    SUBCASE("two-point example, cross-checked against the definition") {
        FiniteMMSpace two = mmtest::line_space("two", {Q("0"), Q("1/4")}, {Q("1/2"), Q("1/2")});
        std::vector<Rat> mu{Q("1/2"), Q("1/2")};
        std::vector<Rat> nu{Q("3/4"), Q("1/4")};
        CHECK(prokhorov_oracle(two, mu, nu) == Q("1/4"));
        CHECK(prokhorov(two, mu, nu) == Q("1/4"));
    }
    SUBCASE("mass errors") {
        CHECK_THROWS_WITH_AS(prokhorov(line, {Q("1/2"), Q("1/2"), Q("1/2")}, line.mass),
                             doctest::Contains("MassNotOne"), InputError);
    }
}

TEST_CASE("ky fan distance") {
    FiniteMMSpace pair = mmtest::two_point_space("cod", Rat(1), Q("1/2"));
    SUBCASE("equal maps") {
        PointMap f{{0, 1}};
        CHECK(ky_fan({Q("1/2"), Q("1/2")}, pair, f, f) == 0);
    }
    SUBCASE("one disagreement of mass 1/4 at image distance 1") {
        std::vector<Rat> mass{Q("1/4"), Q("3/4")};
        PointMap f{{0, 0}};
        PointMap g{{1, 0}};
        CHECK(ky_fan(mass, pair, f, g) == Q("1/4"));
    }
    SUBCASE("full disagreement at image distance 1/8") {
        FiniteMMSpace close = mmtest::two_point_space("cod8", Q("1/8"), Q("1/2"));
        std::vector<Rat> mass{Q("1/2"), Q("1/2")};
        PointMap f{{0, 1}};
        PointMap g{{1, 0}};
        CHECK(ky_fan(mass, close, f, g) == Q("1/8"));
    }
}

TEST_CASE("prokhorov is bounded by the ky fan distance of pushforwards") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 2 + static_cast<int>(seed % 3);
        FiniteMMSpace dom = gen_random(seed, n, Rat(1), 8);
        FiniteMMSpace cod = gen_random(seed + 100, 2 + static_cast<int>(seed % 2), Rat(1), 8);
        PointMap f, g;
        for (int i = 0; i < n; ++i) {
            f.image.push_back(static_cast<int>((seed + i) % cod.size()));
            g.image.push_back(static_cast<int>((seed + 2 * i + 1) % cod.size()));
        }
        Rat dp = prokhorov(cod, pushforward(dom.mass, f, cod.size()),
                           pushforward(dom.mass, g, cod.size()));
        CHECK(dp <= ky_fan(dom.mass, cod, f, g));
    }
}
