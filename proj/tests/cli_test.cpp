// End-to-end checks of the command-line surface: exit codes, exact output,
// witness files, and byte-identical reruns.

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "mmorder/io.hpp"
#include "mmorder/maps.hpp"
#include "mmorder/prokhorov.hpp"
#include "mmorder/order.hpp"
#include "mmorder/transport.hpp"

#ifndef MMORDER_CLI
#error "MMORDER_CLI must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + std::string(MMORDER_CLI) + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), output};
}

std::string tmp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("generate, validate, and solve the counterexample family") {
    std::string prefix = tmp_path("r2");
    auto gen = run_cli("gen --family remark46 --n 2 --out " + prefix);
    CHECK(gen.exit_code == 0);

    auto validate = run_cli("validate " + prefix + ".Yn.json");
    CHECK(validate.exit_code == 0);
    CHECK(validate.output == "valid Y2 points=3 support=3\n");

    auto ubox = run_cli("ubox " + prefix + ".Xn.json " + prefix + ".Yn.json --witness " +
                        tmp_path("w.json"));
    CHECK(ubox.exit_code == 0);
    CHECK(ubox.output == "1/4\n");

    auto kybox = run_cli("ky-box " + prefix + ".Xn.json " + prefix + ".Yn.json");
    CHECK(kybox.output == "1/4\n");

    SUBCASE("the emitted witness re-validates") {
        mm::FiniteMMSpace X = mm::load_space(prefix + ".Xn.json");
        mm::FiniteMMSpace Y = mm::load_space(prefix + ".Yn.json");
        mm::OrderWitness w =
            mm::order_witness_from_json(mm::load_json(tmp_path("w.json")), X.size(), Y.size());
        CHECK(mm::lip_distortion(X, Y, w.S) <= w.epsilon);
        mm::validate_coupling(w.pi, X.mass, Y.mass);
        CHECK(mm::coupling_mass_on(w.pi, w.S) >= mm::Rat(1) - w.epsilon);
    }

    SUBCASE("identical command lines produce byte-identical output") {
        auto again = run_cli("ubox " + prefix + ".Xn.json " + prefix + ".Yn.json");
        auto again2 = run_cli("ubox " + prefix + ".Xn.json " + prefix + ".Yn.json");
        CHECK(again.output == again2.output);
        std::ifstream w1(tmp_path("w.json"));
        std::string bytes1((std::istreambuf_iterator<char>(w1)), {});
        run_cli("ubox " + prefix + ".Xn.json " + prefix + ".Yn.json --witness " +
                tmp_path("w2.json"));
        std::ifstream w2(tmp_path("w2.json"));
        std::string bytes2((std::istreambuf_iterator<char>(w2)), {});
        CHECK(bytes1 == bytes2);
    }
}

TEST_CASE("check-order exit codes") {
    std::string prefix = tmp_path("r3");
    run_cli("gen --family remark46 --n 2 --out " + prefix);
    auto yes = run_cli("check-order " + prefix + ".Xn.json " + prefix + ".Yn.json --eps 1/4");
    CHECK(yes.exit_code == 0);
    CHECK(yes.output.substr(0, 3) == "yes");
    auto no = run_cli("check-order " + prefix + ".Xn.json " + prefix + ".Yn.json --eps 1/5");
    CHECK(no.exit_code == 1);
    CHECK(no.output == "no\n");
}

TEST_CASE("prokhorov between shared-metric files") {
    std::string prefix = tmp_path("r4");
    run_cli("gen --family remark46 --n 2 --out " + prefix);
    // Yn vs itself is 0; different masses on the same metric give 1/4.
    auto same = run_cli("prokhorov " + prefix + ".Yn.json " + prefix + ".Yn.json");
    CHECK(same.output == "0\n");

    mm::FiniteMMSpace Y = mm::load_space(prefix + ".Yn.json");
    mm::FiniteMMSpace delta = Y;
    delta.mass = {mm::Rat(0), mm::Rat(1), mm::Rat(0)};
    mm::save_space(tmp_path("delta.json"), delta);
    auto diff = run_cli("prokhorov " + tmp_path("delta.json") + " " + prefix + ".Yn.json");
    CHECK(diff.exit_code == 0);
    CHECK(diff.output == "1/4\n");

    auto mismatched = run_cli("prokhorov " + prefix + ".Yn.json " + prefix + ".Ylimit.json");
    CHECK(mismatched.exit_code == 2);
}

TEST_CASE("input and size-limit exit codes") {
    std::ofstream bad(tmp_path("bad.json"));
    bad << "{\"label\": \"x\", \"points\": [\"a\"], \"dist\": [[\"0\"]], \"mass\": [\"2\"]}";
    bad.close();
    auto invalid = run_cli("validate " + tmp_path("bad.json"));
    CHECK(invalid.exit_code == 2);
    CHECK(invalid.output.find("MassNotOne") != std::string::npos);

    auto missing = run_cli("validate does_not_exist.json");
    CHECK(missing.exit_code == 2);

    run_cli("gen --family random --n 9 --seed 1 --out " + tmp_path("big9.json"));
    run_cli("gen --family random --n 8 --seed 2 --out " + tmp_path("big8.json"));
    auto toobig = run_cli("ubox " + tmp_path("big9.json") + " " + tmp_path("big8.json"));
    CHECK(toobig.exit_code == 3);
}

TEST_CASE("glue and compose round trip through files") {
    std::string prefix = tmp_path("r5");
    run_cli("gen --family remark46 --n 2 --out " + prefix);
    mm::FiniteMMSpace Y = mm::load_space(prefix + ".Yn.json");
    mm::Coupling id = mm::identity_coupling(Y.mass);
    mm::save_json(tmp_path("id.json"), mm::coupling_to_json(id));

    auto composed = run_cli("compose " + tmp_path("id.json") + " " + tmp_path("id.json") +
                            " --out " + tmp_path("c.json"));
    CHECK(composed.exit_code == 0);
    mm::Coupling back = mm::coupling_from_json(mm::load_json(tmp_path("c.json")));
    CHECK(back.matrix == id.matrix);

    auto glued = run_cli("glue " + tmp_path("id.json") + " " + tmp_path("id.json") + " --out " +
                         tmp_path("t.json"));
    CHECK(glued.exit_code == 0);
    mm::Json t = mm::load_json(tmp_path("t.json"));
    CHECK(t["dims"] == mm::Json::array({3, 3, 3}));
}

TEST_CASE("self-domination at zero error") {
    run_cli("gen --family random --n 3 --seed 11 --out " + tmp_path("a3.json"));
    auto self = run_cli("check-order " + tmp_path("a3.json") + " " + tmp_path("a3.json") +
                        " --eps 0 --witness " + tmp_path("ws.json"));
    CHECK(self.exit_code == 0);
    mm::FiniteMMSpace A = mm::load_space(tmp_path("a3.json"));
    mm::OrderWitness w =
        mm::order_witness_from_json(mm::load_json(tmp_path("ws.json")), A.size(), A.size());
    CHECK(w.dis_value == 0);
    CHECK(w.uncovered == 0);
    CHECK(w.S.pairs == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}});
}

TEST_CASE("ky witness file re-validates") {
    run_cli("gen --family remark46 --n 3 --out " + tmp_path("r6"));
    auto r = run_cli("check-ky " + tmp_path("r6") + ".Xn.json " + tmp_path("r6") +
                     ".Yn.json --eps 1/4 --witness " + tmp_path("kyw.json"));
    CHECK(r.exit_code == 0);
    mm::FiniteMMSpace X = mm::load_space(tmp_path("r6") + ".Xn.json");
    mm::FiniteMMSpace Y = mm::load_space(tmp_path("r6") + ".Yn.json");
    mm::Json j = mm::load_json(tmp_path("kyw.json"));
    mm::Rat eps = mm::parse_rational(j["epsilon"].get<std::string>());
    mm::PointMap f;
    for (const auto& v : j["f"]) f.image.push_back(v.get<int>());
    std::vector<int> x0;
    for (const auto& v : j["X0"]) x0.push_back(v.get<int>());
    CHECK(eps == mm::Rat(1) / 4);
    CHECK(mm::lip_up_to_check(X, Y, f, mm::make_subset(x0, X.size()), eps));
    CHECK(mm::prokhorov(Y, mm::pushforward(X.mass, f, Y.size()), Y.mass) <= eps);
}

TEST_CASE("compose-maps subcommand") {
    // The scaled two-point family: identity maps, eps1 = eps2 = 1/4.
    mm::FiniteMMSpace X;
    X.label = "X";
    X.points = {"0", "1/4"};
    X.dist = {{mm::Rat(0), mm::Rat(1) / 4}, {mm::Rat(1) / 4, mm::Rat(0)}};
    X.mass = {mm::Rat(1) / 2, mm::Rat(1) / 2};
    mm::FiniteMMSpace Y = X;
    Y.label = "Y";
    Y.mass = {mm::Rat(3) / 4, mm::Rat(1) / 4};
    mm::FiniteMMSpace Z = Y;
    Z.label = "Z";
    Z.dist = {{mm::Rat(0), mm::Rat(4)}, {mm::Rat(4), mm::Rat(0)}};
    mm::save_space(tmp_path("cmX.json"), X);
    mm::save_space(tmp_path("cmY.json"), Y);
    mm::save_space(tmp_path("cmZ.json"), Z);
    mm::save_json(tmp_path("cmf.json"), mm::map_to_json(mm::identity_map(2), "X", "Y"));
    mm::save_json(tmp_path("cmg.json"), mm::map_to_json(mm::identity_map(2), "Y", "Z"));

    auto r = run_cli("compose-maps " + tmp_path("cmX.json") + " " + tmp_path("cmY.json") + " " +
                     tmp_path("cmZ.json") + " " + tmp_path("cmf.json") + " " +
                     tmp_path("cmg.json") +
                     " --eps1 1/4 --eps2 1/4 --s 1/8 --out-report " + tmp_path("cmr.json"));
    CHECK(r.exit_code == 0);
    mm::Json rep = mm::load_json(tmp_path("cmr.json"));
    CHECK(rep["lip_ok"] == true);
    CHECK(rep["mass_ok"] == true);
    CHECK(rep["dp_ok"] == true);
    CHECK(rep["t"] == "1/64");

    auto bad = run_cli("compose-maps " + tmp_path("cmX.json") + " " + tmp_path("cmY.json") +
                       " " + tmp_path("cmZ.json") + " " + tmp_path("cmf.json") + " " +
                       tmp_path("cmg.json") + " --eps1 1/8 --eps2 1/4 --s 1/8");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("PreconditionViolated") != std::string::npos);
}

TEST_CASE("the exact-search budget honors MM_MAX_EXACT_PAIRS") {
    auto limited = run_cli("verify --suite oracle --trials 2",
                           "MM_MAX_EXACT_PAIRS=1 ");
    CHECK(limited.exit_code == 3);
    auto bogus = run_cli("verify --suite oracle --trials 1", "MM_MAX_EXACT_PAIRS=bogus ");
    CHECK(bogus.exit_code == 2);
}

TEST_CASE("discretize and verify subcommands") {
    run_cli("gen --family random --n 4 --seed 5 --out " + tmp_path("x4.json"));
    auto disc = run_cli("discretize " + tmp_path("x4.json") + " --t 1/2 --out-space " +
                        tmp_path("net.json") + " --out-map " + tmp_path("proj.json"));
    CHECK(disc.exit_code == 0);
    CHECK(disc.output.find("dp=") != std::string::npos);

    auto suite = run_cli("verify --suite lemma32 --trials 5");
    CHECK(suite.exit_code == 0);
    CHECK(suite.output == "suite lemma32: 5/5 checks passed\n");

    auto unknown = run_cli("verify --suite nonsense");
    CHECK(unknown.exit_code == 2);
}
