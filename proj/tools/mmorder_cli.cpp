#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mmorder/errors.hpp"
#include "mmorder/gen.hpp"
#include "mmorder/io.hpp"
#include "mmorder/maps.hpp"
#include "mmorder/order.hpp"
#include "mmorder/prokhorov.hpp"
#include "mmorder/transport.hpp"
#include "mmorder/verify.hpp"

namespace {

constexpr int kExitComputed = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitSizeLimit = 3;

mm::SearchBudget budget_from_env() {
    mm::SearchBudget budget;
    if (const char* raw = std::getenv("MM_MAX_EXACT_PAIRS")) {
        int value = std::atoi(raw);
        if (value < 1 || value > 24)
            throw mm::InputError("MM_MAX_EXACT_PAIRS must be between 1 and 24");
        budget.oracle_pairs = value;
    }
    return budget;
}

mm::FiniteMMSpace load_canonical(const std::string& path) {
    return mm::canonicalize(mm::load_space(path));
}

mm::Rat parse_eps(const std::string& text) { return mm::parse_rational(text); }

void write_order_witness(const std::string& path, const mm::OrderWitness& w) {
    if (!path.empty()) mm::save_json(path, mm::order_witness_to_json(w));
}

struct Cli {
    std::string x_path, y_path, z_path, f_path, g_path;
    std::string eps_text, t_text, s_text, c_text, r_text = "1/4";
    std::string eps1_text, eps2_text;
    std::string out, out_space, out_map, out_report, witness;
    std::string family, suite;
    int n = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    int granularity = 64;
    std::string diam_text = "1";
};

int run(int argc, char** argv) {
    CLI::App app{"Exact solvers for the Lipschitz order with additive errors on finite "
                 "metric measure spaces"};
    app.require_subcommand(1);
    Cli opt;

    auto* validate_cmd = app.add_subcommand("validate", "validate a space file");
    validate_cmd->add_option("space", opt.x_path)->required();

    auto* ubox_cmd = app.add_subcommand("ubox", "unilateral box metric");
    ubox_cmd->add_option("X", opt.x_path)->required();
    ubox_cmd->add_option("Y", opt.y_path)->required();
    ubox_cmd->add_option("--witness", opt.witness);

    auto* box_cmd = app.add_subcommand("box", "box metric");
    box_cmd->add_option("X", opt.x_path)->required();
    box_cmd->add_option("Y", opt.y_path)->required();
    box_cmd->add_option("--witness", opt.witness);

    auto* prok_cmd = app.add_subcommand("prokhorov",
                                        "Prokhorov distance between the masses of two space "
                                        "files sharing points and distances");
    prok_cmd->add_option("A", opt.x_path)->required();
    prok_cmd->add_option("B", opt.y_path)->required();

    auto* chk_cmd = app.add_subcommand("check-order", "decide X >_eps Y");
    chk_cmd->add_option("X", opt.x_path)->required();
    chk_cmd->add_option("Y", opt.y_path)->required();
    chk_cmd->add_option("--eps", opt.eps_text)->required();
    chk_cmd->add_option("--witness", opt.witness);

    auto* kybox_cmd = app.add_subcommand("ky-box", "map-based unilateral box value");
    kybox_cmd->add_option("X", opt.x_path)->required();
    kybox_cmd->add_option("Y", opt.y_path)->required();

    auto* kychk_cmd = app.add_subcommand("check-ky", "decide the map-based order at eps");
    kychk_cmd->add_option("X", opt.x_path)->required();
    kychk_cmd->add_option("Y", opt.y_path)->required();
    kychk_cmd->add_option("--eps", opt.eps_text)->required();
    kychk_cmd->add_option("--witness", opt.witness);

    auto* glue_cmd = app.add_subcommand("glue", "glue two couplings over the middle marginal");
    glue_cmd->add_option("sigma", opt.x_path)->required();
    glue_cmd->add_option("tau", opt.y_path)->required();
    glue_cmd->add_option("--out", opt.out)->required();

    auto* comp_cmd = app.add_subcommand("compose", "compose two couplings");
    comp_cmd->add_option("sigma", opt.x_path)->required();
    comp_cmd->add_option("tau", opt.y_path)->required();
    comp_cmd->add_option("--out", opt.out)->required();

    auto* disc_cmd = app.add_subcommand("discretize", "greedy net discretization");
    disc_cmd->add_option("X", opt.x_path)->required();
    disc_cmd->add_option("--t", opt.t_text)->required();
    disc_cmd->add_option("--out-space", opt.out_space);
    disc_cmd->add_option("--out-map", opt.out_map);

    auto* cm_cmd = app.add_subcommand("compose-maps",
                                      "compose 1-Lipschitz-up-to maps through a projection");
    cm_cmd->add_option("X", opt.x_path)->required();
    cm_cmd->add_option("Y", opt.y_path)->required();
    cm_cmd->add_option("Z", opt.z_path)->required();
    cm_cmd->add_option("f", opt.f_path)->required();
    cm_cmd->add_option("g", opt.g_path)->required();
    cm_cmd->add_option("--eps1", opt.eps1_text)->required();
    cm_cmd->add_option("--eps2", opt.eps2_text)->required();
    cm_cmd->add_option("--s", opt.s_text)->required();
    cm_cmd->add_option("--out-map", opt.out_map);
    cm_cmd->add_option("--out-report", opt.out_report);

    auto* gen_cmd = app.add_subcommand("gen", "generate spaces");
    gen_cmd->add_option("--family", opt.family)->required()
        ->check(CLI::IsMember({"remark46", "random", "scaled", "path", "cycle"}));
    gen_cmd->add_option("--n", opt.n);
    gen_cmd->add_option("--seed", opt.seed);
    gen_cmd->add_option("--r", opt.r_text);
    gen_cmd->add_option("--c", opt.c_text);
    gen_cmd->add_option("--diam", opt.diam_text);
    gen_cmd->add_option("--granularity", opt.granularity);
    gen_cmd->add_option("--in", opt.f_path);
    gen_cmd->add_option("--out", opt.out)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    verify_cmd->add_option("--suite", opt.suite)->required();
    verify_cmd->add_option("--trials", opt.trials);
    verify_cmd->add_option("--seed", opt.seed);

    CLI11_PARSE(app, argc, argv);
    const mm::SearchBudget budget = budget_from_env();

    if (*validate_cmd) {
        mm::FiniteMMSpace space = mm::load_space(opt.x_path);
        mm::validate(space);
        mm::FiniteMMSpace canon = mm::canonicalize(space);
        std::cout << "valid " << space.label << " points=" << space.size()
                  << " support=" << canon.size() << "\n";
        return kExitComputed;
    }
    if (*ubox_cmd || *box_cmd) {
        auto X = load_canonical(opt.x_path);
        auto Y = load_canonical(opt.y_path);
        mm::BoxResult r = *ubox_cmd ? mm::unilateral_box(X, Y, budget) : mm::box(X, Y, budget);
        write_order_witness(opt.witness, r.witness);
        std::cout << mm::format_rational(r.value) << "\n";
        return kExitComputed;
    }
    if (*prok_cmd) {
        mm::FiniteMMSpace A = mm::load_space(opt.x_path);
        mm::FiniteMMSpace B = mm::load_space(opt.y_path);
        mm::validate(A);
        if (A.points != B.points || A.dist != B.dist)
            throw mm::InputError("prokhorov: the two files must share points and distances");
        std::cout << mm::format_rational(mm::prokhorov(A, A.mass, B.mass)) << "\n";
        return kExitComputed;
    }
    if (*chk_cmd) {
        auto X = load_canonical(opt.x_path);
        auto Y = load_canonical(opt.y_path);
        auto w = mm::check_order(X, Y, parse_eps(opt.eps_text), budget);
        if (!w) {
            std::cout << "no\n";
            return kExitNegative;
        }
        write_order_witness(opt.witness, *w);
        std::cout << "yes dis=" << mm::format_rational(w->dis_value)
                  << " uncovered=" << mm::format_rational(w->uncovered) << " |S|=" << w->S.size()
                  << "\n";
        return kExitComputed;
    }
    if (*kybox_cmd) {
        auto X = load_canonical(opt.x_path);
        auto Y = load_canonical(opt.y_path);
        std::cout << mm::format_rational(mm::ky_unilateral_box(X, Y, budget)) << "\n";
        return kExitComputed;
    }
    if (*kychk_cmd) {
        auto X = load_canonical(opt.x_path);
        auto Y = load_canonical(opt.y_path);
        auto w = mm::check_ky_order(X, Y, parse_eps(opt.eps_text), budget);
        if (!w) {
            std::cout << "no\n";
            return kExitNegative;
        }
        if (!opt.witness.empty()) mm::save_json(opt.witness, mm::ky_witness_to_json(*w));
        std::cout << "yes |X0|=" << w->X0.size() << "\n";
        return kExitComputed;
    }
    if (*glue_cmd || *comp_cmd) {
        mm::Coupling sigma = mm::coupling_from_json(mm::load_json(opt.x_path));
        mm::Coupling tau = mm::coupling_from_json(mm::load_json(opt.y_path));
        if (*glue_cmd)
            mm::save_json(opt.out, mm::triple_to_json(mm::glue(sigma, tau)));
        else
            mm::save_json(opt.out, mm::coupling_to_json(mm::compose_couplings(sigma, tau)));
        return kExitComputed;
    }
    if (*disc_cmd) {
        auto X = load_canonical(opt.x_path);
        const mm::Rat t = parse_eps(opt.t_text);
        mm::Discretization d = mm::discretize(X, t);
        if (!opt.out_space.empty()) mm::save_space(opt.out_space, d.space);
        if (!opt.out_map.empty())
            mm::save_json(opt.out_map, mm::map_to_json(d.projection, X.label, d.space.label));
        mm::Rat dp = mm::prokhorov(X, d.pushed_on_x, X.mass);
        mm::Rat b = mm::box(X, d.space, budget).value;
        std::cout << "dp=" << mm::format_rational(dp) << " box=" << mm::format_rational(b)
                  << "\n";
        return kExitComputed;
    }
    if (*cm_cmd) {
        auto X = load_canonical(opt.x_path);
        auto Y = load_canonical(opt.y_path);
        auto Z = load_canonical(opt.z_path);
        mm::PointMap f = mm::map_from_json(mm::load_json(opt.f_path));
        mm::PointMap g = mm::map_from_json(mm::load_json(opt.g_path));
        mm::ComposeResult r =
            mm::compose_lip_up_to(X, Y, Z, f, g, parse_eps(opt.eps1_text),
                                  parse_eps(opt.eps2_text), parse_eps(opt.s_text));
        if (!opt.out_map.empty())
            mm::save_json(opt.out_map, mm::map_to_json(r.h, X.label, Z.label));
        if (!opt.out_report.empty())
            mm::save_json(opt.out_report, mm::compose_report_to_json(r.report));
        std::cout << "lip excess=" << mm::format_rational(r.report.lip_excess)
                  << " budget=" << mm::format_rational(r.report.lip_budget) << " ok\n"
                  << "mass value=" << mm::format_rational(r.report.mass_x0_tilde)
                  << " floor=" << mm::format_rational(r.report.mass_floor) << " ok\n"
                  << "dp value=" << mm::format_rational(r.report.dp_value)
                  << " budget=" << mm::format_rational(r.report.dp_budget) << " ok\n";
        return kExitComputed;
    }
    if (*gen_cmd) {
        if (opt.family == "remark46") {
            if (opt.n < 2) throw mm::InputError("gen remark46 needs --n >= 2");
            auto fam = mm::gen_remark46(opt.n, mm::parse_rational(opt.r_text));
            mm::save_space(opt.out + ".Xn.json", fam.Xn);
            mm::save_space(opt.out + ".Yn.json", fam.Yn);
            mm::save_space(opt.out + ".Xlimit.json", fam.Xlimit);
            mm::save_space(opt.out + ".Ylimit.json", fam.Ylimit);
        } else if (opt.family == "random") {
            if (opt.n < 1) throw mm::InputError("gen random needs --n >= 1");
            mm::save_space(opt.out, mm::gen_random(opt.seed, opt.n,
                                                   mm::parse_rational(opt.diam_text),
                                                   opt.granularity));
        } else if (opt.family == "scaled") {
            if (opt.f_path.empty() || opt.c_text.empty())
                throw mm::InputError("gen scaled needs --in and --c");
            mm::save_space(opt.out, mm::gen_scaled(load_canonical(opt.f_path),
                                                   mm::parse_rational(opt.c_text)));
        } else if (opt.family == "path") {
            mm::save_space(opt.out, mm::gen_path(opt.n));
        } else {
            mm::save_space(opt.out, mm::gen_cycle(opt.n));
        }
        return kExitComputed;
    }
    if (*verify_cmd) {
        mm::SuiteResult result = mm::run_suite(opt.suite, opt.trials, opt.seed, budget);
        for (const std::string& msg : result.failure_messages) std::cout << "FAIL " << msg << "\n";
        std::cout << "suite " << result.name << ": " << (result.checks - result.failures) << "/"
                  << result.checks << " checks passed\n";
        return result.passed() ? kExitComputed : kExitNegative;
    }
    return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mm::SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const mm::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const mm::BoundViolation& e) {
        std::cerr << "bound violation: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
