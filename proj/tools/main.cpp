#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skhodge/divfile.hpp"
#include "skhodge/hodge.hpp"
#include "skhodge/report.hpp"

using namespace skhodge;

namespace {

struct Options {
    std::string input;
    int level = 0;
    int max_level = 2;
    bool json = false;
    Budget budget;
};

Budget env_budget(Budget b) {
    if (const char* d = std::getenv("SKHODGE_DEGREE_BOUND")) b.max_degree = std::atoll(d);
    if (const char* p = std::getenv("SKHODGE_PAIR_LIMIT")) b.max_pairs = std::atoll(p);
    return b;
}

std::string field_str(const VectorField& f, const DivisorSpec& spec) {
    return f.str(spec.ring);
}

int run(const std::string& cmd, const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    DivisorFile file = parse_divisor_file(opt.input);

    RunReport report;
    report.command = cmd;
    report.input_path = opt.input;
    {
        std::ifstream in(opt.input);
        std::stringstream ss;
        ss << in.rdbuf();
        report.input_hash = fnv1a_hex(ss.str());
    }
    report.budget = opt.budget;
    report.warnings = file.warnings;
    for (const auto& w : file.warnings) std::cerr << "warning: " << w << "\n";

    DivisorSpec spec = file.spec;
    if (!spec.extended_scope) {
        auto saito = check_saito_criterion(spec);
        if (!saito.ok)
            throw InvariantError("Saito criterion failed: " + saito.message +
                                 " (det = " + saito.det.str() + ")");
        if (cmd == "check") report.add_scalar("saito_det_factor", rat_str(saito.c));
    }
    spec = normalize_basis(spec);

    std::optional<BFunction> bfun = file.bfun;
    if (bfun) {
        auto v = bfunction_validate(*bfun);
        if (!v.roots_in_range)
            throw InvariantError("b-function roots outside (-2,0) or -1 missing: " +
                                 bfun->str());
        if (!v.symmetric) {
            report.warnings.push_back("b-function not symmetric about -1: " + bfun->str());
            std::cerr << "warning: b-function not symmetric about -1\n";
        }
    }
    auto need_b = [&]() -> const BFunction& {
        if (!bfun)
            throw InvariantError("command '" + cmd +
                                 "' needs a [bfunction] section (or run 'bfun' first)");
        return *bfun;
    };

    if (cmd == "check") {
        report.add_scalar("normalized", "true");
        if (spec.extended_scope) {
            report.add_scalar("free", "not checked (extended scope)");
        } else {
            bool sk = check_strong_koszul(spec, opt.budget);
            report.add_scalar("strongly_koszul", sk ? "true" : "false");
            if (!sk) throw InvariantError("divisor is not strongly Koszul");
        }
        if (bfun) {
            auto v = bfunction_validate(*bfun);
            report.add_scalar("bfunction", bfun->str());
            report.add_scalar("bfunction_roots_in_range", v.roots_in_range ? "true" : "false");
            report.add_scalar("bfunction_symmetric", v.symmetric ? "true" : "false");
            auto [beta, r] = beta_bar(*bfun, make_ring({"s"}));
            report.add_scalar("beta_bar", beta.str());
            report.add_scalar("r", std::to_string(r));
        }
        for (size_t i = 0; i < spec.basis.size(); ++i)
            report.add_scalar(i == spec.chi_index ? "chi" : "delta" + std::to_string(i + 1),
                              field_str(spec.basis[i], spec));
    } else if (cmd == "bfun") {
        auto b = compute_bfunction(spec, opt.budget);
        auto v = bfunction_validate(b);
        report.add_scalar("bfunction", b.str());
        std::string roots;
        for (auto& [root, m] : b.roots) {
            if (!roots.empty()) roots += ", ";
            roots += rat_str(root) + ":" + std::to_string(m);
        }
        report.add_scalar("roots", roots);
        report.add_scalar("roots_in_range", v.roots_in_range ? "true" : "false");
        report.add_scalar("symmetric", v.symmetric ? "true" : "false");
        if (!v.symmetric) std::cerr << "warning: computed b-function not symmetric about -1\n";
    } else if (cmd == "i0") {
        HodgePipeline pipe(spec, need_b());
        auto res = pipe.hodge_ideal_0_direct(opt.budget);
        std::vector<Poly> gens = res.gens;
        if (spec.weights) {
            gens = minimal_generators(gens, spec.integer_weights(), opt.budget);
            report.add_scalar("I_0_mingens", std::to_string(gens.size()));
        }
        report.add_ideal("I_0", 0, gens);
    } else if (cmd == "hodge") {
        HodgePipeline pipe(spec, need_b());
        for (int k = 0; k <= opt.level; ++k) {
            std::vector<Poly> gens = pipe.hodge_ideal(k, opt.budget).gens;
            if (spec.weights) {
                gens = minimal_generators(gens, spec.integer_weights(), opt.budget);
                report.add_scalar("I_" + std::to_string(k) + "_mingens",
                                  std::to_string(gens.size()));
            }
            report.add_ideal("I_" + std::to_string(k), k, gens);
        }
    } else if (cmd == "ord") {
        HodgePipeline pipe(spec, need_b());
        for (int k = 0; k <= opt.level; ++k)
            report.add_ideal("Ord_" + std::to_string(k), k, pipe.ord_ideal(k));
    } else if (cmd == "genlevel") {
        HodgePipeline pipe(spec, need_b());
        auto gl = pipe.generating_level(opt.max_level, opt.budget);
        report.add_scalar("generating_level", std::to_string(gl.level));
        report.add_scalar("k_max", std::to_string(gl.k_max));
        report.add_scalar("r", std::to_string(gl.r));
        std::string steps;
        for (size_t k = 0; k < gl.step_equal.size(); ++k) {
            if (!steps.empty()) steps += ", ";
            steps += "F1D*F_" + std::to_string(k) + (gl.step_equal[k] ? "=" : "<") + "F_" +
                     std::to_string(k + 1);
        }
        report.add_scalar("steps", steps);
    } else {
        throw std::runtime_error("unknown command " + cmd);
    }

    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (opt.json ? serialize_json(report) : serialize_text(report));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hodge ideals, order filtration and generating level for strongly Koszul "
                 "free divisors"};
    app.require_subcommand(1);

    Options opt;
    opt.budget = env_budget(Budget{});
    std::string cmd;
    for (const char* name : {"check", "i0", "hodge", "ord", "genlevel", "bfun"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("input", opt.input, "divisor file")->required();
        sub->add_flag("--json", opt.json, "structured output");
        sub->add_option("--degree-bound", opt.budget.max_degree, "cap on S-pair lcm degree");
        sub->add_option("--pair-limit", opt.budget.max_pairs, "cap on reduced S-pairs");
        if (std::string(name) == "hodge" || std::string(name) == "ord")
            sub->add_option("--level", opt.level, "highest level K (computes 0..K)");
        if (std::string(name) == "genlevel")
            sub->add_option("--max", opt.max_level, "verification horizon k_max");
        sub->callback([&cmd, name] { cmd = name; });
    }

    CLI11_PARSE(app, argc, argv);
    try {
        return run(cmd, opt);
    } catch (const DivFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
