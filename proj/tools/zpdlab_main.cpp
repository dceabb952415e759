#include "zpdlab/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Options {
    std::uint64_t seed = 0;
    int budget = -1;  // -1: per-algebra default
    std::string out_path;
    std::string tag;
    std::string theorem;
    int samples = -1;
    int target_dim = -1;
};

void summarize(const zpdlab::Report& report) {
    const nlohmann::json body = nlohmann::json::parse(report.body);
    for (const auto& rec : body["checks"]) {
        std::string line = rec["check"].get<std::string>() + " " + rec["spec"].get<std::string>() + ": ";
        if (rec.contains("error"))
            line += "error: " + rec["error"].get<std::string>();
        else if (rec.contains("outcome"))
            line += rec["outcome"].get<std::string>() + " (" + rec["detail"].get<std::string>() + ")";
        else if (rec.contains("space"))
            line += "dim " + std::to_string(rec["space"]["dim"].get<int>());
        std::cerr << line << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact zero-product and derivation-condition checks on structure-constant algebras"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--seed", opt.seed, "RNG seed for pair sampling (default 0)");
    app.add_option("--budget", opt.budget, "max sampled pairs per stream (default 50 * dim)");
    app.add_option("--out", opt.out_path, "write the report to this path instead of stdout");

    std::vector<std::string> specs;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->fallthrough();  // allow the global --seed/--budget/--out after the subcommand
        cmd->add_option("specs", specs, "spec documents (JSON)")->required()->expected(-1);
    };

    CLI::App* zpd = app.add_subcommand("check-zpd", "certify that zero products determine the product");
    add_common(zpd);
    CLI::App* zjpd = app.add_subcommand("check-zjpd", "certify that zero Jordan products determine the Jordan product");
    add_common(zjpd);
    CLI::App* imspan = app.add_subcommand("check-im-span", "check that the idempotent family spans the algebra");
    add_common(imspan);
    CLI::App* condm = app.add_subcommand("check-condition-m",
                                         "check that x m x = 0 over the ideal forces m = 0 (polarized system)");
    add_common(condm);
    CLI::App* solve = app.add_subcommand("solve", "compute a condition or definition space");
    solve->add_option("--tag", opt.tag,
                      "one of d1 d2 d3 d4 derivation jordan_derivation gen_derivation "
                      "gen_jordan_derivation anti_derivation central_d1")
        ->required();
    add_common(solve);
    CLI::App* verify = app.add_subcommand("verify", "verify a characterization as an exact subspace identity");
    verify->add_option("--theorem", opt.theorem, "one of d1 d2 dd2 ds prop-n lemma-f")->required();
    verify->add_option("--samples", opt.samples, "sample count for ds / lemma-f");
    verify->add_option("--target-dim", opt.target_dim, "target dimension for prop-n");
    add_common(verify);

    CLI11_PARSE(app, argc, argv);

    zpdlab::RunConfig config;
    config.seed = opt.seed;
    if (opt.budget >= 0) config.budget = opt.budget;
    const CLI::App* active = app.get_subcommands().front();
    for (const std::string& path : specs) {
        zpdlab::CheckRequest req;
        req.check = active->get_name();
        req.spec_path = path;
        if (active == solve) req.params["tag"] = opt.tag;
        if (active == verify) {
            req.params["theorem"] = opt.theorem;
            if (opt.samples >= 0) req.params["samples"] = std::to_string(opt.samples);
            if (opt.target_dim >= 0) req.params["target_dim"] = std::to_string(opt.target_dim);
        }
        config.checks.push_back(std::move(req));
    }

    const zpdlab::Report report = zpdlab::run(config);
    summarize(report);
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write report to '" << opt.out_path << "'\n";
            return 2;
        }
        out << zpdlab::report_text(report);
    } else {
        std::cout << zpdlab::report_text(report);
    }
    return report.exit_code;
}
