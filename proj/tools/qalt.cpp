// Command-line front end: invariants, verify-theorem, verify-corollary,
// qa-cert, report.  Exit codes: 0 all pass, 2 verification failure,
// 3 resource limit, 1 usage or data errors.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qalt/verify.hpp"

using namespace qalt;

namespace {

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& config_path) {
    cmd->add_option("corpus", cfg.corpus_path, "corpus file")->required();
    cmd->add_option("--budget", cfg.budget, "qa search node budget");
    cmd->add_option("--workers", cfg.workers, "worker threads (also env QALT_WORKERS)");
    cmd->add_option("--config", config_path,
                    "key=value config file; its settings override flags");
    cmd->add_flag("--no-qa", [&cfg](std::int64_t) { cfg.run_qa = false; },
                  "skip certificate searches");
}

void finalize(RunConfig& cfg, const std::string& config_path) {
    if (const char* env = std::getenv("QALT_WORKERS")) cfg.workers = std::atoi(env);
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    if (!cfg.anchor_locked)
        std::cerr << "warning: orientation-convention anchor unlocked; verification "
                     "suites assume the locked trefoil anchor\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of links and their branched double covers"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::string link_name;

    auto* inv = app.add_subcommand("invariants", "full report for one link");
    add_common(inv, cfg, config_path);
    inv->add_option("--link", link_name, "link name")->required();

    auto* thm = app.add_subcommand("verify-theorem", "sigma = -4d over the corpus");
    add_common(thm, cfg, config_path);
    thm->add_option("--max-crossings", cfg.max_crossings, "skip larger diagrams");

    auto* cor = app.add_subcommand("verify-corollary", "torsion vs Jones over the corpus");
    add_common(cor, cfg, config_path);

    auto* qac = app.add_subcommand("qa-cert", "quasi-alternating certificate for one link");
    add_common(qac, cfg, config_path);
    qac->add_option("--link", link_name, "link name")->required();

    auto* rep = app.add_subcommand("report", "machine-readable corpus report");
    add_common(rep, cfg, config_path);
    rep->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    rep->add_option("--out", cfg.out_path, "output path ('-' for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        finalize(cfg, config_path);
        if (inv->parsed()) return cmd_invariants(cfg, link_name, std::cout);
        if (thm->parsed()) return cmd_verify_theorem(cfg, std::cout);
        if (cor->parsed()) return cmd_verify_corollary(cfg, std::cout);
        if (qac->parsed()) return cmd_qa_cert(cfg, link_name, std::cout);
        if (rep->parsed()) return cmd_report(cfg, std::cout);
    } catch (const ResourceLimit& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const BudgetExceeded& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
