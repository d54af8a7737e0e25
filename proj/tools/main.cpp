#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bne/cli/commands.hpp"
#include "bne/cli/io.hpp"
#include "bne/oracles/analytic.hpp"

using namespace bne;

namespace {

struct ConfigArgs {
    std::string file;
    std::vector<std::string> sets;

    void attach(CLI::App* app) {
        app->add_option("-c,--config", file, "key = value configuration file");
        app->add_option("-s,--set", sets, "override, key=value (repeatable)");
    }

    RunConfig resolve() const {
        std::vector<std::pair<std::string, std::string>> entries;
        if (!file.empty()) entries = parse_key_values(read_file(file), file);
        for (const auto& s : sets) {
            auto more = parse_key_values(s, "--set");
            if (more.size() != 1) throw std::invalid_argument("--set expects exactly one key=value, got '" + s + "'");
            entries.push_back(more.front());
        }
        return build_config(entries);
    }
};

void print_report(const EpsilonReport& r) {
    std::printf("method=%s epsilon=%.6e", r.method.c_str(), r.epsilon);
    if (r.estimate) std::printf(" estimate=%.6e", *r.estimate);
    std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Search and verification of approximate Bayes-Nash equilibria in combinatorial auctions"};
    app.require_subcommand(1);

    ConfigArgs solve_cfg, verify_cfg, compare_cfg, sweep_cfg, show_cfg;
    std::string runs_root = "runs";
    bool quiet = false;
    auto* solve_cmd = app.add_subcommand("solve", "search for an equilibrium and verify it");
    solve_cfg.attach(solve_cmd);
    solve_cmd->add_option("--runs", runs_root, "artifact root directory")->capture_default_str();
    solve_cmd->add_flag("-q,--quiet", quiet, "no per-iteration output");

    std::string strategy_file, report_file;
    bool truthful = false;
    auto* verify_cmd = app.add_subcommand("verify-only", "verify a given strategy profile");
    verify_cfg.attach(verify_cmd);
    auto* vs = verify_cmd->add_option("--strategy", strategy_file, "strategy file");
    auto* vt = verify_cmd->add_flag("--truthful", truthful, "verify the truthful profile");
    vs->excludes(vt);
    verify_cmd->add_option("-o,--out", report_file, "write the epsilon report here");

    std::string oracle, formulas, probe_file;
    std::size_t probes = 1001;
    auto* compare_cmd = app.add_subcommand("compare", "L-infinity distance of a local strategy to an analytic one");
    compare_cfg.attach(compare_cmd);
    compare_cmd->add_option("--strategy", strategy_file, "strategy file")->required();
    compare_cmd->add_option("--oracle", oracle, "rule:alpha:gamma (default: from the config)");
    compare_cmd->add_option("--formulas", formulas, "extra analytic formulas");
    compare_cmd->add_option("--probes", probes, "evenly spaced probe points on [0, 1]")->capture_default_str();
    compare_cmd->add_option("--csv", probe_file, "per-probe CSV output");

    std::size_t levels = 13;
    std::string sweep_file;
    auto* sweep_cmd = app.add_subcommand("sweep", "theorem bound and grid estimate on nested grids");
    sweep_cfg.attach(sweep_cmd);
    sweep_cmd->add_option("--strategy", strategy_file, "candidate strategy file")->required();
    sweep_cmd->add_option("--levels", levels, "finest grid has 2^levels + 1 points")->capture_default_str();
    sweep_cmd->add_option("--csv", sweep_file, "CSV output (default: stdout)");

    auto* show_cmd = app.add_subcommand("config", "print the resolved configuration");
    show_cfg.attach(show_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }

    try {
        if (*show_cmd) {
            std::cout << manifest_text(show_cfg.resolve());
            return 0;
        }
        if (*solve_cmd) {
            const RunConfig c = solve_cfg.resolve();
            const auto dir = make_run_directory(runs_root, manifest_text(c));
            std::printf("run directory %s\n", dir.c_str());
            const SolveResult r = solve(c, [&](const IterationRecord& t) {
                if (!quiet)
                    std::printf("%-5s it=%-3zu bidder=%d eps~=%.4e points=%zu t=%.1fs\n", t.phase.c_str(), t.iteration,
                                t.bidder, t.epsilon, t.points, t.seconds);
                std::fflush(stdout);
            });
            write_solve_artifacts(dir, c, r);
            std::printf("search %s after %zu inner / %zu outer iterations, estimate %.4e\n",
                        r.search.converged ? "converged" : "did not converge", r.search.inner_iterations,
                        r.search.outer_iterations, r.search.epsilon_estimate);
            print_report(r.report);
            return r.exit_code;
        }
        if (*verify_cmd) {
            const RunConfig c = verify_cfg.resolve();
            const Setting s = make_setting(c);
            if (!truthful && strategy_file.empty()) throw std::invalid_argument("verify-only needs --strategy or --truthful");
            const Profile p = truthful ? truthful_candidate(s) : profile_from_json(s.domain, read_file(strategy_file));
            const EpsilonReport r = verify(s, p, c.verification);
            if (!report_file.empty()) write_file(report_file, report_to_json(s.domain, r));
            print_report(r);
            return exit_code_for(r, c.search.target_epsilon, true);
        }
        if (*compare_cmd) {
            const RunConfig c = compare_cfg.resolve();
            const Setting s = make_setting(c);
            std::string rule = c.rule;
            double alpha = c.alpha, gamma = c.gamma;
            if (!oracle.empty()) {
                std::string a, g;
                std::istringstream in(oracle);
                if (!std::getline(in, rule, ':') || !std::getline(in, a, ':') || !std::getline(in, g))
                    throw std::invalid_argument("--oracle expects rule:alpha:gamma");
                alpha = std::stod(a);
                gamma = std::stod(g);
            }
            OracleRegistry reg = OracleRegistry::builtin();
            if (!formulas.empty()) reg.load_formula_file(formulas);
            const AnalyticStrategy& o = reg.get(rule, alpha, gamma);
            const Profile p = profile_from_json(s.domain, read_file(strategy_file));
            const auto rows = probe(p.strategy(0), o, probes);
            if (!probe_file.empty()) write_file(probe_file, probe_csv(rows));
            std::printf("oracle=\"%s\" probes=%zu linf=%.6e\n", o.key.c_str(), probes, l_infinity_distance(p.strategy(0), o, probes));
            return 0;
        }
        if (*sweep_cmd) {
            const RunConfig c = sweep_cfg.resolve();
            const Setting s = make_setting(c);
            const Profile p = profile_from_json(s.domain, read_file(strategy_file));
            const auto rows = bound_estimate_sweep(s, p, levels, c.verification);
            const std::string csv = sweep_csv(s.domain, rows);
            if (sweep_file.empty())
                std::cout << csv;
            else
                write_file(sweep_file, csv);
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsageError;
    }
    return kUsageError;
}
