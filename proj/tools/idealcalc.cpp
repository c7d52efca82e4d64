#include <charconv>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "idealcalc/config.hpp"
#include "idealcalc/derivations.hpp"
#include "idealcalc/errors.hpp"
#include "idealcalc/matrix_io.hpp"
#include "idealcalc/multipliers.hpp"
#include "idealcalc/report.hpp"
#include "idealcalc/suites.hpp"
#include "idealcalc/tolerances.hpp"
#include "json.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitConfigError = 2;

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

idealcalc::Sequence parse_csv_list(const std::string& text) {
    idealcalc::Sequence out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string tok =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        double v = 0.0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
            throw idealcalc::ConfigError("--seq: expected a number, got '" + tok + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int cmd_run(const std::string& config_path, const std::string& out_path,
            const std::string& format, long long seed) {
    idealcalc::ExperimentConfig cfg =
        config_path.empty() ? idealcalc::default_config()
                            : idealcalc::parse_config_file(config_path);
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
    if (!format.empty()) cfg.format = format;
    if (!out_path.empty()) cfg.out = out_path;

    const idealcalc::ExperimentReport report = idealcalc::run(cfg);
    const std::string text =
        cfg.format == "json" ? idealcalc::to_json(report) : idealcalc::to_csv(report);
    if (!cfg.out.empty()) {
        std::ofstream out(cfg.out);
        if (!out) throw idealcalc::ConfigError("cannot write report to '" + cfg.out + "'");
        out << text;
        std::cout << idealcalc::to_table(report);
    } else {
        std::cout << text;
        std::cerr << idealcalc::to_table(report);
    }
    return report.all_pass() ? kExitPass : kExitFailedCheck;
}

int cmd_norms(const std::string& space_text, const std::string& seq_text) {
    const idealcalc::SpaceSpec space = idealcalc::SpaceSpec::parse(space_text);
    const idealcalc::Sequence xi = parse_csv_list(seq_text);
    std::cout << format_double(idealcalc::seq_norm(space, xi)) << "\n";
    return kExitPass;
}

int cmd_dnorm(const std::string& space_i, const std::string& space_j,
              const std::string& matrix_path, const std::string& budget_text) {
    const idealcalc::SpaceSpec I = idealcalc::SpaceSpec::parse(space_i);
    const idealcalc::SpaceSpec J = idealcalc::SpaceSpec::parse(space_j);
    idealcalc::SearchBudget budget;
    if (!budget_text.empty()) {
        const auto comma = budget_text.find(',');
        if (comma == std::string::npos)
            throw idealcalc::ConfigError("--budget expects restarts,steps");
        budget.restarts = std::stoi(budget_text.substr(0, comma));
        budget.ascent_steps = std::stoi(budget_text.substr(comma + 1));
        if (budget.restarts < 1 || budget.ascent_steps < 1)
            throw idealcalc::ConfigError("--budget entries must be >= 1");
    }
    const idealcalc::Matrix a = idealcalc::read_matrix_file(matrix_path);
    const idealcalc::DerivationNormReport report =
        idealcalc::norm_estimate(idealcalc::DerivationSpec{a}, I, J, budget);

    const double lower_margin = report.estimate.value - report.op_norm_gauge;
    const double upper_margin = report.upper_bound - report.estimate.value;
    const bool pass = lower_margin >= -1e-8 && (!report.multiplier_exact || upper_margin >= -1e-8);

    nlohmann::ordered_json doc;
    doc["space_i"] = report.space_i;
    doc["space_j"] = report.space_j;
    doc["n"] = report.n;
    doc["seed"] = report.seed;
    doc["estimate"] = {
        {"value", report.estimate.value},
        {"status",
         report.estimate.status == idealcalc::EstimateStatus::exact_analytic ? "exact-analytic"
                                                                             : "lower-bound"},
        {"method", report.estimate.method},
        {"evaluations", report.estimate.evaluations},
        {"witness_digest", report.estimate.witness_digest()},
    };
    doc["op_norm_gauge"] = report.op_norm_gauge;
    doc["concavity"] = report.concavity;
    doc["multiplier_value"] = report.multiplier_value;
    doc["multiplier_exact"] = report.multiplier_exact;
    doc["upper_bound"] = report.upper_bound;
    doc["margins"] = {{"lower", lower_margin}, {"upper", upper_margin}};
    doc["pass"] = pass;
    std::cout << doc.dump(2) << "\n";
    return pass ? kExitPass : kExitFailedCheck;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-norm calculus for symmetric operator ideals"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "execute experiment suites against a config");
    std::string config_path, out_path, format;
    long long seed = -1;
    run_cmd->add_option("--config", config_path, "config file (default: built-in suites)");
    run_cmd->add_option("--out", out_path, "report path (default: stdout)");
    run_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    run_cmd->add_option("--seed", seed, "override the config seed");

    auto* norms_cmd = app.add_subcommand("norms", "sequence norm in a given space");
    std::string space_text, seq_text;
    norms_cmd->add_option("--space", space_text, "space spec, e.g. schatten:p=0.5")->required();
    norms_cmd->add_option("--seq", seq_text, "comma separated entries")->required();

    auto* dnorm_cmd = app.add_subcommand("dnorm", "derivation norm estimate for a generator");
    std::string space_i, space_j, matrix_path, budget_text;
    dnorm_cmd->add_option("--space-i", space_i, "domain ideal spec")->required();
    dnorm_cmd->add_option("--space-j", space_j, "target ideal spec")->required();
    dnorm_cmd->add_option("--matrix", matrix_path, "generator matrix file")->required();
    dnorm_cmd->add_option("--budget", budget_text, "restarts,steps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(config_path, out_path, format, seed);
        if (norms_cmd->parsed()) return cmd_norms(space_text, seq_text);
        return cmd_dnorm(space_i, space_j, matrix_path, budget_text);
    } catch (const idealcalc::ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return kExitConfigError;
    } catch (const std::invalid_argument& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitFailedCheck;
    }
}
