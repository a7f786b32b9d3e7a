#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <limits>
#include <ostream>
#include <sstream>

#include "thermistor/config.hpp"
#include "thermistor/errors.hpp"
#include "thermistor/series_io.hpp"
#include "thermistor/simulator.hpp"

namespace thermistor::cli {

namespace {

constexpr double kCompatibilityWarning = 1e-9;

struct RunOptions {
    std::string config;
    std::string out;
    std::string profile;
    bool require_steady = false;
};

ParsedConfig load_and_report(const std::string& path, std::ostream& err) {
    ParsedConfig parsed = load_config(path);
    for (const std::string& w : parsed.warnings) {
        err << "warning: " << w << '\n';
    }
    return parsed;
}

bool write_file(const std::string& path, const std::string& data, std::ostream& err) {
    std::ofstream file(path, std::ios::binary);
    file << data;
    if (!file) {
        err << "error: cannot write '" << path << "'\n";
        return false;
    }
    return true;
}

int run_command(const RunOptions& opts, bool reduced, std::ostream& out, std::ostream& err) {
    const ParsedConfig parsed = load_and_report(opts.config, err);
    const Simulation sim(parsed.config);
    const SimulationResult result = reduced ? sim.run_reduced() : sim.run();

    if (result.failure) {
        err << "error: numerical failure: " << *result.failure << '\n';
        return kNumericalFailure;
    }

    double worst_compat = 0.0;
    for (const StepDiagnostics& d : result.diagnostics) {
        worst_compat = std::max(worst_compat, std::abs(d.compatibility));
    }
    if (worst_compat > kCompatibilityWarning) {
        err << "warning: boundary fluxes violate current conservation (max residual "
            << format_number(worst_compat) << ")\n";
    }

    const std::string series = write_series_csv(result);
    if (opts.out.empty()) {
        out << series;
    } else if (!write_file(opts.out, series, err)) {
        return kConfigError;
    }
    if (!opts.profile.empty() && !write_file(opts.profile, write_profile_csv(result), err)) {
        return kConfigError;
    }

    if (result.steady_reached) {
        err << "steady state reached at t = " << format_number(*result.steady_time) << '\n';
        return kSuccess;
    }
    err << "steady state not reached by t_max = " << format_number(parsed.config.t_max) << '\n';
    return opts.require_steady ? kNotSteady : kSuccess;
}

int convergence_command(const std::string& path, std::size_t levels, std::ostream& out,
                        std::ostream& err) {
    const ParsedConfig parsed = load_and_report(path, err);
    const SimulationConfig& base = parsed.config;
    if (base.model.kind != ModelKind::paper_example || !(base.beta > 0.0)) {
        throw ConfigError("convergence requires the paper_example model with beta > 0");
    }
    if (levels < 1) throw ConfigError("--levels must be at least 1");
    const double gamma = base.model.parameter("gamma");

    std::vector<std::future<SimulationResult>> jobs;
    for (std::size_t level = 0; level < levels; ++level) {
        SimulationConfig cfg = base;
        cfg.n_elements = base.n_elements << level;
        cfg.record_every = std::numeric_limits<std::size_t>::max();
        jobs.push_back(std::async(std::launch::async, [cfg] { return run(cfg); }));
    }

    std::vector<SimulationResult> results;
    for (auto& job : jobs) results.push_back(job.get());

    for (std::size_t level = 0; level < levels; ++level) {
        const SimulationResult& r = results[level];
        if (r.failure) {
            err << "error: numerical failure at level " << level << ": " << *r.failure << '\n';
            return kNumericalFailure;
        }
        if (!r.steady_reached) {
            err << "error: level " << level << " did not reach steady state\n";
            return kNotSteady;
        }
    }

    out << "n_elements,h,node_error,node_order,sup_error,sup_order\n";
    double prev_node = 0.0;
    double prev_sup = 0.0;
    for (std::size_t level = 0; level < levels; ++level) {
        const SimulationResult& r = results[level];
        const std::size_t n = base.n_elements << level;
        const double node = steady_state_error(r, base.beta, gamma);
        const double sup = steady_state_sup_error(r, base.beta, gamma);
        out << n << ',' << format_number(1.0 / static_cast<double>(n)) << ','
            << format_number(node) << ',';
        if (level > 0) out << format_number(std::log2(prev_node / node));
        out << ',' << format_number(sup) << ',';
        if (level > 0) out << format_number(std::log2(prev_sup / sup));
        out << '\n';
        prev_node = node;
        prev_sup = sup;
    }
    return kSuccess;
}

int check_potential_command(const std::string& path, std::ostream& out, std::ostream& err) {
    const ParsedConfig parsed = load_and_report(path, err);
    const Simulation sim(parsed.config);
    const Mesh& mesh = sim.mesh();

    const TemperatureState zero = initial_temperature(mesh);
    const GhostedTemperature lagged = with_ghosts(zero, mesh, sim.model());
    PotentialState potential;
    try {
        potential = solve_potential(lagged, mesh, sim.model(), parsed.config.variant.potential);
    } catch (const SingularSystemError& e) {
        err << "error: numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }

    double deviation = 0.0;
    for (std::size_t j = 0; j < mesh.n_nodes(); ++j) {
        const double linear = parsed.config.flux_left * mesh.node(j);
        deviation = std::max(deviation, std::abs(potential.mu[j] - potential.mu[0] - linear));
    }
    out << "max_deviation_from_linear," << format_number(deviation) << '\n'
        << "compatibility_residual," << format_number(check_current_compatibility(lagged, sim.model()))
        << '\n'
        << "relative_residual," << format_number(potential.report.relative()) << '\n';
    return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coupled thermistor (Joule heating) finite element simulator"};
    app.require_subcommand(1);

    RunOptions run_opts;
    auto* run_cmd = app.add_subcommand("run", "Run the coupled potential/temperature solver");
    run_cmd->add_option("--config", run_opts.config, "Configuration file")->required();
    run_cmd->add_option("--out", run_opts.out, "Series CSV (t,x,u,phi); stdout if omitted");
    run_cmd->add_option("--profile", run_opts.profile, "Final profile CSV (x,u)");
    run_cmd->add_flag("--require-steady", run_opts.require_steady,
                      "Exit with code 3 if steady state is not reached");

    RunOptions reduced_opts;
    auto* reduced_cmd =
        app.add_subcommand("run-reduced", "Run the constant-coefficient reduced scheme");
    reduced_cmd->add_option("--config", reduced_opts.config, "Configuration file")->required();
    reduced_cmd->add_option("--out", reduced_opts.out, "Series CSV (t,x,u,phi); stdout if omitted");
    reduced_cmd->add_option("--profile", reduced_opts.profile, "Final profile CSV (x,u)");
    reduced_cmd->add_flag("--require-steady", reduced_opts.require_steady,
                          "Exit with code 3 if steady state is not reached");

    std::string conv_config;
    std::size_t levels = 3;
    auto* conv_cmd = app.add_subcommand(
        "convergence", "Steady-state error against the analytic profile on N, 2N, 4N, ...");
    conv_cmd->add_option("--config", conv_config, "Configuration file")->required();
    conv_cmd->add_option("--levels", levels, "Number of refinement levels");

    std::string pot_config;
    auto* pot_cmd =
        app.add_subcommand("check-potential", "Solve one potential system from zero temperature");
    pot_cmd->add_option("--config", pot_config, "Configuration file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kConfigError;
    }

    try {
        if (*run_cmd) return run_command(run_opts, false, out, err);
        if (*reduced_cmd) return run_command(reduced_opts, true, out, err);
        if (*conv_cmd) return convergence_command(conv_config, levels, out, err);
        if (*pot_cmd) return check_potential_command(pot_config, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const Error& e) {
        err << "error: numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
    return kConfigError;
}

}  // namespace thermistor::cli
