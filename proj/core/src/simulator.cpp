#include "thermistor/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "thermistor/errors.hpp"

namespace thermistor {

void SimulationConfig::validate() const {
    if (n_elements < 3) throw ConfigError("n_elements must be at least 3");
    if (!(tau > 0.0) || !std::isfinite(tau)) throw ConfigError("tau must be positive");
    if (!(t_max >= tau) || !std::isfinite(t_max)) throw ConfigError("t_max must be >= tau");
    if (!(beta >= 0.0) || !std::isfinite(beta)) throw ConfigError("beta must be nonnegative");
    if (!(steady_tolerance > 0.0)) throw ConfigError("steady_tol must be positive");
    if (record_every < 1) throw ConfigError("record_every must be at least 1");
    if (!std::isfinite(flux_left) || !std::isfinite(flux_right)) {
        throw ConfigError("boundary fluxes must be finite");
    }
}

namespace {

SimulationConfig validated(SimulationConfig config) {
    config.validate();
    return config;
}

double max_change_rate(const std::vector<double>& next, const std::vector<double>& prev,
                       double tau) {
    double worst = 0.0;
    for (std::size_t j = 0; j < next.size(); ++j) {
        worst = std::max(worst, std::abs(next[j] - prev[j]));
    }
    return worst / tau;
}

std::size_t step_budget(const SimulationConfig& config) {
    return static_cast<std::size_t>(std::floor(config.t_max / config.tau + 1e-9));
}

// Shared time loop. `advance` maps the state at level n to (state n+1,
// potential used, diagnostics without max_change) and may throw.
template <typename Advance>
SimulationResult time_loop(const SimulationConfig& config, const Mesh& mesh,
                           TemperatureState state, Advance&& advance) {
    SimulationResult result;
    result.nodes = mesh.nodes();
    result.snapshots.push_back({0.0, state.alpha, mesh.nodes()});
    result.final_potential = mesh.nodes();

    const std::size_t budget = step_budget(config);
    bool last_recorded = true;

    try {
        for (std::size_t n = 0; n < budget; ++n) {
            auto [next, potential, diag] = advance(state);
            diag.max_change = max_change_rate(next.alpha, state.alpha, config.tau);
            diag.time = next.time;
            result.diagnostics.push_back(diag);
            state = std::move(next);
            result.final_potential = potential;

            last_recorded = state.step % config.record_every == 0;
            if (last_recorded) {
                result.snapshots.push_back({state.time, state.alpha, potential});
            }
            if (diag.max_change < config.steady_tolerance) {
                result.steady_reached = true;
                result.steady_time = state.time;
                break;
            }
        }
    } catch (const Error& e) {
        result.failure = e.what();
    } catch (const std::invalid_argument& e) {
        result.failure = NumericalFailure(e.what(), state.step).what();
    }

    if (!last_recorded) {
        result.snapshots.push_back({state.time, state.alpha, result.final_potential});
    }
    result.final_profile = state.alpha;
    return result;
}

}  // namespace

Simulation::Simulation(SimulationConfig config)
    : config_(validated(std::move(config))),
      mesh_(config_.n_elements),
      model_(make_model(config_.model, config_.beta, config_.flux_left, config_.flux_right)) {}

StepResult Simulation::step(const TemperatureState& state) const {
    try {
        StepResult out;
        const GhostedTemperature lagged = with_ghosts(state, mesh_, model_);
        out.potential = solve_potential(lagged, mesh_, model_, config_.variant.potential);
        out.potential_report = out.potential.report;
        out.temperature = solve_temperature(state, out.potential, mesh_, model_, config_.tau,
                                            config_.variant, &out.temperature_report);
        return out;
    } catch (const NumericalFailure&) {
        throw;
    } catch (const Error& e) {
        throw NumericalFailure(e.what(), state.step);
    } catch (const std::invalid_argument& e) {
        throw NumericalFailure(e.what(), state.step);
    }
}

SimulationResult Simulation::run() const {
    return run(std::vector<double>(mesh_.n_nodes(), 0.0));
}

SimulationResult Simulation::run(const std::vector<double>& initial_profile) const {
    if (initial_profile.size() != mesh_.n_nodes()) {
        throw ConfigError("initial profile has the wrong number of nodes");
    }
    TemperatureState start;
    start.alpha = initial_profile;
    start.alpha_prev = initial_profile;

    std::optional<PotentialState> frozen;
    const auto compatibility = [&](const TemperatureState& state) {
        return check_current_compatibility(with_ghosts(state, mesh_, model_), model_);
    };
    return time_loop(config_, mesh_, std::move(start), [&](const TemperatureState& state) {
        StepDiagnostics diag;
        if (frozen) {
            SolveReport report;
            TemperatureState next;
            try {
                next = solve_temperature(state, *frozen, mesh_, model_, config_.tau,
                                         config_.variant, &report);
            } catch (const NumericalFailure&) {
                throw;
            } catch (const Error& e) {
                throw NumericalFailure(e.what(), state.step);
            }
            diag.compatibility = compatibility(state);
            diag.potential_residual = frozen->report.relative();
            diag.temperature_residual = report.relative();
            return std::make_tuple(std::move(next), frozen->mu, diag);
        }

        StepResult out = step(state);
        diag.compatibility = compatibility(state);
        diag.potential_residual = out.potential_report.relative();
        diag.temperature_residual = out.temperature_report.relative();
        if (config_.freeze_potential_after_first_step) frozen = out.potential;
        return std::make_tuple(std::move(out.temperature), std::move(out.potential.mu), diag);
    });
}

SimulationResult Simulation::run_reduced() const {
    if (config_.model.kind != ModelKind::paper_example) {
        throw ConfigError("run_reduced requires the paper_example model");
    }
    const double gamma = config_.model.parameter("gamma");
    const double beta = config_.beta;
    const double h = mesh_.h();

    return time_loop(config_, mesh_, initial_temperature(mesh_), [&](const TemperatureState& state) {
        const TridiagonalSystem sys = assemble_reduced(state.alpha, mesh_, config_.tau, beta, gamma);
        std::vector<double> x;
        try {
            x = thomas_solve(sys);
        } catch (const Error& e) {
            throw NumericalFailure(e.what(), state.step);
        }
        StepDiagnostics diag;
        diag.temperature_residual = SolveReport{residual_norm(sys, x), max_abs(sys.rhs)}.relative();
        x.push_back(x.back() / (beta * h + 1.0));

        TemperatureState next;
        next.alpha = std::move(x);
        next.alpha_prev = state.alpha;
        next.step = state.step + 1;
        next.time = static_cast<double>(next.step) * config_.tau;
        return std::make_tuple(std::move(next), mesh_.nodes(), diag);
    });
}

StepResult step(const TemperatureState& state, const SimulationConfig& config) {
    return Simulation(config).step(state);
}

SimulationResult run(const SimulationConfig& config) { return Simulation(config).run(); }

SimulationResult run_reduced(const SimulationConfig& config) {
    return Simulation(config).run_reduced();
}

TridiagonalSystem assemble_reduced(std::span<const double> alpha, const Mesh& mesh, double tau,
                                   double beta, double gamma) {
    const std::size_t n = mesh.n_elements();
    if (alpha.size() != mesh.n_nodes()) {
        throw std::invalid_argument("temperature vector does not match the mesh");
    }
    const double h = mesh.h();
    const double a1 = h / 6.0 - tau / h;
    const double b1 = 2.0 * h / 3.0 + 2.0 * tau / h;
    const double source = gamma * tau * h;

    TridiagonalSystem sys(n);
    sys.main[0] = a1 * (beta * h - 1.0) + b1 - tau * beta;
    sys.super[0] = 2.0 * a1;
    sys.rhs[0] = h / 2.0 * (1.0 + beta * h / 3.0) * alpha[0] + h / 3.0 * alpha[1] + source;

    for (std::size_t j = 1; j + 1 < n; ++j) {
        sys.sub[j - 1] = a1;
        sys.main[j] = b1;
        sys.super[j] = a1;
        sys.rhs[j] = h / 6.0 * alpha[j - 1] + 2.0 * h / 3.0 * alpha[j] + h / 6.0 * alpha[j + 1] +
                     source;
    }

    const std::size_t last = n - 1;
    sys.sub[last - 1] = a1;
    sys.main[last] = b1 + a1 / (beta * h + 1.0);
    sys.rhs[last] = h / 6.0 * alpha[last - 1] +
                    h / 6.0 * (4.0 + 1.0 / (1.0 + beta * h)) * alpha[last] + source;
    return sys;
}

double analytic_steady_state(double x, double beta, double gamma) {
    if (!(beta > 0.0)) {
        throw std::invalid_argument("analytic steady state requires beta > 0");
    }
    return 0.5 * gamma * x * (1.0 - x) + gamma / (2.0 * beta);
}

double steady_state_error(const SimulationResult& result, double beta, double gamma) {
    if (!result.steady_reached) {
        throw std::invalid_argument("steady_state_error requires a run that reached steady state");
    }
    double worst = 0.0;
    for (std::size_t j = 0; j < result.nodes.size(); ++j) {
        worst = std::max(worst, std::abs(result.final_profile[j] -
                                          analytic_steady_state(result.nodes[j], beta, gamma)));
    }
    return worst;
}

double steady_state_sup_error(const SimulationResult& result, double beta, double gamma,
                              std::size_t samples_per_element) {
    if (!result.steady_reached) {
        throw std::invalid_argument("steady_state_sup_error requires a steady run");
    }
    samples_per_element = std::max<std::size_t>(samples_per_element, 1);
    const auto& x = result.nodes;
    const auto& u = result.final_profile;
    double worst = 0.0;
    for (std::size_t e = 0; e + 1 < x.size(); ++e) {
        for (std::size_t s = 0; s <= samples_per_element; ++s) {
            const double theta = static_cast<double>(s) / static_cast<double>(samples_per_element);
            const double xs = x[e] + theta * (x[e + 1] - x[e]);
            const double uh = (1.0 - theta) * u[e] + theta * u[e + 1];
            worst = std::max(worst, std::abs(uh - analytic_steady_state(xs, beta, gamma)));
        }
    }
    return worst;
}

}  // namespace thermistor
