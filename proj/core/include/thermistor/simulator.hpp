#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thermistor/coefficients.hpp"
#include "thermistor/mesh.hpp"
#include "thermistor/potential.hpp"
#include "thermistor/scheme.hpp"
#include "thermistor/temperature.hpp"

namespace thermistor {

struct SimulationConfig {
    std::size_t n_elements = 100;
    double tau = 0.1;
    double t_max = 200.0;
    double beta = 0.2;
    ModelSpec model{ModelKind::paper_example, {{"gamma", 0.1}}};
    double flux_left = 1.0;
    double flux_right = 1.0;
    SchemeVariant variant;
    /// Steady when max_j |alpha_j^{n+1} - alpha_j^n| / tau drops below this.
    double steady_tolerance = 1e-8;
    std::size_t record_every = 1;
    /// Reuse the first potential solve for every later step.
    bool freeze_potential_after_first_step = false;

    /// Throws ConfigError when an invariant is violated.
    void validate() const;
};

struct Snapshot {
    double time = 0.0;
    std::vector<double> temperature;
    std::vector<double> potential;
};

struct StepDiagnostics {
    double time = 0.0;
    /// max_j |alpha^{n+1} - alpha^n| / tau
    double max_change = 0.0;
    /// sigma(alpha_N) flux_right - sigma(alpha_0) flux_left at the lagged state.
    double compatibility = 0.0;
    /// residual / (1 + ||rhs||) of the potential and temperature solves.
    double potential_residual = 0.0;
    double temperature_residual = 0.0;
};

struct SimulationResult {
    std::vector<double> nodes;
    std::vector<Snapshot> snapshots;
    bool steady_reached = false;
    std::optional<double> steady_time;
    std::vector<double> final_profile;
    std::vector<double> final_potential;
    std::vector<StepDiagnostics> diagnostics;
    /// Set when the time loop aborted; everything above is what was
    /// computed before the failure.
    std::optional<std::string> failure;
};

struct StepResult {
    TemperatureState temperature;
    PotentialState potential;
    SolveReport potential_report;
    SolveReport temperature_report;
};

/// Owns the mesh and coefficient model built from one configuration.
class Simulation {
public:
    explicit Simulation(SimulationConfig config);

    const SimulationConfig& config() const noexcept { return config_; }
    const Mesh& mesh() const noexcept { return mesh_; }
    const CoefficientModel& model() const noexcept { return model_; }

    /// Solve the potential from the current temperature, then advance the
    /// temperature with that potential. Throws NumericalFailure carrying the
    /// step index of `state`.
    StepResult step(const TemperatureState& state) const;

    /// Time loop from the zero initial condition.
    SimulationResult run() const;
    /// Time loop from an arbitrary starting profile (alpha_prev = alpha).
    SimulationResult run(const std::vector<double>& initial_profile) const;

    /// Loop over the reduced constant-coefficient scheme (k = 1,
    /// sigma = gamma, phi = x), without any potential solve. Requires the
    /// paper_example model.
    SimulationResult run_reduced() const;

private:
    SimulationConfig config_;
    Mesh mesh_;
    CoefficientModel model_;
};

StepResult step(const TemperatureState& state, const SimulationConfig& config);
SimulationResult run(const SimulationConfig& config);
SimulationResult run_reduced(const SimulationConfig& config);

/// One step of the reduced scheme over unknowns alpha_0..alpha_{N-1}:
///   a1 = h/6 - tau/h,  b1 = 2h/3 + 2 tau/h,  source gamma*tau*h on every row.
TridiagonalSystem assemble_reduced(std::span<const double> alpha, const Mesh& mesh, double tau,
                                   double beta, double gamma);

/// Steady solution of u_t = u_xx + gamma with u_x = beta*u at x = 0 and
/// u_x = -beta*u at x = 1:  u*(x) = gamma/2 x(1-x) + gamma/(2 beta).
double analytic_steady_state(double x, double beta, double gamma);

/// max_j |final_profile_j - u*(x_j)|. Throws std::invalid_argument when the
/// run did not reach steady state.
double steady_state_error(const SimulationResult& result, double beta, double gamma);

/// sup over [0,1] of |u_h(x) - u*(x)| for the piecewise-linear u_h, sampled
/// at `samples_per_element` equispaced points per element.
double steady_state_sup_error(const SimulationResult& result, double beta, double gamma,
                              std::size_t samples_per_element = 16);

}  // namespace thermistor
