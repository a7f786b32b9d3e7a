#pragma once

#include <optional>
#include <vector>

#include "thermistor/coefficients.hpp"
#include "thermistor/mesh.hpp"
#include "thermistor/scheme.hpp"
#include "thermistor/tridiagonal.hpp"

namespace thermistor {

/// Nodal temperature alpha_0..alpha_N at one time level together with the
/// left ghost value alpha_{-1}. The right ghost alpha_N is the last nodal
/// entry (reconstructed in the paper-literal layout, solved for otherwise).
struct GhostedTemperature {
    std::vector<double> alpha;
    double ghost_left = 0.0;

    double ghost_right() const { return alpha.back(); }
};

/// Residual bookkeeping of one linear solve.
struct SolveReport {
    double residual = 0.0;
    double rhs_norm = 0.0;

    /// residual / (1 + ||rhs||_inf)
    double relative() const { return residual / (1.0 + rhs_norm); }
};

/// Nodal potential mu_0..mu_N at one time level.
///
/// paper_literal: mu_0..mu_{N-1} are solved for, mu_N = h*flux_right +
/// mu_{N-1} and ghost_left = mu_1 - mu_0 - h*flux_left are reconstructed.
/// corrected: all N+1 values are solved for with the gauge mu_0 = 0 and no
/// ghost is kept.
struct PotentialState {
    std::vector<double> mu;
    std::optional<double> ghost_left;
    Stiffness scheme = Stiffness::corrected;
    SolveReport report;
};

double ghost_potential_left(double mu0, double mu1, double h, double flux_left);
double ghost_potential_right(double mu_last, double h, double flux_right);

TridiagonalSystem assemble_potential(const GhostedTemperature& temperature, const Mesh& mesh,
                                     const CoefficientModel& model, Stiffness scheme);

/// Assemble and solve. Throws SingularSystemError (e.g. sigma identically
/// zero) and ModelError.
PotentialState solve_potential(const GhostedTemperature& temperature, const Mesh& mesh,
                               const CoefficientModel& model, Stiffness scheme);

/// Net current imbalance sigma(alpha_N)*flux_right - sigma(alpha_0)*flux_left.
/// The pure-flux potential problem is solvable only when this vanishes.
double check_current_compatibility(const GhostedTemperature& temperature,
                                   const CoefficientModel& model);

/// Potential of the initial condition phi(x, 0) = x.
PotentialState initial_potential(const Mesh& mesh);

}  // namespace thermistor
