#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "thermistor/coefficients.hpp"
#include "thermistor/mesh.hpp"
#include "thermistor/potential.hpp"
#include "thermistor/scheme.hpp"
#include "thermistor/tridiagonal.hpp"

namespace thermistor {

/// Nodal temperature at time level n and n-1. The previous level is kept
/// because the ghost-node boundary formulas evaluate k at alpha^{n-1}.
struct TemperatureState {
    std::vector<double> alpha;
    std::vector<double> alpha_prev;
    double time = 0.0;
    std::size_t step = 0;
};

/// alpha = alpha_prev = 0 at t = 0. At the first step alpha^{-1} is taken
/// to be alpha^0.
TemperatureState initial_temperature(const Mesh& mesh);

/// alpha_{-1} = alpha_1 + (h*beta/k - 1)*alpha_0, with k = k(alpha_0^{n-1}).
double ghost_temp_left(double alpha1, double alpha0, double k_at_prev_alpha0, double h,
                       double beta);

/// alpha_N = k/(beta*h + k) * alpha_{N-1}, with k = k(alpha_N^{n-1}).
double ghost_temp_right(double alpha_last, double k_at_prev_alphaN, double h, double beta);

/// Temperature at level n with its left ghost, as needed by the potential
/// assembly.
GhostedTemperature with_ghosts(const TemperatureState& state, const Mesh& mesh,
                               const CoefficientModel& model);

/// Joule source contribution to row j of the temperature system, already
/// multiplied by tau. Row indices follow the layout of `variant.temperature`
/// (0..N-1 for paper_literal, 0..N for corrected).
double source_term(std::span<const double> alpha, const PotentialState& potential, std::size_t j,
                   const Mesh& mesh, const CoefficientModel& model, double tau,
                   const SchemeVariant& variant);

/// Backward-Euler system for alpha^{n+1} with every coefficient lagged at
/// alpha^n (and alpha^{n-1} inside the ghost reconstructions).
TridiagonalSystem assemble_temperature(const TemperatureState& state,
                                       const PotentialState& potential, const Mesh& mesh,
                                       const CoefficientModel& model, double tau,
                                       const SchemeVariant& variant);

/// Advance one step. The returned state has alpha_prev = state.alpha and
/// time = state.time + tau. Throws SingularSystemError, ModelError, or
/// std::invalid_argument on non-finite data.
TemperatureState solve_temperature(const TemperatureState& state,
                                   const PotentialState& potential, const Mesh& mesh,
                                   const CoefficientModel& model, double tau,
                                   const SchemeVariant& variant, SolveReport* report = nullptr);

}  // namespace thermistor
