#include "thermistor/potential.hpp"

#include <stdexcept>

namespace thermistor {

namespace {

void require_layout(const GhostedTemperature& temperature, const Mesh& mesh) {
    if (temperature.alpha.size() != mesh.n_nodes()) {
        throw std::invalid_argument("temperature vector does not match the mesh");
    }
}

std::vector<double> nodal_sigma(const GhostedTemperature& temperature,
                                const CoefficientModel& model) {
    std::vector<double> sigma(temperature.alpha.size());
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        sigma[j] = eval_sigma(model, temperature.alpha[j]);
    }
    return sigma;
}

// Unknowns mu_0..mu_{N-1}; rows transcribed term by term, including the
// "+" on the mu_{j+1} coefficient of the interior rows and the
// (2 s_{N-2} + s_N - s_{N-1}) diagonal of the last row.
TridiagonalSystem assemble_paper_literal(const GhostedTemperature& temperature,
                                         const Mesh& mesh, const CoefficientModel& model) {
    const std::size_t n = mesh.n_elements();
    const double h = mesh.h();
    const std::vector<double> s = nodal_sigma(temperature, model);
    const double s_ghost = eval_sigma(model, temperature.ghost_left);

    TridiagonalSystem sys(n);

    sys.main[0] = s[0] + 3.0 * s_ghost + 2.0 * s[1];
    sys.super[0] = -(s_ghost + 2.0 * s[0] + s[1]);
    sys.rhs[0] = -h * model.flux_left * (3.0 * s[0] + s_ghost);

    for (std::size_t j = 1; j + 1 < n; ++j) {
        sys.sub[j - 1] = -(s[j] + s[j - 1]);
        sys.main[j] = 2.0 * (s[j + 1] + s[j - 1]);
        sys.super[j] = s[j + 1] + s[j];
    }

    const std::size_t last = n - 1;
    sys.sub[last - 1] = -(s[last] + s[last - 1]);
    sys.main[last] = 2.0 * s[last - 1] + s[n] - s[last];
    sys.rhs[last] = h * model.flux_right * (s[n] + s[last]);
    return sys;
}

// Unknowns mu_0..mu_N. Interior rows use arithmetic-mean midpoint
// conductivities; row N carries the outgoing flux, row 0 is the gauge.
TridiagonalSystem assemble_corrected(const GhostedTemperature& temperature, const Mesh& mesh,
                                     const CoefficientModel& model) {
    const std::size_t n = mesh.n_elements();
    const double h = mesh.h();
    const std::vector<double> s = nodal_sigma(temperature, model);

    std::vector<double> mid(n);
    for (std::size_t j = 0; j < n; ++j) mid[j] = 0.5 * (s[j] + s[j + 1]);

    TridiagonalSystem sys(n + 1);

    sys.main[0] = 1.0;
    sys.super[0] = 0.0;
    sys.rhs[0] = 0.0;

    for (std::size_t j = 1; j < n; ++j) {
        sys.sub[j - 1] = -mid[j - 1];
        sys.main[j] = mid[j - 1] + mid[j];
        sys.super[j] = -mid[j];
    }

    sys.sub[n - 1] = -mid[n - 1] / h;
    sys.main[n] = mid[n - 1] / h;
    sys.rhs[n] = s[n] * model.flux_right;
    return sys;
}

}  // namespace

double ghost_potential_left(double mu0, double mu1, double h, double flux_left) {
    return mu1 - mu0 - h * flux_left;
}

double ghost_potential_right(double mu_last, double h, double flux_right) {
    return h * flux_right + mu_last;
}

TridiagonalSystem assemble_potential(const GhostedTemperature& temperature, const Mesh& mesh,
                                     const CoefficientModel& model, Stiffness scheme) {
    require_layout(temperature, mesh);
    return scheme == Stiffness::paper_literal ? assemble_paper_literal(temperature, mesh, model)
                                              : assemble_corrected(temperature, mesh, model);
}

PotentialState solve_potential(const GhostedTemperature& temperature, const Mesh& mesh,
                               const CoefficientModel& model, Stiffness scheme) {
    const TridiagonalSystem sys = assemble_potential(temperature, mesh, model, scheme);
    std::vector<double> x = thomas_solve(sys);

    PotentialState state;
    state.scheme = scheme;
    state.report = {residual_norm(sys, x), max_abs(sys.rhs)};

    const double h = mesh.h();
    if (scheme == Stiffness::paper_literal) {
        x.push_back(ghost_potential_right(x.back(), h, model.flux_right));
        state.ghost_left = ghost_potential_left(x[0], x[1], h, model.flux_left);
    }
    state.mu = std::move(x);
    return state;
}

double check_current_compatibility(const GhostedTemperature& temperature,
                                   const CoefficientModel& model) {
    return eval_sigma(model, temperature.alpha.back()) * model.flux_right -
           eval_sigma(model, temperature.alpha.front()) * model.flux_left;
}

PotentialState initial_potential(const Mesh& mesh) {
    PotentialState state;
    state.mu = mesh.nodes();
    return state;
}

}  // namespace thermistor
