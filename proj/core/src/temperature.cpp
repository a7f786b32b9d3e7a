#include "thermistor/temperature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "thermistor/errors.hpp"

namespace thermistor {

namespace {

void require_layout(const TemperatureState& state, const PotentialState& potential,
                    const Mesh& mesh) {
    if (state.alpha.size() != mesh.n_nodes() || state.alpha_prev.size() != mesh.n_nodes()) {
        throw std::invalid_argument("temperature state does not match the mesh");
    }
    if (potential.mu.size() != mesh.n_nodes()) {
        throw std::invalid_argument("potential state does not match the mesh");
    }
}

double square(double v) { return v * v; }

// Row j of the symmetric weak form; k_mid[i] is k on element (x_i, x_{i+1}).
TridiagonalSystem assemble_corrected(const TemperatureState& state,
                                     const PotentialState& potential, const Mesh& mesh,
                                     const CoefficientModel& model, double tau,
                                     const SchemeVariant& variant) {
    const std::size_t n = mesh.n_elements();
    const double h = mesh.h();
    const double beta = model.heat_transfer;
    const std::vector<double>& a = state.alpha;

    std::vector<double> k_mid(n);
    double k_left = eval_k(model, a[0]);
    for (std::size_t i = 0; i < n; ++i) {
        const double k_right = eval_k(model, a[i + 1]);
        k_mid[i] = 0.5 * (k_left + k_right);
        k_left = k_right;
    }

    TridiagonalSystem sys(n + 1);

    sys.main[0] = h / 3.0 + tau * (k_mid[0] / h + beta);
    sys.super[0] = h / 6.0 - tau * k_mid[0] / h;
    sys.rhs[0] = h / 3.0 * a[0] + h / 6.0 * a[1];

    for (std::size_t j = 1; j < n; ++j) {
        sys.sub[j - 1] = h / 6.0 - tau * k_mid[j - 1] / h;
        sys.main[j] = 2.0 * h / 3.0 + tau * (k_mid[j - 1] + k_mid[j]) / h;
        sys.super[j] = h / 6.0 - tau * k_mid[j] / h;
        sys.rhs[j] = h / 6.0 * a[j - 1] + 2.0 * h / 3.0 * a[j] + h / 6.0 * a[j + 1];
    }

    sys.sub[n - 1] = h / 6.0 - tau * k_mid[n - 1] / h;
    sys.main[n] = h / 3.0 + tau * (k_mid[n - 1] / h + beta);
    sys.rhs[n] = h / 6.0 * a[n - 1] + h / 3.0 * a[n];

    for (std::size_t j = 0; j <= n; ++j) {
        sys.rhs[j] += source_term(a, potential, j, mesh, model, tau, variant);
    }
    return sys;
}

// Unknowns alpha_0..alpha_{N-1}. Interior rows follow the lagged stencil
// with its (k_{j+1} + k_{j-1}) diagonal; rows 0 and N-1 have the ghost
// values eliminated through the a..f coefficients.
TridiagonalSystem assemble_paper_literal(const TemperatureState& state,
                                         const PotentialState& potential, const Mesh& mesh,
                                         const CoefficientModel& model, double tau,
                                         const SchemeVariant& variant) {
    const std::size_t n = mesh.n_elements();
    const double h = mesh.h();
    const double beta = model.heat_transfer;
    const std::vector<double>& a = state.alpha;
    const std::vector<double>& a_prev = state.alpha_prev;

    std::vector<double> k(n + 1);
    for (std::size_t j = 0; j <= n; ++j) k[j] = eval_k(model, a[j]);
    const double k_prev_0 = eval_k(model, a_prev[0]);
    const double k_prev_n = eval_k(model, a_prev[n]);
    const double ghost = ghost_temp_left(a[1], a[0], k_prev_0, h, beta);
    const double k_ghost = eval_k(model, ghost);

    const double half = tau / (2.0 * h);
    const double full = tau / h;

    TridiagonalSystem sys(n);

    // j = 0
    const double ca = h / 6.0 - half * (k[0] + k_ghost);
    const double cb = 2.0 * h / 3.0 + full * (k[1] + k_ghost);
    const double cc = h / 6.0 - half * (k[1] + k[0]);
    sys.main[0] = ca * (beta * h / k[0] - 1.0) + cb - tau * beta;
    sys.super[0] = ca + cc;
    sys.rhs[0] = h / 2.0 * (1.0 + h * beta / (3.0 * k_prev_0)) * a[0] + h / 3.0 * a[1];

    // j = 1..N-2
    for (std::size_t j = 1; j + 1 < n; ++j) {
        sys.sub[j - 1] = h / 6.0 - half * (k[j] + k[j - 1]);
        sys.main[j] = 2.0 * h / 3.0 + full * (k[j + 1] + k[j - 1]);
        sys.super[j] = h / 6.0 - half * (k[j + 1] + k[j]);
        sys.rhs[j] = h / 6.0 * a[j - 1] + 2.0 * h / 3.0 * a[j] + h / 6.0 * a[j + 1];
    }

    // j = N-1
    const std::size_t last = n - 1;
    const double cd = h / 6.0 - half * (k[last] + k[last - 1]);
    const double ce = 2.0 * h / 3.0 + full * (k[n] + k[last - 1]);
    const double cf = h / 6.0 - half * (k[n] + k[last]);
    sys.sub[last - 1] = cd;
    sys.main[last] = ce + k[n] / (beta * h + k[n]) * cf;
    sys.rhs[last] = h / 6.0 * a[last - 1] +
                    h / 6.0 * (4.0 + k_prev_n / (beta * h + k_prev_n)) * a[last];

    for (std::size_t j = 0; j < n; ++j) {
        sys.rhs[j] += source_term(a, potential, j, mesh, model, tau, variant);
    }
    return sys;
}

}  // namespace

TemperatureState initial_temperature(const Mesh& mesh) {
    TemperatureState state;
    state.alpha.assign(mesh.n_nodes(), 0.0);
    state.alpha_prev.assign(mesh.n_nodes(), 0.0);
    return state;
}

double ghost_temp_left(double alpha1, double alpha0, double k_at_prev_alpha0, double h,
                       double beta) {
    if (!(k_at_prev_alpha0 > 0.0)) {
        throw ModelError("ghost_temp_left requires k > 0");
    }
    return alpha1 + (h * beta / k_at_prev_alpha0 - 1.0) * alpha0;
}

double ghost_temp_right(double alpha_last, double k_at_prev_alphaN, double h, double beta) {
    const double denom = beta * h + k_at_prev_alphaN;
    if (!(denom > 0.0)) {
        throw ModelError("ghost_temp_right requires beta*h + k > 0");
    }
    return k_at_prev_alphaN / denom * alpha_last;
}

GhostedTemperature with_ghosts(const TemperatureState& state, const Mesh& mesh,
                               const CoefficientModel& model) {
    if (state.alpha.size() != mesh.n_nodes() || state.alpha_prev.size() != mesh.n_nodes()) {
        throw std::invalid_argument("temperature state does not match the mesh");
    }
    GhostedTemperature g;
    g.alpha = state.alpha;
    g.ghost_left = ghost_temp_left(state.alpha[1], state.alpha[0],
                                   eval_k(model, state.alpha_prev[0]), mesh.h(),
                                   model.heat_transfer);
    return g;
}

double source_term(std::span<const double> alpha, const PotentialState& potential, std::size_t j,
                   const Mesh& mesh, const CoefficientModel& model, double tau,
                   const SchemeVariant& variant) {
    const std::size_t n = mesh.n_elements();
    const bool literal_layout = variant.temperature == Stiffness::paper_literal;
    const std::size_t rows = literal_layout ? n : n + 1;
    if (j >= rows) {
        throw std::out_of_range("source_term row " + std::to_string(j) + " outside layout");
    }
    const double h = mesh.h();
    const std::vector<double>& mu = potential.mu;
    const double sigma = eval_sigma(model, alpha[j]);

    if (variant.source == SourceQuadrature::paper_literal && j < n) {
        if (j == 0) {
            return tau / h * sigma * square(2.0 * mu[0] + h * model.flux_left);
        }
        if (j == n - 1) {
            return tau / h * sigma * square(2.0 * mu[n - 1] - mu[n - 2] + h * model.flux_right);
        }
        return tau / h * sigma * square(-mu[j - 1] + mu[j] + mu[j + 1]);
    }

    // Central quadrature. Node 0 of the ghost-node layout owns a full hat,
    // so only the corrected layout uses the half-support weight there.
    if (j == 0) {
        const double weight = literal_layout ? tau * h : 0.5 * tau * h;
        return weight * sigma * square((mu[1] - mu[0]) / h);
    }
    if (j == n) {
        return 0.5 * tau * h * sigma * square((mu[n] - mu[n - 1]) / h);
    }
    return tau * h * sigma * square((mu[j + 1] - mu[j - 1]) / (2.0 * h));
}

TridiagonalSystem assemble_temperature(const TemperatureState& state,
                                       const PotentialState& potential, const Mesh& mesh,
                                       const CoefficientModel& model, double tau,
                                       const SchemeVariant& variant) {
    require_layout(state, potential, mesh);
    TridiagonalSystem sys =
        variant.temperature == Stiffness::paper_literal
            ? assemble_paper_literal(state, potential, mesh, model, tau, variant)
            : assemble_corrected(state, potential, mesh, model, tau, variant);
    for (double v : sys.rhs) {
        if (!std::isfinite(v)) {
            throw NumericalFailure("non-finite right-hand side in temperature system", state.step);
        }
    }
    return sys;
}

TemperatureState solve_temperature(const TemperatureState& state,
                                   const PotentialState& potential, const Mesh& mesh,
                                   const CoefficientModel& model, double tau,
                                   const SchemeVariant& variant, SolveReport* report) {
    const TridiagonalSystem sys = assemble_temperature(state, potential, mesh, model, tau, variant);
    std::vector<double> x = thomas_solve(sys);
    if (report != nullptr) {
        *report = {residual_norm(sys, x), max_abs(sys.rhs)};
    }

    if (variant.temperature == Stiffness::paper_literal) {
        const std::size_t n = mesh.n_elements();
        x.push_back(ghost_temp_right(x[n - 1], eval_k(model, state.alpha[n]), mesh.h(),
                                     model.heat_transfer));
    }
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw NumericalFailure("non-finite temperature", state.step);
        }
    }

    TemperatureState next;
    next.alpha = std::move(x);
    next.alpha_prev = state.alpha;
    next.time = static_cast<double>(state.step + 1) * tau;
    next.step = state.step + 1;
    return next;
}

}  // namespace thermistor
