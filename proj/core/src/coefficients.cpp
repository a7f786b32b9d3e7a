#include "thermistor/coefficients.hpp"

#include <cmath>
#include <sstream>

#include "thermistor/errors.hpp"

namespace thermistor {

double ModelSpec::parameter(const std::string& key) const {
    const auto it = parameters.find(key);
    if (it == parameters.end()) {
        throw ConfigError(std::string("model '") + to_string(kind) + "' requires parameter '" +
                          key + "'");
    }
    return it->second;
}

CoefficientModel make_model(const ModelSpec& spec, double beta, double flux_left,
                            double flux_right) {
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
        throw ConfigError("beta must be finite and nonnegative");
    }
    CoefficientModel model;
    model.heat_transfer = beta;
    model.flux_left = flux_left;
    model.flux_right = flux_right;

    switch (spec.kind) {
    case ModelKind::constant: {
        const double k0 = spec.parameter("k0");
        const double sigma0 = spec.parameter("sigma0");
        model.thermal_conductivity = [k0](double) { return k0; };
        model.electrical_conductivity = [sigma0](double) { return sigma0; };
        break;
    }
    case ModelKind::paper_example: {
        const double gamma = spec.parameter("gamma");
        model.thermal_conductivity = [](double) { return 1.0; };
        model.electrical_conductivity = [gamma](double) { return gamma; };
        break;
    }
    case ModelKind::rational_sigma: {
        const double k0 = spec.parameter("k0");
        const double sigma0 = spec.parameter("sigma0");
        const double lambda = spec.parameter("lambda");
        model.thermal_conductivity = [k0](double) { return k0; };
        model.electrical_conductivity = [sigma0, lambda](double u) {
            const double d = 1.0 + lambda * u;
            return sigma0 / (d * d);
        };
        break;
    }
    }
    return model;
}

double eval_k(const CoefficientModel& model, double u) {
    const double k = model.thermal_conductivity(u);
    if (!(k > 0.0) || !std::isfinite(k)) {
        std::ostringstream msg;
        msg << "thermal conductivity k(" << u << ") = " << k << " is not positive";
        throw ModelError(msg.str());
    }
    return k;
}

double eval_sigma(const CoefficientModel& model, double u) {
    const double sigma = model.electrical_conductivity(u);
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        std::ostringstream msg;
        msg << "electrical conductivity sigma(" << u << ") = " << sigma << " is negative";
        throw ModelError(msg.str());
    }
    return sigma;
}

bool validate_physical(double beta, double gamma) {
    if (!(beta > 0.0) || !(gamma > 0.0)) {
        throw ConfigError("validate_physical requires beta > 0 and gamma > 0");
    }
    return 1.0 / beta + 0.5 <= 1.0 / gamma;
}

const char* to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::constant:
        return "constant";
    case ModelKind::paper_example:
        return "paper_example";
    case ModelKind::rational_sigma:
        return "rational_sigma";
    }
    return "unknown";
}

}  // namespace thermistor
