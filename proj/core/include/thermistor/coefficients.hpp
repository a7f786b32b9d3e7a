#pragma once

#include <functional>
#include <map>
#include <string>

namespace thermistor {

/// Physics of one thermistor run: conductivities as functions of
/// temperature, the Robin heat-transfer coefficient and the two boundary
/// values of the prescribed potential gradient.
struct CoefficientModel {
    std::function<double(double)> thermal_conductivity;
    std::function<double(double)> electrical_conductivity;
    double heat_transfer = 0.0;
    double flux_left = 1.0;
    double flux_right = 1.0;
};

enum class ModelKind { constant, paper_example, rational_sigma };

/// Declarative model description as read from a config file.
///
///   constant        k = k0,  sigma = sigma0
///   paper_example   k = 1,   sigma = gamma
///   rational_sigma  k = k0,  sigma = sigma0 / (1 + lambda*u)^2
struct ModelSpec {
    ModelKind kind = ModelKind::paper_example;
    std::map<std::string, double> parameters;

    double parameter(const std::string& key) const;
};

/// Throws ConfigError for missing or invalid parameters.
CoefficientModel make_model(const ModelSpec& spec, double beta, double flux_left,
                            double flux_right);

/// k(u); throws ModelError when the result is not strictly positive.
double eval_k(const CoefficientModel& model, double u);

/// sigma(u); throws ModelError when the result is negative or not finite.
double eval_sigma(const CoefficientModel& model, double u);

/// True iff 1/beta + 1/2 <= 1/gamma. Throws ConfigError for nonpositive input.
bool validate_physical(double beta, double gamma);

const char* to_string(ModelKind kind);

}  // namespace thermistor
