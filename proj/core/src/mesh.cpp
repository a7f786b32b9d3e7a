#include "thermistor/mesh.hpp"

#include <stdexcept>
#include <string>

#include "thermistor/errors.hpp"

namespace thermistor {

Mesh::Mesh(std::size_t n_elements) : n_elements_(n_elements), h_(0.0) {
    if (n_elements < 3) {
        throw ConfigError("n_elements must be at least 3, got " + std::to_string(n_elements));
    }
    h_ = 1.0 / static_cast<double>(n_elements);
    nodes_.resize(n_elements + 1);
    for (std::size_t j = 0; j <= n_elements; ++j) {
        nodes_[j] = static_cast<double>(j) * h_;
    }
    nodes_.back() = 1.0;
}

double Mesh::eval_hat(std::size_t j, double x) const {
    if (j > n_elements_) {
        throw std::out_of_range("hat index " + std::to_string(j) + " outside 0.." +
                                std::to_string(n_elements_));
    }
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::out_of_range("hat argument outside [0, 1]");
    }
    if (x == nodes_[j]) {
        return 1.0;
    }
    const double left = j == 0 ? 0.0 : nodes_[j - 1];
    const double right = j == n_elements_ ? 1.0 : nodes_[j + 1];
    if (x <= left || x >= right) {
        return 0.0;
    }
    // Same lines as x/h + (1 - j) and -x/h + (1 + j), written in local
    // coordinates so the support edges evaluate to exactly zero.
    if (x < nodes_[j]) {
        return (x - left) / h_;
    }
    return (right - x) / h_;
}

std::array<double, 3> Mesh::mass_row(std::size_t j) const {
    if (j == 0 || j >= n_elements_) {
        throw std::out_of_range("mass_row requires an interior node, got " + std::to_string(j));
    }
    return {h_ / 6.0, 2.0 * h_ / 3.0, h_ / 6.0};
}

}  // namespace thermistor
