#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace thermistor {

/// Uniform partition of [0, 1] into N elements with the P1 hat basis.
///
/// Node j sits at x_j = j*h. Basis functions exist only for j = 0..N; the
/// two boundary hats are half-hats clipped to the domain. Ghost indices -1
/// and N used by the ghost-node boundary treatment are eliminated
/// algebraically by the assembly code and never appear here.
class Mesh {
public:
    /// Throws ConfigError when n_elements < 3.
    explicit Mesh(std::size_t n_elements);

    std::size_t n_elements() const noexcept { return n_elements_; }
    std::size_t n_nodes() const noexcept { return n_elements_ + 1; }
    double h() const noexcept { return h_; }
    double node(std::size_t j) const { return nodes_.at(j); }
    const std::vector<double>& nodes() const noexcept { return nodes_; }

    /// Value of hat function v_j at x. Throws std::out_of_range for j > N or
    /// x outside [0, 1].
    double eval_hat(std::size_t j, double x) const;

    /// Consistent mass stencil (h/6, 2h/3, h/6) of interior row j.
    std::array<double, 3> mass_row(std::size_t j) const;

private:
    std::size_t n_elements_;
    double h_;
    std::vector<double> nodes_;
};

inline Mesh build_mesh(std::size_t n_elements) { return Mesh(n_elements); }

}  // namespace thermistor
