#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace thermistor {

/// Row i reads  sub[i-1]*x[i-1] + main[i]*x[i] + super[i]*x[i+1] = rhs[i].
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> main;
    std::vector<double> super;
    std::vector<double> rhs;

    TridiagonalSystem() = default;
    /// Zero-filled system of the given size.
    explicit TridiagonalSystem(std::size_t size);

    std::size_t size() const noexcept { return main.size(); }

    /// Throws std::invalid_argument on inconsistent lengths, empty systems or
    /// non-finite entries.
    void validate() const;

    /// (sub, main, super) coefficients of row i, with zero in unused slots.
    double lower(std::size_t i) const { return i == 0 ? 0.0 : sub[i - 1]; }
    double upper(std::size_t i) const { return i + 1 == size() ? 0.0 : super[i]; }
};

/// Thomas algorithm without pivoting. Throws SingularSystemError when a pivot
/// falls below 1e-14 times the largest absolute entry of its row.
std::vector<double> thomas_solve(const TridiagonalSystem& system);

/// Gaussian elimination with partial pivoting on the equivalent dense
/// matrix. O(m^3); used to cross-check thomas_solve.
std::vector<double> dense_solve_oracle(const TridiagonalSystem& system);

/// max_i |(T x)_i - rhs_i|.
double residual_norm(const TridiagonalSystem& system, std::span<const double> x);

/// max_i |v_i|, 0 for an empty span.
double max_abs(std::span<const double> v);

}  // namespace thermistor
