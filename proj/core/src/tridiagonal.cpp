#include "thermistor/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "thermistor/errors.hpp"

namespace thermistor {

namespace {

constexpr double kPivotTolerance = 1e-14;

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double a) { return std::isfinite(a); });
}

}  // namespace

TridiagonalSystem::TridiagonalSystem(std::size_t size)
    : sub(size > 0 ? size - 1 : 0, 0.0),
      main(size, 0.0),
      super(size > 0 ? size - 1 : 0, 0.0),
      rhs(size, 0.0) {}

void TridiagonalSystem::validate() const {
    const std::size_t m = main.size();
    if (m == 0) {
        throw std::invalid_argument("tridiagonal system must have at least one row");
    }
    if (sub.size() != m - 1 || super.size() != m - 1 || rhs.size() != m) {
        throw std::invalid_argument("tridiagonal system has inconsistent diagonal lengths");
    }
    if (!all_finite(sub) || !all_finite(main) || !all_finite(super) || !all_finite(rhs)) {
        throw std::invalid_argument("tridiagonal system contains non-finite entries");
    }
}

std::vector<double> thomas_solve(const TridiagonalSystem& system) {
    system.validate();
    const std::size_t m = system.size();

    std::vector<double> c_prime(m, 0.0);
    std::vector<double> x(m, 0.0);

    // Forward sweep
    for (std::size_t i = 0; i < m; ++i) {
        const double lower = system.lower(i);
        const double upper = system.upper(i);
        const double pivot = system.main[i] - (i > 0 ? lower * c_prime[i - 1] : 0.0);
        const double row_scale =
            std::max({std::abs(lower), std::abs(system.main[i]), std::abs(upper)});
        if (std::abs(pivot) <= kPivotTolerance * row_scale || row_scale == 0.0) {
            throw SingularSystemError("singular tridiagonal system: zero pivot", i);
        }
        c_prime[i] = upper / pivot;
        x[i] = (system.rhs[i] - (i > 0 ? lower * x[i - 1] : 0.0)) / pivot;
    }

    // Back substitution
    for (std::size_t i = m - 1; i > 0; --i) {
        x[i - 1] -= c_prime[i - 1] * x[i];
    }
    return x;
}

std::vector<double> dense_solve_oracle(const TridiagonalSystem& system) {
    system.validate();
    const std::size_t m = system.size();

    std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        if (i > 0) a[i][i - 1] = system.sub[i - 1];
        a[i][i] = system.main[i];
        if (i + 1 < m) a[i][i + 1] = system.super[i];
        a[i][m] = system.rhs[i];
    }

    for (std::size_t col = 0; col < m; ++col) {
        std::size_t best = col;
        for (std::size_t r = col + 1; r < m; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[best][col])) best = r;
        }
        double scale = 0.0;
        for (std::size_t c = 0; c < m; ++c) scale = std::max(scale, std::abs(a[best][c]));
        if (scale == 0.0 || std::abs(a[best][col]) <= kPivotTolerance * scale) {
            throw SingularSystemError("singular dense system", col);
        }
        std::swap(a[col], a[best]);
        for (std::size_t r = col + 1; r < m; ++r) {
            const double factor = a[r][col] / a[col][col];
            if (factor == 0.0) continue;
            for (std::size_t c = col; c <= m; ++c) a[r][c] -= factor * a[col][c];
        }
    }

    std::vector<double> x(m, 0.0);
    for (std::size_t i = m; i-- > 0;) {
        double acc = a[i][m];
        for (std::size_t c = i + 1; c < m; ++c) acc -= a[i][c] * x[c];
        x[i] = acc / a[i][i];
    }
    return x;
}

double residual_norm(const TridiagonalSystem& system, std::span<const double> x) {
    const std::size_t m = system.size();
    if (x.size() != m) {
        throw std::invalid_argument("residual_norm: solution length " + std::to_string(x.size()) +
                                    " does not match system size " + std::to_string(m));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double row = system.main[i] * x[i] - system.rhs[i];
        if (i > 0) row += system.sub[i - 1] * x[i - 1];
        if (i + 1 < m) row += system.super[i] * x[i + 1];
        worst = std::max(worst, std::abs(row));
    }
    return worst;
}

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double a : v) m = std::max(m, std::abs(a));
    return m;
}

}  // namespace thermistor
