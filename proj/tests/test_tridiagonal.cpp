#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "thermistor/errors.hpp"
#include "thermistor/tridiagonal.hpp"

namespace thermistor {
namespace {

TridiagonalSystem random_dominant(std::mt19937_64& rng, std::size_t m) {
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    std::uniform_real_distribution<double> margin(0.1, 2.0);
    std::uniform_real_distribution<double> rhs(-10.0, 10.0);
    std::bernoulli_distribution flip(0.5);
    TridiagonalSystem sys(m);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        sys.sub[i] = off(rng);
        sys.super[i] = off(rng);
    }
    for (std::size_t i = 0; i < m; ++i) {
        const double d = std::abs(sys.lower(i)) + std::abs(sys.upper(i)) + margin(rng);
        sys.main[i] = flip(rng) ? d : -d;
        sys.rhs[i] = rhs(rng);
    }
    return sys;
}

TEST(Tridiagonal, IdentitySystem) {
    TridiagonalSystem sys(3);
    sys.main = {1, 1, 1};
    sys.rhs = {3, 4, 5};
    EXPECT_EQ(thomas_solve(sys), (std::vector<double>{3, 4, 5}));
    EXPECT_EQ(dense_solve_oracle(sys), (std::vector<double>{3, 4, 5}));
}

TEST(Tridiagonal, TwoByTwo) {
    TridiagonalSystem sys(2);
    sys.main = {2, 2};
    sys.sub = {-1};
    sys.super = {-1};
    sys.rhs = {1, 1};
    const auto x = thomas_solve(sys);
    EXPECT_NEAR(x[0], 1.0, 1e-15);
    EXPECT_NEAR(x[1], 1.0, 1e-15);
    const auto y = dense_solve_oracle(sys);
    EXPECT_NEAR(y[0], 1.0, 1e-15);
    EXPECT_NEAR(y[1], 1.0, 1e-15);
}

TEST(Tridiagonal, ZeroPivotReportsRow) {
    TridiagonalSystem sys(2);
    sys.main = {0, 1};
    sys.rhs = {1, 1};
    try {
        thomas_solve(sys);
        FAIL() << "expected SingularSystemError";
    } catch (const SingularSystemError& e) {
        EXPECT_EQ(e.row(), 0u);
    }
    EXPECT_THROW(dense_solve_oracle(sys), SingularSystemError);
}

TEST(Tridiagonal, LaterPivotBreakdown) {
    // [[1, 1], [1, 1]] is singular; the pivot of row 1 vanishes.
    TridiagonalSystem sys(2);
    sys.main = {1, 1};
    sys.sub = {1};
    sys.super = {1};
    sys.rhs = {1, 2};
    try {
        thomas_solve(sys);
        FAIL();
    } catch (const SingularSystemError& e) {
        EXPECT_EQ(e.row(), 1u);
    }
}

TEST(Tridiagonal, RejectsMalformedSystems) {
    TridiagonalSystem empty;
    EXPECT_THROW(thomas_solve(empty), std::invalid_argument);
    TridiagonalSystem bad(3);
    bad.sub.pop_back();
    EXPECT_THROW(thomas_solve(bad), std::invalid_argument);
    TridiagonalSystem nan(2);
    nan.main = {1, std::nan("")};
    EXPECT_THROW(thomas_solve(nan), std::invalid_argument);
}

TEST(Tridiagonal, ResidualNorm) {
    TridiagonalSystem sys(3);
    sys.main = {2, 2, 2};
    sys.sub = {-1, -1};
    sys.super = {-1, -1};
    sys.rhs = {1, 1, 1};
    const std::vector<double> zero(3, 0.0);
    EXPECT_EQ(residual_norm(sys, zero), 1.0);

    const auto x = thomas_solve(sys);
    EXPECT_LE(residual_norm(sys, x), 1e-12);

    // Perturbing x_1 by delta changes row 1 by main[1]*delta and rows 0, 2
    // by |off|*delta, so row 1 dominates.
    auto perturbed = x;
    const double delta = 1e-3;
    perturbed[1] += delta;
    EXPECT_NEAR(residual_norm(sys, perturbed), 2.0 * delta, 1e-12);

    EXPECT_THROW(residual_norm(sys, std::vector<double>(2, 0.0)), std::invalid_argument);
}

TEST(Tridiagonal, DenseOracleOnLargeDominantSystem) {
    std::mt19937_64 rng(7);
    const TridiagonalSystem sys = random_dominant(rng, 50);
    const auto x = dense_solve_oracle(sys);
    EXPECT_LE(residual_norm(sys, x), 1e-10);
}

TEST(Tridiagonal, ThomasMatchesDenseOracleProperty) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::size_t> size(1, 64);
    for (int trial = 0; trial < 1000; ++trial) {
        const TridiagonalSystem sys = random_dominant(rng, size(rng));
        const TridiagonalSystem copy = sys;
        const auto thomas = thomas_solve(sys);
        const auto dense = dense_solve_oracle(sys);

        double diff = 0.0;
        for (std::size_t i = 0; i < thomas.size(); ++i) {
            diff = std::max(diff, std::abs(thomas[i] - dense[i]));
        }
        ASSERT_LE(diff, 1e-10 * (1.0 + max_abs(dense))) << "trial " << trial;
        ASSERT_LE(residual_norm(sys, thomas), 1e-10 * (1.0 + max_abs(sys.rhs)));
        ASSERT_EQ(sys.main, copy.main);
        ASSERT_EQ(sys.sub, copy.sub);
        ASSERT_EQ(sys.super, copy.super);
        ASSERT_EQ(sys.rhs, copy.rhs);
    }
}

}  // namespace
}  // namespace thermistor
