#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "fracbvp/specfun.hpp"
#include "oracles.hpp"

using namespace fracbvp;

namespace {

double rel_err(double a, double b) { return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)}); }

}  // namespace

TEST(LogGamma, IntegerArgument) {
    const SignedLog g = log_gamma_signed(5.0);
    EXPECT_EQ(g.sign, 1);
    EXPECT_NEAR(g.log_abs, std::log(24.0), 1e-13);
}

TEST(LogGamma, HalfIntegers) {
    const SignedLog half = log_gamma_signed(0.5);
    EXPECT_EQ(half.sign, 1);
    EXPECT_NEAR(half.log_abs, 0.57236494292470008707, 1e-13);

    const SignedLog neg_half = log_gamma_signed(-0.5);
    EXPECT_EQ(neg_half.sign, -1);
    EXPECT_NEAR(neg_half.log_abs, 1.2655121234846453965, 1e-13);
}

TEST(LogGamma, PolesThrow) {
    EXPECT_THROW(log_gamma_signed(-3.0), PoleError);
    EXPECT_THROW(log_gamma_signed(0.0), PoleError);
    EXPECT_THROW(log_gamma_signed(-2.0 + 1e-13), PoleError);
    EXPECT_THROW(log_gamma_signed(std::nan("")), InvalidArgument);
}

TEST(LogGamma, SignAlternatesOnNegativeAxis) {
    for (int k = 0; k < 8; ++k) {
        const double x = -k - 0.37;  // in (-k-1, -k)
        const int expected = (k + 1) % 2 == 0 ? 1 : -1;
        EXPECT_EQ(log_gamma_signed(x).sign, expected) << "x = " << x;
    }
}

TEST(LogGamma, AgreesWithLibmToTwelveDigits) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = dist(rng);
        if (is_gamma_pole(x, 1e-6)) continue;
        const SignedLog g = log_gamma_signed(x);
        const double ref = std::tgamma(x);
        // relative accuracy of Gamma itself
        EXPECT_LT(std::fabs(std::expm1(g.log_abs - std::log(std::fabs(ref)))), 1e-12) << "x = " << x;
        EXPECT_EQ(g.sign, ref > 0 ? 1 : -1) << "x = " << x;
    }
}

TEST(SignedLog, RoundTrip) {
    for (double x : {3.5, -1e-200, 7e250, -0.125}) {
        const SignedLog s = SignedLog::from_double(x);
        EXPECT_NEAR(s.to_double(), x, std::fabs(x) * 1e-13);
    }
    EXPECT_EQ(SignedLog::from_double(0.0).sign, 0);
    EXPECT_EQ(SignedLog::from_double(0.0).to_double(), 0.0);
}

TEST(IsGammaPole, Examples) {
    EXPECT_TRUE(is_gamma_pole(0.0, 1e-9));
    EXPECT_TRUE(is_gamma_pole(-2.0 + 1e-12, 1e-9));
    EXPECT_FALSE(is_gamma_pole(0.5, 1e-9));
    EXPECT_FALSE(is_gamma_pole(1.0, 1e-9));
    EXPECT_THROW(is_gamma_pole(0.0, 0.0), InvalidArgument);
}

TEST(FallingFactorial, Examples) {
    EXPECT_EQ(falling_factorial(5.0, 2.0), 20.0);
    EXPECT_EQ(falling_factorial(3.7, 0.0), 1.0);
    EXPECT_NEAR(falling_factorial(2.5, 1.5), 3.3233509704478425512, 1e-13);
    // t = v-3 with exponent v-2: Gamma(0) in the denominator
    const double v = 2.6;
    EXPECT_EQ(falling_factorial(v - 3.0, v - 2.0), 0.0);
}

TEST(FallingFactorial, UndefinedCases) {
    EXPECT_THROW(falling_factorial(-1.0, 0.5), UndefinedValue);   // Gamma(0)/Gamma(0.5)
    EXPECT_THROW(falling_factorial(-2.0, 1.0), UndefinedValue);   // Gamma(-1)/Gamma(-2)
    EXPECT_THROW(falling_factorial(1.0, std::nan("")), InvalidArgument);
}

TEST(FallingFactorial, MatchesTgammaOracle) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> td(-0.9, 40.0);
    std::uniform_real_distribution<double> vd(0.0, 4.0);
    for (int i = 0; i < 1000; ++i) {
        const double t = td(rng);
        const double v = vd(rng);
        EXPECT_LT(rel_err(falling_factorial(t, v), oracle::falling(t, v)), 1e-11) << t << ' ' << v;
    }
}

TEST(FallingFactorial, Recurrence) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> td(-0.95, 60.0);
    std::uniform_real_distribution<double> vd(0.0, 5.0);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const double t = td(rng);
        const double v = vd(rng);
        if (is_gamma_pole(t + 1.0 - v, 1e-6)) continue;
        const double lhs = falling_factorial(t + 1.0, v);
        const double rhs = (t + 1.0) / (t + 1.0 - v) * falling_factorial(t, v);
        EXPECT_LT(rel_err(lhs, rhs), 1e-10) << t << ' ' << v;
        ++checked;
    }
    EXPECT_GT(checked, 900);
}

TEST(FallingFactorial, IntegerAgreement) {
    for (int t = 0; t <= 20; ++t)
        for (int v = 0; v <= t; ++v)
            EXPECT_EQ(falling_factorial(t, v), oracle::falling_product(t, v)) << t << ' ' << v;
}

TEST(FallingFactorial, PowerRule) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> td(0.0, 30.0);
    std::uniform_real_distribution<double> vd(0.5, 4.0);
    for (int i = 0; i < 1000; ++i) {
        const double t = td(rng);
        const double v = vd(rng);
        const double lhs = falling_factorial(t + 1.0, v) - falling_factorial(t, v);
        const double rhs = v * falling_factorial(t, v - 1.0);
        const double scale = std::max({1.0, std::fabs(falling_factorial(t + 1.0, v)), std::fabs(rhs)});
        EXPECT_LT(std::fabs(lhs - rhs) / scale, 1e-9) << t << ' ' << v;
    }
}

TEST(FallingFactorial, PoleConvention) {
    // k+1-v a nonpositive integer, k+1 not a pole
    for (double v : {2.1, 2.5, 8.0 / 3.0, 3.0, 4.25}) {
        for (int m = 0; m <= 5; ++m) {
            const double k = v - 1.0 - m;  // k+1-v = -m
            if (is_gamma_pole(k + 1.0, kPoleTolerance)) continue;
            EXPECT_EQ(falling_factorial(k, v), 0.0) << "k = " << k << " v = " << v;
        }
    }
}
