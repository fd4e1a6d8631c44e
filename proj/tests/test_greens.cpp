#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "fracbvp/bvp.hpp"
#include "fracbvp/greens.hpp"

using namespace fracbvp;

namespace {

constexpr double kV = 8.0 / 3.0;

const std::vector<double> kSweepV = {2.1, 2.5, 8.0 / 3.0, 2.9, 3.0};
const std::vector<long long> kSweepB = {1, 4, 9, 20};

ProblemSpec linear_spec(double v, long long b, std::vector<double> phi) {
    return ProblemSpec(v, b, 1.0, parse_expr("1", "t"), parse_expr("1", "y"), std::move(phi));
}

std::vector<double> phi_example(int id) {
    std::vector<double> c(13, 0.0);
    if (id == 1) {
        c[2] = 3.0;
        c[5] = 2.5;
    } else {
        c[1] = 7.0;
        c[6] = -2.0;
    }
    return c;
}

}  // namespace

TEST(Greens, RejectsOrderOutsideRange) {
    EXPECT_THROW(greens_matrix(2.0, 3), InvalidArgument);
    EXPECT_THROW(greens_matrix(3.5, 3), InvalidArgument);
    EXPECT_THROW(greens_matrix(1.5, 9), InvalidArgument);
    EXPECT_THROW(greens_matrix(2.5, -1), InvalidArgument);
}

TEST(Greens, IntegerOrderSmallCase) {
    const GreensMatrix g = greens_matrix(3.0, 1);
    ASSERT_EQ(g.rows(), 4u);
    ASSERT_EQ(g.cols(), 3u);
    const double expected[4][3] = {{3, 2, 1}, {6, 4, 2}, {8, 6, 3}, {9, 7, 4}};
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t s = 0; s < 3; ++s) EXPECT_NEAR(g(k, s), expected[k][s], 1e-12) << k << ' ' << s;
}

TEST(Greens, GoldenEntries) {
    const GreensMatrix g = greens_matrix(kV, 9);
    ASSERT_EQ(g.rows(), 12u);
    ASSERT_EQ(g.cols(), 11u);
    EXPECT_NEAR(g(0, 0), 5.4241689628345908159, 1e-12);
    EXPECT_NEAR(g(3, 2), 18.937831292655252417, 1e-12);
    EXPECT_NEAR(g(11, 0), 32.545013777007544895, 1e-12);
    EXPECT_NEAR(g(11, 10), 12.0, 1e-12);
    EXPECT_NEAR(g(6, 4), 26.931717725956409084, 1e-12);
    EXPECT_NEAR(g(5, 1), 25.62206152705568445, 1e-12);
}

TEST(Greens, VanishingRowAndColumn) {
    for (double v : {2.1, 2.5, kV, 2.9}) {
        for (long long b : kSweepB) {
            for (long long s = 0; s <= b + 2; ++s) EXPECT_EQ(greens_value(v, b, v - 3.0, s), 0.0);
            for (long long j = 0; j <= b + 3; ++j)
                EXPECT_EQ(greens_value(v, b, v - 3.0 + static_cast<double>(j), b + 2), 0.0);
        }
    }
}

TEST(Greens, ValueRejectsOffGridPoints) {
    EXPECT_THROW(greens_value(kV, 9, 0.5, 0), InvalidArgument);
    EXPECT_THROW(greens_value(kV, 9, kV + 10.0, 0), InvalidArgument);
    EXPECT_THROW(greens_value(kV, 9, kV, 12), InvalidArgument);
}

TEST(Greens, SweepNonnegativeWithTopRowMaximal) {
    for (double v : kSweepV) {
        for (long long b : kSweepB) {
            const GreensMatrix g = greens_matrix(v, b);
            for (std::size_t s = 0; s < g.cols(); ++s) {
                std::size_t arg = 0;
                for (std::size_t k = 0; k < g.rows(); ++k) {
                    EXPECT_GE(g(k, s), -1e-12) << v << ' ' << b << ' ' << k << ' ' << s;
                    if (g(k, s) > g(arg, s)) arg = k;
                }
                EXPECT_EQ(arg, g.top_row()) << v << ' ' << b << ' ' << s;
            }
            const ConeConstants cc = cone_constants(g);
            EXPECT_GT(cc.gamma, 0.0);
            EXPECT_LT(cc.gamma, 1.0);
        }
    }
}

TEST(Greens, Windows) {
    EXPECT_EQ(cone_window(kV, 9), (IndexWindow{3, 8}));
    EXPECT_EQ(rho_window(kV, 9), (IndexWindow{2, 7}));
    EXPECT_EQ(cone_window(3.0, 1), (IndexWindow{0, 2}));
}

TEST(Greens, GammaAndAlphaConstants) {
    const ConeConstants cc = cone_constants(greens_matrix(kV, 9));
    EXPECT_NEAR(cc.gamma, 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(cc.a_alpha, 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(cc.gamma_bar, 1.0 / 3.0, 1e-12);

    // window holding every row: gamma is the least ratio over all rows
    const GreensMatrix g = greens_matrix(3.0, 1);
    EXPECT_NEAR(compute_gamma(g, {3, 3}), 1.0, 1e-12);
    EXPECT_NEAR(compute_gamma(g, {0, 3}), 0.25, 1e-12);
}

TEST(Greens, EtaRhoGoldens) {
    const GreensMatrix g = greens_matrix(kV, 9);
    const GridFn h1 = GridFn::sample(ShiftedGrid(kV - 1.0, 11), [](double t) { return t * t; });
    const GridFn h2 = GridFn::sample(ShiftedGrid(kV - 1.0, 11), [](double t) { return std::exp(t); });
    EXPECT_NEAR(compute_eta(g, h1) / 27898.30903217924543, 1.0, 1e-12);
    EXPECT_NEAR(compute_rho(g, h1) / 836.82398422402486824, 1.0, 1e-12);
    EXPECT_NEAR(compute_eta(g, h2) / 5719737.1054923250237, 1.0, 1e-12);
    EXPECT_NEAR(compute_rho(g, h2) / 27163.228950443359207, 1.0, 1e-12);
    EXPECT_LE(compute_rho(g, h1), compute_eta(g, h1) / 2.0);
    EXPECT_LE(compute_rho(g, h2), compute_eta(g, h2) / 2.0);
}

TEST(Greens, EtaRhoScaleLinearly) {
    const GreensMatrix g = greens_matrix(2.5, 4);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    std::vector<double> hv(6);
    for (auto& x : hv) x = u(rng);
    const GridFn h(ShiftedGrid(1.5, 6), hv);
    EXPECT_NEAR(compute_eta(g, 4.0 * h), 4.0 * compute_eta(g, h), 1e-10 * compute_eta(g, h));
    EXPECT_NEAR(compute_rho(g, 4.0 * h), 4.0 * compute_rho(g, h), 1e-10 * compute_rho(g, h));
    EXPECT_LE(compute_rho(g, h), compute_eta(g, h) / 2.0);
}

TEST(Greens, ForcingShapeIsChecked) {
    const GreensMatrix g = greens_matrix(kV, 9);
    EXPECT_THROW(compute_eta(g, GridFn::constant(ShiftedGrid(kV - 1.0, 10), 1.0)), InvalidArgument);
    EXPECT_THROW(compute_eta(g, GridFn::constant(ShiftedGrid(kV, 11), 1.0)), InvalidArgument);
    EXPECT_THROW(compute_eta(g, GridFn::constant(ShiftedGrid(kV - 1.0, 11), -1.0)), InvalidArgument);
}

// Column s of G is the solution of the linear problem with phi = 0 and an
// impulse forcing at s.
TEST(Greens, ImpulseColumnsMatchOracle) {
    for (double v : kSweepV) {
        for (long long b : {1LL, 4LL, 9LL}) {
            const GreensMatrix g = greens_matrix(v, b);
            const ProblemSpec spec = linear_spec(v, b, std::vector<double>(static_cast<std::size_t>(b + 4), 0.0));
            for (std::size_t s = 0; s < g.cols(); ++s) {
                std::vector<double> e(g.cols(), 0.0);
                e[s] = 1.0;
                const GridFn y = solve_linear_oracle(spec, GridFn(spec.forcing_grid(), e));
                std::vector<double> col(g.rows()), ora(g.rows());
                for (std::size_t k = 0; k < g.rows(); ++k) {
                    col[k] = g(k, s);
                    ora[k] = y[k + 1];
                }
                EXPECT_LE(relative_sup_error(col, ora), 1e-9) << v << ' ' << b << ' ' << s;
                EXPECT_NEAR(y[0], 0.0, 1e-9);
            }
        }
    }
}

TEST(Greens, SolveMatchesOracleWithExamplePhi) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    for (int id : {1, 2}) {
        const ProblemSpec spec = linear_spec(kV, 9, phi_example(id));
        const GreensMatrix g = greens_matrix(kV, 9);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> hv(spec.forcing_size());
            for (auto& x : hv) x = u(rng);
            const GridFn h(spec.forcing_grid(), hv);
            const GridFn a = greens_solve_linear(h, spec, g);
            const GridFn b = solve_linear_oracle(spec, h);
            EXPECT_LE(relative_sup_error(a.values(), b.values()), 1e-9) << id << ' ' << trial;
            EXPECT_LE(verify_linear(a, spec, h), 1e-8 * std::max(1.0, b.sup_norm()));
        }
    }
}

TEST(Greens, ResonantFunctionalIsRejected) {
    // phi(alpha) = c_1/(b+3) * 1 = 1
    std::vector<double> c(13, 0.0);
    c[1] = 12.0;
    const ProblemSpec spec = linear_spec(kV, 9, c);
    EXPECT_THROW(greens_solve_linear(sample_forcing(spec), spec, greens_matrix(kV, 9)), ResonantFunctional);
}
