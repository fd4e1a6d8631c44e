#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "fracbvp/fracops.hpp"
#include "oracles.hpp"

using namespace fracbvp;

namespace {

GridFn random_fn(std::mt19937_64& rng, double offset, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return GridFn(ShiftedGrid(offset, n), std::move(v));
}

}  // namespace

TEST(FracOrder, CeilingOrder) {
    EXPECT_EQ(FracOrder(2.5).n, 3);
    EXPECT_EQ(FracOrder(3.0).n, 3);
    EXPECT_EQ(FracOrder(0.2).n, 1);
    EXPECT_TRUE(FracOrder(3.0).is_integer());
    EXPECT_THROW(FracOrder(0.0), InvalidArgument);
    EXPECT_THROW(FracOrder(-1.0), InvalidArgument);
}

TEST(FracSum, ZeroFunction) {
    const GridFn z = GridFn::constant(ShiftedGrid(0.0, 8), 0.0);
    const GridFn out = frac_sum(z, 1.7);
    for (double x : out.values()) EXPECT_EQ(x, 0.0);
}

TEST(FracSum, OfOneMatchesPowerRule) {
    // Delta_a^{-v} 1 = (t-a)^(v) / Gamma(v+1), via tgamma
    for (double v : {0.5, 1.3, 2.5, 8.0 / 3.0}) {
        const GridFn one = GridFn::constant(ShiftedGrid(0.0, 15), 1.0);
        const GridFn s = frac_sum(one, v);
        EXPECT_NEAR(s.offset(), v, 1e-15);
        for (std::size_t k = 0; k < s.size(); ++k) {
            const double t = s.point(k);
            const double expected = oracle::falling(t, v) / std::tgamma(v + 1.0);
            EXPECT_NEAR(s[k], expected, 1e-12 * std::max(1.0, expected)) << "v = " << v << " t = " << t;
        }
    }
}

TEST(FracSum, OrderOneIsCumulativeSum) {
    const GridFn one = GridFn::constant(ShiftedGrid(0.0, 6), 1.0);
    const GridFn s = frac_sum(one, 1.0);
    for (std::size_t k = 0; k < s.size(); ++k) EXPECT_DOUBLE_EQ(s[k], static_cast<double>(k + 1));
}

TEST(FracSum, RejectsNonpositiveOrder) {
    const GridFn one = GridFn::constant(ShiftedGrid(0.0, 6), 1.0);
    EXPECT_THROW(frac_sum(one, 0.0), InvalidArgument);
}

TEST(CaputoDiff, ConstantIsAnnihilated) {
    const GridFn c = GridFn::constant(ShiftedGrid(0.0, 10), 4.2);
    const GridFn d = caputo_diff(c, 2.5);
    EXPECT_EQ(d.size(), 7u);
    EXPECT_NEAR(d.offset(), 0.5, 1e-15);
    for (double x : d.values()) EXPECT_EQ(x, 0.0);
}

TEST(CaputoDiff, QuadraticFallingIsAnnihilated) {
    const double a = -1.0 / 3.0;
    const GridFn f = GridFn::sample(ShiftedGrid(a, 12), [&](double t) { return falling_factorial(t - a, 2.0); });
    const GridFn out = caputo_diff(f, 2.5);
    for (double x : out.values()) EXPECT_NEAR(x, 0.0, 1e-10);
}

TEST(CaputoDiff, IntegerOrderOnCubic) {
    const GridFn f = GridFn::sample(ShiftedGrid(0.0, 10), [](double t) { return falling_factorial(t, 3.0); });
    const GridFn d = caputo_diff(f, 3.0);
    EXPECT_EQ(d.size(), 7u);
    for (double x : d.values()) EXPECT_DOUBLE_EQ(x, 6.0);
}

TEST(CaputoDiff, MatchesDirectDoubleSum) {
    std::mt19937_64 rng(21);
    for (double v : {8.0 / 3.0, 2.1, 0.4, 1.5, 3.0}) {
        const GridFn f = random_fn(rng, v - 3.0, 12);
        const GridFn d = caputo_diff(f, v);
        const auto ref = oracle::caputo_direct(std::vector<double>(f.values().begin(), f.values().end()), v);
        ASSERT_EQ(d.size(), ref.size());
        for (std::size_t k = 0; k < d.size(); ++k) EXPECT_NEAR(d[k], ref[k], 1e-11) << "v = " << v << " k = " << k;
    }
}

TEST(CaputoDiff, TooFewPoints) {
    const GridFn f = GridFn::constant(ShiftedGrid(0.0, 3), 1.0);
    EXPECT_THROW(caputo_diff(f, 2.5), InvalidArgument);
}

TEST(CaputoDiff, AnnihilatesQuadraticFallingPolynomials) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (double v : {2.1, 2.5, 8.0 / 3.0, 2.9, 3.0}) {
        const double a = v - 3.0;
        for (int trial = 0; trial < 20; ++trial) {
            const double c0 = u(rng), c1 = u(rng), c2 = u(rng);
            const GridFn f = GridFn::sample(ShiftedGrid(a, 15), [&](double t) {
                return c0 + c1 * falling_factorial(t - a, 1.0) + c2 * falling_factorial(t - a, 2.0);
            });
            const GridFn out = caputo_diff(f, v);
            for (double x : out.values()) EXPECT_LE(std::fabs(x), 1e-10);
        }
    }
}

// Fractional sum of the Caputo difference recovers f up to a quadratic
// falling polynomial in t-a.
TEST(CaputoDiff, SumOfDifferenceRecoversFunction) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> vd(2.0001, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double v = trial == 0 ? 3.0 : vd(rng);
        const double a = 0.3;
        const GridFn f = random_fn(rng, a, 14);
        const GridFn back = frac_sum(caputo_diff(f, v), v);
        ASSERT_NEAR(back.offset(), a + 3.0, 1e-12);

        std::vector<double> r(back.size());
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = back[k] - f(back.point(k));

        // fit C0 + C1 x + C2 x(x-1) at x = t-a = 3, 4, 5
        auto basis = [](double x) { return std::array<double, 3>{1.0, x, x * (x - 1.0)}; };
        double m[3][4];
        for (int i = 0; i < 3; ++i) {
            const auto b = basis(3.0 + i);
            for (int j = 0; j < 3; ++j) m[i][j] = b[j];
            m[i][3] = r[i];
        }
        for (int p = 0; p < 3; ++p)
            for (int i = p + 1; i < 3; ++i) {
                const double q = m[i][p] / m[p][p];
                for (int j = p; j < 4; ++j) m[i][j] -= q * m[p][j];
            }
        double c[3];
        for (int i = 2; i >= 0; --i) {
            double s = m[i][3];
            for (int j = i + 1; j < 3; ++j) s -= m[i][j] * c[j];
            c[i] = s / m[i][i];
        }
        const double scale = std::max(1.0, f.sup_norm());
        for (std::size_t k = 3; k < r.size(); ++k) {
            const auto b = basis(3.0 + static_cast<double>(k));
            const double fit = c[0] * b[0] + c[1] * b[1] + c[2] * b[2];
            EXPECT_LE(std::fabs(r[k] - fit) / scale, 1e-8) << "v = " << v << " k = " << k;
        }
    }
}

TEST(FracOps, Linearity) {
    std::mt19937_64 rng(13);
    for (double v : {0.7, 2.5, 8.0 / 3.0}) {
        const GridFn f = random_fn(rng, 0.0, 11);
        const GridFn g = random_fn(rng, 0.0, 11);
        const double al = 1.7, be = -0.4;
        const GridFn comb = GridFn::combine(f, al, g, be);
        for (auto op : {+[](const GridFn& x, double o) { return frac_sum(x, o); },
                        +[](const GridFn& x, double o) { return caputo_diff(x, o); }}) {
            const GridFn lhs = op(comb, v);
            const GridFn rhs = GridFn::combine(op(f, v), al, op(g, v), be);
            const double scale = std::max(1.0, rhs.sup_norm());
            for (std::size_t k = 0; k < lhs.size(); ++k) EXPECT_NEAR(lhs[k], rhs[k], 1e-12 * scale);
        }
    }
}
