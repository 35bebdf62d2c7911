#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gft/series.hpp"

using gft::TruncatedSeries;
using cx = std::complex<double>;

namespace {

TruncatedSeries poly(std::initializer_list<cx> c, std::size_t order) { return TruncatedSeries(c, order); }

void expect_series_near(const TruncatedSeries& a, const TruncatedSeries& b, double tol = 1e-12) {
    ASSERT_EQ(a.order(), b.order());
    for (std::size_t n = 0; n <= a.order(); ++n) EXPECT_NEAR(std::abs(a[n] - b[n]), 0.0, tol) << "coefficient " << n;
}

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order, cx c0) {
    std::normal_distribution<double> g;
    TruncatedSeries s(order);
    s[0] = c0;
    for (std::size_t n = 1; n <= order; ++n) s[n] = cx(g(rng), g(rng)) / static_cast<double>(n);
    return s;
}

} // namespace

TEST(Series, AddCancels) {
    expect_series_near(poly({1, 1}, 4) + poly({1, -1}, 4), TruncatedSeries::constant(2.0, 4));
}

TEST(Series, AddIdentity) {
    const auto s = poly({1, 2, 3}, 5);
    expect_series_near(TruncatedSeries(5) + s, s);
}

TEST(Series, AddTruncatesToSmallerOrder) {
    const auto r = gft::add(poly({1, 2, 3}, 2), poly({1, 1}, 1));
    ASSERT_EQ(r.order(), 1u);
    EXPECT_EQ(r[0], cx(2));
    EXPECT_EQ(r[1], cx(3));
}

TEST(Series, MulBasics) {
    expect_series_near(poly({1, 1}, 3) * poly({1, -1}, 3), poly({1, 0, -1}, 3));
    const auto s = poly({1, 2, 3, 4}, 4);
    expect_series_near(s * TruncatedSeries::constant(1.0, 4), s);
    expect_series_near(gft::mul(poly({1, 1, 1}, 2), poly({1, 1, 1}, 2)), poly({1, 2, 3}, 2));
}

TEST(Series, Div) {
    expect_series_near(poly({1, 0, -1}, 5) / poly({1, -1}, 5), poly({1, 1}, 5));
    const auto s = poly({2, 1, -3, 0.5}, 6);
    expect_series_near(s / s, TruncatedSeries::constant(1.0, 6));
}

TEST(Series, DivGuardsSmallConstantTerm) {
    EXPECT_THROW(poly({1}, 3) / poly({1e-7, 1}, 3), gft::division_by_near_zero_constant_term);
    EXPECT_NO_THROW(poly({1}, 3) / poly({1e-5, 1}, 3));
}

TEST(Series, HalfPlaneToDisk) {
    const std::size_t order = 8;
    const auto one = TruncatedSeries::constant(1.0, order);
    const auto z = TruncatedSeries::identity(order);
    const auto p = (one + z) / (one - z);
    const auto w = (p - one) / (p + one);
    expect_series_near(w, z);
}

TEST(Series, ComposeSecondAndThirdCoefficient) {
    const double b1 = 1.3, b2 = -0.7, b3 = 0.4;
    const cx c1(0.3, 0.2), c2(-0.1, 0.5), c3(0.25, -0.35);
    const auto outer = poly({1, b1, b2, b3}, 3);
    const auto inner = poly({0, c1, c2, c3}, 3);
    const auto r = gft::compose(outer, inner);
    EXPECT_NEAR(std::abs(r[2] - (b2 * c1 * c1 + b1 * c2)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(r[3] - (b3 * c1 * c1 * c1 + 2.0 * b2 * c1 * c2 + b1 * c3)), 0.0, 1e-14);
}

TEST(Series, ComposeWithIdentity) {
    const auto s = poly({1, 2, -1, 0.5, 3}, 6);
    expect_series_near(gft::compose(s, TruncatedSeries::identity(6)), s);
}

TEST(Series, ComposeRejectsInnerConstant) {
    EXPECT_THROW(gft::compose(poly({1, 1}, 3), poly({0.1, 1}, 3)), gft::inner_constant_term_nonzero);
}

TEST(Series, Log1) {
    expect_series_near(gft::log1(TruncatedSeries::constant(1.0, 5)), TruncatedSeries(5));
    const auto z = TruncatedSeries::identity(7);
    expect_series_near(gft::log1(gft::exps(z)), z);
    EXPECT_THROW(gft::log1(poly({2, 1}, 3)), gft::constant_term_not_one);
}

TEST(Series, Log1OfKoebeQuotient) {
    // log(1/(1-z)^2) = 2 sum z^n / n
    const std::size_t order = 10;
    const auto one = TruncatedSeries::constant(1.0, order);
    const auto q = one - TruncatedSeries::identity(order);
    const auto l = gft::log1(one / (q * q));
    for (std::size_t n = 1; n <= order; ++n) EXPECT_NEAR(std::abs(l[n] - 2.0 / static_cast<double>(n)), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(l[3] - 2.0 / 3.0), 0.0, 1e-15);
}

TEST(Series, Exps) {
    expect_series_near(gft::exps(TruncatedSeries(4)), TruncatedSeries::constant(1.0, 4));
    const auto one_plus_z = poly({1, 1}, 6);
    expect_series_near(gft::exps(gft::log1(one_plus_z)), one_plus_z);
    EXPECT_NEAR(std::abs(gft::exps(TruncatedSeries::identity(5))[3] - 1.0 / 6.0), 0.0, 1e-16);
}

TEST(Series, DerivativeAndIntegral) {
    const auto d = gft::derivative(poly({0, 0, 1}, 4));
    ASSERT_EQ(d.order(), 3u);
    expect_series_near(d, poly({0, 2}, 3));
    const double b1 = 1.7, b2 = -0.6;
    expect_series_near(gft::integrate_over_t(poly({0, b1}, 4)), poly({0, b1}, 4));
    expect_series_near(gft::integrate_over_t(poly({0, 0, b2}, 4)), poly({0, 0, b2 / 2}, 4));
}

TEST(Series, ShiftRoundTrip) {
    const auto s = poly({1, 2, 3}, 4);
    const auto up = gft::shift_up(s);
    EXPECT_EQ(up[0], cx(0));
    expect_series_near(gft::shift_down(up), s.truncated(3));
}

TEST(SeriesProperty, ExpLogInverse) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = random_series(rng, 8, 0.0);
        expect_series_near(gft::log1(gft::exps(s)), s, 1e-10);
        const auto u = random_series(rng, 8, 1.0);
        expect_series_near(gft::exps(gft::log1(u)), u, 1e-10);
    }
}

TEST(SeriesProperty, DivisionInvertsMultiplication) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_series(rng, 8, cx(0.3, -0.2));
        const auto b = random_series(rng, 8, cx(1.1, 0.4));
        expect_series_near((a * b) / b, a, 1e-10);
    }
}

TEST(SeriesProperty, CompositionIsAssociative) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_series(rng, 7, 0.5);
        const auto g = random_series(rng, 7, 0.0);
        const auto h = random_series(rng, 7, 0.0);
        expect_series_near(gft::compose(gft::compose(f, g), h), gft::compose(f, gft::compose(g, h)), 1e-9);
    }
}

TEST(SeriesProperty, LeibnizRule) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_series(rng, 8, 0.2);
        const auto b = random_series(rng, 8, -1.0);
        const auto lhs = gft::derivative(a * b);
        const auto rhs = gft::derivative(a) * b.truncated(7) + a.truncated(7) * gft::derivative(b);
        expect_series_near(lhs, rhs, 1e-11);
    }
}
