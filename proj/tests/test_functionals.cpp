#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gft/functionals.hpp"
#include "gft/rational.hpp"

using namespace gft;
using cx = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

ClassMember koebe() { return starlike_from_schwarz(MindaPhi::janowski(1, -1), SchwarzSample({{1.0, 0.0}})); }

ClassMember identity_member() { return starlike_from_schwarz(MindaPhi::janowski(1, -1), SchwarzSample{}); }

} // namespace

TEST(Toeplitz, SmallDeterminants) {
    const std::vector<double> r1{3.0};
    EXPECT_DOUBLE_EQ(toeplitz_determinant<double>(r1), 3.0);
    const std::vector<double> r2{2.0, 3.0};
    EXPECT_DOUBLE_EQ(toeplitz_determinant<double>(r2), 4.0 - 9.0);
    const std::vector<Rational> r3{Rational(2), Rational(3), Rational(4)};
    // [[2,3,4],[3,2,3],[4,3,2]]
    EXPECT_EQ(toeplitz_determinant<Rational>(r3), Rational(2 * (4 - 9) - 3 * (6 - 12) + 4 * (9 - 8)));
}

TEST(Toeplitz, LaplaceAndLuAgree) {
    const std::vector<double> row{1.5, -0.3, 0.7, 2.1, -1.2};
    std::vector<std::vector<double>> mat(5, std::vector<double>(5));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) mat[i][j] = row[i > j ? i - j : j - i];
    for (std::size_t m = 1; m <= 4; ++m) {
        std::vector<std::vector<double>> sub(m, std::vector<double>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) sub[i][j] = mat[i][j];
        EXPECT_NEAR(detail::laplace_det(sub), detail::lu_det(sub), 1e-12);
    }
}

TEST(Toeplitz, T32Factorization) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto m = convex_from_schwarz(MindaPhi::power(0.6), sample_schwarz(3, seed));
        const cx a2 = m.a(2), a3 = m.a(3), a4 = m.a(4);
        EXPECT_NEAR(std::abs(toeplitz_det(m, 3, 2) - (a2 - a4) * (a2 * a2 - 2.0 * a3 * a3 + a2 * a4)), 0.0, 1e-12);
    }
}

TEST(Toeplitz, Koebe) {
    EXPECT_NEAR(std::abs(toeplitz_det(koebe(), 3, 2) - 12.0), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(toeplitz_det_log(koebe(), 2, 1) - 0.75), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(toeplitz_det_log(koebe(), 2, 2) - 5.0 / 36.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(toeplitz_det_log(identity_member(), 2, 1)), 0.0, 1e-15);
}

TEST(Toeplitz, OrderAndIndexChecks) {
    const auto m = starlike_from_schwarz(MindaPhi::janowski(1, -1), SchwarzSample{}, 4);
    EXPECT_THROW(toeplitz_det(m, 3, 3), order_too_low);
    EXPECT_THROW(toeplitz_det_log(m, 2, 3), order_too_low);
    EXPECT_THROW(toeplitz_det(m, 0, 1), index_out_of_range);
}

TEST(FeketeSzego, Values) {
    EXPECT_NEAR(std::abs(fekete_szego(koebe(), 0.5) - 1.0), 0.0, 1e-12);
    const auto m = convex_from_schwarz(MindaPhi::power(0.5), sample_schwarz(2, 3));
    EXPECT_NEAR(std::abs(fekete_szego(m, 0.0) - m.a(3)), 0.0, 1e-15);
    const auto phi = MindaPhi::custom({1.4, -0.9, 0.2});
    EXPECT_NEAR(std::abs(fekete_szego(extremal_starlike(phi), 0.5) - (-phi.b(2) / 2.0)), 0.0, 1e-12);
}

TEST(CubicFunctional, Values) {
    EXPECT_NEAR(std::abs(cubic_functional(identity_member())), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(cubic_functional(koebe()) - 2.0 / 3.0), 0.0, 1e-12);
    const auto phi = MindaPhi::custom({1.4, -0.9, 0.2});
    EXPECT_NEAR(std::abs(cubic_functional(extremal_starlike(phi)) - cx(0, -phi.b(3) / 3.0)), 0.0, 1e-12);
}

TEST(Regions, Membership) {
    EXPECT_EQ(region_member(2.0, 1.0), Region::D1);
    EXPECT_EQ(region_member(3.0, 2.0), Region::D2);
    EXPECT_EQ(region_member(5.0, 8.0 / 3.0), Region::D3);
    EXPECT_EQ(region_member(3.0, 1.0), Region::outside);
    EXPECT_EQ(region_member(0.0, 0.99), Region::outside);
    EXPECT_EQ(region_member(0.0, 0.99, 0.02), Region::D1);
    // exact boundaries in rational arithmetic
    EXPECT_EQ(region_member<Rational>(Rational(3), ratio(17, 12)), Region::D2);
    EXPECT_EQ(region_member<Rational>(Rational(3), ratio(17, 12) - ratio(1, 1000000)), Region::outside);
    EXPECT_EQ(region_member<Rational>(Rational(-5), ratio(8, 3)), Region::D3);
}

TEST(ProkhorovSzynal, EqualityCases) {
    EXPECT_NEAR(prokhorov_szynal_value(SchwarzSample({{1.0, 0.0}}), {2.0, 1.0}), 1.0, 1e-12);
    TruncatedSeries z3(3);
    z3[3] = 1.0;
    for (auto pt : {RegionPoint{0.5, 3.0}, RegionPoint{-3.0, 2.0}, RegionPoint{6.0, 10.0}})
        EXPECT_NEAR(prokhorov_szynal_value(z3, pt), 1.0, 1e-15);
}

TEST(ProkhorovSzynal, DenseTwoAtomGrid) {
    // oracle: exhaustive two-atom grid at (0, 1)
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i)
        for (int a = 0; a < 24; ++a)
            for (int b = 0; b < 24; ++b) {
                const double w = i / 20.0;
                const SchwarzSample s({{w, 2 * pi * a / 24}, {1 - w, 2 * pi * b / 24}});
                worst = std::max(worst, prokhorov_szynal_value(s, {0.0, 1.0}));
            }
    EXPECT_LE(worst, 1.0 + 1e-12);
}

TEST(Efraimidis, EqualityWitnesses) {
    const auto p = SchwarzSample({{1.0, 0.0}}).caratheodory(4);
    EXPECT_NEAR(efraimidis_value(p.coeffs(), 2, 1, 1.0), 2.0, 1e-12);
    EXPECT_NEAR(efraimidis_bound(1.0), 2.0, 0.0);
    const auto q = SchwarzSample({{0.5, 0.0}, {0.5, pi}}).caratheodory(4);
    EXPECT_NEAR(efraimidis_value(q.coeffs(), 2, 1, 0.5), 2.0, 1e-12);
    EXPECT_NEAR(efraimidis_bound(0.5), 2.0, 0.0);
}

TEST(Efraimidis, MuZeroIsCaratheodory) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto p = sample_schwarz(1 + seed % 4, seed).caratheodory(5);
        for (std::size_t n = 2; n <= 5; ++n) EXPECT_LE(efraimidis_value(p.coeffs(), n, 1, 0.0), 2.0 + 1e-12);
    }
}

TEST(Efraimidis, IndexChecks) {
    const auto p = SchwarzSample({{1.0, 0.0}}).caratheodory(3);
    EXPECT_THROW(efraimidis_value(p.coeffs(), 4, 1, 0.0), index_out_of_range);
    EXPECT_THROW(efraimidis_value(p.coeffs(), 2, 2, 0.0), index_out_of_range);
    EXPECT_THROW(efraimidis_value(p.coeffs(), 2, 0, 0.0), index_out_of_range);
}

TEST(FunctionalProperty, CubicIsTwiceGammaThree) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto kind = seed % 2 ? ClassKind::starlike : ClassKind::convex;
        const auto m = member_from_schwarz(kind, MindaPhi::janowski(0.5, -0.7), sample_schwarz(2 + seed % 3, seed));
        EXPECT_NEAR(std::abs(cubic_functional(m) - 2.0 * log_coefficients(m, 3)[2]), 0.0, 1e-12);
    }
}
