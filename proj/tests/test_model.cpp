#include <gtest/gtest.h>

#include <random>

#include "superint/model.hpp"

using namespace superint;

namespace {

Point random_cartesian(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.2, 1.3), m(-1.0, 1.0);
    // first-quadrant wedge of k = 2 is 0 < th < pi/4, so keep y < x
    double x = u(rng), y = x * (0.1 + 0.8 * std::uniform_real_distribution<double>(0, 1)(rng));
    return make_point(Chart::cartesian, x, y, m(rng), m(rng));
}

double max_diff(const Point& a, const Point& b) {
    double w = 0.0;
    for (int i = 0; i < 4; ++i) w = std::max(w, std::abs(a.z[i] - b.z[i]));
    return w;
}

}  // namespace

TEST(RationalIndex, ParsesAndReduces) {
    EXPECT_EQ(RationalIndex::parse("3/2"), RationalIndex(3, 2));
    EXPECT_EQ(RationalIndex::parse("2"), RationalIndex(2, 1));
    EXPECT_EQ(RationalIndex::parse("4/2"), RationalIndex(2, 1));
    EXPECT_DOUBLE_EQ(RationalIndex(3, 2).value(), 1.5);
    EXPECT_EQ(RationalIndex(6, 4).str(), "3/2");
}

TEST(RationalIndex, RejectsMalformed) {
    for (const char* bad : {"", "0/1", "1/0", "-1/2", "1.5", "a/b", "1/", "/2"})
        EXPECT_THROW(RationalIndex::parse(bad), ParseError) << bad;
}

TEST(Family, Parse) {
    EXPECT_EQ(parse_family("ttw"), Family::ttw);
    EXPECT_EQ(parse_family("holo"), Family::holo);
    EXPECT_THROW(parse_family("kepler"), ParseError);
}

TEST(Charts, RoundTripsAreIdentity) {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 50; ++n) {
        Point c = random_cartesian(rng);
        for (Chart via : {Chart::polar, Chart::logpolar}) {
            Point back = convert(convert(c, via), Chart::cartesian);
            EXPECT_LT(max_diff(back, c), 1e-13);
        }
        Point pol = convert(c, Chart::polar);
        EXPECT_LT(max_diff(convert(convert(pol, Chart::logpolar), Chart::polar), pol), 1e-13);
    }
}

TEST(Charts, OriginIsSingular) {
    EXPECT_THROW(convert(make_point(Chart::cartesian, 0, 0, 1, 1), Chart::polar), SingularPointError);
    EXPECT_THROW(convert(make_point(Chart::polar, 0, 0.3, 1, 1), Chart::cartesian), SingularPointError);
}

TEST(Charts, PositiveBranchShiftsTheta) {
    Point c = make_point(Chart::cartesian, 1.0, -1.0, 0, 0);
    EXPECT_NEAR(convert(c, Chart::polar).z[1].real(), -pi / 4, 1e-15);
    EXPECT_NEAR(convert(c, Chart::polar, ThetaBranch::positive).z[1].real(), 7 * pi / 4, 1e-14);
}

TEST(Hamiltonian, TtwK2MatchesCartesianClosedForm) {
    ParamsTTW prm = ParamsTTW::polar(1.3, 0.7, 0.9);
    Observable polar_h = ttw_hamiltonian(prm, 2.0), cart_h = ttw_k2_cartesian_h(prm);
    std::mt19937_64 rng(5);
    for (int n = 0; n < 50; ++n) {
        Point p = random_cartesian(rng);
        cd a = polar_h(p), b = cart_h(p);
        EXPECT_LT(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(a)));
    }
}

TEST(Hamiltonian, SameValueInEveryChart) {
    ParamsHolo prm{cd(1.2, 0.3)};
    Observable h = holo_hamiltonian(prm, 3.0);
    std::mt19937_64 rng(6);
    for (int n = 0; n < 20; ++n) {
        Point c = random_cartesian(rng);
        cd v = h(c);
        EXPECT_LT(std::abs(h(convert(c, Chart::polar)) - v), 1e-12 * std::abs(v));
        EXPECT_LT(std::abs(h(convert(c, Chart::logpolar)) - v), 1e-12 * std::abs(v));
    }
}

TEST(Hamiltonian, HoloIsHolomorphicPotential) {
    // H = px^2 + py^2 + a (x+iy)^(k-1)/(x-iy)^(k+1)
    ParamsHolo prm{cd(0.7, -0.2)};
    const double k = 3.0;
    Observable h = holo_hamiltonian(prm, k);
    Point c = make_point(Chart::cartesian, 0.9, 0.4, 0.3, -0.5);
    cd z(0.9, 0.4), zb(0.9, -0.4);
    cd expect = 0.09 + 0.25 + prm.a * std::pow(z, k - 1) / std::pow(zb, k + 1);
    EXPECT_LT(std::abs(h(c) - expect), 1e-14);
}

TEST(Hamiltonian, WallsAreSingular) {
    Observable h = ttw_hamiltonian(ParamsTTW::polar(1, 1, 1), 2.0);
    EXPECT_THROW(h(make_point(Chart::polar, 1.0, 0.0, 0.1, 0.1)), SingularPointError);
    EXPECT_THROW(h(make_point(Chart::polar, 1.0, pi / 4, 0.1, 0.1)), SingularPointError);
}

TEST(Observable, ArithmeticIsPointwise) {
    Observable x = coordinate_observable(Chart::cartesian, 0), y = coordinate_observable(Chart::cartesian, 1);
    Observable f = x * y + constant_observable(2.0) - y;
    Point p = make_point(Chart::cartesian, 3.0, 5.0, 0, 0);
    EXPECT_EQ(f(p), cd(3.0 * 5.0 + 2.0 - 5.0));
    // evaluates through a chart conversion when given another chart
    EXPECT_NEAR(std::abs(f(convert(p, Chart::polar)) - f(p)), 0.0, 1e-12);
}

TEST(Observable, SeparationConstantsInLogPolar) {
    ParamsTTW prm = ParamsTTW::polar(1.0, 0.5, 0.25);
    Point p = make_point(Chart::logpolar, 0.1, 0.3, 0.2, 0.7);
    double kth = 2.0 * 0.3;
    cd expect = 0.49 + 0.5 / std::pow(std::cos(kth), 2) + 0.25 / std::pow(std::sin(kth), 2);
    EXPECT_LT(std::abs(make_ttw_l2(prm, RationalIndex(2, 1))(p) - expect), 1e-14);
    ParamsHolo hp{cd(1.0, 1.0)};
    cd hl = 0.49 + hp.a * std::exp(cd(0, 2.0 * 3.0 * 0.3));
    EXPECT_LT(std::abs(make_holo_l(hp, RationalIndex(3, 1))(p) - hl), 1e-14);
}
