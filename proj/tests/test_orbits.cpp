#include <gtest/gtest.h>

#include "superint/orbits.hpp"

using namespace superint;

namespace {

Trajectory circle(double period, double dt, long steps) {
    Trajectory tr;
    tr.dt = dt;
    for (long n = 0; n <= steps; ++n) {
        double t = n * dt, w = 2 * pi / period;
        tr.times.push_back(t);
        tr.states.push_back(make_point(Chart::cartesian, std::cos(w * t), std::sin(w * t), -std::sin(w * t), std::cos(w * t)));
    }
    return tr;
}

}  // namespace

TEST(FindClosure, RefinesPeriodBetweenSamples) {
    auto r = find_closure(circle(2.345, 0.01, 500), 1e-3);
    ASSERT_TRUE(r.closed);
    EXPECT_NEAR(*r.period, 2.345, 1e-4);
}

TEST(FindClosure, OpenCurveIsNotClosed) {
    Trajectory tr;
    tr.dt = 0.01;
    for (int n = 0; n < 300; ++n) {
        tr.times.push_back(n * 0.01);
        tr.states.push_back(make_point(Chart::cartesian, n * 0.01, 0, 1, 0));
    }
    auto r = find_closure(tr, 1e-4);
    EXPECT_FALSE(r.closed);
    EXPECT_FALSE(r.period.has_value());
}

TEST(Scan, OscillatorPeriodIsPi) {
    // H = p^2 + r^2 has angular frequency 2
    auto cells = scan_k({1.0}, {make_point(Chart::polar, 1.0, 0.4, 0.3, 0.2)}, ParamsTTW::polar(1, 0, 0), {10.0, 1e-3, 1e-4});
    ASSERT_EQ(cells.size(), 1u);
    ASSERT_TRUE(cells[0].closed) << cells[0].error;
    EXPECT_NEAR(*cells[0].period, pi, 1e-4);
}

TEST(Scan, RationalClosesIrrationalDoesNot) {
    ParamsTTW prm = ParamsTTW::polar(1, 0.3, 0.2);
    std::vector<Point> starts{make_point(Chart::polar, 1.0, 0.3, 0.2, 0.4), make_point(Chart::polar, 0.8, 0.2, -0.3, 0.1)};
    auto cells = scan_k({1.0, 2.0, 1.5, 1.414213562}, starts, prm, {30.0, 1e-3, 1e-4});
    ASSERT_EQ(cells.size(), 8u);
    for (std::size_t n = 0; n < 6; ++n) EXPECT_TRUE(cells[n].closed) << "k " << cells[n].k << " start " << cells[n].start_index;
    for (std::size_t n = 6; n < 8; ++n) {
        EXPECT_FALSE(cells[n].closed);
        EXPECT_GT(cells[n].distance, 1e-4);
    }
    // k-major order
    EXPECT_EQ(cells[2].k, 2.0);
    EXPECT_EQ(cells[3].start_index, 1u);
}

TEST(Scan, PeriodIsIndependentOfPhaseAlongTheOrbit) {
    ParamsTTW prm = ParamsTTW::polar(1, 0.3, 0.2);
    Point z0 = convert(make_point(Chart::polar, 1.0, 0.3, 0.2, 0.4), Chart::cartesian);
    auto first = scan_k({1.5}, {z0}, prm, {20.0, 1e-3, 1e-4});
    ASSERT_TRUE(first[0].closed);
    Observable h = ttw_hamiltonian(prm, 1.5);
    Point later = integrate_rk4(h, z0, 1e-3, 700).states.back();
    auto second = scan_k({1.5}, {later}, prm, {20.0, 1e-3, 1e-4});
    ASSERT_TRUE(second[0].closed);
    EXPECT_NEAR(*first[0].period, *second[0].period, 1e-3);
}

TEST(Scan, FailuresStayInTheirCell) {
    // a start on the wall th = 0 cannot be evaluated
    std::vector<Point> starts{make_point(Chart::polar, 1.0, 0.0, 0.2, 0.4), make_point(Chart::polar, 1.0, 0.3, 0.2, 0.4)};
    auto cells = scan_k({1.0}, starts, ParamsTTW::polar(1, 0.3, 0.2), {5.0, 1e-3, 1e-4});
    ASSERT_EQ(cells.size(), 2u);
    EXPECT_FALSE(cells[0].error.empty());
    EXPECT_TRUE(cells[1].error.empty());
}

TEST(Scan, ChartChoice) {
    EXPECT_EQ(scan_chart(1.0), Chart::cartesian);
    EXPECT_EQ(scan_chart(0.2), Chart::logpolar);
}
