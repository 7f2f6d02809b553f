#include <gtest/gtest.h>

#include <random>

#include "superint/dynamics.hpp"

using namespace superint;

namespace {

Observable poly_obs(const char* name, int variant) {
    return Observable::make(name, Chart::cartesian, [variant](const auto& p) {
        using T = std::remove_cvref_t<decltype(p.z[0])>;
        const T &x = p.z[0], &y = p.z[1], &px = p.z[2], &py = p.z[3];
        switch (variant) {
            case 0: return x * py - y * px;
            case 1: return px * px * x + T(2.0) * y * y * py;
            default: return x * x * y + px * py * py - T(3.0) * x * py;
        }
    });
}

Point sample(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return make_point(Chart::cartesian, 0.5 + 0.5 * u(rng), 0.5 + 0.3 * u(rng), u(rng), u(rng));
}

}  // namespace

TEST(Bracket, CanonicalPairs) {
    Point p = make_point(Chart::cartesian, 0.3, 0.4, 0.5, 0.6);
    Observable x = coordinate_observable(Chart::cartesian, 0), y = coordinate_observable(Chart::cartesian, 1);
    Observable px = coordinate_observable(Chart::cartesian, 2), py = coordinate_observable(Chart::cartesian, 3);
    EXPECT_EQ(bracket(x, px, p), cd(1.0));
    EXPECT_EQ(bracket(y, py, p), cd(1.0));
    EXPECT_EQ(bracket(x, py, p), cd(0.0));
    EXPECT_EQ(bracket(px, x, p), cd(-1.0));
}

TEST(Bracket, CanonicalInEveryChart) {
    // {q_i, p_i} = 1 holds in the log-polar chart too, so the bracket is chart independent
    Observable f = poly_obs("f", 1), g = poly_obs("g", 2);
    std::mt19937_64 rng(3);
    for (int n = 0; n < 20; ++n) {
        Point c = sample(rng);
        cd v = bracket(f, g, c);
        EXPECT_LT(std::abs(bracket(f, g, convert(c, Chart::logpolar)) - v), 1e-12 * std::max(1.0, std::abs(v)));
    }
}

TEST(Bracket, AntisymmetryLeibnizJacobi) {
    Observable f = poly_obs("f", 0), g = poly_obs("g", 1), h = poly_obs("h", 2);
    Observable fg = bracket_observable(f, g), gh = bracket_observable(g, h), hf = bracket_observable(h, f);
    std::mt19937_64 rng(4);
    for (int n = 0; n < 20; ++n) {
        Point p = sample(rng);
        EXPECT_LT(std::abs(bracket(f, g, p) + bracket(g, f, p)), 1e-13);
        cd leibniz = bracket(f, g * h, p) - (bracket(f, g, p) * h(p) + g(p) * bracket(f, h, p));
        EXPECT_LT(std::abs(leibniz), 1e-12);
        cd jacobi = bracket(f, gh, p) + bracket(g, hf, p) + bracket(h, fg, p);
        EXPECT_LT(std::abs(jacobi), 1e-11);
    }
}

TEST(Bracket, ResidualIsScaleFree) {
    Observable h = ttw_hamiltonian(ParamsTTW::polar(1.0, 0.3, 0.4), 1.5);
    Observable l2 = ttw_l2(ParamsTTW::polar(1.0, 0.3, 0.4), 1.5);
    Point p = make_point(Chart::polar, 0.9, 0.4, 0.2, 0.3);
    EXPECT_LT(bracket_residual(h, l2, p), 1e-14);
    Observable x = coordinate_observable(Chart::cartesian, 0);
    EXPECT_GT(bracket_residual(h, x, p), 0.1);
}

TEST(Integrators, OscillatorMatchesExactSolution) {
    // H = p^2 + r^2: x(t) = x0 cos 2t + px0 sin 2t
    Observable h = Observable::make("H", Chart::cartesian, [](const auto& p) {
        return p.z[0] * p.z[0] + p.z[1] * p.z[1] + p.z[2] * p.z[2] + p.z[3] * p.z[3];
    });
    Point z0 = make_point(Chart::cartesian, 0.7, -0.2, 0.1, 0.4);
    auto rk = integrate_rk4(h, z0, 1e-3, 1000);
    auto lf = integrate_leapfrog(h, z0, 1e-3, 1000);
    double t = 1.0;
    cd x_exact = 0.7 * std::cos(2 * t) + 0.1 * std::sin(2 * t);
    EXPECT_NEAR(rk.times.back(), 1.0, 1e-12);
    EXPECT_LT(std::abs(rk.states.back().z[0] - x_exact), 1e-11);
    EXPECT_LT(std::abs(lf.states.back().z[0] - x_exact), 1e-6);
}

TEST(Integrators, ConserveTtwEnergyAndSeparationConstant) {
    ParamsTTW prm = ParamsTTW::polar(1.0, 0.4, 0.6);
    Observable h = ttw_hamiltonian(prm, 1.5), l2 = ttw_l2(prm, 1.5);
    Point z0 = convert(make_point(Chart::polar, 1.0, 0.5, 0.2, 0.3), Chart::cartesian);
    for (const auto& tr : {integrate_rk4(h, z0, 1e-3, 5000), integrate_leapfrog(h, z0, 1e-3, 5000)}) {
        auto d = drift_report(tr, {{"H", h}, {"L2", l2}}, 10);
        ASSERT_EQ(d.size(), 2u);
        EXPECT_LT(d[0].drift, 1e-5) << to_string(tr.integrator);
        EXPECT_LT(d[1].drift, 1e-4) << to_string(tr.integrator);
    }
}

TEST(Integrators, LeapfrogIsTimeReversible) {
    ParamsTTW prm = ParamsTTW::polar(1.0, 0.4, 0.6);
    Observable h = ttw_hamiltonian(prm, 2.0);
    Point z0 = convert(make_point(Chart::polar, 1.0, 0.3, 0.2, 0.3), Chart::cartesian);
    auto fwd = integrate_leapfrog(h, z0, 1e-3, 2000);
    auto back = integrate_leapfrog(h, reverse_momenta(fwd.states.back()), 1e-3, 2000);
    Point z1 = reverse_momenta(back.states.back());
    for (int i = 0; i < 4; ++i) EXPECT_LT(std::abs(z1.z[i] - z0.z[i]), 1e-9);
}

TEST(Integrators, ComplexHoloFlowConservesH) {
    ParamsHolo prm{cd(1.2, 0.3)};
    Observable h = holo_hamiltonian(prm, 3.0), l = holo_l(prm, 3.0);
    auto tr = integrate_rk4(h, make_point(Chart::logpolar, 0.0, 0.2, 0.3, 0.5), 1e-3, 2000);
    auto d = drift_report(tr, {{"H", h}, {"L", l}});
    EXPECT_LT(d[0].drift, 1e-9);
    EXPECT_LT(d[1].drift, 1e-9);
}

TEST(Integrators, ZeroStepsAndBadInputs) {
    Observable h = ttw_hamiltonian(ParamsTTW::polar(1, 0, 0), 1.0);
    Point z0 = make_point(Chart::cartesian, 1, 0.5, 0, 0);
    auto tr = integrate_rk4(h, z0, 1e-2, 0);
    ASSERT_EQ(tr.states.size(), 1u);
    EXPECT_EQ(tr.times[0], 0.0);
    EXPECT_THROW(integrate_rk4(h, z0, 0.0, 10), Error);
    EXPECT_THROW(integrate_rk4(h, z0, 1e-2, -1), Error);
    EXPECT_THROW(integrate_leapfrog(h, z0, -1e-2, 10), Error);
}
