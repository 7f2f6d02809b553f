#pragma once

// Gradients, canonical Poisson brackets and trajectory integration.
//
// Bracket convention: {f,g} = sum_i df/dq_i dg/dp_i - df/dp_i dg/dq_i, so {x, px} = 1.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "superint/model.hpp"

namespace superint {

/// Exact partials of f with respect to the chart coordinates of pt.
/// T is the scalar type of the point; f is evaluated one dual level up.
template <class T>
std::array<T, 4> gradient_t(const Observable& f, const PhasePoint<T>& pt) {
    using DT = Dual<T>;
    std::array<T, 4> g{};
    PhasePoint<DT> dp{pt.chart, {}};
    for (int j = 0; j < 4; ++j) {
        for (int i = 0; i < 4; ++i) dp.z[i] = DT(pt.z[i], i == j ? T(1.0) : T(0.0));
        g[j] = f(dp).der;
    }
    return g;
}

inline std::array<cd, 4> gradient(const Observable& f, const Point& pt) { return gradient_t<cd>(f, pt); }

template <class T>
T bracket_t(const Observable& f, const Observable& g, const PhasePoint<T>& pt) {
    auto gf = gradient_t(f, pt);
    auto gg = gradient_t(g, pt);
    return gf[0] * gg[2] - gf[2] * gg[0] + gf[1] * gg[3] - gf[3] * gg[1];
}

inline cd bracket(const Observable& f, const Observable& g, const Point& pt) { return bracket_t<cd>(f, g, pt); }

/// |{f,g}| divided by the sum of the magnitudes of its four products;
/// near 1e-16 for an exact zero, O(1) for a genuine nonzero bracket.
inline double bracket_residual(const Observable& f, const Observable& g, const Point& pt) {
    auto gf = gradient(f, pt);
    auto gg = gradient(g, pt);
    std::array<cd, 4> terms{gf[0] * gg[2], gf[2] * gg[0], gf[1] * gg[3], gf[3] * gg[1]};
    double scale = 0.0;
    for (const auto& t : terms) scale += std::abs(t);
    cd sum = terms[0] - terms[1] + terms[2] - terms[3];
    if (scale == 0.0) return 0.0;
    return std::abs(sum) / scale;
}

/// {f,g} as an observable; it can itself be bracketed once more.
inline Observable bracket_observable(const Observable& f, const Observable& g) {
    Observable::Fn<cd> f0 = [f, g](const PhasePoint<cd>& p) { return bracket_t<cd>(f, g, p); };
    Observable::Fn<D1> f1 = [f, g](const PhasePoint<D1>& p) { return bracket_t<D1>(f, g, p); };
    return Observable::from_functions("{" + f.name() + "," + g.name() + "}", f.chart(), std::move(f0), std::move(f1),
                                      nullptr);
}

enum class Integrator { leapfrog, rk4 };

inline std::string_view to_string(Integrator i) { return i == Integrator::leapfrog ? "leapfrog" : "rk4"; }

struct Trajectory {
    std::vector<double> times;
    std::vector<Point> states;
    double dt = 0.0;
    Integrator integrator = Integrator::rk4;
};

/// Flips both momenta; running a reversible scheme on the flipped end state retraces the path.
inline Point reverse_momenta(const Point& pt) { return {pt.chart, {pt.z[0], pt.z[1], -pt.z[2], -pt.z[3]}}; }

namespace detail {

constexpr int kMaxHalvings = 20;
constexpr double kEnergyJumpTol = 1e-3;
constexpr double kDivergence = 1e12;

inline Point leapfrog_step(const Observable& h, const Point& z, double dt) {
    Point mid = z;
    auto g = gradient(h, z);
    mid.z[0] += 0.5 * dt * g[2];
    mid.z[1] += 0.5 * dt * g[3];
    g = gradient(h, mid);
    Point out = mid;
    out.z[2] -= dt * g[0];
    out.z[3] -= dt * g[1];
    g = gradient(h, out);
    out.z[0] += 0.5 * dt * g[2];
    out.z[1] += 0.5 * dt * g[3];
    for (auto& v : out.z) v = cd(v.real(), 0.0);
    return out;
}

inline Point leapfrog_guarded(const Observable& h, const Point& z, double dt, cd h0, int depth) {
    bool ok = false;
    Point next;
    try {
        next = leapfrog_step(h, z, dt);
        cd h1 = h(next);
        ok = std::isfinite(std::abs(h1)) && std::abs(h1 - h0) <= kEnergyJumpTol * std::max(1.0, std::abs(h0));
    } catch (const SingularPointError&) {
        ok = false;
    }
    if (ok) return next;
    if (depth >= kMaxHalvings) throw BarrierCollisionError("leapfrog step rejected after 20 halvings");
    Point half = leapfrog_guarded(h, z, 0.5 * dt, h0, depth + 1);
    return leapfrog_guarded(h, half, 0.5 * dt, h(half), depth + 1);
}

inline std::array<cd, 4> hamilton_rhs(const Observable& h, const Point& z) {
    auto g = gradient(h, z);
    return {g[2], g[3], -g[0], -g[1]};
}

inline Point axpy(const Point& z, double s, const std::array<cd, 4>& k) {
    Point out = z;
    for (int i = 0; i < 4; ++i) out.z[i] += s * k[i];
    return out;
}

inline void check_inputs(double dt, long steps) {
    if (!(dt > 0.0)) throw Error("time step must be positive");
    if (steps < 0) throw Error("step count must be non-negative");
}

}  // namespace detail

/// Position-Verlet integration of a real Cartesian flow. A step whose energy
/// jump exceeds 1e-3 relative is retried as two half steps, recursively.
inline Trajectory integrate_leapfrog(const Observable& h, const Point& start, double dt, long steps) {
    detail::check_inputs(dt, steps);
    if (start.chart != Chart::cartesian) throw Error("leapfrog needs a Cartesian start point");
    for (const auto& v : start.z)
        if (v.imag() != 0.0) throw Error("leapfrog needs a real start point");
    Trajectory tr;
    tr.dt = dt;
    tr.integrator = Integrator::leapfrog;
    tr.times.reserve(steps + 1);
    tr.states.reserve(steps + 1);
    tr.times.push_back(0.0);
    tr.states.push_back(start);
    Point z = start;
    for (long n = 1; n <= steps; ++n) {
        z = detail::leapfrog_guarded(h, z, dt, h(z), 0);
        tr.times.push_back(static_cast<double>(n) * dt);
        tr.states.push_back(z);
    }
    return tr;
}

/// Classical RK4 on Hamilton's equations in the chart of `start`; complex points allowed.
inline Trajectory integrate_rk4(const Observable& h, const Point& start, double dt, long steps) {
    detail::check_inputs(dt, steps);
    Trajectory tr;
    tr.dt = dt;
    tr.integrator = Integrator::rk4;
    tr.times.reserve(steps + 1);
    tr.states.reserve(steps + 1);
    tr.times.push_back(0.0);
    tr.states.push_back(start);
    Point z = start;
    for (long n = 1; n <= steps; ++n) {
        auto k1 = detail::hamilton_rhs(h, z);
        auto k2 = detail::hamilton_rhs(h, detail::axpy(z, 0.5 * dt, k1));
        auto k3 = detail::hamilton_rhs(h, detail::axpy(z, 0.5 * dt, k2));
        auto k4 = detail::hamilton_rhs(h, detail::axpy(z, dt, k3));
        for (int i = 0; i < 4; ++i) {
            z.z[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            if (!(std::abs(z.z[i]) <= detail::kDivergence))
                throw DivergenceError("coordinate magnitude exceeded 1e12 at step " + std::to_string(n));
        }
        tr.times.push_back(static_cast<double>(n) * dt);
        tr.states.push_back(z);
    }
    return tr;
}

struct DriftEntry {
    std::string name;
    double drift = 0.0;
};

/// Per observable: max |f(t) - f(0)| / max(1, |f(0)|), sampling every `stride`-th state
/// (the final state is always included).
inline std::vector<DriftEntry> drift_report(const Trajectory& tr,
                                            const std::vector<std::pair<std::string, Observable>>& observables,
                                            std::size_t stride = 1) {
    std::vector<DriftEntry> out;
    if (tr.states.empty()) return out;
    stride = std::max<std::size_t>(stride, 1);
    for (const auto& [name, f] : observables) {
        cd f0 = f(tr.states.front());
        double scale = std::max(1.0, std::abs(f0));
        double worst = 0.0;
        auto visit = [&](const Point& p) { worst = std::max(worst, std::abs(f(p) - f0) / scale); };
        for (std::size_t i = stride; i < tr.states.size(); i += stride) visit(tr.states[i]);
        if ((tr.states.size() - 1) % stride != 0) visit(tr.states.back());
        out.push_back({name, worst});
    }
    return out;
}

}  // namespace superint
