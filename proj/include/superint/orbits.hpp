#pragma once

// Empirical closed-orbit detection by full phase-space recurrence.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "superint/dynamics.hpp"

namespace superint {

struct ClosureResult {
    double k = 0.0;
    std::size_t start_index = 0;
    bool closed = false;
    std::optional<double> period;  // first recurrence time when closed
    double distance = 0.0;         // recurrence distance at the period, else the closest approach
    std::string error;             // integration failure for this cell, if any
};

namespace detail {

inline double state_distance2(const Point& a, const Point& b) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::norm(a.z[i] - b.z[i]);
    return s;
}

/// Minimum over s in [-1, 1] of |d0 + b s + c s^2|, the displacement curve
/// interpolating three consecutive samples. Returns (s, distance).
inline std::pair<double, double> refine_minimum(const Point& prev, const Point& mid, const Point& next, const Point& z0) {
    std::array<cd, 4> d0, b, c;
    for (int i = 0; i < 4; ++i) {
        d0[i] = mid.z[i] - z0.z[i];
        b[i] = 0.5 * (next.z[i] - prev.z[i]);
        c[i] = 0.5 * (next.z[i] - 2.0 * mid.z[i] + prev.z[i]);
    }
    auto at = [&](double s, int i) { return d0[i] + s * b[i] + s * s * c[i]; };
    double bb = 0.0, db = 0.0;
    for (int i = 0; i < 4; ++i) {
        bb += std::norm(b[i]);
        db += std::real(std::conj(d0[i]) * b[i]);
    }
    double s = bb > 0.0 ? std::clamp(-db / bb, -1.0, 1.0) : 0.0;
    // Newton on the derivative of the squared distance; the linear guess is already close
    for (int it = 0; it < 8; ++it) {
        double g = 0.0, hess = 0.0;
        for (int i = 0; i < 4; ++i) {
            cd v = at(s, i), dv = b[i] + 2.0 * s * c[i];
            g += std::real(std::conj(v) * dv);
            hess += std::norm(dv) + 2.0 * std::real(std::conj(v) * c[i]);
        }
        if (!(hess > 0.0)) break;
        s = std::clamp(s - g / hess, -1.0, 1.0);
    }
    double d2 = 0.0;
    for (int i = 0; i < 4; ++i) d2 += std::norm(at(s, i));
    return {s, std::sqrt(d2)};
}

}  // namespace detail

/// Searches t > 10 dt for the first local minimum of |z(t) - z(0)| that lies
/// within `tol`. Each minimum is refined on the quadratic curve through the
/// three samples around it; its error is O(dt^3) in the states.
inline ClosureResult find_closure(const Trajectory& tr, double tol) {
    ClosureResult out;
    out.distance = std::numeric_limits<double>::infinity();
    const auto& zs = tr.states;
    if (zs.size() < 3) return out;
    const double t_min = 10.0 * tr.dt;
    std::vector<double> d2(zs.size());
    for (std::size_t n = 0; n < zs.size(); ++n) d2[n] = detail::state_distance2(zs[n], zs[0]);
    for (std::size_t n = 1; n + 1 < zs.size(); ++n) {
        if (tr.times[n] <= t_min) continue;
        if (!(d2[n] <= d2[n - 1] && d2[n] <= d2[n + 1])) continue;
        auto [shift, dist] = detail::refine_minimum(zs[n - 1], zs[n], zs[n + 1], zs[0]);
        dist = std::min(dist, std::sqrt(d2[n]));
        out.distance = std::min(out.distance, dist);
        if (dist <= tol) {
            out.closed = true;
            out.period = tr.times[n] + shift * tr.dt;
            out.distance = dist;
            return out;
        }
    }
    return out;
}

struct ScanOptions {
    double horizon = 50.0;
    double dt = 1e-3;
    double tol = 1e-4;
};

/// Start chart used for a TTW scan: Cartesian unless the wedge 0 < th < pi/(2k)
/// reaches the principal branch cut, in which case log-polar.
inline Chart scan_chart(double k) { return k > 0.25 ? Chart::cartesian : Chart::logpolar; }

/// One ClosureResult per (k, start), k-major, in input order. Failures stay in their cell.
inline std::vector<ClosureResult> scan_k(const std::vector<double>& ks, const std::vector<Point>& starts,
                                         const ParamsTTW& prm, const ScanOptions& opt = {}) {
    std::vector<ClosureResult> out;
    out.reserve(ks.size() * starts.size());
    const long steps = static_cast<long>(std::ceil(opt.horizon / opt.dt));
    for (double k : ks) {
        Observable h = ttw_hamiltonian(prm, k);
        for (std::size_t s = 0; s < starts.size(); ++s) {
            ClosureResult cell;
            try {
                Point z0 = convert(starts[s], scan_chart(k));
                cell = find_closure(integrate_rk4(h, z0, opt.dt, steps), opt.tol);
            } catch (const Error& e) {
                cell.error = e.what();
            }
            cell.k = k;
            cell.start_index = s;
            out.push_back(std::move(cell));
        }
    }
    return out;
}

}  // namespace superint
