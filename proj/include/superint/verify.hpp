#pragma once

// Numeric verification of the ladder constants of one system: pair
// identities, parity purity, conservation and independence at seeded points,
// and drift along a trajectory.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "superint/dynamics.hpp"
#include "superint/ladder.hpp"
#include "superint/report.hpp"

namespace superint {

struct ConstantsCheckOptions {
    int points = 100;
    std::uint64_t seed = 1;
    double pair_tol = 1e-10;
    double purity_tol = 1e-10;
    double bracket_tol = 1e-9;
    double drift_tol = 1e-6;
    double horizon = 10.0;
    double dt = 1e-4;
    bool drift = true;
    /// Test hook forwarded to the extraction; nonzero values corrupt the normalizer.
    int normalizer_shift = 0;
};

namespace detail {

inline std::string sci(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

}  // namespace detail

/// A seeded log-polar point away from the TTW walls (0 < th < pi/(2k)).
inline Point sample_ladder_point(const LadderSystem& sys, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double r = 0.4 * u(rng);
    double pr = u(rng), pth = u(rng);
    double th = sys.family == Family::ttw ? pi / (2.0 * sys.k.value()) * (0.5 + 0.35 * u(rng)) : 0.8 * u(rng);
    return make_point(Chart::logpolar, r, th, pr, pth);
}

/// Start of the drift trajectory: a fixed generic point in the system's wedge.
inline Point drift_start(const LadderSystem& sys) {
    if (sys.family == Family::ttw) return make_point(Chart::logpolar, 0.0, 0.37 * pi / (2.0 * sys.k.value()), 0.3, 0.5);
    return make_point(Chart::logpolar, 0.0, 0.2, 0.3, 0.5);
}

inline VerificationReport verify_constants(const LadderSystem& sys, const ConstantsCheckOptions& opt = {}) {
    const long p = sys.k.p(), q = sys.k.q();
    std::string fam = sys.family == Family::ttw ? "ttw" : "holo";
    VerificationReport rep("constants(" + fam + ", k=" + std::to_string(p) + "/" + std::to_string(q) + ")");
    rep.conventions = standard_conventions();
    ExtractOptions xo{opt.purity_tol, opt.normalizer_shift};

    std::mt19937_64 rng(opt.seed);
    std::vector<Point> pts;
    for (int n = 0; n < opt.points; ++n) pts.push_back(sample_ladder_point(sys, rng));

    Observable h = sys.hamiltonian();
    Observable cosh_c = ladder_constant(sys, true);
    Observable sinh_c = ladder_constant(sys, false);

    double pair_worst = 0.0, impurity_worst = 0.0, bracket_worst = 0.0;
    bool table_ok = true;
    std::string purity_error;
    std::size_t used = 0;
    int order_lo = 0, order_hi = 0;
    for (const auto& pt : pts) {
        try {
            auto pairs = make_pairs(sys, pt);
            for (const auto* pr : {&pairs.a, &pairs.b}) {
                auto id = pr->identity_value();
                double dev = 0.0;
                for (int e = 0; e < 8; ++e) dev += std::abs(id[e] - (e == kP000 ? cd(1.0) : cd(0.0)));
                pair_worst = std::max(pair_worst, dev);
            }
            auto [lo, hi] = extract_constants(sys, pt, xo);
            impurity_worst = std::max({impurity_worst, lo.impurity, hi.impurity});
            table_ok = table_ok && lo.table_agrees && hi.table_agrees;
            order_lo = lo.order;
            order_hi = hi.order;
            bracket_worst = std::max({bracket_worst, bracket_residual(cosh_c, h, pt), bracket_residual(sinh_c, h, pt)});
            ++used;
        } catch (const DegenerateRadicalError&) {
            continue;
        } catch (const PurityViolation& e) {
            if (purity_error.empty()) purity_error = e.what();
        }
    }
    std::string n = " (" + std::to_string(used) + " points)";
    rep.add("sample points usable", used * 2 >= pts.size(), std::to_string(used) + " of " + std::to_string(pts.size()));
    rep.add("pair identities cosh^2 - sinh^2 = 1" + n, pair_worst <= opt.pair_tol, detail::sci(pair_worst));
    rep.add("parity purity" + n, purity_error.empty() && impurity_worst <= opt.purity_tol,
            purity_error.empty() ? detail::sci(impurity_worst) : purity_error);
    rep.add("parity components match the table", table_ok && purity_error.empty(), table_ok ? "agree" : "disagree");
    rep.add("orders " + std::to_string(order_lo) + ", " + std::to_string(order_hi),
            used > 0 && purity_error.empty(),
            "expected " + std::to_string(ladder_order(sys.family, p, q, kP1)) + ", " +
                std::to_string(ladder_order(sys.family, p, q, kP000)));
    rep.add("{constant,H} = 0" + n, purity_error.empty() && bracket_worst <= opt.bracket_tol, detail::sci(bracket_worst));

    // independence from the separation constant
    if (purity_error.empty()) {
        Observable sep = sys.separation_constant();
        auto ind = independence_check(cosh_c, sep, pts);
        rep.add("{" + cosh_c.name() + "," + sep.name() + "} != 0 (independence witness)", ind.independent,
                "max |bracket| " + detail::sci(ind.max_bracket));
    }

    if (opt.drift && purity_error.empty()) {
        const long steps = static_cast<long>(std::llround(opt.horizon / opt.dt));
        try {
            auto tr = integrate_rk4(h, drift_start(sys), opt.dt, steps);
            auto drifts = drift_report(tr, {{"H", h}, {cosh_c.name(), cosh_c}, {sinh_c.name(), sinh_c}},
                                       std::max<std::size_t>(1, tr.states.size() / 1000));
            double worst = 0.0;
            std::string text;
            for (const auto& d : drifts) {
                worst = std::max(worst, d.drift);
                text += (text.empty() ? "" : ", ") + d.name + " " + detail::sci(d.drift);
            }
            rep.add("drift over t in [0," + detail::sci(opt.horizon) + "], dt " + detail::sci(opt.dt), worst <= opt.drift_tol,
                    text);
        } catch (const Error& e) {
            rep.add("drift trajectory", false, e.what());
        }
    }
    return rep;
}

}  // namespace superint
