#pragma once

// Closed-form constants against the general ladder engine. Each closed form
// must equal lambda times an engine output at every sampled point, with one
// complex lambda per pairing, fitted by least squares and recorded.

#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "superint/verify.hpp"

namespace superint {

struct FactorFit {
    cd lambda{};
    double residual = 0.0;  // max |engine - lambda * closed| / |engine|
    std::size_t points = 0;
};

/// Fits engine = lambda * closed over the points where both evaluate.
inline FactorFit fit_factor(const std::vector<Point>& pts, const std::function<cd(const Point&)>& engine,
                            const std::function<cd(const Point&)>& closed) {
    std::vector<std::pair<cd, cd>> vals;
    for (const auto& pt : pts) {
        try {
            vals.emplace_back(engine(pt), closed(pt));
        } catch (const DegenerateRadicalError&) {
        } catch (const SingularPointError&) {
        }
    }
    FactorFit fit;
    fit.points = vals.size();
    cd num{};
    double den = 0.0;
    for (const auto& [e, c] : vals) {
        num += std::conj(c) * e;
        den += std::norm(c);
    }
    if (den == 0.0) {
        fit.residual = std::numeric_limits<double>::infinity();
        return fit;
    }
    fit.lambda = num / den;
    for (const auto& [e, c] : vals)
        fit.residual = std::max(fit.residual, std::abs(e - fit.lambda * c) / std::max(std::abs(e), 1e-300));
    return fit;
}

namespace detail {

inline std::string lambda_text(const FactorFit& f) {
    std::ostringstream os;
    os.precision(12);
    // parts below 1e-12 |lambda| are rounding noise
    auto clean = [&](double v) { return std::abs(v) < 1e-12 * std::abs(f.lambda) ? 0.0 : v; };
    double re = clean(f.lambda.real()), im = clean(f.lambda.imag());
    os << "lambda = " << re << (im < 0 ? " - " : " + ") << std::abs(im)
       << "i, residual " << sci(f.residual) << " over " << f.points << " points";
    return os.str();
}

inline std::vector<Point> sample_points(const LadderSystem& sys, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Point> pts;
    for (int j = 0; j < n; ++j) pts.push_back(sample_ladder_point(sys, rng));
    return pts;
}

}  // namespace detail

struct CrossCheckOptions {
    int points = 100;
    std::uint64_t seed = 7;
    double tol = 1e-10;
    ParamsTTW ttw = ParamsTTW::polar(1.3, 0.7, 0.9);
    ParamsHolo holo{cd(1.2, 0.3)};
};

inline VerificationReport cross_check_closed_forms(const CrossCheckOptions& opt = {}) {
    VerificationReport rep("closed-forms-vs-engine");
    rep.conventions = standard_conventions();
    auto add = [&](const std::string& name, const FactorFit& f) {
        rep.add(name, f.points * 2 >= static_cast<std::size_t>(opt.points) && f.residual <= opt.tol, detail::lambda_text(f));
    };
    auto raw = [](const LadderSystem& sys, bool from_cosh) {
        return [sys, from_cosh](const Point& pt) {
            auto r = extract_raw(make_pairs(sys, pt), sys.k.p(), sys.k.q());
            return from_cosh ? r.cosh_value : r.sinh_value;
        };
    };

    {  // TTW k = 1/2: orders 5 and 6
        auto sys = LadderSystem::make_ttw(opt.ttw, RationalIndex(1, 2));
        auto pts = detail::sample_points(sys, opt.points, opt.seed);
        ParamsTTW prm = opt.ttw;
        add("ttw k=1/2: fifth order = lambda * C'", fit_factor(pts, raw(sys, true), [prm](const Point& p) {
                return explicit_ttw_khalf(p, prm).first;
            }));
        add("ttw k=1/2: sixth order = lambda * D'", fit_factor(pts, raw(sys, false), [prm](const Point& p) {
                return explicit_ttw_khalf(p, prm).second;
            }));
    }
    {  // TTW k = 2: the odd engine constant is a multiple of R = {C1,C2}
        auto sys = LadderSystem::make_ttw(opt.ttw, RationalIndex(2, 1));
        auto pts = detail::sample_points(sys, opt.points, opt.seed + 1);
        Observable r = bracket_observable(ttw_k2_c1(opt.ttw), ttw_k2_c2(opt.ttw));
        add("ttw k=2: {C1,C2} = lambda * C'", fit_factor(pts, raw(sys, true), [r](const Point& p) { return r(p); }));
        Observable l2 = make_ttw_l2(opt.ttw, RationalIndex(2, 1));
        ParamsTTW prm = opt.ttw;
        double worst = 0.0;
        for (const auto& p : pts) {
            cd c1 = explicit_ttw_k2(p, prm).first;
            worst = std::max(worst, std::abs(l2(p) - c1 - prm.b - 2.0 * prm.cartesian_c()) / std::max(1.0, std::abs(c1)));
        }
        rep.add("ttw k=2: L2 = C1 + b + 2c numerically", worst <= opt.tol, detail::sci(worst));
    }
    {  // holo k = 2
        auto sys = LadderSystem::make_holo(opt.holo, RationalIndex(2, 1));
        auto pts = detail::sample_points(sys, opt.points, opt.seed + 2);
        ParamsHolo prm = opt.holo;
        add("holo k=2: sqrt(a) H sinh(A+2B) = lambda * sinh part",
            fit_factor(pts, raw(sys, false), [prm](const Point& p) { return explicit_holo_k2(p, prm).first; }));
        add("holo k=2: sqrt(a) H cosh(A+2B)/sqrt(L) = lambda * cosh part",
            fit_factor(pts, raw(sys, true), [prm](const Point& p) { return explicit_holo_k2(p, prm).second; }));
    }
    {  // holo k = 3
        auto sys = LadderSystem::make_holo(opt.holo, RationalIndex(3, 1));
        auto pts = detail::sample_points(sys, opt.points, opt.seed + 3);
        ParamsHolo prm = opt.holo;
        add("holo k=3: K1 = lambda * sinh part", fit_factor(pts, raw(sys, false), [prm](const Point& p) {
                return explicit_holo_k3(p, prm).k1;
            }));
        add("holo k=3: K2 = lambda * cosh part", fit_factor(pts, raw(sys, true), [prm](const Point& p) {
                return explicit_holo_k3(p, prm).k2;
            }));
        Observable l = make_holo_l(prm, RationalIndex(3, 1));
        add("holo k=3: K3 = lambda * (L - a)", fit_factor(pts, [l, prm](const Point& p) { return l(p) - prm.a; },
                                                          [prm](const Point& p) { return explicit_holo_k3(p, prm).k3; }));
    }
    return rep;
}

}  // namespace superint
