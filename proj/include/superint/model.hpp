#pragma once

// Potential families, separation constants, phase-space charts.
//
// Observables are generic over the scalar type: every observable is stored
// as three instantiations (complex, first-order dual, nested dual) of one
// generic function, which is what lets the dynamics module take exact
// gradients and brackets of brackets.

#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "superint/errors.hpp"
#include "superint/scalar.hpp"

namespace superint {

/// Deformation index k = p/q in lowest terms, p, q >= 1.
class RationalIndex {
public:
    RationalIndex() = default;
    RationalIndex(long p, long q) {
        if (p < 1 || q < 1) throw ParseError("rational index needs p, q >= 1");
        long g = std::gcd(p, q);
        p_ = p / g;
        q_ = q / g;
    }

    /// Parses "P/Q" or a bare integer "P".
    static RationalIndex parse(std::string_view text) {
        auto to_long = [&](std::string_view s) {
            if (s.empty()) throw ParseError("empty rational index");
            long v = 0;
            for (char ch : s) {
                if (ch < '0' || ch > '9') throw ParseError("bad rational index '" + std::string(text) + "'");
                v = v * 10 + (ch - '0');
                if (v > 1'000'000) throw ParseError("rational index too large");
            }
            return v;
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return {to_long(text), 1};
        return {to_long(text.substr(0, slash)), to_long(text.substr(slash + 1))};
    }

    long p() const { return p_; }
    long q() const { return q_; }
    double value() const { return static_cast<double>(p_) / static_cast<double>(q_); }
    std::string str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

    friend bool operator==(const RationalIndex&, const RationalIndex&) = default;

private:
    long p_ = 1;
    long q_ = 1;
};

/// Strengths of the TTW potential a r^2 + b/(r^2 cos^2 k th) + c/(r^2 sin^2 k th).
///
/// Stored in the polar normalization (a, b, c) = (alpha, beta, gamma). The
/// k = 2 Cartesian closed forms write the sin-barrier as c'(x^2+y^2)/(x^2 y^2),
/// which is gamma = 4 c'; use cartesian_k2() to build from that form.
struct ParamsTTW {
    cd a{0.0};
    cd b{0.0};
    cd c{0.0};

    static ParamsTTW polar(cd alpha, cd beta, cd gamma) { return {alpha, beta, gamma}; }
    static ParamsTTW cartesian_k2(cd a, cd b, cd c_cart) { return {a, b, 4.0 * c_cart}; }

    cd alpha() const { return a; }
    cd beta() const { return b; }
    cd gamma() const { return c; }
    cd cartesian_c() const { return c / 4.0; }
};

struct ParamsHolo {
    cd a{0.0};
};

enum class Family { ttw, holo };

inline std::string_view to_string(Family f) { return f == Family::ttw ? "ttw" : "holo"; }

inline Family parse_family(std::string_view s) {
    if (s == "ttw") return Family::ttw;
    if (s == "holo") return Family::holo;
    throw ParseError("unknown family '" + std::string(s) + "'");
}

enum class Chart { cartesian, polar, logpolar };

inline std::string_view to_string(Chart c) {
    switch (c) {
        case Chart::cartesian: return "cartesian";
        case Chart::polar: return "polar";
        case Chart::logpolar: return "logpolar";
    }
    return "?";
}

inline Chart parse_chart(std::string_view s) {
    if (s == "cartesian") return Chart::cartesian;
    if (s == "polar") return Chart::polar;
    if (s == "logpolar") return Chart::logpolar;
    throw ParseError("unknown chart '" + std::string(s) + "'");
}

/// Which determination of the polar angle a Cartesian point maps to.
/// `positive` puts real points in [0, 2 pi), the TTW wedges start at 0.
enum class ThetaBranch { principal, positive };

/// One phase-space state. Coordinates are (q1, q2, p1, p2):
/// cartesian (x, y, px, py), polar (r, th, pr, pth), logpolar (R, th, pR, pth).
template <class T>
struct PhasePoint {
    Chart chart = Chart::cartesian;
    std::array<T, 4> z{};

    const T& q1() const { return z[0]; }
    const T& q2() const { return z[1]; }
    const T& p1() const { return z[2]; }
    const T& p2() const { return z[3]; }
};

using Point = PhasePoint<cd>;

inline Point make_point(Chart chart, cd q1, cd q2, cd p1, cd p2) { return {chart, {q1, q2, p1, p2}}; }

namespace detail {

constexpr double kOriginTol = 1e-14;

template <class T>
PhasePoint<T> cartesian_to_logpolar(const PhasePoint<T>& pt, ThetaBranch branch) {
    using std::log;
    const T& x = pt.z[0];
    const T& y = pt.z[1];
    const T i = imag_unit<T>();
    T zeta = x + i * y;
    T zeta_bar = x - i * y;
    if (magnitude(zeta) < kOriginTol || magnitude(zeta_bar) < kOriginTol)
        throw SingularPointError("point on the singular set x^2 + y^2 = 0");
    T log_z = log(zeta);
    T log_zb = log(zeta_bar);
    T big_r = (log_z + log_zb) / T(2.0);
    T theta = (log_z - log_zb) / (T(2.0) * i);
    if (branch == ThetaBranch::positive && value_of(theta).real() < 0.0) theta = theta + T(2.0 * pi);
    T p_r = x * pt.z[2] + y * pt.z[3];
    T p_th = x * pt.z[3] - y * pt.z[2];
    return {Chart::logpolar, {big_r, theta, p_r, p_th}};
}

template <class T>
PhasePoint<T> logpolar_to_cartesian(const PhasePoint<T>& pt) {
    using std::cos;
    using std::exp;
    using std::sin;
    T r = exp(pt.z[0]);
    T c = cos(pt.z[1]);
    T s = sin(pt.z[1]);
    T x = r * c;
    T y = r * s;
    T px = (c * pt.z[2] - s * pt.z[3]) / r;
    T py = (s * pt.z[2] + c * pt.z[3]) / r;
    return {Chart::cartesian, {x, y, px, py}};
}

template <class T>
PhasePoint<T> polar_to_logpolar(const PhasePoint<T>& pt) {
    using std::log;
    if (magnitude(pt.z[0]) < kOriginTol) throw SingularPointError("polar point at the origin r = 0");
    return {Chart::logpolar, {log(pt.z[0]), pt.z[1], pt.z[0] * pt.z[2], pt.z[3]}};
}

template <class T>
PhasePoint<T> logpolar_to_polar(const PhasePoint<T>& pt) {
    using std::exp;
    T r = exp(pt.z[0]);
    return {Chart::polar, {r, pt.z[1], pt.z[2] / r, pt.z[3]}};
}

}  // namespace detail

/// Canonical point transformation between charts. The origin is rejected.
template <class T>
PhasePoint<T> convert(const PhasePoint<T>& pt, Chart target, ThetaBranch branch = ThetaBranch::principal) {
    if (pt.chart == target) return pt;
    PhasePoint<T> hub;
    switch (pt.chart) {
        case Chart::cartesian: hub = detail::cartesian_to_logpolar(pt, branch); break;
        case Chart::polar: hub = detail::polar_to_logpolar(pt); break;
        case Chart::logpolar: hub = pt; break;
    }
    switch (target) {
        case Chart::cartesian: return detail::logpolar_to_cartesian(hub);
        case Chart::polar: return detail::logpolar_to_polar(hub);
        case Chart::logpolar: return hub;
    }
    return hub;
}

/// A phase-space function with a declared native chart.
///
/// Points in other charts are converted before evaluation, so evaluating
/// at a dual-seeded point yields derivatives in that point's own chart.
class Observable {
public:
    template <class T>
    using Fn = std::function<T(const PhasePoint<T>&)>;

    Observable() = default;

    /// Builds from a generic callable `f(const PhasePoint<T>&) -> T` that
    /// expects points in `native` chart.
    template <class F>
    static Observable make(std::string name, Chart native, F f, ThetaBranch branch = ThetaBranch::principal) {
        Observable o;
        o.name_ = std::move(name);
        o.chart_ = native;
        o.f0_ = wrap<cd>(f, native, branch);
        o.f1_ = wrap<D1>(f, native, branch);
        o.f2_ = wrap<D2>(f, native, branch);
        return o;
    }

    /// Builds from explicit per-scalar functions; a missing one throws when used.
    static Observable from_functions(std::string name, Chart chart, Fn<cd> f0, Fn<D1> f1, Fn<D2> f2) {
        Observable o;
        o.name_ = std::move(name);
        o.chart_ = chart;
        o.f0_ = std::move(f0);
        o.f1_ = std::move(f1);
        o.f2_ = std::move(f2);
        return o;
    }

    template <class T>
    T operator()(const PhasePoint<T>& pt) const {
        const Fn<T>& fn = pick<T>();
        if (!fn) throw Error("observable '" + name_ + "' cannot be evaluated at this differentiation depth");
        return fn(pt);
    }

    const std::string& name() const { return name_; }
    Chart chart() const { return chart_; }

    template <class T>
    const Fn<T>& pick() const {
        if constexpr (std::is_same_v<T, cd>) return f0_;
        else if constexpr (std::is_same_v<T, D1>) return f1_;
        else return f2_;
    }

private:
    template <class T, class F>
    static Fn<T> wrap(F f, Chart native, ThetaBranch branch) {
        return [f, native, branch](const PhasePoint<T>& pt) -> T {
            if (pt.chart == native) return f(pt);
            return f(convert(pt, native, branch));
        };
    }

    std::string name_;
    Chart chart_ = Chart::cartesian;
    Fn<cd> f0_;
    Fn<D1> f1_;
    Fn<D2> f2_;
};

namespace detail {

template <class Op>
Observable combine(const Observable& f, const Observable& g, std::string name, Op op) {
    auto level = [&](auto tag) {
        using T = decltype(tag);
        const auto& ff = f.pick<T>();
        const auto& gg = g.pick<T>();
        Observable::Fn<T> out;
        if (ff && gg) out = [ff, gg, op](const PhasePoint<T>& p) { return op(ff(p), gg(p)); };
        return out;
    };
    return Observable::from_functions(std::move(name), f.chart(), level(cd{}), level(D1{}), level(D2{}));
}

}  // namespace detail

inline Observable operator+(const Observable& f, const Observable& g) {
    return detail::combine(f, g, "(" + f.name() + "+" + g.name() + ")", [](auto u, auto v) { return u + v; });
}
inline Observable operator-(const Observable& f, const Observable& g) {
    return detail::combine(f, g, "(" + f.name() + "-" + g.name() + ")", [](auto u, auto v) { return u - v; });
}
inline Observable operator*(const Observable& f, const Observable& g) {
    return detail::combine(f, g, f.name() + "*" + g.name(), [](auto u, auto v) { return u * v; });
}

/// The constant function `value`.
inline Observable constant_observable(cd value, std::string name = "const") {
    return Observable::make(std::move(name), Chart::cartesian, [value](const auto& p) {
        using T = std::remove_cvref_t<decltype(p.z[0])>;
        return T(value);
    });
}

/// The coordinate function z[index] of `chart`.
inline Observable coordinate_observable(Chart chart, int index) {
    static constexpr std::array<std::array<const char*, 4>, 3> names{{
        {"x", "y", "px", "py"}, {"r", "th", "pr", "pth"}, {"R", "th", "pR", "pth"}}};
    return Observable::make(names[static_cast<int>(chart)][index], chart,
                            [index](const auto& p) { return p.z[index]; });
}

namespace detail {

constexpr double kWallTol = 1e-12;

template <class T>
void require_off_walls(const T& cos_kth, const T& sin_kth) {
    if (magnitude(cos_kth) < kWallTol || magnitude(sin_kth) < kWallTol)
        throw SingularPointError("point on a barrier wall (cos k th = 0 or sin k th = 0)");
}

/// b/cos^2(k th) + c/sin^2(k th) at angle th.
template <class T>
T ttw_angular(const ParamsTTW& prm, double k, const T& th) {
    using std::cos;
    using std::sin;
    T ck = cos(T(k) * th);
    T sk = sin(T(k) * th);
    require_off_walls(ck, sk);
    return T(prm.b) / (ck * ck) + T(prm.c) / (sk * sk);
}

}  // namespace detail

/// TTW Hamiltonian pr^2 + pth^2/r^2 + a r^2 + b/(r^2 cos^2 k th) + c/(r^2 sin^2 k th),
/// evaluated through its log-polar form.
inline Observable ttw_hamiltonian(const ParamsTTW& prm, double k) {
    return Observable::make(
        "H", Chart::logpolar,
        [prm, k](const auto& p) {
            using T = std::remove_cvref_t<decltype(p.z[0])>;
            using std::exp;
            const T& big_r = p.z[0];
            T pr = p.z[2];
            T pth = p.z[3];
            T e2 = exp(T(2.0) * big_r);
            return (pr * pr + pth * pth + T(prm.a) * e2 * e2 + detail::ttw_angular(prm, k, p.z[1])) / e2;
        },
        ThetaBranch::positive);
}

inline Observable make_ttw_h(const ParamsTTW& prm, RationalIndex k) { return ttw_hamiltonian(prm, k.value()); }

/// Polar separation constant L2 = pth^2 + b/cos^2 k th + c/sin^2 k th.
inline Observable ttw_l2(const ParamsTTW& prm, double k) {
    return Observable::make(
        "L2", Chart::logpolar,
        [prm, k](const auto& p) { return p.z[3] * p.z[3] + detail::ttw_angular(prm, k, p.z[1]); },
        ThetaBranch::positive);
}

inline Observable make_ttw_l2(const ParamsTTW& prm, RationalIndex k) { return ttw_l2(prm, k.value()); }

/// The k = 2 Cartesian closed form
/// px^2 + py^2 + a(x^2+y^2) + b(x^2+y^2)/(x^2-y^2)^2 + c'(x^2+y^2)/(x^2 y^2), c' = c/4.
inline Observable ttw_k2_cartesian_h(const ParamsTTW& prm) {
    return Observable::make("H", Chart::cartesian, [prm](const auto& p) {
        using T = std::remove_cvref_t<decltype(p.z[0])>;
        const T& x = p.z[0];
        const T& y = p.z[1];
        T x2 = x * x;
        T y2 = y * y;
        T d = x2 - y2;
        if (magnitude(d) < detail::kWallTol || magnitude(x * y) < detail::kWallTol)
            throw SingularPointError("k = 2 Cartesian point on x^2 = y^2 or xy = 0");
        T r2 = x2 + y2;
        return p.z[2] * p.z[2] + p.z[3] * p.z[3] + T(prm.a) * r2 + T(prm.b) * r2 / (d * d) +
               T(prm.cartesian_c()) * r2 / (x2 * y2);
    });
}

/// Holomorphic family H = px^2 + py^2 + a (x+iy)^(k-1)/(x-iy)^(k+1), through the
/// branch-fixing log-polar form (pR^2 + pth^2 + a e^(2ik th)) e^(-2R).
inline Observable holo_hamiltonian(const ParamsHolo& prm, double k) {
    return Observable::make("H", Chart::logpolar, [prm, k](const auto& p) {
        using T = std::remove_cvref_t<decltype(p.z[0])>;
        using std::exp;
        const T i = imag_unit<T>();
        T pr = p.z[2];
        T pth = p.z[3];
        return (pr * pr + pth * pth + T(prm.a) * exp(T(2.0 * k) * i * p.z[1])) * exp(T(-2.0) * p.z[0]);
    });
}

inline Observable make_holo_h(const ParamsHolo& prm, RationalIndex k) { return holo_hamiltonian(prm, k.value()); }

/// L = pth^2 + a e^(2ik th).
inline Observable holo_l(const ParamsHolo& prm, double k) {
    return Observable::make("L", Chart::logpolar, [prm, k](const auto& p) {
        using T = std::remove_cvref_t<decltype(p.z[0])>;
        using std::exp;
        const T i = imag_unit<T>();
        return p.z[3] * p.z[3] + T(prm.a) * exp(T(2.0 * k) * i * p.z[1]);
    });
}

inline Observable make_holo_l(const ParamsHolo& prm, RationalIndex k) { return holo_l(prm, k.value()); }

}  // namespace superint
