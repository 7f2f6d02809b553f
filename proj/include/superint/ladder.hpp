#pragma once

// Hyperbolic pairs A, B for both families, their composition qA + pB for
// k = p/q, and extraction of the two polynomial constants it encodes.
//
// Normalization: cosh/sinh(qA + pB) times rho2^q rho3^p lands in exactly one
// parity component, either 1 or rho1; the coefficient of that component is
// the extracted constant.

#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superint/dynamics.hpp"
#include "superint/model.hpp"
#include "superint/radical.hpp"

namespace superint {

/// A family together with its parameters and index.
struct LadderSystem {
    Family family = Family::ttw;
    ParamsTTW ttw{};
    ParamsHolo holo{};
    RationalIndex k{};

    static LadderSystem make_ttw(const ParamsTTW& prm, RationalIndex k) { return {Family::ttw, prm, {}, k}; }
    static LadderSystem make_holo(const ParamsHolo& prm, RationalIndex k) { return {Family::holo, {}, prm, k}; }

    Observable hamiltonian() const {
        return family == Family::ttw ? make_ttw_h(ttw, k) : make_holo_h(holo, k);
    }
    /// L2 for TTW, L for holo.
    Observable separation_constant() const {
        return family == Family::ttw ? make_ttw_l2(ttw, k) : make_holo_l(holo, k);
    }
    ThetaBranch branch() const { return family == Family::ttw ? ThetaBranch::positive : ThetaBranch::principal; }
};

template <class T>
struct PairSet {
    std::shared_ptr<const RadicalSquares<T>> squares;
    HyperbolicPair<T> a;
    HyperbolicPair<T> b;
};

namespace detail {

constexpr double kDegenerateTol = 1e-12;

template <class T>
PhasePoint<T> to_logpolar(const PhasePoint<T>& pt, ThetaBranch branch) {
    return convert(pt, Chart::logpolar, branch);
}

template <class T>
PairSet<T> ttw_pairs(const ParamsTTW& prm, double k, const PhasePoint<T>& point) {
    using std::cos;
    using std::exp;
    using std::sin;
    auto lp = to_logpolar(point, ThetaBranch::positive);
    const T& pr = lp.z[2];
    const T& pth = lp.z[3];
    T alpha(prm.a), beta(prm.b), gamma(prm.c);
    T l2 = pth * pth + ttw_angular(prm, k, lp.z[1]);
    T w = exp(T(2.0) * lp.z[0]);
    T h = (pr * pr + l2 + alpha * w * w) / w;
    T c2 = cos(T(2.0 * k) * lp.z[1]);
    T s2 = sin(T(2.0 * k) * lp.z[1]);

    T diff = l2 - beta - gamma;
    T rho2_sq = diff * diff - T(4.0) * beta * gamma;
    T rho3_sq = h * h - T(4.0) * alpha * l2;
    double scale2 = std::pow(magnitude(l2) + magnitude(beta) + magnitude(gamma), 2);
    double scale3 = magnitude(h) * magnitude(h) + 4.0 * magnitude(alpha) * magnitude(l2);
    if (magnitude(rho2_sq) <= kDegenerateTol * scale2)
        throw DegenerateRadicalError("rho2^2 = (L2 - b - c)^2 - 4bc vanishes");
    if (magnitude(rho3_sq) <= kDegenerateTol * scale3) throw DegenerateRadicalError("rho3^2 = H^2 - 4aL2 vanishes");

    auto sq = std::make_shared<const RadicalSquares<T>>(RadicalSquares<T>{l2, rho2_sq, rho3_sq});
    const T i = imag_unit<T>();
    // sinh A = i(b - c - L2 cos 2k th)/rho2, cosh A = rho1 sin(2k th) pth/rho2
    HyperbolicPair<T> a{RadicalValue<T>::monomial(sq, kP2, i * (beta - gamma - l2 * c2) / rho2_sq),
                        RadicalValue<T>::monomial(sq, kP12, s2 * pth / rho2_sq)};
    // sinh B = i(2L2/w - H)/rho3, cosh B = 2 rho1 pR/(w rho3)
    HyperbolicPair<T> b{RadicalValue<T>::monomial(sq, kP3, i * (T(2.0) * l2 / w - h) / rho3_sq),
                        RadicalValue<T>::monomial(sq, kP13, T(2.0) * pr / (w * rho3_sq))};
    return {sq, a, b};
}

template <class T>
PairSet<T> holo_pairs(const ParamsHolo& prm, double k, const PhasePoint<T>& point) {
    using std::exp;
    auto lp = to_logpolar(point, ThetaBranch::principal);
    const T& pr = lp.z[2];
    const T& pth = lp.z[3];
    const T i = imag_unit<T>();
    T a(prm.a);
    T tau = exp(T(k) * i * lp.z[1]);
    T omega = exp(lp.z[0]);
    T l = pth * pth + a * tau * tau;
    T h = (pr * pr + l) / (omega * omega);
    if (magnitude(a) == 0.0) throw DegenerateRadicalError("rho2^2 = a vanishes");
    if (magnitude(h) <= kDegenerateTol * (magnitude(pr * pr) + magnitude(l)) / magnitude(omega * omega))
        throw DegenerateRadicalError("rho3^2 = H vanishes");

    auto sq = std::make_shared<const RadicalSquares<T>>(RadicalSquares<T>{l, a, h});
    // sinh A = pth/(tau rho2), cosh A = rho1/(tau rho2)
    HyperbolicPair<T> pa{RadicalValue<T>::monomial(sq, kP2, pth / (tau * a)),
                         RadicalValue<T>::monomial(sq, kP12, T(1.0) / (tau * a))};
    // sinh B = i pR/(omega rho3), cosh B = rho1/(omega rho3)
    HyperbolicPair<T> pb{RadicalValue<T>::monomial(sq, kP3, i * pr / (omega * h)),
                         RadicalValue<T>::monomial(sq, kP13, T(1.0) / (omega * h))};
    return {sq, pa, pb};
}

}  // namespace detail

template <class T>
PairSet<T> make_pairs(const LadderSystem& sys, const PhasePoint<T>& point) {
    return sys.family == Family::ttw ? detail::ttw_pairs(sys.ttw, sys.k.value(), point)
                                     : detail::holo_pairs(sys.holo, sys.k.value(), point);
}

inline HyperbolicPair<cd> pair_A(const LadderSystem& sys, const Point& point) { return make_pairs(sys, point).a; }
inline HyperbolicPair<cd> pair_B(const LadderSystem& sys, const Point& point) { return make_pairs(sys, point).b; }

/// cosh(qA + pB) before normalization.
template <class T>
HyperbolicPair<T> compose_ladder(const PairSet<T>& pairs, long p, long q) {
    return compose_sum(compose_multiple(pairs.a, static_cast<int>(q)), compose_multiple(pairs.b, static_cast<int>(p)));
}

struct ExtractOptions {
    double purity_tol = 1e-10;
    /// Test hook: extra powers of rho2 in the normalizer. Any nonzero value
    /// must be caught by the purity check.
    int normalizer_shift = 0;
};

struct ExtractedConstant {
    cd value{};
    std::string label;
    int order = 0;
    bool p_odd = false;
    bool q_odd = false;
    std::string source;  // "cosh" or "sinh"
    int component = 0;
    double impurity = 0.0;
    /// Observed component equals the one predicted by the parity table.
    bool table_agrees = true;
};

/// Momentum order of the constant held in `component` (0 or rho1).
inline int ladder_order(Family family, long p, long q, int component) {
    int n = static_cast<int>(family == Family::ttw ? 2 * (p + q) : p + q);
    return component == kP1 ? n - 1 : n;
}

/// Parity component predicted for the cosh part; sinh takes the other one.
inline int predicted_cosh_component(long p, long q) { return (p + q) % 2 == 0 ? kP000 : kP1; }

inline std::string ladder_label(long p, long q, bool from_cosh) {
    bool both_odd = (p % 2 == 1) && (q % 2 == 1);
    if (both_odd) return from_cosh ? "C" : "D";
    return from_cosh ? "C'" : "D'";
}

template <class T>
struct RawExtraction {
    T cosh_value{};
    T sinh_value{};
    int cosh_component = 0;
    int sinh_component = 0;
    double cosh_impurity = 0.0;
    double sinh_impurity = 0.0;
};

/// Multiplies cosh/sinh(qA + pB) by rho2^q rho3^p and reads off the single surviving component.
template <class T>
RawExtraction<T> extract_raw(const PairSet<T>& pairs, long p, long q, const ExtractOptions& opt = {}) {
    auto x = compose_ladder(pairs, p, q);
    auto norm = radical_power(pairs.squares, 1, static_cast<int>(q) + opt.normalizer_shift) *
                radical_power(pairs.squares, 2, static_cast<int>(p));
    auto read = [&](const RadicalValue<T>& v, const char* what, T& value, int& comp, double& impurity) {
        auto [e, rest] = v.dominant();
        if (rest > opt.purity_tol)
            throw PurityViolation(std::string(what) + " occupies several parity components (impurity " +
                                  std::to_string(rest) + ")");
        if (e != kP000 && e != kP1)
            throw PurityViolation(std::string(what) + " left in component " + parity_name(e) +
                                  " after normalization");
        value = v[e];
        comp = e;
        impurity = rest;
    };
    RawExtraction<T> out;
    read(norm * x.c, "cosh", out.cosh_value, out.cosh_component, out.cosh_impurity);
    read(norm * x.s, "sinh", out.sinh_value, out.sinh_component, out.sinh_impurity);
    return out;
}

/// Both constants at a point, ordered by ascending momentum order.
inline std::pair<ExtractedConstant, ExtractedConstant> extract_constants(const LadderSystem& sys, const Point& point,
                                                                         const ExtractOptions& opt = {}) {
    long p = sys.k.p();
    long q = sys.k.q();
    auto raw = extract_raw(make_pairs(sys, point), p, q, opt);
    int predicted = predicted_cosh_component(p, q);
    auto make = [&](bool from_cosh) {
        ExtractedConstant c;
        c.value = from_cosh ? raw.cosh_value : raw.sinh_value;
        c.component = from_cosh ? raw.cosh_component : raw.sinh_component;
        c.impurity = from_cosh ? raw.cosh_impurity : raw.sinh_impurity;
        c.source = from_cosh ? "cosh" : "sinh";
        c.label = ladder_label(p, q, from_cosh);
        c.order = ladder_order(sys.family, p, q, c.component);
        c.p_odd = p % 2 == 1;
        c.q_odd = q % 2 == 1;
        c.table_agrees = c.component == (from_cosh ? predicted : predicted ^ kP1);
        return c;
    };
    auto first = make(true);
    auto second = make(false);
    if (second.order < first.order) std::swap(first, second);
    return {first, second};
}

/// The cosh- or sinh-derived constant as an observable (differentiable to second order).
inline Observable ladder_constant(const LadderSystem& sys, bool from_cosh) {
    return Observable::make(ladder_label(sys.k.p(), sys.k.q(), from_cosh), Chart::logpolar,
                            [sys, from_cosh](const auto& pt) {
                                auto raw = extract_raw(make_pairs(sys, pt), sys.k.p(), sys.k.q());
                                return from_cosh ? raw.cosh_value : raw.sinh_value;
                            },
                            sys.branch());
}

// Closed forms for specific indices.

/// k = 2 TTW constants in Cartesian form; the sin-barrier enters as c' = c/4.
template <class T>
std::pair<T, T> explicit_ttw_k2_t(const PhasePoint<T>& point, const ParamsTTW& prm) {
    auto pt = convert(point, Chart::cartesian);
    const T& x = pt.z[0];
    const T& y = pt.z[1];
    const T& px = pt.z[2];
    const T& py = pt.z[3];
    T a(prm.a), b(prm.b), c(prm.cartesian_c());
    T x2 = x * x, y2 = y * y;
    T d = x2 - y2;
    T xy2 = x2 * y2;
    if (magnitude(d) < detail::kWallTol || magnitude(x * y) < detail::kWallTol)
        throw SingularPointError("k = 2 Cartesian point on x^2 = y^2 or xy = 0");
    T r2 = x2 + y2;
    T d2 = d * d;
    T lz = x * py - y * px;
    T c1 = lz * lz + T(4.0) * b * xy2 / d2 + c * (x2 * x2 + y2 * y2) / xy2;
    T kin = px * px - py * py;
    T c2 = kin * kin + (T(2.0) * a * x2 + T(2.0) * b * r2 / d2 - T(2.0) * c * d / xy2) * px * px +
           (T(-4.0) * a * x * y + T(8.0) * b * x * y / d2) * px * py +
           (T(2.0) * a * y2 + T(2.0) * b * r2 / d2 + T(2.0) * c * d / xy2) * py * py + a * a * d2 + b * b / d2 +
           c * c * d2 / (xy2 * xy2) + T(8.0) * a * b * xy2 / d2 + T(2.0) * b * c / xy2;
    return {c1, c2};
}

inline std::pair<cd, cd> explicit_ttw_k2(const Point& point, const ParamsTTW& prm) {
    return explicit_ttw_k2_t(point, prm);
}

/// k = 1/2 TTW: the bracketed numerators of cosh(2A+B) and sinh(2A+B),
/// of momentum orders 5 and 6.
template <class T>
std::pair<T, T> explicit_ttw_khalf_t(const PhasePoint<T>& point, const ParamsTTW& prm) {
    using std::cos;
    using std::exp;
    using std::sin;
    auto lp = convert(point, Chart::logpolar, ThetaBranch::positive);
    const T& pr = lp.z[2];
    const T& pth = lp.z[3];
    T beta(prm.b), gamma(prm.c), alpha(prm.a);
    T l2 = pth * pth + detail::ttw_angular(prm, 0.5, lp.z[1]);
    T e = exp(T(-2.0) * lp.z[0]);
    T h = e * (pr * pr + l2) + alpha / e;
    T ct = cos(lp.z[1]);
    T st = sin(lp.z[1]);
    T ll = beta - gamma - l2 * ct;
    T u = l2 * st * st * pth * pth - ll * ll;
    T v = T(2.0) * l2 * e - h;
    T fifth = e * pr * u - st * pth * v * ll;
    T sixth = v * u + T(4.0) * l2 * st * e * pth * pr * ll;
    return {fifth, sixth};
}

inline std::pair<cd, cd> explicit_ttw_khalf(const Point& point, const ParamsTTW& prm) {
    return explicit_ttw_khalf_t(point, prm);
}

template <class T>
struct HoloK3Constants {
    T k1, k2, k3;
};

/// k = 3 holomorphic constants. K2 is normalized so that, under the bracket
/// convention {x, px} = 1, {K1,K2} = 3i K1^2 and {K1,K3} = 6i K2.
template <class T>
HoloK3Constants<T> explicit_holo_k3_t(const PhasePoint<T>& point, const ParamsHolo& prm) {
    auto pt = convert(point, Chart::cartesian);
    const T& x = pt.z[0];
    const T& y = pt.z[1];
    const T& px = pt.z[2];
    const T& py = pt.z[3];
    const T i = imag_unit<T>();
    T a(prm.a);
    T zb = x - i * y;
    T z = x + i * y;
    if (magnitude(zb) < detail::kOriginTol) throw SingularPointError("holomorphic constants singular at x = iy");
    T zb3 = zb * zb * zb;
    T pm = px - i * py;
    T pm3 = pm * pm * pm;
    T lz = x * py - y * px;
    T k1 = pm3 + a / zb3 * (-(i * y + T(3.0) * x) * px + (i * x - T(3.0) * y) * py);
    T bracket = (T(3.0) * x * x + T(3.0) * i * x * y - T(2.0) * y * y) * px * px -
                (T(2.0) * x * x + T(3.0) * i * x * y - T(3.0) * y * y) * py * py -
                i * (x + T(3.0) * i * y) * (i * y + T(3.0) * x) * px * py;
    T k2_repaired = lz * pm3 - i * a / zb3 * bracket + i * a * a * z * z * z / (zb3 * zb3);
    T k3 = lz * lz + T(2.0) * i * a * y * (T(3.0) * x * x - y * y) / zb3;
    return {k1, -k2_repaired, k3};
}

inline HoloK3Constants<cd> explicit_holo_k3(const Point& point, const ParamsHolo& prm) {
    return explicit_holo_k3_t(point, prm);
}

/// k = 2 holomorphic: sqrt(a) H sinh(A+2B) and sqrt(a) H cosh(A+2B)/sqrt(L) in closed form.
template <class T>
std::pair<T, T> explicit_holo_k2_t(const PhasePoint<T>& point, const ParamsHolo& prm) {
    using std::exp;
    auto lp = convert(point, Chart::logpolar, ThetaBranch::principal);
    const T& pr = lp.z[2];
    const T& pth = lp.z[3];
    const T i = imag_unit<T>();
    T a(prm.a);
    if (magnitude(a) == 0.0) throw DegenerateRadicalError("rho2^2 = a vanishes");
    T w = exp(T(2.0) * lp.z[0]);
    T phase = exp(T(-2.0) * i * lp.z[1]);
    T l = pth * pth + a / (phase * phase);
    T h = (pr * pr + l) / w;
    if (magnitude(h) <= detail::kDegenerateTol * (magnitude(pr * pr) + magnitude(l)) / magnitude(w))
        throw DegenerateRadicalError("rho3^2 = H vanishes");
    T s_val = (T(2.0) * (pth + i * pr) * l - pth * h * w) / w * phase;
    T c_val = (T(2.0) * l - h * w + T(2.0) * i * pth * pr) / w * phase;
    return {s_val, c_val};
}

inline std::pair<cd, cd> explicit_holo_k2(const Point& point, const ParamsHolo& prm) {
    return explicit_holo_k2_t(point, prm);
}

inline Observable ttw_k2_c1(const ParamsTTW& prm) {
    return Observable::make("C1", Chart::cartesian, [prm](const auto& p) { return explicit_ttw_k2_t(p, prm).first; });
}
inline Observable ttw_k2_c2(const ParamsTTW& prm) {
    return Observable::make("C2", Chart::cartesian,
                            [prm](const auto& p) { return explicit_ttw_k2_t(p, prm).second; });
}
inline Observable holo_k3_constant(const ParamsHolo& prm, int index) {
    static const char* names[] = {"K1", "K2", "K3"};
    return Observable::make(names[index - 1], Chart::cartesian, [prm, index](const auto& p) {
        auto k = explicit_holo_k3_t(p, prm);
        return index == 1 ? k.k1 : (index == 2 ? k.k2 : k.k3);
    });
}

struct IndependenceResult {
    bool independent = false;
    std::optional<Point> witness;
    double max_bracket = 0.0;
};

/// True iff |{f,g}| > threshold at some sampled point; points where either is singular are skipped.
inline IndependenceResult independence_check(const Observable& f, const Observable& g,
                                             const std::vector<Point>& points, double threshold = 1e-6) {
    IndependenceResult out;
    for (const auto& pt : points) {
        double v = 0.0;
        try {
            v = std::abs(bracket(f, g, pt));
        } catch (const SingularPointError&) {
            continue;
        }
        if (v > out.max_bracket) out.max_bracket = v;
        if (v > threshold && !out.independent) {
            out.independent = true;
            out.witness = pt;
        }
    }
    return out;
}

}  // namespace superint
