#pragma once

// One-variable models of the symmetry algebras. Classical models live on a
// single canonical pair (beta, c) with the model constant c; their brackets
// are taken by forward-mode duals. The quantum model is a one-variable
// differential operator algebra checked exactly.

#include <random>
#include <string>

#include "superint/cas/suites.hpp"

namespace superint::cas {

namespace models {

/// {F,G} on one canonical pair; orient = +1 gives dF/dbeta dG/dc - dF/dc dG/dbeta.
template <class T, class F, class G>
T bracket1(const F& f, const G& g, const T& beta, const T& c, int orient) {
    using DT = Dual<T>;
    DT fb = f(DT::variable(beta), DT(c, T(0.0))), fc = f(DT(beta, T(0.0)), DT::variable(c));
    DT gb = g(DT::variable(beta), DT(c, T(0.0))), gc = g(DT(beta, T(0.0)), DT::variable(c));
    T out = fb.der * gc.der - fc.der * gb.der;
    return orient > 0 ? out : -out;
}

struct HoloDraw {
    cd a, e, c, beta;
};

/// Largest relative residual of the classical k = 3 relations (with H = E) for three model observables.
template <class K1, class K2, class K3>
double holo_relations_residual(const K1& k1, const K2& k2, const K3& k3, int orient, const HoloDraw& d) {
    const cd i(0.0, 1.0);
    cd v1 = k1(d.beta, d.c), v2 = k2(d.beta, d.c), v3 = k3(d.beta, d.c);
    double worst = 0.0;
    worst = std::max(worst, superint::cas::detail::relative_residual(bracket1(k1, k2, d.beta, d.c, orient), 3.0 * i * v1 * v1));
    worst = std::max(worst, superint::cas::detail::relative_residual(bracket1(k1, k3, d.beta, d.c, orient), 6.0 * i * v2));
    worst = std::max(worst, superint::cas::detail::relative_residual(bracket1(k2, k3, d.beta, d.c, orient),
                                                                     6.0 * i * v1 * (v3 + d.a)));
    worst = std::max(worst, superint::cas::detail::relative_residual(v1 * v1 * v3 + d.a * v1 * v1,
                                                                     v2 * v2 + d.a * d.e * d.e * d.e));
    return worst;
}

/// C2 of the exponential TTW model as a function of (beta, C) with C1 = C.
/// `rate` multiplies the exponent and `ac` is the a*c coefficient inside the square.
struct ExponentialC2 {
    cd a, b, c, e;
    double rate = 8.0;
    double ac = 8.0;

    template <class T>
    T operator()(const T& beta, const T& cm) const {
        T s = sqrt(T(-1.0) * cm - T(b) - T(2.0 * c));
        T den = cm + T(b) + T(2.0 * c);
        T inner = T(4.0 * a * b) + T(ac * a * c) + T(4.0 * a) * cm - T(e * e);
        T poly = T(4.0 * c) * cm - T(4.0 * c * c) - cm * cm + T(16.0 * b * c);
        return exp(T(rate) * s * beta) + T(0.5 * e * e) - T(2.0 * a * b) - T(e * e * (4.0 * c - b)) / (T(2.0) * den) -
               T(1.0 / 16.0) * poly * inner * inner / (den * den) * exp(T(-rate) * s * beta);
    }
};

struct TtwDraw {
    cd a, b, c, e, cm, beta;
};

/// Largest relative residual of {C1,R}, {C2,R}, R^2 against the exact closure expansions.
inline double exponential_model_residual(const ExponentialC2& c2f, const TtwDraw& d) {
    const auto& cl = ttw_k2_classical_closure();
    auto c1f = [](const auto&, const auto& cm) { return cm; };
    // R = {C1,C2} = -dC2/dbeta in the beta-first orientation
    auto rf = [&](const auto& beta, const auto& cm) {
        using T = std::remove_cvref_t<decltype(beta)>;
        return T(-1.0) * c2f(Dual<T>::variable(beta), Dual<T>(cm, T(0.0))).der;
    };
    VarValues vals{};
    vals[kGenH] = d.e;
    vals[kGenC1] = d.cm;
    vals[kGenC2] = c2f(d.beta, d.cm);
    vals[kGenR] = rf(d.beta, d.cm);
    vals[A] = d.a;
    vals[B] = d.b;
    vals[C] = d.c;
    auto scale_of = [&](const Poly& p) {
        double s = 0.0;
        for (const auto& t : p.terms()) s += std::abs(Poly::monomial(t.m, t.c).eval(vals));
        return s;
    };
    auto res = [&](cd lhs, const Poly& rhs) { return std::abs(lhs - rhs.eval(vals)) / (std::abs(lhs) + scale_of(rhs)); };
    double worst = 0.0;
    worst = std::max(worst, res(bracket1(c1f, rf, d.beta, d.cm, 1), cl.c1_r.expansion));
    worst = std::max(worst, res(bracket1(c2f, rf, d.beta, d.cm, 1), cl.c2_r.expansion));
    worst = std::max(worst, res(vals[kGenR] * vals[kGenR], cl.r2.expansion));
    return worst;
}

}  // namespace models

inline VerificationReport suite_models(int draws = 20, std::uint64_t seed = 20260104) {
    VerificationReport rep("models");
    rep.conventions = standard_conventions();
    rep.conventions["model_bracket"] = "{F,G} = s (dF/dbeta dG/dc - dF/dc dG/dbeta), s chosen per model";
    rep.conventions["model_orientation"] = "(1): s = +1, (2): s = -1, (3): s = +1, exponential: s = +1";

    // one-variable quantum model, exact
    {
        using namespace expr;
        DiffOp k1 = model1d::k1(), k2 = model1d::k2(), k3 = model1d::k3();
        RatFun a = v(A), i = im();
        auto exact = [&](const std::string& name, const DiffOp& residual) {
            rep.add(name, residual.is_zero(), residual.is_zero() ? "0 (exact)" : "order " + std::to_string(residual.order()) + " residual");
        };
        exact("1D model [K1,K2] = 3i K1^2", commutator(k1, k2) - (num(3) * i) * (k1 * k1));
        exact("1D model [K1,K3] = 6i K2 - 9 K1", commutator(k1, k3) - (num(6) * i) * k2 + num(9) * k1);
        DiffOp tail = (i * (num(27) + num(6) * a)) * k1 + num(9) * k2;
        DiffOp k23 = commutator(k2, k3);
        exact("1D model [K2,K3] = 3i {K1,K3} + i(27+6a) K1 + 9 K2", k23 - (num(3) * i) * sym2(k1, k3) - tail);
        bool printed_ok = (k23 - (num(3) * i) * sym2(k1, k2) - tail).is_zero();
        rep.add_reported("1D model printed [K2,K3] with {K1,K2}", printed_ok, printed_ok ? "0 (exact)" : "nonzero");
        DiffOp cons = sym3(k1, k1, k3).scaled(GaussRat::ratio(1, 2)) - num(3) * (k2 * k2) - (num(9, 2) * i) * sym2(k1, k2) +
                      (num(63, 2) + num(3) * a) * (k1 * k1) - DiffOp(num(3) * a * v(E, 3));
        rep.add_reported("1D model constraint with H = E", cons.is_zero(),
                         cons.is_zero() ? "0 (exact)" : "order " + std::to_string(cons.order()) + " residual");
    }

    std::mt19937_64 rng(seed);
    auto q = [&](int lo, int hi, int den) { return cd(detail::draw_rational(rng, lo, hi, den)); };
    const cd i(0.0, 1.0);
    double w1 = 0, w2 = 0, w3 = 0, w2p = 0, wexp = 0, wexp_rate = 0, wexp_ac = 0;
    for (int s = 0; s < draws; ++s) {
        models::HoloDraw hd{q(4, 12, 8), q(4, 12, 8), q(4, 12, 8), q(2, 8, 16)};
        cd a = hd.a, e3 = hd.e * hd.e * hd.e;
        // (1): K3 = c, trigonometric in beta
        auto m1k1 = [=](const auto& beta, const auto& c) {
            using T = std::remove_cvref_t<decltype(beta)>;
            T w = sqrt(c + T(a));
            return T(-1.0) * sqrt(T(a * e3) / (T(a) + c)) * cos(T(6.0) * w * beta);
        };
        auto m1k2 = [=](const auto& beta, const auto& c) {
            using T = std::remove_cvref_t<decltype(beta)>;
            return T(-i * std::sqrt(a * e3)) * sin(T(6.0) * sqrt(c + T(a)) * beta);
        };
        auto m1k3 = [](const auto&, const auto& c) { return c; };
        w1 = std::max(w1, models::holo_relations_residual(m1k1, m1k2, m1k3, 1, hd));
        // (2): K1 = c
        auto m2k1 = [](const auto&, const auto& c) { return c; };
        auto m2k2 = [=](const auto& beta, const auto& c) {
            using T = std::remove_cvref_t<decltype(beta)>;
            return T(3.0 * i) * c * c * beta;
        };
        auto m2k3_with = [=](double lead) {
            return [=](const auto& beta, const auto& c) {
                using T = std::remove_cvref_t<decltype(beta)>;
                return T(-lead) * c * c * beta * beta + T(a * e3) / (c * c) - T(a);
            };
        };
        w2 = std::max(w2, models::holo_relations_residual(m2k1, m2k2, m2k3_with(9.0), -1, hd));
        w2p = std::max(w2p, models::holo_relations_residual(m2k1, m2k2, m2k3_with(8.0), -1, hd));
        // (3): K2 = c
        auto m3k1 = [=](const auto& beta, const auto&) {
            using T = std::remove_cvref_t<decltype(beta)>;
            return T(i / 3.0) / beta;
        };
        auto m3k2 = [](const auto&, const auto& c) { return c; };
        auto m3k3 = [=](const auto& beta, const auto& c) {
            using T = std::remove_cvref_t<decltype(beta)>;
            return T(-9.0) * (c * c + T(a * e3)) * beta * beta - T(a);
        };
        w3 = std::max(w3, models::holo_relations_residual(m3k1, m3k2, m3k3, 1, hd));

        // exponential TTW model, C1 = C with -C - b - 2c > 0
        models::TtwDraw td{q(4, 12, 8), q(4, 12, 8), q(4, 12, 8), q(4, 12, 8), 0.0, q(-8, 8, 32)};
        td.cm = -td.b - 2.0 * td.c - q(2, 8, 8);
        models::ExponentialC2 c2f{td.a, td.b, td.c, td.e};
        wexp = std::max(wexp, models::exponential_model_residual(c2f, td));
        models::ExponentialC2 rate1 = c2f;
        rate1.rate = 1.0;
        wexp_rate = std::max(wexp_rate, models::exponential_model_residual(rate1, td));
        models::ExponentialC2 ac9 = c2f;
        ac9.ac = 9.0;
        wexp_ac = std::max(wexp_ac, models::exponential_model_residual(ac9, td));
    }
    const double tol = 1e-9;
    std::string n = " (" + std::to_string(draws) + " draws)";
    rep.add("model (1) relations" + n, w1 <= tol, detail::fmt(w1));
    rep.add("model (2) relations, K3 = -9 c^2 beta^2 + aE^3/c^2 - a" + n, w2 <= tol, detail::fmt(w2));
    rep.add_reported("model (2) printed coefficient -8", w2p <= tol, detail::fmt(w2p));
    rep.add("model (3) relations" + n, w3 <= tol, detail::fmt(w3));
    rep.add("exponential model closure, exponent 8 sqrt(-C-b-2c) beta, 8ac" + n, wexp <= tol, detail::fmt(wexp));
    rep.add_reported("exponential model printed exponent sqrt(-C-b-2c) beta", wexp_rate <= tol, detail::fmt(wexp_rate));
    rep.add_reported("exponential model printed 9ac", wexp_ac <= tol, detail::fmt(wexp_ac));
    return rep;
}

}  // namespace superint::cas
