#pragma once

// Symbolic phase-space charts and the canonical Poisson bracket.
//
//   cartesian   x, y, px, py
//   trig        w = e^(2R), z = e^(2ik th), pR, pth     (TTW, exponential form)
//   holo_polar  om = e^R, tau = e^(ik th), pR, pth       (holomorphic family)
//
// In the exponential charts the position derivatives act as Euler operators:
// trig d/dR = 2 w d/dw, d/dth = 2ik z d/dz; holo_polar d/dR = om d/dom,
// d/dth = ik tau d/dtau.

#include <array>
#include <string>

#include "superint/cas/ratfun.hpp"

namespace superint::cas {

enum class SymChart { cartesian, trig, holo_polar };

inline std::string to_string(SymChart c) {
    switch (c) {
        case SymChart::cartesian: return "cartesian";
        case SymChart::trig: return "trig";
        case SymChart::holo_polar: return "holo_polar";
    }
    return "?";
}

class Derivation {
public:
    Derivation() = default;
    Derivation(SymChart chart, GaussRat k = GaussRat(1)) : chart_(chart), k_(std::move(k)) {}

    SymChart chart() const { return chart_; }
    const GaussRat& k() const { return k_; }

    /// Phase variables of the chart: q-generators then momenta.
    std::array<int, 4> phase_vars() const {
        switch (chart_) {
            case SymChart::cartesian: return {X, Y, PX, PY};
            case SymChart::trig: return {W, Z, PR, PTH};
            case SymChart::holo_polar: return {OM, TAU, PR, PTH};
        }
        return {X, Y, PX, PY};
    }
    int momentum(int i) const { return phase_vars()[2 + i]; }

    /// d f / d q_i.
    RatFun dq(int i, const RatFun& f) const {
        switch (chart_) {
            case SymChart::cartesian: return f.derivative(i == 0 ? X : Y);
            case SymChart::trig:
                return i == 0 ? f.euler(W).scaled(GaussRat(2)) : f.euler(Z).scaled(GaussRat(2) * GaussRat::i() * k_);
            case SymChart::holo_polar: return i == 0 ? f.euler(OM) : f.euler(TAU).scaled(GaussRat::i() * k_);
        }
        return {};
    }
    RatFun dp(int i, const RatFun& f) const { return f.derivative(momentum(i)); }

    /// Throws if f uses a phase variable of another chart.
    void check_member(const RatFun& f) const {
        static constexpr std::array<int, 10> all{X, Y, PX, PY, W, Z, PR, PTH, OM, TAU};
        auto mine = phase_vars();
        for (int v : all) {
            bool ok = v == mine[0] || v == mine[1] || v == mine[2] || v == mine[3];
            if (!ok && f.uses(v))
                throw Error(std::string("expression uses ") + var_name(v) + ", which is not a " + to_string(chart_) +
                            " chart variable");
        }
    }

private:
    SymChart chart_ = SymChart::cartesian;
    GaussRat k_{1};
};

/// Exact canonical bracket {f,g} = sum df/dq dg/dp - df/dp dg/dq.
inline RatFun sym_bracket(const RatFun& f, const RatFun& g, const Derivation& d) {
    d.check_member(f);
    d.check_member(g);
    RatFun out;
    for (int i = 0; i < 2; ++i) {
        RatFun fq = d.dq(i, f);
        RatFun gp = d.dp(i, g);
        RatFun fp = d.dp(i, f);
        RatFun gq = d.dq(i, g);
        if (!fq.is_zero() && !gp.is_zero()) out += fq * gp;
        if (!fp.is_zero() && !gq.is_zero()) out -= fp * gq;
    }
    return out;
}

/// Total degree of a polynomial numerator in the given variables.
inline int degree(const Poly& p, std::initializer_list<int> vars) { return p.degree(vars); }

}  // namespace superint::cas
