#pragma once

// The TTW ladder run over exact rational functions in the trig chart.
//
// The pairs are pre-multiplied by their radicals: rho2 (sinh A, cosh A) and
// rho3 (sinh B, cosh B). Composing the scaled pairs q and p times yields
// rho2^q rho3^p (sinh, cosh)(qA + pB) directly, so only rho1 (with
// rho1^2 = L2) survives as a formal root and no normalizer is needed.

#include <string>

#include "superint/cas/expressions.hpp"
#include "superint/ladder.hpp"

namespace superint {

template <>
struct CoeffTraits<cas::RatFun> {
    static cas::RatFun rational(long num, long den) { return cas::RatFun(cas::GaussRat::ratio(num, den)); }
    static double magnitude(const cas::RatFun& v) { return v.is_zero() ? 0.0 : 1.0; }
    static bool is_zero(const cas::RatFun& v) { return v.is_zero(); }
};

}  // namespace superint

namespace superint::cas {

struct SymbolicConstant {
    RatFun value;        // coefficient of the surviving parity component
    int component = 0;   // kP000 or kP1
    int degree = 0;      // total degree in pR, pth
    std::string source;  // "cosh" or "sinh"
};

struct SymbolicLadder {
    long p = 1;
    long q = 1;
    Derivation chart;
    RatFun h;
    RatFun l2;
    SymbolicConstant cosh_part;
    SymbolicConstant sinh_part;
};

/// Scaled pairs for the TTW family in the trig chart.
inline PairSet<RatFun> symbolic_ttw_pairs() {
    using namespace expr;
    RatFun l2 = trig::l2();
    RatFun h = trig::hamiltonian();
    RatFun zero;
    auto sq = std::make_shared<const RadicalSquares<RatFun>>(RadicalSquares<RatFun>{l2, zero, zero});
    using RV = RadicalValue<RatFun>;
    // rho2 sinh A = i(beta - gamma - L2 cos 2k th), rho2 cosh A = rho1 sin(2k th) pth
    HyperbolicPair<RatFun> a{RV::monomial(sq, kP000, im() * (v(B) - v(C) - l2 * trig::cos2())),
                             RV::monomial(sq, kP1, trig::sin2() * v(PTH))};
    // rho3 sinh B = i(2 L2/w - H), rho3 cosh B = 2 rho1 pR/w
    HyperbolicPair<RatFun> b{RV::monomial(sq, kP000, im() * (num(2) * l2 * v(W, -1) - h)),
                             RV::monomial(sq, kP1, num(2) * v(PR) * v(W, -1))};
    return {sq, a, b};
}

/// Runs the ladder for k = p/q; throws PurityViolation if a second parity component survives.
inline SymbolicLadder symbolic_ttw_ladder(long p, long q) {
    SymbolicLadder out;
    out.p = p;
    out.q = q;
    out.chart = Derivation(SymChart::trig, GaussRat(mpq_class(p, q)));
    out.h = expr::trig::hamiltonian();
    out.l2 = expr::trig::l2();
    auto x = compose_ladder(symbolic_ttw_pairs(), p, q);
    auto read = [](const RadicalValue<RatFun>& rv, const char* what) {
        SymbolicConstant c;
        c.source = what;
        int found = -1;
        for (int e = 0; e < 8; ++e) {
            if (rv[e].is_zero()) continue;
            if (found >= 0)
                throw PurityViolation(std::string(what) + " occupies components " + parity_name(found) + " and " +
                                      parity_name(e));
            found = e;
        }
        if (found != kP000 && found != kP1)
            throw PurityViolation(std::string(what) + " left in component " + parity_name(std::max(found, 0)));
        c.component = found;
        c.value = rv[found];
        c.degree = c.value.num().degree({PR, PTH});
        return c;
    };
    out.cosh_part = read(x.c, "cosh");
    out.sinh_part = read(x.s, "sinh");
    return out;
}

/// Numeric values of the trig-chart variables at a log-polar point.
inline VarValues trig_values(double k, const std::array<std::complex<double>, 4>& logpolar, double alpha, double beta,
                             double gamma) {
    VarValues vals{};
    vals[W] = std::exp(2.0 * logpolar[0]);
    vals[Z] = std::exp(std::complex<double>(0.0, 2.0 * k) * logpolar[1]);
    vals[PR] = logpolar[2];
    vals[PTH] = logpolar[3];
    vals[A] = alpha;
    vals[B] = beta;
    vals[C] = gamma;
    return vals;
}

}  // namespace superint::cas
