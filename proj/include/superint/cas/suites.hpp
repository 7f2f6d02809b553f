#pragma once

// Exact verification suites for the symmetry algebras of the k = 2 TTW and
// k = 3 holomorphic systems, classical and quantum, and for the symbolic
// general-k ladder.

#include <Eigen/Dense>

#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "superint/cas/closure.hpp"
#include "superint/cas/expressions.hpp"
#include "superint/cas/symbolic_ladder.hpp"
#include "superint/dynamics.hpp"
#include "superint/ladder.hpp"
#include "superint/report.hpp"

namespace superint::cas {

namespace detail {

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

inline std::string exact_zero_text(bool zero) { return zero ? "0 (exact)" : "nonzero"; }

/// Rational n/den with n uniform in [lo, hi].
inline double draw_rational(std::mt19937_64& rng, int lo, int hi, int den) {
    return static_cast<double>(std::uniform_int_distribution<int>(lo, hi)(rng)) / den;
}

inline double relative_residual(cd lhs, cd rhs) {
    double scale = std::abs(lhs) + std::abs(rhs);
    return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Classical k = 2 TTW

/// Printed classical relations, Cartesian parameters.
namespace printed {

inline Poly ttw_c1_r() {
    using namespace gen;
    Poly h2 = H() * H();
    return n(32) * (h2 - n(2) * C2()) * C1() - n(64) * (b() + n(2) * c()) * C2() + n(64) * (b() - c()) * h2 -
           n(128) * a() * b() * C1() - n(128) * a() * b() * (b() + n(2) * c());
}

inline Poly ttw_c2_r() {
    using namespace gen;
    Poly h2 = H() * H();
    return n(32) * C2() * (C2() - h2) + n(128) * a() * C1() * h2 - n(384) * a() * a() * C1() * C1() +
           n(128) * a() * b() * C2() - n(64) * (b() + n(4) * c()) * a() * h2 + n(256) * a() * a() * (n(2) * c() - b()) * C1() +
           n(128) * a() * a() * (b() * b() + n(40) * c() * c() + n(20) * b() * c());
}

inline Poly ttw_r2() {
    using namespace gen;
    Poly h2 = H() * H();
    return n(64) * C1() * C2() * (h2 - C2()) - n(64) * b() * h2 * h2 + n(128) * (b() - c()) * C2() * h2 -
           n(64) * (b() + n(2) * c()) * C2() * C2() - n(128) * a() * C1() * C1() * h2 + n(256) * a() * a() * C1().pow(3) -
           n(256) * a() * b() * C1() * C2() + n(128) * a() * (b() + n(4) * c()) * h2 * C1() +
           n(256) * a() * a() * (b() - c()) * C1() * C1() - n(256) * a() * b() * (b() + n(2) * c()) * C2() +
           n(256) * a() * (n(7) * b() * c() + b() * b() - n(2) * c() * c()) * h2 -
           n(256) * a() * a() * (b() * b() + n(4) * c() * c() + n(20) * b() * c()) * C1() -
           n(256) * a() * a() * (n(2) * c() + b()) * (b() * b() + n(16) * b() * c() - n(4) * c() * c());
}

/// Quantum relations; {C1,C2} is twice the ordering average.
inline Poly ttw_q_c1_r() {
    using namespace gen;
    Poly h2 = H() * H();
    return n(32) * C1() * h2 - n(64) * C1() * C2() + n(64) * (b() - c() + n(2)) * h2 - n(64) * (b() + n(2) * c() + n(4)) * C2() -
           n(128) * a() * (b() + n(1)) * C1() -
           n(128) * a() * (b() * b() + n(2) * b() * c() + n(4) * b() + n(6) * c() + n(4));
}

inline Poly ttw_q_c2_r() {
    using namespace gen;
    Poly h2 = H() * H();
    return n(32) * C2() * C2() - n(32) * h2 * C2() + n(128) * a() * C1() * h2 + n(128) * a() * (b() + n(1)) * C2() -
           n(64) * a() * (b() + n(4) * c() + n(6)) * h2 - n(384) * a() * a() * C1() * C1() -
           n(256) * a() * a() * (b() - n(2) * c() - n(14)) * C1() +
           n(128) * a() * a() * (n(-8) + n(8) * c() + n(18) * b() + n(20) * b() * c() + b() * b() + n(4) * c() * c());
}

}  // namespace printed

struct TtwK2Closure {
    RatFun h, c1, c2, r;
    bool c1_conserved = false;
    bool c2_conserved = false;
    ClosureExpansion c1_r, c2_r, r2;
    std::vector<Mono> keys_c1_r, keys_c2_r, keys_r2;
};

/// Exact closure expansions of {C1,R}, {C2,R} and R^2, computed once.
inline const TtwK2Closure& ttw_k2_classical_closure() {
    static const TtwK2Closure cached = [] {
        TtwK2Closure out;
        Derivation d(SymChart::cartesian);
        out.h = expr::ttw2::hamiltonian();
        out.c1 = expr::ttw2::c1();
        out.c2 = expr::ttw2::c2();
        out.c1_conserved = sym_bracket(out.c1, out.h, d).is_zero();
        out.c2_conserved = sym_bracket(out.c2, out.h, d).is_zero();
        out.r = sym_bracket(out.c1, out.c2, d);
        ClassicalRealizer realize(out.h, out.c1, out.c2, out.r);
        KeyOptions opt{true, 0};
        out.keys_c1_r = closure_keys(-4, 6, opt);
        out.keys_c2_r = closure_keys(-8, 8, opt);
        out.keys_r2 = closure_keys(-8, 10, opt);
        out.c1_r = expand_in_generators(sym_bracket(out.c1, out.r, d), out.keys_c1_r, realize);
        out.c2_r = expand_in_generators(sym_bracket(out.c2, out.r, d), out.keys_c2_r, realize);
        out.r2 = expand_in_generators(out.r * out.r, out.keys_r2, realize);
        return out;
    }();
    return cached;
}

/// Refits an expansion by least squares on numeric values of the generators,
/// computed from the closed forms by forward-mode brackets. Returns the
/// largest deviation from the exact coefficients.
inline double ttw_k2_numeric_fit(const Poly& exact, const std::vector<Mono>& keys, int relation, int samples,
                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = static_cast<int>(keys.size());
    const int rows = std::max(samples, 2 * n);
    Eigen::MatrixXcd m(rows, n);
    Eigen::VectorXcd rhs(rows);
    for (int s = 0; s < rows; ++s) {
        double a = detail::draw_rational(rng, 4, 12, 8);
        double b = detail::draw_rational(rng, 4, 12, 8);
        double c = detail::draw_rational(rng, 4, 12, 8);
        auto prm = ParamsTTW::cartesian_k2(a, b, c);
        Point pt = make_point(Chart::cartesian, detail::draw_rational(rng, 6, 14, 16), detail::draw_rational(rng, 18, 28, 16),
                              detail::draw_rational(rng, -16, 16, 16), detail::draw_rational(rng, -16, 16, 16));
        Observable h = ttw_k2_cartesian_h(prm);
        Observable c1 = ttw_k2_c1(prm);
        Observable c2 = ttw_k2_c2(prm);
        Observable r = bracket_observable(c1, c2);
        VarValues vals{};
        vals[kGenH] = h(pt);
        vals[kGenC1] = c1(pt);
        vals[kGenC2] = c2(pt);
        vals[kGenR] = r(pt);
        vals[A] = a;
        vals[B] = b;
        vals[C] = c;
        if (relation == 0) rhs(s) = bracket(c1, r, pt);
        else if (relation == 1) rhs(s) = bracket(c2, r, pt);
        else rhs(s) = vals[kGenR] * vals[kGenR];
        for (int j = 0; j < n; ++j) m(s, j) = Poly::monomial(keys[j], GaussRat(1)).eval(vals);
    }
    Eigen::VectorXd scale = m.colwise().norm().transpose();
    for (int j = 0; j < n; ++j) m.col(j) /= scale(j);
    Eigen::VectorXcd x = m.colPivHouseholderQr().solve(rhs);
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        cd fit = x(j) / scale(j);
        cd want = exact.coeff(keys[j]).to_complex();
        worst = std::max(worst, std::abs(fit - want) / std::max(1.0, std::abs(want)));
    }
    return worst;
}

inline VerificationReport suite_ttw_k2_classical(int fit_samples = 50, std::uint64_t seed = 20260101) {
    VerificationReport rep("ttw-k2-classical");
    rep.conventions = standard_conventions();
    const auto& cl = ttw_k2_classical_closure();
    rep.add("{C1,H} = 0", cl.c1_conserved, detail::exact_zero_text(cl.c1_conserved));
    rep.add("{C2,H} = 0", cl.c2_conserved, detail::exact_zero_text(cl.c2_conserved));
    {
        RatFun diff = expr::ttw2::l2() - cl.c1;
        bool ok = diff == expr::v(B) + expr::num(2) * expr::v(C);
        rep.add("L2(beta=b, gamma=4c) - C1 = b + 2c", ok, diff.str());
    }
    struct Item {
        const char* name;
        const ClosureExpansion* exp;
        const std::vector<Mono>* keys;
        Poly printed;
    };
    std::vector<Item> items{{"{C1,R}", &cl.c1_r, &cl.keys_c1_r, printed::ttw_c1_r()},
                            {"{C2,R}", &cl.c2_r, &cl.keys_c2_r, printed::ttw_c2_r()},
                            {"R^2", &cl.r2, &cl.keys_r2, printed::ttw_r2()}};
    for (std::size_t k = 0; k < items.size(); ++k) {
        const auto& it = items[k];
        std::string name = it.name;
        if (!it.exp->member)
            throw ClosureFailure(name + " is not in the algebra generated by 1, H, C1, C2, R: " + it.exp->detail);
        rep.add("closure " + name, it.exp->unique,
                expansion_str(it.exp->expansion) + " [" + std::to_string(it.exp->candidates) + " candidates]");
        auto cmp = compare_expansions(it.exp->expansion, it.printed);
        rep.add_reported("printed " + name, cmp.matches(),
                         std::to_string(cmp.agreeing) + " terms agree" + (cmp.matches() ? "" : "; " + cmp.str()));
        double dev = ttw_k2_numeric_fit(it.exp->expansion, *it.keys, static_cast<int>(k), fit_samples, seed + k);
        rep.add("numeric fit " + name, dev <= 1e-6, detail::fmt(dev));
    }
    // cleanly printed terms that must agree exactly
    using namespace gen;
    struct Clean {
        const char* label;
        const Poly* exp;
        Poly mono;
        long coeff;
    };
    std::vector<Clean> clean{{"32*H^2*C1 in {C1,R}", &cl.c1_r.expansion, H() * H() * C1(), 32},
                             {"-64*C1*C2 in {C1,R}", &cl.c1_r.expansion, C1() * C2(), -64},
                             {"32*C2^2 in {C2,R}", &cl.c2_r.expansion, C2() * C2(), 32},
                             {"-32*H^2*C2 in {C2,R}", &cl.c2_r.expansion, H() * H() * C2(), -32},
                             {"64*C1*C2*H^2 in R^2", &cl.r2.expansion, C1() * C2() * H() * H(), 64},
                             {"-64*C1*C2^2 in R^2", &cl.r2.expansion, C1() * C2() * C2(), -64}};
    for (const auto& c : clean) {
        GaussRat got = expansion_coeff(*c.exp, c.mono);
        rep.add(std::string("printed term ") + c.label, got == GaussRat(c.coeff), "computed " + got.str());
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Classical k = 3 holomorphic

inline VerificationReport suite_holo_k3_classical(int spot_points = 50, std::uint64_t seed = 20260102) {
    VerificationReport rep("holo-k3-classical");
    rep.conventions = standard_conventions();
    rep.conventions["holo_k2_sign"] = "K2 normalized so that {K1,K2} = 3i K1^2";
    using namespace expr;
    Derivation d(SymChart::cartesian);
    RatFun k1 = holo3::k1(), k2 = holo3::k2(), k3 = holo3::k3(), h = holo3::hamiltonian();
    RatFun a = v(A), i = im();
    auto exact = [&](const std::string& name, const RatFun& residual) {
        rep.add(name, residual.is_zero(), residual.is_zero() ? "0 (exact)" : residual.str().substr(0, 400));
    };
    exact("{K1,H} = 0", sym_bracket(k1, h, d));
    exact("{K2,H} = 0", sym_bracket(k2, h, d));
    exact("{K3,H} = 0", sym_bracket(k3, h, d));
    exact("{K1,K2} = 3i K1^2", sym_bracket(k1, k2, d) - num(3) * i * k1 * k1);
    exact("{K1,K3} = 6i K2", sym_bracket(k1, k3, d) - num(6) * i * k2);
    exact("{K2,K3} = 6i K1 (K3 + a)", sym_bracket(k2, k3, d) - num(6) * i * k1 * (k3 + a));
    RatFun constraint = k1 * k1 * k3 - k2 * k2 + a * (k1 * k1 - h.pow(3));
    exact("K1^2 K3 - K2^2 + a (K1^2 - H^3) = 0", constraint);
    exact("{K1^2,H} = 0 (sixth order symmetry)", sym_bracket(k1 * k1, h, d));
    {
        auto at0 = [](const RatFun& f) { return f.substitute(A, Poly()); };
        RatFun k1z = at0(k1), k2z = at0(k2), k3z = at0(k3);
        exact("a = 0: K1^2 K3 = K2^2", k1z * k1z * k3z - k2z * k2z);
    }
    // numeric spot check through forward-mode brackets
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int s = 0; s < spot_points; ++s) {
        ParamsHolo prm{cd(detail::draw_rational(rng, 4, 16, 8), detail::draw_rational(rng, -8, 8, 8))};
        Point pt = make_point(Chart::cartesian, detail::draw_rational(rng, 8, 24, 16), detail::draw_rational(rng, -16, 16, 16),
                              detail::draw_rational(rng, -16, 16, 16), detail::draw_rational(rng, -16, 16, 16));
        Observable o1 = holo_k3_constant(prm, 1), o2 = holo_k3_constant(prm, 2), o3 = holo_k3_constant(prm, 3);
        Observable oh = make_holo_h(prm, RationalIndex(3, 1));
        cd K1 = o1(pt), K2 = o2(pt), K3 = o3(pt), H = oh(pt);
        const cd I(0.0, 1.0);
        worst = std::max(worst, detail::relative_residual(bracket(o1, o2, pt), 3.0 * I * K1 * K1));
        worst = std::max(worst, detail::relative_residual(bracket(o1, o3, pt), 6.0 * I * K2));
        worst = std::max(worst, detail::relative_residual(bracket(o2, o3, pt), 6.0 * I * K1 * (K3 + prm.a)));
        worst = std::max(worst, detail::relative_residual(K1 * K1 * K3 + prm.a * K1 * K1, K2 * K2 + prm.a * H * H * H));
        for (const auto* o : {&o1, &o2, &o3}) worst = std::max(worst, bracket_residual(*o, oh, pt));
    }
    rep.add("numeric spot check (" + std::to_string(spot_points) + " points)", worst <= 1e-12, detail::fmt(worst));
    return rep;
}

// ---------------------------------------------------------------------------
// Quantum suites

enum class QuantumTarget { ttw_k2, holo_k3 };

inline VerificationReport suite_quantum_ttw_k2() {
    VerificationReport rep("ttw-k2-quantum");
    rep.conventions = standard_conventions();
    rep.conventions["quantum_basis"] = "H^i times the average over distinct orderings of C1, C2, R words";
    rep.conventions["sym2"] = "{A,B} = AB + BA";
    using namespace expr;
    DiffOp h = ttw2::hamiltonian_op(), c1 = ttw2::c1_op(), c2 = ttw2::c2_op();
    bool h1 = commutator(h, c1).is_zero();
    bool h2 = commutator(h, c2).is_zero();
    rep.add("[H,C1] = 0", h1, detail::exact_zero_text(h1));
    rep.add("[H,C2] = 0", h2, detail::exact_zero_text(h2));
    if (!h1 || !h2) return rep;
    DiffOp r = commutator(c1, c2);
    QuantumRealizer realize(h, c1, c2, r);
    KeyOptions opt{false, 1};
    struct Item {
        const char* name;
        DiffOp target;
        int w, g;
        Poly printed;
    };
    std::vector<Item> items{{"[C1,R]", commutator(c1, r), -4, 6, printed::ttw_q_c1_r()},
                            {"[C2,R]", commutator(c2, r), -8, 8, printed::ttw_q_c2_r()}};
    for (const auto& it : items) {
        auto keys = closure_keys(it.w, it.g, opt);
        auto e = expand_in_generators(it.target, keys, realize);
        std::string name = it.name;
        if (!e.member) throw ClosureFailure(name + " is not in the span of the symmetrized basis: " + e.detail);
        rep.add("closure " + name, e.unique, expansion_str(e.expansion) + " [" + std::to_string(keys.size()) + " candidates]");
        auto cmp = compare_expansions(e.expansion, it.printed);
        rep.add_reported("printed " + name, cmp.matches(),
                         std::to_string(cmp.agreeing) + " terms agree" + (cmp.matches() ? "" : "; " + cmp.str()));
    }
    {
        auto keys = closure_keys(-8, 10, opt);
        auto e = expand_in_generators(r * r, keys, realize);
        std::string text = e.member ? "computed R^2 = " + expansion_str(e.expansion)
                                    : "R^2 not in the span of " + std::to_string(keys.size()) + " candidates: " + e.detail;
        rep.add_mismatch("printed quantum Casimir R^2 (not asserted)", text);
    }
    return rep;
}

inline VerificationReport suite_quantum_holo_k3() {
    VerificationReport rep("holo-k3-quantum");
    rep.conventions = standard_conventions();
    rep.conventions["sym2"] = "{A,B} = AB + BA";
    using namespace expr;
    DiffOp k1 = holo3::k1_op(), k2 = holo3::k2_op(), k3 = holo3::k3_op(), h = holo3::hamiltonian_op();
    RatFun a = v(A), i = im();
    auto exact = [&](const std::string& name, const DiffOp& residual) {
        rep.add(name, residual.is_zero(), residual.is_zero() ? "0 (exact)" : "order " + std::to_string(residual.order()) + " residual");
    };
    exact("[H,K1] = 0", commutator(h, k1));
    exact("[H,K2] = 0", commutator(h, k2));
    exact("[H,K3] = 0", commutator(h, k3));
    exact("[K1,K2] = 3i K1^2", commutator(k1, k2) - (num(3) * i) * (k1 * k1));
    exact("[K1,K3] = 6i K2 - 9 K1", commutator(k1, k3) - (num(6) * i) * k2 + num(9) * k1);
    DiffOp k23 = commutator(k2, k3);
    DiffOp tail = (i * (num(27) + num(6) * a)) * k1 + num(9) * k2;
    exact("[K2,K3] = 3i {K1,K3} + i(27+6a) K1 + 9 K2", k23 - (num(3) * i) * sym2(k1, k3) - tail);
    {
        bool printed_ok = (k23 - (num(3) * i) * sym2(k1, k2) - tail).is_zero();
        rep.add_reported("printed [K2,K3] = 3i {K1,K2} + i(27+6a) K1 + 9 K2", printed_ok,
                         printed_ok ? "0 (exact)" : "nonzero; holds with {K1,K3} in place of {K1,K2}");
    }
    DiffOp rest = num(-3) * (k2 * k2) - (num(9, 2) * i) * sym2(k1, k2) + (num(63, 2) + num(3) * a) * (k1 * k1) -
                  (num(3) * a) * (h * h * h);
    bool six = (sym3(k1, k1, k3).scaled(GaussRat::ratio(1, 2)) + rest).is_zero();
    bool three = (sym3_distinct(k1, k1, k3).scaled(GaussRat::ratio(1, 2)) + rest).is_zero();
    rep.add("sym3 convention resolved (exactly one candidate holds)", six != three,
            std::string("six orderings: ") + (six ? "0" : "nonzero") + ", three distinct orderings: " + (three ? "0" : "nonzero"));
    rep.conventions["sym3"] = six && !three ? "sum over all six orderings" : (three && !six ? "sum over the three distinct orderings" : "unresolved");
    rep.add("1/2 {K1,K1,K3} - 3K2^2 - (9i/2){K1,K2} + (63/2+3a)K1^2 - 3aH^3 = 0", six || three,
            six || three ? "0 (exact)" : "nonzero under both conventions");
    return rep;
}

inline VerificationReport suite_quantum(QuantumTarget t) {
    return t == QuantumTarget::ttw_k2 ? suite_quantum_ttw_k2() : suite_quantum_holo_k3();
}

// ---------------------------------------------------------------------------
// Symbolic general-k ladder

inline VerificationReport suite_ttw_general(long p, long q, int numeric_points = 20, std::uint64_t seed = 20260103) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw ParseError("ttw-general needs coprime p, q >= 1");
    VerificationReport rep("ttw-general(" + std::to_string(p) + "," + std::to_string(q) + ")");
    rep.conventions = standard_conventions();
    rep.conventions["trig_chart"] = "w = e^(2R), z = e^(2ik th); L2 coefficients rational in z with (z+-1) denominators";
    SymbolicLadder lad = symbolic_ttw_ladder(p, q);
    bool both_odd = p % 2 == 1 && q % 2 == 1;
    const int n = static_cast<int>(2 * (p + q));
    int predicted = predicted_cosh_component(p, q);
    for (const auto* part : {&lad.cosh_part, &lad.sinh_part}) {
        bool from_cosh = part == &lad.cosh_part;
        std::string label = ladder_label(p, q, from_cosh);
        const RatFun& val = part->value;
        bool momentum_free_den = val.den()[0] == 0 && val.den()[1] == 0 && val.den()[2] == 0 && val.den()[3] == 0;
        bool poly = momentum_free_den && val.num().min_exp(PR) >= 0 && val.num().min_exp(PTH) >= 0;
        rep.add(label + " polynomial in the momenta", poly, std::to_string(val.num().size()) + " terms");
        RatFun bh = sym_bracket(val, lad.h, lad.chart);
        rep.add("{" + label + ",H} = 0", bh.is_zero(), detail::exact_zero_text(bh.is_zero()));
        // both odd: C = cosh of order 2(p+q); otherwise C' = cosh of order 2(p+q) - 1
        int want = from_cosh ? (both_odd ? n : n - 1) : (both_odd ? n - 1 : n);
        rep.add(label + " momentum degree = " + std::to_string(want), part->degree == want,
                "degree " + std::to_string(part->degree) + " (" + part->source + ", component " +
                    parity_name(part->component) + ")");
        int want_comp = from_cosh ? predicted : predicted ^ kP1;
        rep.add(label + " parity component", part->component == want_comp, parity_name(part->component));
    }
    RatFun cl = sym_bracket(lad.cosh_part.value, lad.l2, lad.chart);
    rep.add("{" + ladder_label(p, q, true) + ",L2} != 0", !cl.is_zero(), cl.is_zero() ? "0" : "nonzero");
    // numeric cross-check against the engine
    std::mt19937_64 rng(seed);
    double k = static_cast<double>(p) / static_cast<double>(q);
    double worst = 0.0;
    for (int s = 0; s < numeric_points; ++s) {
        double alpha = detail::draw_rational(rng, 4, 16, 8);
        double beta = detail::draw_rational(rng, 4, 16, 8);
        double gamma = detail::draw_rational(rng, 4, 16, 8);
        double th = detail::draw_rational(rng, 2, 14, 16) * pi / (2.0 * k);
        std::array<cd, 4> lp{detail::draw_rational(rng, -8, 8, 16), th, detail::draw_rational(rng, -16, 16, 16),
                             detail::draw_rational(rng, -16, 16, 16)};
        auto sys = LadderSystem::make_ttw(ParamsTTW::polar(alpha, beta, gamma), RationalIndex(p, q));
        Point pt{Chart::logpolar, lp};
        RawExtraction<cd> raw;
        try {
            raw = extract_raw(make_pairs(sys, pt), p, q);
        } catch (const DegenerateRadicalError&) {
            continue;
        }
        VarValues vals = trig_values(k, lp, alpha, beta, gamma);
        worst = std::max(worst, detail::relative_residual(lad.cosh_part.value.eval(vals), raw.cosh_value));
        worst = std::max(worst, detail::relative_residual(lad.sinh_part.value.eval(vals), raw.sinh_value));
    }
    rep.add("agrees with numeric engine (" + std::to_string(numeric_points) + " points)", worst <= 1e-10, detail::fmt(worst));
    return rep;
}

}  // namespace superint::cas
